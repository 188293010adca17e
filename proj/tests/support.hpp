#pragma once

// Random elements and small helpers shared by the unit tests.

#include "dmdeg/dmdeg.hpp"

#include <random>
#include <vector>

namespace testing {

using namespace dmdeg;

inline std::mt19937& rng() {
  static std::mt19937 g(20240611u);
  return g;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

/// Random monomial on the given slots with total degree at most `deg`.
inline Monomial random_monomial(const std::vector<int>& slots, int deg) {
  Monomial m;
  int d = uniform(0, deg);
  for (int k = 0; k < d; ++k) ++m.e[slots[uniform(0, static_cast<int>(slots.size()) - 1)]];
  return m;
}

inline std::vector<int> weyl_slots(const VarSpec& vs, bool with_h = false, bool with_theta = false) {
  std::vector<int> s;
  for (int i = 0; i < vs.size(); ++i) s.push_back(vs.base(i)), s.push_back(vs.deriv(i));
  if (with_h) s.push_back(vs.h());
  if (with_theta) s.push_back(vs.theta());
  return s;
}

inline WElement random_element(const std::vector<int>& slots, int terms, int deg, int coef = 5) {
  std::vector<WElement::Term> t;
  for (int k = 0; k < terms; ++k) {
    int c = uniform(-coef, coef);
    if (c == 0) c = 1;
    t.emplace_back(random_monomial(slots, deg), Rational(c));
  }
  return WElement::from_terms(std::move(t));
}

inline VarSpec vars_tx(int n_t, int n_x) {
  std::vector<std::string> names;
  std::vector<bool> t;
  for (int i = 1; i <= n_t; ++i) names.push_back("t" + std::to_string(i)), t.push_back(true);
  for (int i = 1; i <= n_x; ++i) names.push_back("x" + std::to_string(i)), t.push_back(false);
  return VarSpec(names, t);
}

inline IntMatrix example3_matrix() { return to_int_matrix({{1, 1, 1, 1}, {0, 1, 2, 3}}); }
inline IntMatrix example4_matrix() { return to_int_matrix({{1, 1, 1, 1}, {0, 1, 3, 4}}); }

inline std::vector<Rational> beta(long a, long b) { return {Rational(a), Rational(b)}; }

}  // namespace testing
