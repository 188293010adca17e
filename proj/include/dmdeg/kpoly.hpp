#pragma once

// K-polynomials of bifiltered resolutions, the substitution T -> 1 - T as a
// truncated power series, and the multidegree (degree-codim slice).

#include "dmdeg/resolution.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace dmdeg {

/// Element of Z[T1, T2, T1^-1, T2^-1]; no zero coefficients stored.
class LaurentPoly2 {
 public:
  using Key = std::pair<int, int>;

  LaurentPoly2() = default;
  LaurentPoly2(std::initializer_list<std::tuple<int, int, long>> terms) {
    for (auto [a, b, c] : terms) add(a, b, Integer(c));
  }

  void add(int a, int b, const Integer& c) {
    if (c == 0) return;
    auto& v = coeffs_[{a, b}];
    v += c;
    if (v == 0) coeffs_.erase({a, b});
  }
  Integer coefficient(int a, int b) const {
    auto it = coeffs_.find({a, b});
    return it == coeffs_.end() ? Integer(0) : it->second;
  }
  bool is_zero() const { return coeffs_.empty(); }
  const std::map<Key, Integer>& terms() const { return coeffs_; }

  friend LaurentPoly2 operator+(LaurentPoly2 x, const LaurentPoly2& y) {
    for (const auto& [k, c] : y.coeffs_) x.add(k.first, k.second, c);
    return x;
  }
  friend LaurentPoly2 operator-(LaurentPoly2 x, const LaurentPoly2& y) {
    for (const auto& [k, c] : y.coeffs_) x.add(k.first, k.second, -c);
    return x;
  }
  friend LaurentPoly2 operator*(const LaurentPoly2& x, const LaurentPoly2& y) {
    LaurentPoly2 r;
    for (const auto& [k, c] : x.coeffs_)
      for (const auto& [l, d] : y.coeffs_) r.add(k.first + l.first, k.second + l.second, c * d);
    return r;
  }
  friend bool operator==(const LaurentPoly2&, const LaurentPoly2&) = default;

  /// Terms by descending T1 exponent, then descending T2 exponent; e.g.
  /// "3*T1^4 + 6*T1^3*T2 + 3*T1^2*T2^2".
  std::string to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      auto [a, b] = it->first;
      Integer c = it->second;
      if (first) {
        if (c < 0) os << '-';
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      first = false;
      Integer ac = abs(c);
      std::string mono = power("T1", a);
      std::string m2 = power("T2", b);
      if (!m2.empty()) mono = mono.empty() ? m2 : mono + "*" + m2;
      if (mono.empty())
        os << ac;
      else if (ac == 1)
        os << mono;
      else
        os << ac << '*' << mono;
    }
    return os.str();
  }

 private:
  static std::string power(const char* v, int e) {
    if (e == 0) return "";
    if (e == 1) return v;
    return std::string(v) + "^" + std::to_string(e);
  }
  std::map<Key, Integer> coeffs_;
};

/// Power series in T1, T2 truncated above total degree `order`.
struct TruncatedSeries2 {
  int order = 0;
  LaurentPoly2 poly;
  Integer coefficient(int a, int b) const { return poly.coefficient(a, b); }
};

/// K = sum_i (-1)^i sum_j T1^{n_j^(i)} T2^{m_j^(i)}.
inline LaurentPoly2 k_polynomial(const BifilteredResolution& res) {
  LaurentPoly2 k;
  for (int i = 0; i <= res.length(); ++i)
    for (const auto& s : res.levels[i].shifts) k.add(s.f, s.v, Integer(i % 2 == 0 ? 1 : -1));
  return k;
}

namespace detail {

inline std::vector<Monomial> minimal_monomials(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  std::vector<Monomial> out;
  for (const auto& m : gens) {
    bool red = false;
    for (const auto& o : out)
      if (o.divides(m)) {
        red = true;
        break;
      }
    if (!red) out.push_back(m);
  }
  return out;
}

/// Bigraded K-polynomial numerator of S / J for a monomial ideal J, from
/// K(J + m) = K(J) - T^deg(m) K(J : m).
inline LaurentPoly2 monomial_numerator(std::vector<Monomial> gens, const VarSpec& vs) {
  gens = minimal_monomials(std::move(gens));
  if (gens.empty()) return {{0, 0, 1}};
  Monomial m = gens.back();
  gens.pop_back();
  std::vector<Monomial> quot;
  for (const auto& g : gens) {
    Monomial q;
    for (int i = 0; i < kMaxSlots; ++i) q.e[i] = static_cast<std::uint16_t>(g.e[i] > m.e[i] ? g.e[i] - m.e[i] : 0);
    quot.push_back(q);
  }
  const Bidegree d = bidegree_of_monomial(m, vs);
  LaurentPoly2 k = monomial_numerator(std::move(gens), vs);
  k = k - LaurentPoly2{{d.f, d.v, 1}} * monomial_numerator(std::move(quot), vs);
  return k;
}

}  // namespace detail

/// K-polynomial read off the leading monomials of the saturated Rees
/// basis.  A Schreyer resolution of the basis has the same shifts as a
/// resolution of the initial module, so this equals k_polynomial of
/// bifiltered_resolution(p) without building it.
inline LaurentPoly2 k_polynomial(const BifilteredPresentation& p) {
  std::vector<std::vector<Monomial>> by_comp(p.rank);
  for (const auto& f : p.gb.elems) by_comp[f.lead().comp].push_back(f.lead().m);
  LaurentPoly2 k;
  for (int c = 0; c < p.rank; ++c)
    k = k + LaurentPoly2{{p.shifts[c].f, p.shifts[c].v, 1}} * detail::monomial_numerator(by_comp[c], p.vars);
  return k;
}

namespace detail {

/// Coefficients of (1 - T)^a up to T^trunc; negative a uses the binomial
/// series (1 - T)^-k = sum C(k - 1 + j, j) T^j.
inline std::vector<Integer> one_minus_power(int a, int trunc) {
  std::vector<Integer> c(trunc + 1);
  for (int j = 0; j <= trunc; ++j) {
    if (a >= 0) {
      c[j] = j > a ? Integer(0) : binomial(a, j);
      if (j % 2) c[j] = -c[j];
    } else {
      c[j] = binomial(static_cast<unsigned>(-a - 1 + j), j);
    }
  }
  return c;
}

}  // namespace detail

inline TruncatedSeries2 substitute_one_minus(const LaurentPoly2& k, int trunc) {
  if (trunc < 0) throw std::invalid_argument("substitute_one_minus: negative truncation order");
  TruncatedSeries2 s;
  s.order = trunc;
  for (const auto& [key, c] : k.terms()) {
    auto p1 = detail::one_minus_power(key.first, trunc);
    auto p2 = detail::one_minus_power(key.second, trunc);
    for (int i = 0; i <= trunc; ++i)
      for (int j = 0; i + j <= trunc; ++j) s.poly.add(i, j, c * p1[i] * p2[j]);
  }
  return s;
}

struct Multidegree {
  int codim = 0;
  LaurentPoly2 poly;          // homogeneous of degree codim
  std::vector<Integer> b;     // b_i is the coefficient of T1^(c-i) T2^i
  bool lower_terms_vanish = true;
  std::string to_string() const { return poly.to_string(); }
};

inline Multidegree multidegree(const LaurentPoly2& k, int c) {
  if (c < 0) throw std::invalid_argument("multidegree: negative codimension");
  TruncatedSeries2 s = substitute_one_minus(k, c);
  Multidegree m;
  m.codim = c;
  m.b.assign(c + 1, Integer(0));
  for (const auto& [key, coef] : s.poly.terms()) {
    if (key.first + key.second == c) {
      m.poly.add(key.first, key.second, coef);
      m.b[key.second] = coef;
    } else {
      m.lower_terms_vanish = false;
    }
  }
  return m;
}

/// vol * T1^d * (T1 + T2)^(n - d).
inline LaurentPoly2 generic_formula(const Integer& vol, int d, int n) {
  LaurentPoly2 r;
  for (int j = 0; j <= n - d; ++j) r.add(d + (n - d - j), j, vol * detail::binomial(n - d, j));
  return r;
}

}  // namespace dmdeg
