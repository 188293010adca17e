#pragma once

// Elements of free modules W^r, kept as term lists sorted under a module
// order, plus the arithmetic kernels the Groebner engine is built from.

#include "dmdeg/order.hpp"
#include "dmdeg/ring.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace dmdeg {

struct Term {
  Monomial m;
  int comp = 0;
  Rational c;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Finite map (monomial, component) -> Rational, without zero coefficients.
/// Term order inside `terms` is decreasing under the module order that the
/// element was last sorted with; Groebner routines maintain this.
struct FreeElement {
  int rank = 1;
  std::vector<Term> terms;

  bool is_zero() const { return terms.empty(); }
  const Term& lead() const { return terms.front(); }

  friend bool operator==(const FreeElement&, const FreeElement&) = default;

  /// Sorts decreasing under `o`, merges equal terms and drops zeros.
  void sort(const ModuleOrder& o) {
    std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
      return o.compare(a.m, a.comp, b.m, b.comp) > 0;
    });
    std::vector<Term> out;
    out.reserve(terms.size());
    for (auto& t : terms) {
      if (!out.empty() && out.back().comp == t.comp && out.back().m == t.m)
        out.back().c += t.c;
      else
        out.push_back(std::move(t));
    }
    std::erase_if(out, [](const Term& t) { return t.c == 0; });
    terms = std::move(out);
  }

  void make_monic() {
    if (terms.empty()) return;
    Rational inv = 1 / terms.front().c;
    for (auto& t : terms) t.c *= inv;
  }

  WElement component(int c) const {
    std::vector<WElement::Term> t;
    for (const auto& term : terms)
      if (term.comp == c) t.emplace_back(term.m, term.c);
    return WElement::from_terms(std::move(t));
  }

  static FreeElement from_components(const std::vector<WElement>& comps, const ModuleOrder& o) {
    FreeElement f;
    f.rank = static_cast<int>(comps.size());
    for (int c = 0; c < f.rank; ++c)
      for (const auto& [m, coef] : comps[c].terms()) f.terms.push_back({m, c, coef});
    f.sort(o);
    return f;
  }
  static FreeElement from_ring(const WElement& p, const ModuleOrder& o) { return from_components({p}, o); }
  static FreeElement basis_vector(int rank, int c, const ModuleOrder& o) {
    FreeElement f;
    f.rank = rank;
    f.terms.push_back({Monomial{}, c, Rational(1)});
    f.sort(o);
    return f;
  }
};

namespace detail {

/// Terms of (c * q) * g, sorted decreasing under `o`.
inline std::vector<Term> mul_monomial(const Ring& ring, const ModuleOrder& o, const Monomial& q,
                                      const Rational& c, const FreeElement& g) {
  std::vector<Term> out;
  out.reserve(g.terms.size());
  std::vector<std::pair<Monomial, Integer>> prods;
  bool sorted = true;
  for (const auto& t : g.terms) {
    detail::multiply_monomials(ring, q, t.m, prods);
    Rational base = c * t.c;
    for (auto& [m, f] : prods) {
      out.push_back({m, t.comp, f == 1 ? base : Rational(base * f)});
    }
    if (prods.size() > 1) sorted = false;
  }
  if (!sorted) {
    FreeElement tmp{g.rank, std::move(out)};
    tmp.sort(o);
    return std::move(tmp.terms);
  }
  return out;
}

/// a[from..] - b, both sorted decreasing under `o`.  Consumes `a`.
inline std::vector<Term> subtract(const ModuleOrder& o, std::vector<Term>&& a, std::size_t from,
                                  const std::vector<Term>& b) {
  std::vector<Term> r;
  r.reserve(a.size() - from + b.size());
  std::size_t i = from, j = 0;
  while (i < a.size() && j < b.size()) {
    int cmp = o.compare(a[i].m, a[i].comp, b[j].m, b[j].comp);
    if (cmp > 0) {
      r.push_back(std::move(a[i++]));
    } else if (cmp < 0) {
      r.push_back({b[j].m, b[j].comp, -b[j].c});
      ++j;
    } else {
      a[i].c -= b[j].c;
      if (a[i].c != 0) r.push_back(std::move(a[i]));
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) r.push_back(std::move(a[i]));
  for (; j < b.size(); ++j) r.push_back({b[j].m, b[j].comp, -b[j].c});
  return r;
}

inline std::vector<Term> add(const ModuleOrder& o, std::vector<Term>&& a, const std::vector<Term>& b) {
  std::vector<Term> neg = b;
  for (auto& t : neg) t.c = -t.c;
  return subtract(o, std::move(a), 0, neg);
}

}  // namespace detail

/// p * g for a ring element p acting on the left.
inline FreeElement multiply(const WElement& p, const FreeElement& g, const Ring& ring, const ModuleOrder& o) {
  FreeElement r;
  r.rank = g.rank;
  for (const auto& [m, c] : p.terms()) {
    auto prod = detail::mul_monomial(ring, o, m, c, g);
    r.terms = detail::add(o, std::move(r.terms), prod);
  }
  return r;
}

inline FreeElement sum(const FreeElement& a, const FreeElement& b, const ModuleOrder& o) {
  FreeElement r = a;
  r.terms = detail::add(o, std::move(r.terms), b.terms);
  return r;
}

inline Bidegree bidegree_of_term(const Term& t, const VarSpec& vs, const std::vector<Bidegree>& shifts) {
  Bidegree b = bidegree_of_monomial(t.m, vs);
  if (!shifts.empty()) b = b + shifts.at(t.comp);
  return b;
}

/// Common bidegree of all terms, or nullopt when the element is not
/// bihomogeneous (or zero).
inline std::optional<Bidegree> bidegree_of(const FreeElement& f, const VarSpec& vs,
                                           const std::vector<Bidegree>& shifts) {
  if (f.is_zero()) return std::nullopt;
  Bidegree d = bidegree_of_term(f.terms.front(), vs, shifts);
  for (const auto& t : f.terms)
    if (bidegree_of_term(t, vs, shifts) != d) return std::nullopt;
  return d;
}

}  // namespace dmdeg
