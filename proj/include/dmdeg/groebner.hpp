#pragma once

// Left Groebner bases of submodules of W^r (and, with a commutative ring,
// of ordinary polynomial modules): reduction, Buchberger's algorithm with
// Gebauer-Moeller pair management, Schreyer syzygies and saturation by a
// central variable.

#include "dmdeg/free_element.hpp"

#include <climits>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <tuple>
#include <string>
#include <vector>

namespace dmdeg {

class GroebnerError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GroebnerBasis {
  ModuleOrder order;
  std::vector<FreeElement> elems;
  bool reduced = false;

  int rank() const { return order.rank(); }
  std::size_t size() const { return elems.size(); }
  std::vector<std::pair<Monomial, int>> leads() const {
    std::vector<std::pair<Monomial, int>> l;
    for (const auto& g : elems) l.emplace_back(g.lead().m, g.lead().comp);
    return l;
  }
};

namespace detail {

/// Positive grading of the ring used to validate input when the order is
/// not a well-order: total degree, with h of weight 2 in W.
inline std::optional<std::vector<int>> positive_grading(const Ring& ring) {
  std::vector<int> w(ring.nslots(), 1);
  if (!ring.is_weyl() || ring.h_power == 2) return w;
  if (ring.h_power == 1) {
    w[ring.vars.h()] = 2;
    return w;
  }
  return std::nullopt;
}

inline bool homogeneous_under(const FreeElement& f, const std::vector<int>& w) {
  if (f.is_zero()) return true;
  auto deg = [&](const Monomial& m) {
    long s = 0;
    for (std::size_t i = 0; i < w.size(); ++i) s += static_cast<long>(w[i]) * m.e[i];
    return s;
  };
  long d = deg(f.terms.front().m);
  for (const auto& t : f.terms)
    if (deg(t.m) != d) return false;
  return true;
}

struct Reducer {
  const FreeElement* elem;
  Monomial lead;
  int comp;
  std::uint32_t mask;
  int index;
};

inline std::vector<Reducer> make_reducers(const std::vector<FreeElement>& g) {
  std::vector<Reducer> r;
  r.reserve(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i].is_zero()) continue;
    const Term& l = g[i].lead();
    r.push_back({&g[i], l.m, l.comp, l.m.support_mask(), static_cast<int>(i)});
  }
  return r;
}

inline const Reducer* find_reducer(const std::vector<Reducer>& rs, const Term& t) {
  const std::uint32_t tm = t.m.support_mask();
  for (const auto& r : rs) {
    if (r.comp != t.comp || (r.mask & ~tm)) continue;
    if (r.lead.divides(t.m)) return &r;
  }
  return nullptr;
}

struct Quotient {
  int index;
  Monomial m;
  Rational c;
};

/// Division algorithm.  Reduces the order-largest reducible term first with
/// the lowest-index reducer.  With `full == false` stops at the first
/// irreducible leading term.  Records quotients when `quot` is given.
inline FreeElement reduce_impl(const Ring& ring, const ModuleOrder& o, FreeElement f,
                               const std::vector<Reducer>& rs, bool full, std::vector<Quotient>* quot) {
  std::vector<Term> done;
  std::vector<Term> cur = std::move(f.terms);
  std::size_t pos = 0;
  while (pos < cur.size()) {
    const Term& t = cur[pos];
    const Reducer* r = find_reducer(rs, t);
    if (!r) {
      if (!full) break;
      done.push_back(std::move(cur[pos]));
      ++pos;
      continue;
    }
    const Term& lead = r->elem->lead();
    Monomial q = t.m - lead.m;
    Rational c = t.c / lead.c;
    if (quot) quot->push_back({r->index, q, c});
    auto prod = mul_monomial(ring, o, q, c, *r->elem);
    cur = subtract(o, std::move(cur), pos, prod);
    pos = 0;
  }
  for (; pos < cur.size(); ++pos) done.push_back(std::move(cur[pos]));
  f.terms = std::move(done);
  return f;
}

inline FreeElement s_element(const Ring& ring, const ModuleOrder& o, const FreeElement& a, const FreeElement& b) {
  const Term& la = a.lead();
  const Term& lb = b.lead();
  Monomial l = Monomial::lcm(la.m, lb.m);
  auto pa = mul_monomial(ring, o, l - la.m, 1 / la.c, a);
  auto pb = mul_monomial(ring, o, l - lb.m, 1 / lb.c, b);
  FreeElement s;
  s.rank = a.rank;
  s.terms = subtract(o, std::move(pa), 0, pb);
  return s;
}

/// True when the two elements commute as ring elements, which is what the
/// coprime-lead criterion needs in W.
inline bool supports_commute(const Ring& ring, const FreeElement& a, const FreeElement& b) {
  if (!ring.is_weyl()) return true;
  std::uint32_t ma = 0, mb = 0;
  for (const auto& t : a.terms) ma |= t.m.support_mask();
  for (const auto& t : b.terms) mb |= t.m.support_mask();
  const int n = ring.vars.size();
  for (int i = 0; i < n; ++i) {
    bool ax = ma >> i & 1, ad = ma >> (n + i) & 1;
    bool bx = mb >> i & 1, bd = mb >> (n + i) & 1;
    if ((ax && bd) || (ad && bx)) return false;
  }
  return true;
}

struct Pair {
  int i, j;
  Monomial lcm;
  int comp;
};

}  // namespace detail

/// Normal form of f modulo G (full tail reduction).
inline FreeElement reduce(const FreeElement& f, const GroebnerBasis& g, const Ring& ring) {
  auto rs = detail::make_reducers(g.elems);
  return detail::reduce_impl(ring, g.order, f, rs, true, nullptr);
}

inline bool is_member(const FreeElement& f, const GroebnerBasis& g, const Ring& ring) {
  auto rs = detail::make_reducers(g.elems);
  return detail::reduce_impl(ring, g.order, f, rs, false, nullptr).is_zero();
}

/// Leads pairwise indivisible, tails fully reduced, elements monic, sorted
/// by increasing lead.
inline std::vector<FreeElement> interreduce(std::vector<FreeElement> g, const ModuleOrder& o, const Ring& ring) {
  std::erase_if(g, [](const FreeElement& f) { return f.is_zero(); });
  std::vector<FreeElement> keep;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j || g[j].lead().comp != g[i].lead().comp) continue;
      if (!g[j].lead().m.divides(g[i].lead().m)) continue;
      redundant = g[j].lead().m != g[i].lead().m || j < i;
    }
    if (!redundant) keep.push_back(g[i]);
  }
  for (std::size_t i = 0; i < keep.size(); ++i) {
    std::vector<FreeElement> others;
    for (std::size_t j = 0; j < keep.size(); ++j)
      if (j != i) others.push_back(keep[j]);
    auto rs = detail::make_reducers(others);
    FreeElement head;
    head.rank = keep[i].rank;
    head.terms.push_back(keep[i].terms.front());
    FreeElement tail = keep[i];
    tail.terms.erase(tail.terms.begin());
    tail = detail::reduce_impl(ring, o, std::move(tail), rs, true, nullptr);
    head.terms.insert(head.terms.end(), tail.terms.begin(), tail.terms.end());
    head.make_monic();
    keep[i] = std::move(head);
  }
  std::sort(keep.begin(), keep.end(), [&](const FreeElement& a, const FreeElement& b) {
    return o.compare(a.lead().m, a.lead().comp, b.lead().m, b.lead().comp) < 0;
  });
  return keep;
}

struct BuchbergerStats {
  std::size_t pairs_considered = 0;
  std::size_t reductions_to_zero = 0;
};

namespace detail {

/// Divides f by the largest power of the central slot v dividing it.
/// Returns the exponent removed.  Orders are translation invariant, so the
/// term order of f is unchanged.
inline int strip_power(FreeElement& f, int v) {
  int k = INT32_MAX;
  for (const auto& t : f.terms) k = std::min<int>(k, t.m.e[v]);
  if (k <= 0 || k == INT32_MAX) return 0;
  for (auto& t : f.terms) t.m.e[v] = static_cast<std::uint16_t>(t.m.e[v] - k);
  return k;
}

inline bool is_central(const Ring& ring, int v) {
  return !ring.is_weyl() || v == ring.vars.h() || v == ring.vars.theta();
}

}  // namespace detail

/// Left Groebner basis of the submodule generated by `gens`.  The result is
/// reduced.  Inputs are re-sorted under `o`.
///
/// With `strip_slot >= 0` (a central slot v) every new basis element is
/// divided by its v-content first.  The result is then a Groebner basis of
/// a module squeezed between the input module and its v-saturation.
inline GroebnerBasis buchberger(std::vector<FreeElement> gens, const ModuleOrder& o, const Ring& ring,
                                BuchbergerStats* stats = nullptr, int strip_slot = -1) {
  if (strip_slot >= 0 && !detail::is_central(ring, strip_slot))
    throw GroebnerError("buchberger: only a central slot can be stripped");
  for (auto& f : gens) {
    if (f.rank != o.rank()) throw GroebnerError("buchberger: generator rank does not match the module order");
    f.sort(o);
  }
  std::erase_if(gens, [](const FreeElement& f) { return f.is_zero(); });
  if (!o.term_order().well_founded()) {
    auto w = detail::positive_grading(ring);
    if (!w) throw GroebnerError("buchberger: order is not a well-order and the ring has no positive grading");
    for (const auto& f : gens)
      if (!detail::homogeneous_under(f, *w))
        throw GroebnerError("buchberger: order is not a well-order and an input generator is inhomogeneous");
  }

  std::vector<FreeElement> basis;
  std::vector<bool> active;
  std::vector<detail::Pair> pairs;

  auto add_element = [&](FreeElement h) {
    if (strip_slot >= 0) detail::strip_power(h, strip_slot);
    h.make_monic();
    const int hi = static_cast<int>(basis.size());
    const Term& lh = h.lead();
    std::vector<detail::Pair> cand;
    std::vector<bool> product_ok;
    for (int g = 0; g < hi; ++g) {
      if (!active[g] || basis[g].lead().comp != lh.comp) continue;
      const Term& lg = basis[g].lead();
      cand.push_back({g, hi, Monomial::lcm(lg.m, lh.m), lh.comp});
      product_ok.push_back(o.rank() == 1 && Monomial::coprime(lg.m, lh.m) &&
                           detail::supports_commute(ring, basis[g], h));
    }
    // Gebauer-Moeller: criteria on the new pairs.
    std::vector<char> keep(cand.size(), 1);
    for (std::size_t a = 0; a < cand.size(); ++a) {
      if (product_ok[a]) continue;
      for (std::size_t b = 0; b < cand.size(); ++b) {
        if (a == b || !keep[b]) continue;
        if (!cand[b].lcm.divides(cand[a].lcm)) continue;
        if (cand[b].lcm != cand[a].lcm || b < a || product_ok[b]) {
          keep[a] = 0;
          break;
        }
      }
    }
    // Old pairs made redundant by the new lead.
    std::erase_if(pairs, [&](const detail::Pair& p) {
      if (p.comp != lh.comp || !lh.m.divides(p.lcm)) return false;
      Monomial li = Monomial::lcm(basis[p.i].lead().m, lh.m);
      Monomial lj = Monomial::lcm(basis[p.j].lead().m, lh.m);
      return li != p.lcm && lj != p.lcm;
    });
    for (std::size_t a = 0; a < cand.size(); ++a)
      if (keep[a] && !product_ok[a]) pairs.push_back(cand[a]);
    for (int g = 0; g < hi; ++g)
      if (active[g] && basis[g].lead().comp == lh.comp && lh.m.divides(basis[g].lead().m)) active[g] = false;
    basis.push_back(std::move(h));
    active.push_back(true);
  };

  auto current_reducers = [&]() {
    std::vector<detail::Reducer> rs;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (!active[i]) continue;
      const Term& l = basis[i].lead();
      rs.push_back({&basis[i], l.m, l.comp, l.m.support_mask(), static_cast<int>(i)});
    }
    return rs;
  };

  for (auto& f : gens) {
    auto rs = current_reducers();
    FreeElement r = detail::reduce_impl(ring, o, std::move(f), rs, true, nullptr);
    if (!r.is_zero()) add_element(std::move(r));
  }

  while (!pairs.empty()) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs.size(); ++k) {
      int c = o.compare(pairs[k].lcm, pairs[k].comp, pairs[best].lcm, pairs[best].comp);
      if (c < 0 || (c == 0 && std::tie(pairs[k].i, pairs[k].j) < std::tie(pairs[best].i, pairs[best].j)))
        best = k;
    }
    detail::Pair p = pairs[best];
    pairs.erase(pairs.begin() + static_cast<long>(best));
    if (stats) ++stats->pairs_considered;
    FreeElement s = detail::s_element(ring, o, basis[p.i], basis[p.j]);
    auto rs = current_reducers();
    FreeElement r = detail::reduce_impl(ring, o, std::move(s), rs, true, nullptr);
    if (r.is_zero()) {
      if (stats) ++stats->reductions_to_zero;
      continue;
    }
    add_element(std::move(r));
  }

  std::vector<FreeElement> result;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (active[i]) result.push_back(std::move(basis[i]));
  return {o, interreduce(std::move(result), o, ring), true};
}

/// Re-checks the Groebner property: every S-element of two basis elements
/// with leads in the same component reduces to zero.
inline bool certify(const GroebnerBasis& g, const Ring& ring) {
  auto rs = detail::make_reducers(g.elems);
  for (std::size_t i = 0; i < g.elems.size(); ++i)
    for (std::size_t j = i + 1; j < g.elems.size(); ++j) {
      if (g.elems[i].lead().comp != g.elems[j].lead().comp) continue;
      auto s = detail::s_element(ring, g.order, g.elems[i], g.elems[j]);
      if (!detail::reduce_impl(ring, g.order, std::move(s), rs, false, nullptr).is_zero()) return false;
    }
  return true;
}

/// Generators of the syzygy module of G (one free generator per element of
/// G), forming a Groebner basis under the Schreyer order induced by G.  For
/// each i only the pairs (i, j), j > i, whose lead lcm(m_i, m_j)/m_i is
/// minimal are kept; that subset has the same lead module as the full
/// Schreyer set.
inline GroebnerBasis syzygies(const GroebnerBasis& g, const Ring& ring) {
  const int r = static_cast<int>(g.elems.size());
  ModuleOrder so = ModuleOrder::schreyer(g.leads(), g.order);
  GroebnerBasis out{so, {}, false};
  auto rs = detail::make_reducers(g.elems);
  for (int i = 0; i < r; ++i) {
    const Term& li = g.elems[i].lead();
    std::vector<std::pair<Monomial, int>> cand;
    for (int j = i + 1; j < r; ++j) {
      const Term& lj = g.elems[j].lead();
      if (lj.comp != li.comp) continue;
      cand.emplace_back(Monomial::lcm(li.m, lj.m) - li.m, j);
    }
    for (std::size_t a = 0; a < cand.size(); ++a) {
      bool minimal = true;
      for (std::size_t b = 0; b < cand.size() && minimal; ++b) {
        if (a == b || !cand[b].first.divides(cand[a].first)) continue;
        if (cand[b].first != cand[a].first || b < a) minimal = false;
      }
      if (!minimal) continue;
      const int j = cand[a].second;
      const Term& lj = g.elems[j].lead();
      FreeElement s = detail::s_element(ring, g.order, g.elems[i], g.elems[j]);
      std::vector<detail::Quotient> quot;
      FreeElement rest = detail::reduce_impl(ring, g.order, std::move(s), rs, false, &quot);
      if (!rest.is_zero()) throw GroebnerError("syzygies: input is not a Groebner basis");
      Monomial l = Monomial::lcm(li.m, lj.m);
      FreeElement syz;
      syz.rank = r;
      syz.terms.push_back({l - li.m, i, 1 / li.c});
      syz.terms.push_back({l - lj.m, j, -1 / lj.c});
      for (auto& q : quot) syz.terms.push_back({q.m, q.index, -q.c});
      syz.sort(so);
      syz.make_monic();
      out.elems.push_back(std::move(syz));
    }
  }
  return out;
}

/// Divides every element by the largest power of the central slot `v`
/// dividing it and recomputes, until no basis element is divisible by v.
/// The fixpoint is a basis of (M : v^infinity) provided no lead of the final
/// basis involves v; that condition is verified and violations are rejected
/// (the order must make v the cheapest variable on the relevant elements).
inline GroebnerBasis saturate_central(const GroebnerBasis& g, int v, const Ring& ring, int max_rounds = 50,
                                      int* rounds_used = nullptr) {
  if (!detail::is_central(ring, v)) throw GroebnerError("saturate_central: slot is not central");
  GroebnerBasis cur = g;
  for (int round = 0; round < max_rounds; ++round) {
    bool changed = false;
    std::vector<FreeElement> next = cur.elems;
    for (auto& f : next) changed |= detail::strip_power(f, v) > 0;
    if (!changed) {
      for (const auto& f : cur.elems)
        if (f.lead().m.e[v] != 0)
          throw GroebnerError("saturate_central: the order does not place the saturating variable cheapest");
      if (rounds_used) *rounds_used = round;
      return cur;
    }
    cur = buchberger(std::move(next), cur.order, ring, nullptr, v);
  }
  throw GroebnerError("saturate_central: no fixpoint after " + std::to_string(max_rounds) + " rounds");
}

}  // namespace dmdeg
