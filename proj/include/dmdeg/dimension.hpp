#pragma once

// Characteristic ideal, Krull dimension of monomial quotients and the
// codimension of a D-module D^r / N.

#include "dmdeg/resolution.hpp"

#include <optional>
#include <vector>

namespace dmdeg {

/// Submodule of a free module over the commutative ring Q[x, xi] (the xi
/// live in the derivative slots).  Rank one for ideals.
struct CommutativeIdeal {
  VarSpec vars;
  int rank = 1;
  std::vector<FreeElement> gens;
};

namespace detail {

inline ModuleOrder grevlex_module(const VarSpec& vs, int rank) {
  return ModuleOrder::term_over_position(std::make_shared<const TermOrder>(TermOrder::grevlex(vs)), rank);
}

inline ModuleOrder f_weight_module(const VarSpec& vs, int rank, const TermOrder& tiebreak) {
  auto base = std::make_shared<const TermOrder>(TermOrder::weighted({f_weights(vs)}, tiebreak));
  return ModuleOrder::term_over_position(base, rank,
                                         std::vector<std::vector<long>>(rank, std::vector<long>(base->weight_tier_count(), 0)));
}

/// Largest set of slots among `vars` containing the support of no mask in
/// `leads` (branch and bound; exact).
inline int max_independent(const std::vector<int>& vars, const std::vector<std::uint32_t>& leads) {
  int best = -1;
  std::uint32_t chosen = 0;
  auto blocked = [&](std::uint32_t set) {
    for (auto m : leads)
      if ((m & ~set) == 0) return true;
    return false;
  };
  auto rec = [&](auto&& self, std::size_t k, int size) -> void {
    if (size + static_cast<int>(vars.size() - k) <= best) return;
    if (k == vars.size()) {
      best = size;
      return;
    }
    std::uint32_t bit = 1u << vars[k];
    if (!blocked(chosen | bit)) {
      chosen |= bit;
      self(self, k + 1, size + 1);
      chosen &= ~bit;
    }
    self(self, k + 1, size);
  };
  if (blocked(0)) return -1;
  rec(rec, 0, 0);
  return best;
}

}  // namespace detail

/// F-leading forms of a Groebner basis of N under an F-weight-first order;
/// the result generates gr^F(N) in Q[x, xi]^r.
inline CommutativeIdeal characteristic_ideal(const GeneratorList& gens, const VarSpec& vs, int rank = 1,
                                             std::optional<TermOrder> tiebreak = std::nullopt) {
  const Ring d = Ring::weyl_d(vs);
  const ModuleOrder o = detail::f_weight_module(vs, rank, tiebreak.value_or(TermOrder::grevlex(vs)));
  std::vector<FreeElement> fs;
  for (const auto& g : gens) {
    if (static_cast<int>(g.size()) != rank) throw std::invalid_argument("characteristic_ideal: component count mismatch");
    FreeElement f{rank, detail::to_terms(g)};
    f.sort(o);
    if (!f.is_zero()) fs.push_back(std::move(f));
  }
  CommutativeIdeal out{vs, rank, {}};
  if (fs.empty()) return out;
  GroebnerBasis g = buchberger(std::move(fs), o, d);
  const ModuleOrder co = detail::grevlex_module(vs, rank);
  for (const auto& f : g.elems) {
    int top = INT32_MIN;
    for (const auto& t : f.terms) top = std::max(top, bidegree_of_monomial(t.m, vs).f);
    FreeElement sym{rank, {}};
    for (const auto& t : f.terms)
      if (bidegree_of_monomial(t.m, vs).f == top) sym.terms.push_back(t);
    sym.sort(co);
    out.gens.push_back(std::move(sym));
  }
  return out;
}

/// Krull dimension of Q[x, xi]^r / I, read off the grevlex initial module:
/// the maximum over components of the largest variable set independent
/// modulo the leading monomials of that component.  -1 for the zero
/// quotient.
inline int krull_dimension(const CommutativeIdeal& I, std::optional<TermOrder> order = std::nullopt) {
  const VarSpec& vs = I.vars;
  const Ring ring = Ring::commutative(vs);
  auto base = std::make_shared<const TermOrder>(order.value_or(TermOrder::grevlex(vs)));
  const ModuleOrder o = ModuleOrder::term_over_position(base, I.rank);
  std::vector<int> vars;
  for (int i = 0; i < vs.size(); ++i) vars.push_back(vs.base(i));
  for (int i = 0; i < vs.size(); ++i) vars.push_back(vs.deriv(i));
  std::vector<FreeElement> gens;
  for (auto f : I.gens) {
    f.sort(o);
    for (const auto& t : f.terms)
      if (t.m.e[vs.h()] || t.m.e[vs.theta()])
        throw std::invalid_argument("krull_dimension: generators must live in Q[x, xi]");
    if (!f.is_zero()) gens.push_back(std::move(f));
  }
  std::vector<std::vector<std::uint32_t>> leads(I.rank);
  if (!gens.empty()) {
    GroebnerBasis g = buchberger(std::move(gens), o, ring);
    for (const auto& f : g.elems) leads[f.lead().comp].push_back(f.lead().m.support_mask());
  }
  int best = -1;
  for (int c = 0; c < I.rank; ++c) best = std::max(best, detail::max_independent(vars, leads[c]));
  return best;
}

struct CodimResult {
  std::optional<int> codim;  // nullopt: M = 0 (codimension +infinity)
  bool holonomic = false;
  int dimension = -1;        // Krull dimension of the characteristic variety
};

/// codim M = 2N - dim gr^F(M) for M = D^r / N.
inline CodimResult codim(const GeneratorList& gens, const VarSpec& vs, int rank = 1,
                         std::optional<TermOrder> tiebreak = std::nullopt) {
  CodimResult r;
  r.dimension = krull_dimension(characteristic_ideal(gens, vs, rank, tiebreak));
  if (r.dimension < 0) return r;
  r.codim = 2 * vs.size() - r.dimension;
  r.holonomic = *r.codim == vs.size();
  return r;
}

}  // namespace dmdeg
