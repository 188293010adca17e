#pragma once

// Bifiltered free resolutions.  A presentation D^r[n][m] / N is carried to
// the Rees algebra W, where the (F,V)-bifiltration becomes a bigrading, and
// resolved there with iterated Schreyer syzygies.

#include "dmdeg/groebner.hpp"

#include <algorithm>
#include <climits>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace dmdeg {

/// Generators of N as vectors of D-elements (one WElement per component).
using GeneratorList = std::vector<std::vector<WElement>>;

struct PresentationOptions {
  /// Tie-break tiers used after the structural weight tiers.  Defaults to
  /// grevlex with the derivative block first and h last.
  std::optional<TermOrder> tiebreak;
  bool allow_negative_shifts = false;
};

struct BifilteredPresentation {
  VarSpec vars;
  int rank = 1;
  std::vector<Bidegree> shifts;  // (n_i, m_i) per generator of D^r
  GeneratorList generators;      // dehomogenized, as given
  GroebnerBasis gb;              // saturated bihomogenized basis over W
  TermOrder tiebreak;
  int saturation_rounds = 0;
};

namespace detail {

inline std::vector<std::vector<long>> shift_offsets(const std::vector<Bidegree>& shifts, bool use_f, bool use_v,
                                                    int extra_zero_tiers) {
  std::vector<std::vector<long>> off;
  for (const auto& s : shifts) {
    std::vector<long> row;
    if (use_f) row.push_back(s.f);
    if (use_v) row.push_back(s.v);
    for (int k = 0; k < extra_zero_tiers; ++k) row.push_back(0);
    off.push_back(std::move(row));
  }
  return off;
}

/// Order on W^r used for the Rees presentation and as the base of the
/// resolution: shifted F-weight, then fewest h, then the tie-break.
inline ModuleOrder rees_order(const VarSpec& vs, const std::vector<Bidegree>& shifts, const TermOrder& tiebreak) {
  std::vector<int> minus_h(vs.nslots(), 0);
  minus_h[vs.h()] = -1;
  auto base = std::make_shared<const TermOrder>(TermOrder::weighted({f_weights(vs), minus_h}, tiebreak));
  const int extra = tiebreak.weight_tier_count();
  return ModuleOrder::term_over_position(base, static_cast<int>(shifts.size()),
                                         shift_offsets(shifts, true, false, 1 + extra));
}

/// The same order on W[s]^r, s a central slot one past the last, with the
/// s-degree as a first tier: an elimination order for s.
inline ModuleOrder rabinowitsch_order(const VarSpec& vs, const std::vector<Bidegree>& shifts,
                                      const TermOrder& tiebreak) {
  const int s = vs.nslots(), ns = s + 1;
  std::vector<OrderTier> tiers;
  for (auto t : tiebreak.tiers()) {
    if (t.kind == OrderTier::Kind::weight)
      t.weight.push_back(0);
    else
      t.sequence.push_back(s);
    tiers.push_back(std::move(t));
  }
  std::vector<int> sw(ns, 0), fw = f_weights(vs), minus_h(ns, 0);
  sw[s] = 1;
  fw.push_back(0);
  minus_h[vs.h()] = -1;
  auto base = std::make_shared<const TermOrder>(TermOrder::weighted({sw, fw, minus_h}, TermOrder(ns, std::move(tiers))));
  std::vector<std::vector<long>> off;
  for (const auto& sh : shifts) {
    std::vector<long> row{0, sh.f, 0};
    for (int k = 0; k < tiebreak.weight_tier_count(); ++k) row.push_back(0);
    off.push_back(std::move(row));
  }
  return ModuleOrder::term_over_position(base, static_cast<int>(shifts.size()), std::move(off));
}

inline std::vector<Term> to_terms(const std::vector<WElement>& comps) {
  std::vector<Term> t;
  for (int c = 0; c < static_cast<int>(comps.size()); ++c)
    for (const auto& [m, coef] : comps[c].terms()) t.push_back({m, c, coef});
  return t;
}

/// Raises each term to a common weighted degree by multiplying with a
/// power of `slot`.  `deg(term)` gives the current degree of a term.
template <class Degree>
inline FreeElement homogenize_with(FreeElement f, int slot, Degree deg, const ModuleOrder& o) {
  if (f.is_zero()) return f;
  long top = deg(f.terms.front());
  for (const auto& t : f.terms) top = std::max(top, deg(t));
  for (auto& t : f.terms) t.m.e[slot] = static_cast<std::uint16_t>(t.m.e[slot] + (top - deg(t)));
  f.sort(o);
  return f;
}

inline FreeElement dehomogenize_slot(FreeElement f, int slot, const ModuleOrder& o) {
  for (auto& t : f.terms) t.m.e[slot] = 0;
  f.sort(o);
  return f;
}

}  // namespace detail

inline TermOrder default_tiebreak(const VarSpec& vs) { return TermOrder::grevlex(vs); }

/// Saturated bihomogenization of N inside W^r[n][m].
///
/// The generators are bihomogenized relative to the shifts, saturated by
/// theta through elimination of s from (J, (1 - s theta) e_c) over W[s],
/// which needs only a well-order, and then saturated by h under an order in
/// which h is cheapest among F-homogeneous terms.  The loop repeats while
/// any basis element is still divisible by theta or h.
inline BifilteredPresentation rees_presentation(const GeneratorList& gens, std::vector<Bidegree> shifts,
                                                const VarSpec& vs, const PresentationOptions& opt = {}) {
  BifilteredPresentation p;
  p.vars = vs;
  p.rank = shifts.empty() ? 1 : static_cast<int>(shifts.size());
  if (shifts.empty()) shifts.assign(p.rank, Bidegree{});
  p.shifts = shifts;
  p.generators = gens;
  p.tiebreak = opt.tiebreak.value_or(default_tiebreak(vs));
  if (p.tiebreak.nslots() != vs.nslots())
    throw std::invalid_argument("rees_presentation: tie-break order has the wrong number of slots");
  if (!opt.allow_negative_shifts)
    for (const auto& s : shifts)
      if (s.f < 0 || s.v < 0) throw std::invalid_argument("rees_presentation: negative shift (enable negative shifts to allow)");
  for (const auto& g : gens) {
    if (static_cast<int>(g.size()) != p.rank)
      throw std::invalid_argument("rees_presentation: generator has " + std::to_string(g.size()) +
                                  " components, expected " + std::to_string(p.rank));
    for (const auto& c : g)
      for (const auto& [m, coef] : c.terms())
        if (m.e[vs.h()] || m.e[vs.theta()])
          throw std::invalid_argument("rees_presentation: generators must not involve h or theta");
  }

  const Ring wring = Ring::rees(vs);
  const ModuleOrder wo = detail::rees_order(vs, shifts, p.tiebreak);
  p.gb = GroebnerBasis{wo, {}, true};

  const ModuleOrder ro = detail::rabinowitsch_order(vs, shifts, p.tiebreak);
  const int s_slot = vs.nslots();
  std::vector<FreeElement> rgens;
  for (const auto& g : gens) {
    FreeElement f{p.rank, detail::to_terms(g)};
    if (f.terms.empty()) continue;
    f.sort(ro);
    f = detail::homogenize_with(std::move(f), vs.theta(), [&](const Term& t) {
      return long(bidegree_of_monomial(t.m, vs).v + shifts[t.comp].v);
    }, ro);
    f = detail::homogenize_with(std::move(f), vs.h(), [&](const Term& t) {
      return long(bidegree_of_monomial(t.m, vs).f + shifts[t.comp].f);
    }, ro);
    rgens.push_back(std::move(f));
  }
  if (rgens.empty()) return p;
  Monomial st;
  st.e[s_slot] = 1;
  st.e[vs.theta()] = 1;
  for (int c = 0; c < p.rank; ++c) {
    FreeElement r{p.rank, {{Monomial{}, c, Rational(1)}, {st, c, Rational(-1)}}};
    r.sort(ro);
    rgens.push_back(std::move(r));
  }
  GroebnerBasis rgb = buchberger(std::move(rgens), ro, wring);
  std::vector<FreeElement> wgens;
  for (auto& f : rgb.elems) {
    if (f.lead().m.e[s_slot]) continue;  // leads are s-free exactly when the element is
    f.sort(wo);
    wgens.push_back(std::move(f));
  }

  // Stage 2: saturate; repeat while theta or h still divides an element.
  GroebnerBasis cur = buchberger(std::move(wgens), wo, wring, nullptr, vs.h());
  for (int round = 0; round < 50; ++round) {
    int used = 0;
    cur = saturate_central(cur, vs.h(), wring, 50, &used);
    p.saturation_rounds += used;
    bool divisible = false;
    std::vector<FreeElement> next;
    for (auto f : cur.elems) {
      int k = INT32_MAX;
      for (const auto& t : f.terms) k = std::min<int>(k, t.m.e[vs.theta()]);
      if (k > 0) {
        divisible = true;
        for (auto& t : f.terms) t.m.e[vs.theta()] = static_cast<std::uint16_t>(t.m.e[vs.theta()] - k);
      }
      next.push_back(std::move(f));
    }
    if (!divisible) {
      p.gb = std::move(cur);
      return p;
    }
    ++p.saturation_rounds;
    cur = buchberger(std::move(next), wo, wring, nullptr, vs.h());
  }
  throw GroebnerError("rees_presentation: saturation did not reach a joint fixpoint");
}

struct ResolutionLevel {
  int rank = 0;
  std::vector<Bidegree> shifts;
  /// Images of the basis vectors of this level in the previous level
  /// (empty for level 0).
  std::vector<FreeElement> differential;
  ModuleOrder order;  // order on this level's free module
};

struct BifilteredResolution {
  VarSpec vars;
  std::vector<ResolutionLevel> levels;  // levels[0] is the presentation module
  int length() const { return static_cast<int>(levels.size()) - 1; }
};

class ResolutionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

/// Slots in the order used by the Schreyer length bound: after sorting a
/// level by the exponent of the k-th slot, the next syzygy leads avoid it.
inline std::vector<int> elimination_sequence(const VarSpec& vs) {
  std::vector<int> seq{vs.h(), vs.theta()};
  for (int i = vs.size() - 1; i >= 0; --i) seq.push_back(vs.base(i));
  for (int i = vs.size() - 1; i >= 0; --i) seq.push_back(vs.deriv(i));
  return seq;
}

inline void sort_by_slot(std::vector<FreeElement>& elems, int slot) {
  std::stable_sort(elems.begin(), elems.end(), [&](const FreeElement& a, const FreeElement& b) {
    if (a.lead().comp != b.lead().comp) return a.lead().comp < b.lead().comp;
    return a.lead().m.e[slot] > b.lead().m.e[slot];
  });
}

}  // namespace detail

/// One level of a Schreyer chain: the order on the level's free module and
/// the images of its basis vectors in the previous level.
struct SchreyerLevel {
  ModuleOrder order;
  std::vector<FreeElement> images;
};

/// Iterated Schreyer syzygies starting from a Groebner basis `g`.  Before
/// each step the current basis is sorted so that the next syzygy leads
/// avoid the slot seq[k]; once every slot is eliminated no pairs remain, so
/// the chain has at most seq.size() + 1 levels.
inline std::vector<SchreyerLevel> schreyer_chain(const GroebnerBasis& g, const Ring& ring, const std::vector<int>& seq) {
  std::vector<SchreyerLevel> out;
  const int cap = static_cast<int>(seq.size()) + 1;
  ModuleOrder prev = g.order;
  std::vector<FreeElement> elems = g.elems;
  for (int level = 1; !elems.empty(); ++level) {
    if (level > cap)
      throw ResolutionError("schreyer_chain: more than " + std::to_string(cap) + " levels (internal error)");
    if (!seq.empty()) detail::sort_by_slot(elems, seq[std::min<std::size_t>(level - 1, seq.size() - 1)]);
    GroebnerBasis cur{prev, elems, false};
    GroebnerBasis syz = syzygies(cur, ring);
    out.push_back({prev, std::move(elems)});
    prev = syz.order;
    elems = std::move(syz.elems);
  }
  return out;
}

/// Iterated Schreyer syzygies on the saturated Rees presentation.
inline BifilteredResolution bifiltered_resolution(const BifilteredPresentation& p) {
  const Ring wring = Ring::rees(p.vars);
  BifilteredResolution res;
  res.vars = p.vars;
  ResolutionLevel l0;
  l0.rank = p.rank;
  l0.shifts = p.shifts;
  l0.order = p.gb.order;
  res.levels.push_back(std::move(l0));

  auto chain = schreyer_chain(p.gb, wring, detail::elimination_sequence(p.vars));
  for (std::size_t k = 0; k < chain.size(); ++k) {
    const ResolutionLevel& prev = res.levels.back();
    ResolutionLevel cur;
    cur.rank = static_cast<int>(chain[k].images.size());
    for (const auto& e : chain[k].images) {
      auto d = bidegree_of(e, p.vars, prev.shifts);
      if (!d)
        throw ResolutionError("bifiltered_resolution: level " + std::to_string(k + 1) + " element is not bihomogeneous");
      cur.shifts.push_back(*d);
    }
    cur.order = k + 1 < chain.size() ? chain[k + 1].order
                                     : ModuleOrder::schreyer(GroebnerBasis{chain[k].order, chain[k].images, false}.leads(),
                                                             chain[k].order);
    cur.differential = std::move(chain[k].images);
    res.levels.push_back(std::move(cur));
  }
  return res;
}

struct ComplexReport {
  bool ok = true;
  std::vector<std::string> failures;
};

/// Checks d_i o d_{i+1} = 0, bihomogeneity of every entry against the
/// shifts and, optionally, exactness: every recomputed syzygy of level i
/// reduces to zero modulo level i+1.
inline ComplexReport verify_complex(const BifilteredResolution& res, bool check_exactness = false) {
  ComplexReport rep;
  const Ring wring = Ring::rees(res.vars);
  auto fail = [&](std::string s) {
    rep.ok = false;
    rep.failures.push_back(std::move(s));
  };
  for (int i = 1; i <= res.length(); ++i) {
    const auto& lvl = res.levels[i];
    const auto& prev = res.levels[i - 1];
    if (static_cast<int>(lvl.differential.size()) != lvl.rank) fail("level " + std::to_string(i) + ": rank mismatch");
    for (int j = 0; j < static_cast<int>(lvl.differential.size()); ++j) {
      const auto& col = lvl.differential[j];
      for (const auto& t : col.terms) {
        if (t.comp < 0 || t.comp >= prev.rank) {
          fail("level " + std::to_string(i) + " column " + std::to_string(j) + ": component out of range");
          continue;
        }
        if (bidegree_of_term(t, res.vars, prev.shifts) != lvl.shifts[j])
          fail("level " + std::to_string(i) + " entry (" + std::to_string(t.comp) + "," + std::to_string(j) +
               "): bidegree does not match the shifts");
      }
      if (i >= 2) {
        FreeElement img;
        img.rank = res.levels[i - 2].rank;
        for (int c = 0; c < prev.rank; ++c) {
          WElement coef = col.component(c);
          if (coef.is_zero()) continue;
          auto part = multiply(coef, prev.differential[c], wring, res.levels[i - 2].order);
          img.terms = detail::add(res.levels[i - 2].order, std::move(img.terms), part.terms);
        }
        if (!img.is_zero())
          fail("level " + std::to_string(i) + " column " + std::to_string(j) + ": composite differential is nonzero");
      }
    }
  }
  if (check_exactness && rep.ok) {
    for (int i = 1; i <= res.length(); ++i) {
      GroebnerBasis g{res.levels[i - 1].order, res.levels[i].differential, false};
      GroebnerBasis syz = syzygies(g, wring);
      if (i == res.length()) {
        if (!syz.elems.empty()) fail("level " + std::to_string(i) + ": nonzero kernel beyond the last level");
        continue;
      }
      GroebnerBasis next{res.levels[i].order, res.levels[i + 1].differential, false};
      for (std::size_t k = 0; k < syz.elems.size(); ++k)
        if (!is_member(syz.elems[k], next, wring))
          fail("level " + std::to_string(i) + ": syzygy " + std::to_string(k) + " is not in the image of level " +
               std::to_string(i + 1));
    }
  }
  return rep;
}

}  // namespace dmdeg
