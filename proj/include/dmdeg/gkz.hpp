#pragma once

// A-hypergeometric systems: toric ideals, Euler operators, normalized
// volumes, the generic multidegree formula, the Cohen-Macaulay test for the
// homogenized toric ring, and parameter sweeps.

#include "dmdeg/hull.hpp"
#include "dmdeg/integer_matrix.hpp"
#include "dmdeg/pipeline.hpp"

#include <future>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace dmdeg {

class InvalidInstance : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

/// Integer w with w . a_j > 0 for every column, searched over growing boxes.
inline std::optional<std::vector<Integer>> halfspace_witness(const IntMatrix& a, int max_box = 12) {
  const int d = static_cast<int>(a.size());
  const int n = d ? static_cast<int>(a[0].size()) : 0;
  std::vector<long> w(d);
  for (int box = 1; box <= max_box; ++box) {
    std::vector<long> cur(d, -box);
    for (;;) {
      bool ok = true;
      for (int j = 0; j < n && ok; ++j) {
        Integer s = 0;
        for (int i = 0; i < d; ++i) s += a[i][j] * cur[i];
        ok = s > 0;
      }
      if (ok) {
        std::vector<Integer> r;
        for (long v : cur) r.emplace_back(v);
        return r;
      }
      int k = 0;
      while (k < d && cur[k] == box) cur[k++] = -box;
      if (k == d) break;
      ++cur[k];
    }
  }
  return std::nullopt;
}

}  // namespace detail

struct GkzInstance {
  IntMatrix A;
  std::vector<Rational> beta;
  std::vector<Integer> halfspace;  // w with w . a_j > 0

  int d() const { return static_cast<int>(A.size()); }
  int n() const { return A.empty() ? 0 : static_cast<int>(A[0].size()); }

  /// Checks that the columns generate Z^d and lie in an open halfspace.
  static GkzInstance make(IntMatrix a, std::vector<Rational> beta = {}) {
    if (a.empty() || a[0].empty()) throw InvalidInstance("matrix A is empty");
    for (const auto& row : a)
      if (row.size() != a[0].size()) throw InvalidInstance("matrix A has rows of different lengths");
    GkzInstance g;
    g.A = std::move(a);
    if (beta.empty()) beta.assign(g.d(), Rational(0));
    if (static_cast<int>(beta.size()) != g.d())
      throw InvalidInstance("beta has " + std::to_string(beta.size()) + " entries, A has " + std::to_string(g.d()) +
                            " rows");
    g.beta = std::move(beta);
    auto inv = smith_invariants(g.A);
    if (static_cast<int>(inv.size()) != g.d())
      throw InvalidInstance("the columns of A do not span a rank-" + std::to_string(g.d()) + " lattice");
    for (const auto& v : inv)
      if (v != 1) throw InvalidInstance("the columns of A do not generate Z^d (elementary divisor " + v.get_str() + ")");
    auto w = detail::halfspace_witness(g.A);
    if (!w) throw InvalidInstance("no open halfspace containing all columns of A was found");
    g.halfspace = *w;
    return g;
  }
};

/// Variables x1..xn with the given t-type flags.
inline VarSpec gkz_vars(int n, const std::vector<bool>& t_flags) {
  std::vector<std::string> names;
  for (int j = 1; j <= n; ++j) names.push_back("x" + std::to_string(j));
  return VarSpec(names, t_flags);
}

/// Which hyperplanes the V-filtration is taken along.
struct VSelector {
  enum class Kind { origin, hyperplane, none, explicit_flags };
  Kind kind = Kind::origin;
  int index = 0;  // hyperplane: 0-based variable index
  std::vector<bool> flags;

  std::vector<bool> t_flags(int n) const {
    switch (kind) {
      case Kind::origin: return std::vector<bool>(n, true);
      case Kind::none: return std::vector<bool>(n, false);
      case Kind::hyperplane: {
        std::vector<bool> f(n, false);
        f.at(index) = true;
        return f;
      }
      case Kind::explicit_flags: return flags;
    }
    return {};
  }
  static VSelector origin() { return {}; }
  static VSelector along(int i) { return {Kind::hyperplane, i, {}}; }
};

inline std::vector<std::vector<Integer>> lattice_kernel(const IntMatrix& a) {
  auto ker = integer_kernel(a);
  const int n = a.empty() ? 0 : static_cast<int>(a[0].size());
  if (static_cast<int>(ker.size()) != n - integer_rank(a)) throw InvalidInstance("lattice_kernel: rank mismatch");
  return ker;
}

namespace detail {

inline FreeElement binomial_of(const std::vector<Integer>& u, const VarSpec& vs) {
  Monomial plus, minus;
  for (int j = 0; j < static_cast<int>(u.size()); ++j) {
    long v = u[j].get_si();
    if (v > 0) plus.e[vs.deriv(j)] = static_cast<std::uint16_t>(v);
    if (v < 0) minus.e[vs.deriv(j)] = static_cast<std::uint16_t>(-v);
  }
  FreeElement f{1, {{plus, 0, Rational(1)}, {minus, 0, Rational(-1)}}};
  return f;
}

inline ModuleOrder rank_one(TermOrder o) {
  return ModuleOrder::term_over_position(std::make_shared<const TermOrder>(std::move(o)), 1);
}

}  // namespace detail

/// Reduced grevlex Groebner basis of I_A in Q[d1..dn], obtained from the
/// lattice binomials by saturating with each d_j in turn until nothing
/// changes.  Saturation by d_j uses the A-degree, then fewest d_j.
inline GroebnerBasis toric_gb(const GkzInstance& g, const VarSpec& vs) {
  const Ring ring = Ring::commutative(vs);
  const int n = g.n();
  std::vector<int> adeg(vs.nslots(), 0);
  for (int j = 0; j < n; ++j) {
    Integer s = 0;
    for (int i = 0; i < g.d(); ++i) s += g.halfspace[i] * g.A[i][j];
    adeg[vs.deriv(j)] = static_cast<int>(s.get_si());
  }
  std::vector<FreeElement> cur;
  for (const auto& u : lattice_kernel(g.A)) cur.push_back(detail::binomial_of(u, vs));
  const ModuleOrder final_order = detail::rank_one(TermOrder::grevlex(vs));
  if (cur.empty()) return {final_order, {}, true};
  bool changed = true;
  for (int cycle = 0; changed; ++cycle) {
    if (cycle > 50) throw GroebnerError("toric_gb: saturation cycle did not stabilize");
    changed = false;
    for (int j = 0; j < n; ++j) {
      std::vector<int> minus(vs.nslots(), 0);
      minus[vs.deriv(j)] = -1;
      ModuleOrder o = detail::rank_one(TermOrder::weighted({adeg, minus}, TermOrder::grevlex(vs)));
      GroebnerBasis gb = buchberger(cur, o, ring);
      int rounds = 0;
      gb = saturate_central(gb, vs.deriv(j), ring, 50, &rounds);
      if (rounds > 0) changed = true;
      cur = gb.elems;
    }
  }
  return buchberger(cur, final_order, ring);
}

inline CommutativeIdeal toric_ideal(const GkzInstance& g, const VarSpec& vs) {
  return {vs, 1, toric_gb(g, vs).elems};
}

inline std::vector<WElement> euler_operators(const GkzInstance& g, const VarSpec& vs) {
  std::vector<WElement> out;
  for (int i = 0; i < g.d(); ++i) {
    std::vector<WElement::Term> t;
    for (int j = 0; j < g.n(); ++j) {
      if (g.A[i][j] == 0) continue;
      Monomial m;
      m.e[vs.base(j)] = 1;
      m.e[vs.deriv(j)] = 1;
      t.emplace_back(m, Rational(g.A[i][j]));
    }
    t.emplace_back(Monomial{}, -g.beta[i]);
    out.push_back(WElement::from_terms(std::move(t)));
  }
  return out;
}

/// Toric generators (in the derivatives) followed by the Euler operators.
inline GeneratorList hypergeometric_ideal(const GkzInstance& g, const VarSpec& vs) {
  GeneratorList out;
  for (const auto& f : toric_gb(g, vs).elems) out.push_back({f.component(0)});
  for (auto& e : euler_operators(g, vs)) out.push_back({std::move(e)});
  return out;
}

namespace detail {

using UPoly = std::vector<Integer>;  // coefficients of t^k

inline void upoly_add(UPoly& a, const UPoly& b, int shift, int sign) {
  if (a.size() < b.size() + shift) a.resize(b.size() + shift, Integer(0));
  for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] += sign * b[k];
}

/// Numerator of the standard-graded Hilbert series of Q[vars] / J for a
/// monomial ideal J: HS = K(t) / (1 - t)^#vars.
inline UPoly hilbert_numerator(std::vector<Monomial> gens) {
  gens = minimal_monomials(std::move(gens));
  if (gens.empty()) return {Integer(1)};
  Monomial m = gens.back();
  gens.pop_back();
  std::vector<Monomial> quot;
  for (const auto& g : gens) {
    Monomial q;
    for (int i = 0; i < kMaxSlots; ++i) q.e[i] = static_cast<std::uint16_t>(g.e[i] > m.e[i] ? g.e[i] - m.e[i] : 0);
    quot.push_back(q);
  }
  UPoly k = hilbert_numerator(gens);
  upoly_add(k, hilbert_numerator(quot), m.degree(), -1);
  while (!k.empty() && k.back() == 0) k.pop_back();
  return k;
}

/// (dimension, degree) of Q[vars]/J from its Hilbert numerator.
inline std::pair<int, Integer> dimension_degree(UPoly k, int nvars) {
  int divisions = 0;
  auto at_one = [](const UPoly& p) {
    Integer s = 0;
    for (const auto& c : p) s += c;
    return s;
  };
  while (!k.empty() && at_one(k) == 0) {
    // synthetic division by (1 - t): q_k = sum_{i <= k} p_i
    UPoly q(k.size() - 1);
    Integer acc = 0;
    for (std::size_t i = 0; i + 1 < k.size(); ++i) {
      acc += k[i];
      q[i] = acc;
    }
    k = std::move(q);
    ++divisions;
  }
  return {nvars - divisions, at_one(k)};
}

inline bool homogeneous_instance(const GkzInstance& g) {
  IntMatrix ext = g.A;
  ext.push_back(std::vector<Integer>(g.n(), Integer(1)));
  return integer_rank(ext) == integer_rank(g.A);
}

}  // namespace detail

/// Degree of the projective toric variety; equals vol(A) when the columns
/// lie on an affine hyperplane of height one.
inline Integer normalized_volume_degree(const GkzInstance& g) {
  if (!detail::homogeneous_instance(g))
    throw UnsupportedDimension("normalized_volume: degree path needs all columns on one affine hyperplane");
  VarSpec vs = gkz_vars(g.n(), std::vector<bool>(g.n(), false));
  std::vector<Monomial> leads;
  for (const auto& f : toric_gb(g, vs).elems) leads.push_back(f.lead().m);
  return detail::dimension_degree(detail::hilbert_numerator(leads), g.n()).second;
}

inline Integer normalized_volume(const GkzInstance& g) {
  if (g.d() <= 3) return normalized_volume_hull(g.A);
  return normalized_volume_degree(g);
}

/// vol(A) * T1^d * (T1 + T2)^(n - d).
inline LaurentPoly2 generic_prediction(const GkzInstance& g) {
  return generic_formula(normalized_volume(g), g.d(), g.n());
}

namespace detail {

inline int rational_rank(std::vector<std::vector<Rational>> m) {
  int r = 0;
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c] != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(m[r], m[p]);
    for (int i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      Rational f = m[i][c] / m[r][c];
      for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

}  // namespace detail

struct CohenMacaulayReport {
  bool cohen_macaulay = false;
  int projective_dimension = 0;
  int dimension = 0;
  std::vector<int> betti;  // ranks of the minimal graded resolution
};

/// Cohen-Macaulay test for Q[d, h] / H(I_A), H the homogenization with
/// respect to total degree: a graded Schreyer resolution is minimized by
/// discarding its scalar part (Betti numbers are the homology of the
/// resolution tensored with Q), and CM holds iff pd = (n + 1) - dim.
inline CohenMacaulayReport cohen_macaulay_report(const GkzInstance& g) {
  const int n = g.n();
  std::vector<std::string> names;
  for (int j = 1; j <= n + 1; ++j) names.push_back(j <= n ? "x" + std::to_string(j) : "h0");
  VarSpec ext(names, std::vector<bool>(n + 1, false));
  VarSpec vs = gkz_vars(n, std::vector<bool>(n, false));
  const Ring ring = Ring::commutative(ext);
  const ModuleOrder o = detail::rank_one(TermOrder::grevlex(ext));
  const int hslot = ext.deriv(n);

  std::vector<FreeElement> hom;
  for (const auto& f : toric_gb(g, vs).elems) {
    int top = 0;
    for (const auto& t : f.terms) top = std::max(top, t.m.degree());
    FreeElement e{1, {}};
    for (const auto& t : f.terms) {
      Monomial m;
      for (int j = 0; j < n; ++j) m.e[ext.deriv(j)] = t.m.e[vs.deriv(j)];
      m.e[hslot] = static_cast<std::uint16_t>(top - t.m.degree());
      e.terms.push_back({m, 0, t.c});
    }
    e.sort(o);
    hom.push_back(std::move(e));
  }
  GroebnerBasis gb = buchberger(hom, o, ring);

  CohenMacaulayReport rep;
  std::vector<int> vars;
  for (int j = 0; j <= n; ++j) vars.push_back(ext.deriv(j));
  std::vector<std::uint32_t> masks;
  for (const auto& f : gb.elems) masks.push_back(f.lead().m.support_mask());
  rep.dimension = detail::max_independent(vars, masks);

  std::vector<int> seq{hslot};
  for (int j = n - 1; j >= 0; --j) seq.push_back(ext.deriv(j));
  auto chain = schreyer_chain(gb, ring, seq);
  std::vector<int> ranks{1};
  std::vector<int> scalar_rank{0};
  for (const auto& lvl : chain) {
    const int rows = ranks.back();
    const int cols = static_cast<int>(lvl.images.size());
    std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols, Rational(0)));
    for (int c = 0; c < cols; ++c)
      for (const auto& t : lvl.images[c].terms)
        if (t.m.is_one()) m[t.comp][c] = t.c;
    scalar_rank.push_back(detail::rational_rank(m));
    ranks.push_back(cols);
  }
  scalar_rank.push_back(0);
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    int b = ranks[i] - scalar_rank[i] - scalar_rank[i + 1];
    rep.betti.push_back(b);
    if (b > 0) rep.projective_dimension = static_cast<int>(i);
  }
  while (!rep.betti.empty() && rep.betti.back() == 0) rep.betti.pop_back();
  rep.cohen_macaulay = rep.projective_dimension == (n + 1) - rep.dimension;
  return rep;
}

inline bool is_cohen_macaulay_toric(const GkzInstance& g) { return cohen_macaulay_report(g).cohen_macaulay; }

/// Full multidegree pipeline for M_A(beta).
inline Analysis analyze_gkz(const GkzInstance& g, const VarSpec& vs, const AnalysisOptions& opt = {}) {
  if (vs.size() != g.n())
    throw InvalidInstance("A has " + std::to_string(g.n()) + " columns but " + std::to_string(vs.size()) +
                          " variables are declared");
  return analyze(hypergeometric_ideal(g, vs), {Bidegree{}}, vs, opt);
}

inline Analysis analyze_gkz(const GkzInstance& g, const VSelector& sel, const AnalysisOptions& opt = {}) {
  return analyze_gkz(g, gkz_vars(g.n(), sel.t_flags(g.n())), opt);
}

struct SweepRow {
  std::vector<Rational> beta;
  bool ok = false;
  std::string error;
  std::optional<int> codim;
  std::optional<Multidegree> multidegree;
  bool holonomic = false;
  bool positive = false;    // every b_i >= 0
  bool exceptional = false;
  /// Coordinatewise b_i(this) >= b_i(generic); meaningful when exceptional.
  std::vector<bool> dominates;
};

struct SweepResult {
  std::vector<SweepRow> rows;
  std::optional<LaurentPoly2> modal;  // generic value: most frequent multidegree
  int modal_count = 0;
  std::optional<LaurentPoly2> formula;    // generic formula, along the origin only
  std::optional<bool> modal_matches_formula;
  bool all_exceptional_dominate = true;
};

/// Runs the pipeline for every beta (concurrently) and classifies rows.
/// The generic value is the most frequent multidegree of the sample (ties
/// go to the first seen); along the origin it is compared with the formula.
inline SweepResult sweep_beta(const IntMatrix& a, const std::vector<std::vector<Rational>>& betas, const VarSpec& vs,
                              const AnalysisOptions& opt = {}) {
  std::vector<std::future<SweepRow>> jobs;
  for (const auto& beta : betas)
    jobs.push_back(std::async(std::launch::async, [a, beta, vs, opt]() {
      SweepRow row;
      row.beta = beta;
      try {
        GkzInstance g = GkzInstance::make(a, beta);
        Analysis an = analyze_gkz(g, vs, opt);
        row.codim = an.codim.codim;
        row.holonomic = an.codim.holonomic;
        row.multidegree = an.multidegree;
        row.ok = an.ok();
        if (!row.ok) row.error = an.verification.failures.empty() ? "verification failed" : an.verification.failures[0];
        if (row.multidegree)
          row.positive = std::all_of(row.multidegree->b.begin(), row.multidegree->b.end(),
                                     [](const Integer& v) { return v >= 0; });
      } catch (const std::exception& e) {
        row.ok = false;
        row.error = e.what();
      }
      return row;
    }));
  SweepResult out;
  for (auto& j : jobs) out.rows.push_back(j.get());

  std::map<std::string, std::pair<int, LaurentPoly2>> freq;
  std::vector<std::string> first_seen;
  for (const auto& r : out.rows) {
    if (!r.multidegree) continue;
    auto key = r.multidegree->to_string();
    auto [it, inserted] = freq.try_emplace(key, 0, r.multidegree->poly);
    if (inserted) first_seen.push_back(key);
    ++it->second.first;
  }
  for (const auto& k : first_seen)
    if (freq[k].first > out.modal_count) {
      out.modal_count = freq[k].first;
      out.modal = freq[k].second;
    }
  const auto& tf = vs.t_flags();
  if (std::all_of(tf.begin(), tf.end(), [](bool b) { return b; })) {
    try {
      out.formula = generic_prediction(GkzInstance::make(a));
    } catch (const std::exception&) {
    }
    if (out.formula && out.modal) out.modal_matches_formula = *out.formula == *out.modal;
  }
  for (auto& r : out.rows) {
    if (!r.multidegree || !out.modal) continue;
    r.exceptional = r.multidegree->poly != *out.modal;
    if (!r.exceptional) continue;
    const int c = r.multidegree->codim;
    for (int i = 0; i <= c; ++i) {
      bool ge = r.multidegree->b[i] >= out.modal->coefficient(c - i, i);
      r.dominates.push_back(ge);
      if (!ge) out.all_exceptional_dominate = false;
    }
  }
  return out;
}

inline SweepResult sweep_beta(const IntMatrix& a, const std::vector<std::vector<Rational>>& betas, const VSelector& sel,
                              const AnalysisOptions& opt = {}) {
  const int n = a.empty() ? 0 : static_cast<int>(a[0].size());
  return sweep_beta(a, betas, gkz_vars(n, sel.t_flags(n)), opt);
}

}  // namespace dmdeg
