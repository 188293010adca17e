#pragma once

// Monomial orders on W and module orders on free W-modules, including the
// Schreyer orders induced by a Groebner basis.

#include "dmdeg/ring.hpp"

#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace dmdeg {

/// One comparison tier: a weight vector over all slots, or a named base
/// order (grevlex / lex) over a slot priority sequence (first = largest).
struct OrderTier {
  enum class Kind { weight, grevlex, lex };
  Kind kind = Kind::grevlex;
  std::vector<int> weight;    // one entry per slot (weight tiers)
  std::vector<int> sequence;  // slot priority (grevlex / lex tiers)

  friend bool operator==(const OrderTier&, const OrderTier&) = default;
};

/// Default slot priority: derivative block, base block, theta, h.
inline std::vector<int> default_priority(const VarSpec& vs) {
  std::vector<int> seq;
  for (int i = 0; i < vs.size(); ++i) seq.push_back(vs.deriv(i));
  for (int i = 0; i < vs.size(); ++i) seq.push_back(vs.base(i));
  seq.push_back(vs.theta());
  seq.push_back(vs.h());
  return seq;
}

inline std::vector<int> f_weights(const VarSpec& vs) {
  std::vector<int> w(vs.nslots(), 0);
  for (int i = 0; i < vs.size(); ++i) w[vs.deriv(i)] = 1;
  w[vs.h()] = 1;
  return w;
}
inline std::vector<int> v_weights(const VarSpec& vs) {
  std::vector<int> w(vs.nslots(), 0);
  for (int i = 0; i < vs.size(); ++i) {
    if (!vs.is_t(i)) continue;
    w[vs.base(i)] = -1;
    w[vs.deriv(i)] = 1;
  }
  w[vs.theta()] = 1;
  return w;
}

class TermOrder {
 public:
  TermOrder() = default;
  TermOrder(int nslots, std::vector<OrderTier> tiers) : nslots_(nslots), tiers_(std::move(tiers)) {
    for (const auto& t : tiers_) {
      if (t.kind == OrderTier::Kind::weight && static_cast<int>(t.weight.size()) != nslots_)
        throw std::invalid_argument("TermOrder: weight vector has the wrong length");
      if (t.kind != OrderTier::Kind::weight) {
        std::vector<int> s = t.sequence;
        std::sort(s.begin(), s.end());
        for (int i = 0; i < static_cast<int>(s.size()); ++i)
          if (s[i] != i) throw std::invalid_argument("TermOrder: base order sequence must be a permutation of all slots");
        if (static_cast<int>(s.size()) != nslots_)
          throw std::invalid_argument("TermOrder: base order sequence must cover all slots");
      }
    }
    if (tiers_.empty() || tiers_.back().kind == OrderTier::Kind::weight)
      throw std::invalid_argument("TermOrder: the last tier must be grevlex or lex");
  }

  static TermOrder grevlex(const VarSpec& vs) { return grevlex(vs, default_priority(vs)); }
  static TermOrder grevlex(const VarSpec& vs, std::vector<int> seq) {
    return TermOrder(vs.nslots(), {{OrderTier::Kind::grevlex, {}, std::move(seq)}});
  }
  static TermOrder lex(const VarSpec& vs, std::vector<int> seq) {
    return TermOrder(vs.nslots(), {{OrderTier::Kind::lex, {}, std::move(seq)}});
  }
  /// Weight tiers followed by the given tie-break tiers.
  static TermOrder weighted(std::vector<std::vector<int>> weights, const TermOrder& tiebreak) {
    std::vector<OrderTier> tiers;
    for (auto& w : weights) tiers.push_back({OrderTier::Kind::weight, std::move(w), {}});
    for (const auto& t : tiebreak.tiers_) tiers.push_back(t);
    return TermOrder(tiebreak.nslots_, std::move(tiers));
  }

  int nslots() const { return nslots_; }
  const std::vector<OrderTier>& tiers() const { return tiers_; }
  int weight_tier_count() const {
    int c = 0;
    for (const auto& t : tiers_) c += t.kind == OrderTier::Kind::weight;
    return c;
  }

  /// -1, 0, +1.  `off_a` / `off_b` are per-weight-tier offsets (may be null).
  int compare(const Monomial& a, const Monomial& b, const long* off_a = nullptr,
              const long* off_b = nullptr) const {
    int wt = 0;
    for (const auto& t : tiers_) {
      switch (t.kind) {
        case OrderTier::Kind::weight: {
          long va = off_a ? off_a[wt] : 0, vb = off_b ? off_b[wt] : 0;
          for (int i = 0; i < nslots_; ++i) {
            if (t.weight[i] == 0) continue;
            va += static_cast<long>(t.weight[i]) * a.e[i];
            vb += static_cast<long>(t.weight[i]) * b.e[i];
          }
          ++wt;
          if (va != vb) return va < vb ? -1 : 1;
          break;
        }
        case OrderTier::Kind::grevlex: {
          int da = 0, db = 0;
          for (int s : t.sequence) {
            da += a.e[s];
            db += b.e[s];
          }
          if (da != db) return da < db ? -1 : 1;
          for (auto it = t.sequence.rbegin(); it != t.sequence.rend(); ++it) {
            if (a.e[*it] != b.e[*it]) return a.e[*it] < b.e[*it] ? 1 : -1;
          }
          return 0;
        }
        case OrderTier::Kind::lex: {
          for (int s : t.sequence)
            if (a.e[s] != b.e[s]) return a.e[s] < b.e[s] ? -1 : 1;
          return 0;
        }
      }
    }
    return 0;
  }

  /// Sufficient condition for a well-order: every negative weight entry on a
  /// slot is preceded by a non-negative tier that is positive on that slot.
  bool well_founded() const {
    std::vector<bool> bounded(nslots_, false);
    for (const auto& t : tiers_) {
      if (t.kind != OrderTier::Kind::weight) return true;
      bool nonneg = true;
      for (int i = 0; i < nslots_; ++i) {
        if (t.weight[i] < 0) {
          nonneg = false;
          if (!bounded[i]) return false;
        }
      }
      if (nonneg)
        for (int i = 0; i < nslots_; ++i)
          if (t.weight[i] > 0) bounded[i] = true;
    }
    return true;
  }

  std::string to_string(const VarSpec& vs) const {
    std::ostringstream os;
    bool first = true;
    for (const auto& t : tiers_) {
      if (!first) os << ';';
      first = false;
      if (t.kind == OrderTier::Kind::weight) {
        os << "weighted(";
        for (int i = 0; i < nslots_; ++i) os << (i ? "," : "") << t.weight[i];
        os << ')';
      } else {
        os << (t.kind == OrderTier::Kind::grevlex ? "grevlex" : "lex");
        if (t.sequence != default_priority(vs)) {
          os << '(';
          for (std::size_t i = 0; i < t.sequence.size(); ++i)
            os << (i ? "," : "") << vs.slot_name(t.sequence[i]);
          os << ')';
        }
      }
    }
    return os.str();
  }

  friend bool operator==(const TermOrder&, const TermOrder&) = default;

 private:
  int nslots_ = 0;
  std::vector<OrderTier> tiers_;
};

/// Order on (monomial, component) pairs.  Component c is compared through
///   1. pos_key[c] when position_first,
///   2. the term order applied to m + add[c] with weight offsets offset[c],
///   3. rank[c] (lower rank is greater).
/// Plain term-over-position orders have add = 0 and rank = index; Schreyer
/// orders carry the lead data of the basis that induced them.
class ModuleOrder {
 public:
  ModuleOrder() = default;

  /// Term-over-position on a free module of the given rank.  `offsets`
  /// holds, per component, one offset per weight tier (shifts); may be empty.
  static ModuleOrder term_over_position(std::shared_ptr<const TermOrder> base, int rank,
                                        std::vector<std::vector<long>> offsets = {}) {
    ModuleOrder o;
    o.base_ = std::move(base);
    o.add_.assign(rank, Monomial{});
    o.rank_.resize(rank);
    o.pos_key_.resize(rank);
    for (int i = 0; i < rank; ++i) o.rank_[i] = o.pos_key_[i] = i;
    o.set_offsets(std::move(offsets));
    return o;
  }
  static ModuleOrder position_over_term(std::shared_ptr<const TermOrder> base, int rank,
                                        std::vector<int> priority = {}) {
    ModuleOrder o = term_over_position(std::move(base), rank);
    o.position_first_ = true;
    if (!priority.empty()) {
      if (static_cast<int>(priority.size()) != rank)
        throw std::invalid_argument("ModuleOrder: priority list must name every component");
      for (int i = 0; i < rank; ++i) o.pos_key_[priority[i]] = o.rank_[priority[i]] = i;
    }
    return o;
  }

  int rank() const { return static_cast<int>(add_.size()); }
  const TermOrder& term_order() const { return *base_; }
  std::shared_ptr<const TermOrder> term_order_ptr() const { return base_; }
  bool position_first() const { return position_first_; }
  const Monomial& add(int c) const { return add_[c]; }
  const std::vector<long>& offset(int c) const { return offset_[c]; }
  int rank_key(int c) const { return rank_[c]; }
  bool is_schreyer() const { return schreyer_; }

  int compare(const Monomial& a, int ca, const Monomial& b, int cb) const {
    if (position_first_ && pos_key_[ca] != pos_key_[cb]) return pos_key_[ca] < pos_key_[cb] ? 1 : -1;
    const long* oa = offset_[ca].empty() ? nullptr : offset_[ca].data();
    const long* ob = offset_[cb].empty() ? nullptr : offset_[cb].data();
    int r;
    if (schreyer_)
      r = base_->compare(a + add_[ca], b + add_[cb], oa, ob);
    else
      r = base_->compare(a, b, oa, ob);
    if (r != 0) return r;
    if (rank_[ca] != rank_[cb]) return rank_[ca] < rank_[cb] ? 1 : -1;
    return 0;
  }

  /// Schreyer order induced by the leads (m_i, c_i) of a basis living in
  /// the module ordered by `base`: (m, i) < (m', j) iff m*m_i e_{c_i} <
  /// m'*m_j e_{c_j} in `base`, ties resolved in favour of the lower index.
  static ModuleOrder schreyer(const std::vector<std::pair<Monomial, int>>& leads, const ModuleOrder& base) {
    ModuleOrder o;
    o.base_ = base.base_;
    o.position_first_ = base.position_first_;
    o.schreyer_ = true;
    const int r = static_cast<int>(leads.size());
    o.add_.resize(r);
    o.offset_.resize(r);
    o.pos_key_.resize(r);
    o.rank_.resize(r);
    std::vector<int> idx(r);
    for (int i = 0; i < r; ++i) {
      const auto& [m, c] = leads[i];
      if (c < 0 || c >= base.rank()) throw std::invalid_argument("schreyer order: lead component out of range");
      o.add_[i] = m + base.add_[c];
      o.offset_[i] = base.offset_[c];
      o.pos_key_[i] = base.pos_key_[c];
      idx[i] = i;
    }
    std::stable_sort(idx.begin(), idx.end(), [&](int x, int y) {
      return base.rank_[leads[x].second] < base.rank_[leads[y].second];
    });
    for (int pos = 0; pos < r; ++pos) o.rank_[idx[pos]] = pos;
    return o;
  }

 private:
  void set_offsets(std::vector<std::vector<long>> offsets) {
    const int r = rank();
    if (offsets.empty()) {
      offset_.assign(r, {});
      return;
    }
    if (static_cast<int>(offsets.size()) != r)
      throw std::invalid_argument("ModuleOrder: one offset row per component is required");
    for (const auto& row : offsets)
      if (static_cast<int>(row.size()) != base_->weight_tier_count())
        throw std::invalid_argument("ModuleOrder: one offset per weight tier is required");
    offset_ = std::move(offsets);
  }

  std::shared_ptr<const TermOrder> base_;
  bool position_first_ = false;
  bool schreyer_ = false;
  std::vector<Monomial> add_;
  std::vector<std::vector<long>> offset_;
  std::vector<int> pos_key_;
  std::vector<int> rank_;
};

/// Ordering in a rank-one setting.
inline int compare(const TermOrder& o, const Monomial& a, const Monomial& b) { return o.compare(a, b); }
inline int compare(const ModuleOrder& o, const Monomial& a, int ca, const Monomial& b, int cb) {
  return o.compare(a, ca, b, cb);
}

}  // namespace dmdeg
