#pragma once

// Exact arithmetic in the Weyl algebra D = Q[x]<d> and in its homogenized
// Rees form W = D<h>[theta].  Every element is stored in normal form: base
// variables to the left of derivatives, h and theta central.

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dmdeg {

using Rational = mpq_class;
using Integer = mpz_class;

inline constexpr int kMaxSlots = 24;

/// Exponent vector over all slots of a ring: base variables, derivatives,
/// then h and theta.  Slots not used by a ring stay zero.
struct Monomial {
  std::array<std::uint16_t, kMaxSlots> e{};

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

  bool is_one() const {
    return std::all_of(e.begin(), e.end(), [](auto v) { return v == 0; });
  }
  bool divides(const Monomial& o) const {
    for (int i = 0; i < kMaxSlots; ++i)
      if (e[i] > o.e[i]) return false;
    return true;
  }
  int degree() const {
    int s = 0;
    for (auto v : e) s += v;
    return s;
  }
  std::uint32_t support_mask() const {
    std::uint32_t m = 0;
    for (int i = 0; i < kMaxSlots; ++i)
      if (e[i]) m |= (1u << i);
    return m;
  }
  Monomial& operator+=(const Monomial& o) {
    for (int i = 0; i < kMaxSlots; ++i) e[i] = static_cast<std::uint16_t>(e[i] + o.e[i]);
    return *this;
  }
  friend Monomial operator+(Monomial a, const Monomial& b) { return a += b; }
  /// Requires o | *this.
  friend Monomial operator-(Monomial a, const Monomial& b) {
    for (int i = 0; i < kMaxSlots; ++i) a.e[i] = static_cast<std::uint16_t>(a.e[i] - b.e[i]);
    return a;
  }
  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (int i = 0; i < kMaxSlots; ++i) r.e[i] = std::max(a.e[i], b.e[i]);
    return r;
  }
  static bool coprime(const Monomial& a, const Monomial& b) {
    for (int i = 0; i < kMaxSlots; ++i)
      if (a.e[i] && b.e[i]) return false;
    return true;
  }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto v : m.e) h = (h ^ v) * 1099511628211ull;
    return h;
  }
};

/// (F-degree, V-degree).  Also used for the shifts n_i, m_i of a free module.
struct Bidegree {
  int f = 0;
  int v = 0;
  friend bool operator==(const Bidegree&, const Bidegree&) = default;
  friend auto operator<=>(const Bidegree&, const Bidegree&) = default;
  friend Bidegree operator+(Bidegree a, Bidegree b) { return {a.f + b.f, a.v + b.v}; }
  friend Bidegree operator-(Bidegree a, Bidegree b) { return {a.f - b.f, a.v - b.v}; }
};

/// Variable declaration.  Variable i owns slot i, its derivative owns slot
/// N + i, h owns slot 2N and theta owns slot 2N + 1.  A t-type variable
/// carries V-weight -1 (its derivative +1).
class VarSpec {
 public:
  VarSpec() = default;
  VarSpec(std::vector<std::string> names, std::vector<bool> t_type)
      : names_(std::move(names)), t_type_(std::move(t_type)) {
    if (names_.empty()) throw std::invalid_argument("VarSpec: at least one variable is required");
    if (t_type_.size() != names_.size())
      throw std::invalid_argument("VarSpec: t-type flags do not match the variable count");
    // One slot stays free for an auxiliary central variable.
    if (2 * static_cast<int>(names_.size()) + 3 > kMaxSlots)
      throw std::invalid_argument("VarSpec: too many variables (at most " +
                                  std::to_string((kMaxSlots - 3) / 2) + ")");
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (names_[i].empty()) throw std::invalid_argument("VarSpec: empty variable name");
      for (std::size_t j = 0; j < i; ++j)
        if (names_[i] == names_[j])
          throw std::invalid_argument("VarSpec: duplicate variable name '" + names_[i] + "'");
    }
  }
  /// All variables of the same block.
  static VarSpec uniform(std::vector<std::string> names, bool t_type) {
    std::vector<bool> t(names.size(), t_type);
    return VarSpec(std::move(names), std::move(t));
  }

  int size() const { return static_cast<int>(names_.size()); }
  int nslots() const { return 2 * size() + 2; }
  const std::string& name(int i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  bool is_t(int i) const { return t_type_.at(i); }
  const std::vector<bool>& t_flags() const { return t_type_; }

  int base(int i) const { return i; }
  int deriv(int i) const { return size() + i; }
  int h() const { return 2 * size(); }
  int theta() const { return 2 * size() + 1; }

  std::optional<int> find(const std::string& n) const {
    for (int i = 0; i < size(); ++i)
      if (names_[i] == n) return i;
    return std::nullopt;
  }
  std::string slot_name(int slot) const {
    if (slot < size()) return names_[slot];
    if (slot < 2 * size()) return "d" + names_[slot - size()];
    if (slot == h()) return "h";
    if (slot == theta()) return "theta";
    return "?";
  }

  friend bool operator==(const VarSpec&, const VarSpec&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<bool> t_type_;
};

enum class Algebra { weyl, commutative };

/// A concrete ring over a VarSpec.
///   weyl, h_power 0: D itself (d_i x_i = x_i d_i + 1)
///   weyl, h_power 1: W (d_i x_i = x_i d_i + h), F-graded with h of F-weight 1
///   weyl, h_power 2: total-degree homogenized D (d_i x_i = x_i d_i + h^2)
///   commutative: polynomial ring in all slots
struct Ring {
  VarSpec vars;
  Algebra algebra = Algebra::weyl;
  int h_power = 1;

  static Ring weyl_d(VarSpec v) { return {std::move(v), Algebra::weyl, 0}; }
  static Ring rees(VarSpec v) { return {std::move(v), Algebra::weyl, 1}; }
  static Ring total_homogenized(VarSpec v) { return {std::move(v), Algebra::weyl, 2}; }
  static Ring commutative(VarSpec v) { return {std::move(v), Algebra::commutative, 0}; }

  int nslots() const { return vars.nslots(); }
  bool is_weyl() const { return algebra == Algebra::weyl; }

  /// True when the two slots do not commute.
  bool conjugate(int a, int b) const {
    if (!is_weyl()) return false;
    int n = vars.size();
    return (a < n && b == a + n) || (b < n && a == b + n);
  }

  friend bool operator==(const Ring&, const Ring&) = default;
};

inline Bidegree bidegree_of_monomial(const Monomial& m, const VarSpec& vs) {
  Bidegree d;
  for (int i = 0; i < vs.size(); ++i) {
    int b = m.e[vs.deriv(i)];
    d.f += b;
    if (vs.is_t(i)) d.v += b - static_cast<int>(m.e[vs.base(i)]);
  }
  d.f += m.e[vs.h()];
  d.v += m.e[vs.theta()];
  return d;
}

namespace detail {

inline Integer binomial(unsigned n, unsigned k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}
inline Integer factorial(unsigned n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

/// Product of two monomials in the ring: returns (monomial, integer factor)
/// pairs.  The first entry is always the commutative product with factor 1.
inline void multiply_monomials(const Ring& ring, const Monomial& left, const Monomial& right,
                               std::vector<std::pair<Monomial, Integer>>& out) {
  out.clear();
  out.emplace_back(left + right, Integer(1));
  if (!ring.is_weyl()) return;
  const int n = ring.vars.size();
  const int hslot = ring.vars.h();
  for (int i = 0; i < n; ++i) {
    unsigned b = left.e[n + i];  // derivative on the left
    unsigned a = right.e[i];     // base variable on the right
    unsigned kmax = std::min(a, b);
    if (kmax == 0) continue;
    const std::size_t count = out.size();
    for (unsigned k = 1; k <= kmax; ++k) {
      Integer f = factorial(k) * binomial(a, k) * binomial(b, k);
      for (std::size_t j = 0; j < count; ++j) {
        Monomial m = out[j].first;
        m.e[i] = static_cast<std::uint16_t>(m.e[i] - k);
        m.e[n + i] = static_cast<std::uint16_t>(m.e[n + i] - k);
        m.e[hslot] = static_cast<std::uint16_t>(m.e[hslot] + k * ring.h_power);
        out.emplace_back(m, out[j].second * f);
      }
    }
  }
}

}  // namespace detail

/// Element of D or W in normal form: a finite map Monomial -> Rational with
/// no zero coefficients, kept sorted by decreasing lexicographic exponent.
class WElement {
 public:
  using Term = std::pair<Monomial, Rational>;

  WElement() = default;
  explicit WElement(const Rational& c) {
    if (c != 0) terms_.emplace_back(Monomial{}, c);
  }
  static WElement monomial(const Monomial& m, const Rational& c = 1) {
    WElement r;
    if (c != 0) r.terms_.emplace_back(m, c);
    return r;
  }
  /// Builds from arbitrary (possibly repeated, unsorted) terms.
  static WElement from_terms(std::vector<Term> t) {
    WElement r;
    r.terms_ = std::move(t);
    r.canonicalize();
    return r;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  Rational coefficient(const Monomial& m) const {
    for (const auto& [mm, c] : terms_)
      if (mm == m) return c;
    return 0;
  }

  friend bool operator==(const WElement&, const WElement&) = default;

  WElement operator-() const {
    WElement r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
  }
  friend WElement operator+(const WElement& a, const WElement& b) { return combine(a, b, 1); }
  friend WElement operator-(const WElement& a, const WElement& b) { return combine(a, b, -1); }
  friend WElement operator*(const Rational& c, const WElement& a) {
    if (c == 0) return {};
    WElement r = a;
    for (auto& t : r.terms_) t.second *= c;
    return r;
  }

 private:
  static WElement combine(const WElement& a, const WElement& b, int sign) {
    WElement r;
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      if (j == b.terms_.size() || (i < a.terms_.size() && a.terms_[i].first > b.terms_[j].first)) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (i == a.terms_.size() || b.terms_[j].first > a.terms_[i].first) {
        r.terms_.emplace_back(b.terms_[j].first, sign * b.terms_[j].second);
        ++j;
      } else {
        Rational c = a.terms_[i].second + sign * b.terms_[j].second;
        if (c != 0) r.terms_.emplace_back(a.terms_[i].first, c);
        ++i;
        ++j;
      }
    }
    return r;
  }
  void canonicalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& x, const Term& y) { return x.first > y.first; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().first == t.first)
        out.back().second += t.second;
      else
        out.push_back(std::move(t));
    }
    std::erase_if(out, [](const Term& t) { return t.second == 0; });
    terms_ = std::move(out);
  }

  std::vector<Term> terms_;
};

/// Normal-form product P * Q in the given ring.
inline WElement multiply(const WElement& p, const WElement& q, const Ring& ring) {
  std::vector<WElement::Term> acc;
  std::vector<std::pair<Monomial, Integer>> prods;
  for (const auto& [mp, cp] : p.terms()) {
    for (const auto& [mq, cq] : q.terms()) {
      detail::multiply_monomials(ring, mp, mq, prods);
      Rational c = cp * cq;
      for (auto& [m, f] : prods) acc.emplace_back(m, c * f);
    }
  }
  return WElement::from_terms(std::move(acc));
}

/// d^b x^a rewritten in normal form, componentwise over all variables:
///   prod_i sum_k k! C(a_i,k) C(b_i,k) x_i^(a_i-k) d_i^(b_i-k) h^(k * h_power).
inline WElement normal_form_product(const std::vector<int>& deriv_exp, const std::vector<int>& base_exp,
                                    const Ring& ring) {
  const int n = ring.vars.size();
  if (static_cast<int>(deriv_exp.size()) != n || static_cast<int>(base_exp.size()) != n)
    throw std::invalid_argument("normal_form_product: exponent vectors must have one entry per variable");
  Monomial left, right;
  for (int i = 0; i < n; ++i) {
    if (deriv_exp[i] < 0 || base_exp[i] < 0)
      throw std::invalid_argument("normal_form_product: negative exponent");
    left.e[ring.vars.deriv(i)] = static_cast<std::uint16_t>(deriv_exp[i]);
    right.e[ring.vars.base(i)] = static_cast<std::uint16_t>(base_exp[i]);
  }
  return multiply(WElement::monomial(left), WElement::monomial(right), ring);
}

class UndefinedOrder : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline Bidegree max_bidegree(const WElement& p, const VarSpec& vs) {
  if (p.is_zero()) throw UndefinedOrder("order of the zero element is undefined");
  Bidegree d = bidegree_of_monomial(p.terms().front().first, vs);
  for (const auto& [m, c] : p.terms()) {
    Bidegree b = bidegree_of_monomial(m, vs);
    d.f = std::max(d.f, b.f);
    d.v = std::max(d.v, b.v);
  }
  return d;
}
inline int ord_F(const WElement& p, const VarSpec& vs) { return max_bidegree(p, vs).f; }
inline int ord_V(const WElement& p, const VarSpec& vs) { return max_bidegree(p, vs).v; }

inline bool is_bihomogeneous(const WElement& p, const VarSpec& vs) {
  if (p.is_zero()) return true;
  Bidegree d = bidegree_of_monomial(p.terms().front().first, vs);
  return std::all_of(p.terms().begin(), p.terms().end(),
                     [&](const auto& t) { return bidegree_of_monomial(t.first, vs) == d; });
}

/// Multiplies each monomial of bidegree (f, v) by h^(F - f) theta^(V - v)
/// where (F, V) = (ord_F, ord_V) of P.
inline WElement bihomogenize(const WElement& p, const VarSpec& vs) {
  if (p.is_zero()) throw std::invalid_argument("bihomogenize: zero element");
  for (const auto& [m, c] : p.terms())
    if (m.e[vs.h()] || m.e[vs.theta()])
      throw std::invalid_argument("bihomogenize: input already involves h or theta");
  Bidegree top = max_bidegree(p, vs);
  std::vector<WElement::Term> out;
  for (const auto& [m, c] : p.terms()) {
    Bidegree b = bidegree_of_monomial(m, vs);
    Monomial mm = m;
    mm.e[vs.h()] = static_cast<std::uint16_t>(top.f - b.f);
    mm.e[vs.theta()] = static_cast<std::uint16_t>(top.v - b.v);
    out.emplace_back(mm, c);
  }
  return WElement::from_terms(std::move(out));
}

/// Specializes h = 1 and theta = 1.
inline WElement dehomogenize(const WElement& p, const VarSpec& vs) {
  std::vector<WElement::Term> out;
  for (const auto& [m, c] : p.terms()) {
    Monomial mm = m;
    mm.e[vs.h()] = 0;
    mm.e[vs.theta()] = 0;
    out.emplace_back(mm, c);
  }
  return WElement::from_terms(std::move(out));
}

/// Single-generator helpers used throughout the tests and the front end.
inline WElement var(const VarSpec& vs, int i, int power = 1) {
  Monomial m;
  m.e[vs.base(i)] = static_cast<std::uint16_t>(power);
  return WElement::monomial(m);
}
inline WElement dvar(const VarSpec& vs, int i, int power = 1) {
  Monomial m;
  m.e[vs.deriv(i)] = static_cast<std::uint16_t>(power);
  return WElement::monomial(m);
}
inline WElement slot_power(int slot, int power = 1) {
  Monomial m;
  m.e[slot] = static_cast<std::uint16_t>(power);
  return WElement::monomial(m);
}

}  // namespace dmdeg
