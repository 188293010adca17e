#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace dmdeg;
using namespace testing;

namespace {

WElement commutator(const WElement& a, const WElement& b, const Ring& r) { return multiply(a, b, r) - multiply(b, a, r); }

}  // namespace

TEST_CASE("variable declarations are validated", "[ring]") {
  CHECK_THROWS_AS(VarSpec({}, {}), std::invalid_argument);
  CHECK_THROWS_AS(VarSpec({"x", "x"}, {true, true}), std::invalid_argument);
  CHECK_THROWS_AS(VarSpec({"x"}, {true, false}), std::invalid_argument);
  std::vector<std::string> many;
  for (int i = 0; i < 11; ++i) many.push_back("v" + std::to_string(i));
  CHECK_THROWS_AS(VarSpec::uniform(many, true), std::invalid_argument);
  many.pop_back();
  CHECK_NOTHROW(VarSpec::uniform(many, true));
  VarSpec vs({"t", "x"}, {true, false});
  CHECK(vs.slot_name(vs.deriv(0)) == "dt");
  CHECK(vs.slot_name(vs.h()) == "h");
  CHECK(vs.slot_name(vs.theta()) == "theta");
}

TEST_CASE("fundamental relations in D, W and the total-degree homogenization", "[ring]") {
  VarSpec vs = vars_tx(1, 1);
  const WElement t = var(vs, 0), dt = dvar(vs, 0), x = var(vs, 1), dx = dvar(vs, 1);
  const WElement one(Rational(1));
  CHECK(commutator(dt, t, Ring::weyl_d(vs)) == one);
  CHECK(commutator(dt, t, Ring::rees(vs)) == slot_power(vs.h()));
  CHECK(commutator(dt, t, Ring::total_homogenized(vs)) == slot_power(vs.h(), 2));
  CHECK(commutator(dt, x, Ring::rees(vs)).is_zero());
  CHECK(commutator(dx, t, Ring::rees(vs)).is_zero());
  CHECK(commutator(t, x, Ring::weyl_d(vs)).is_zero());
  CHECK(commutator(dt, dx, Ring::weyl_d(vs)).is_zero());
  CHECK(commutator(dt, t, Ring::commutative(vs)).is_zero());
  CHECK(commutator(slot_power(vs.theta()), dt, Ring::rees(vs)).is_zero());
  CHECK(commutator(slot_power(vs.h()), t, Ring::rees(vs)).is_zero());
}

TEST_CASE("ring axioms on random elements", "[ring][random]") {
  VarSpec vs = vars_tx(2, 1);
  const std::vector<Ring> rings{Ring::weyl_d(vs), Ring::rees(vs), Ring::total_homogenized(vs), Ring::commutative(vs)};
  const auto slots = weyl_slots(vs, true, true);
  int cases = 0;
  for (int it = 0; it < 300; ++it) {
    const Ring& r = rings[it % rings.size()];
    WElement a = random_element(slots, 3, 3), b = random_element(slots, 3, 3), c = random_element(slots, 2, 3);
    REQUIRE(multiply(multiply(a, b, r), c, r) == multiply(a, multiply(b, c, r), r));
    REQUIRE(multiply(a, b + c, r) == multiply(a, b, r) + multiply(a, c, r));
    REQUIRE(multiply(a + b, c, r) == multiply(a, c, r) + multiply(b, c, r));
    REQUIRE(multiply(WElement(Rational(1)), a, r) == a);
    REQUIRE(multiply(a, WElement(Rational(1)), r) == a);
    REQUIRE(multiply(a, WElement{}, r).is_zero());
    cases += 6;
  }
  CHECK(cases >= 1000);
}

TEST_CASE("commutator identities on random elements", "[ring][random]") {
  VarSpec vs = vars_tx(1, 2);
  const Ring d = Ring::weyl_d(vs);
  const auto slots = weyl_slots(vs);
  int cases = 0;
  for (int it = 0; it < 400; ++it) {
    WElement a = random_element(slots, 3, 3), b = random_element(slots, 3, 3), c = random_element(slots, 2, 2);
    // Jacobi and Leibniz
    WElement jac = commutator(a, commutator(b, c, d), d) + commutator(b, commutator(c, a, d), d) +
                   commutator(c, commutator(a, b, d), d);
    REQUIRE(jac.is_zero());
    REQUIRE(commutator(a, multiply(b, c, d), d) == multiply(commutator(a, b, d), c, d) + multiply(b, commutator(a, c, d), d));
    // [d_i, P] is the partial derivative of P in x_i; [P, x_i] is the partial in d_i
    int i = uniform(0, vs.size() - 1);
    WElement dp;
    for (const auto& [m, co] : a.terms()) {
      if (!m.e[vs.base(i)]) continue;
      Monomial mm = m;
      --mm.e[vs.base(i)];
      dp = dp + WElement::monomial(mm, co * m.e[vs.base(i)]);
    }
    REQUIRE(commutator(dvar(vs, i), a, d) == dp);
    WElement pd;
    for (const auto& [m, co] : a.terms()) {
      if (!m.e[vs.deriv(i)]) continue;
      Monomial mm = m;
      --mm.e[vs.deriv(i)];
      pd = pd + WElement::monomial(mm, co * m.e[vs.deriv(i)]);
    }
    REQUIRE(commutator(a, var(vs, i), d) == pd);
    cases += 4;
  }
  CHECK(cases >= 1000);
}

TEST_CASE("normal form of d^b x^a follows the closed formula", "[ring]") {
  VarSpec vs = vars_tx(1, 0);
  const Ring d = Ring::weyl_d(vs);
  for (int a = 0; a <= 5; ++a)
    for (int b = 0; b <= 5; ++b) {
      WElement expected;
      for (int k = 0; k <= std::min(a, b); ++k) {
        Monomial m;
        m.e[vs.base(0)] = static_cast<std::uint16_t>(a - k);
        m.e[vs.deriv(0)] = static_cast<std::uint16_t>(b - k);
        expected = expected + WElement::monomial(m, Rational(detail::factorial(k) * detail::binomial(a, k) * detail::binomial(b, k)));
      }
      CHECK(normal_form_product({b}, {a}, d) == expected);
      WElement iter(Rational(1));
      for (int k = 0; k < b; ++k) iter = multiply(iter, dvar(vs, 0), d);
      for (int k = 0; k < a; ++k) iter = multiply(iter, var(vs, 0), d);
      CHECK(iter == expected);
    }
  CHECK_THROWS_AS(normal_form_product({1, 2}, {0}, d), std::invalid_argument);
  CHECK_THROWS_AS(normal_form_product({-1}, {0}, d), std::invalid_argument);
}

TEST_CASE("orders of the filtrations and bihomogenization", "[ring][random]") {
  VarSpec vs = vars_tx(1, 1);
  const Ring d = Ring::weyl_d(vs), w = Ring::rees(vs);
  CHECK_THROWS_AS(ord_F(WElement{}, vs), UndefinedOrder);
  // t has V-order -1, dt +1, x and dx 0; F counts derivatives.
  CHECK(max_bidegree(var(vs, 0), vs) == Bidegree{0, -1});
  CHECK(max_bidegree(dvar(vs, 0), vs) == Bidegree{1, 1});
  CHECK(max_bidegree(dvar(vs, 1), vs) == Bidegree{1, 0});
  const auto slots = weyl_slots(vs);
  for (int it = 0; it < 300; ++it) {
    WElement a = random_element(slots, 3, 4), b = random_element(slots, 3, 4);
    if (a.is_zero() || b.is_zero()) continue;
    // the graded rings of both filtrations are domains
    REQUIRE(ord_F(multiply(a, b, d), vs) == ord_F(a, vs) + ord_F(b, vs));
    REQUIRE(ord_V(multiply(a, b, d), vs) == ord_V(a, vs) + ord_V(b, vs));
    WElement ha = bihomogenize(a, vs), hb = bihomogenize(b, vs);
    REQUIRE(is_bihomogeneous(ha, vs));
    REQUIRE(max_bidegree(ha, vs) == max_bidegree(a, vs));
    REQUIRE(dehomogenize(ha, vs) == a);
    // W is bigraded and dehomogenization is a ring map to D
    WElement p = multiply(ha, hb, w);
    REQUIRE(is_bihomogeneous(p, vs));
    REQUIRE(max_bidegree(p, vs) == max_bidegree(ha, vs) + max_bidegree(hb, vs));
    REQUIRE(dehomogenize(p, vs) == multiply(a, b, d));
  }
  CHECK_THROWS_AS(bihomogenize(slot_power(vs.h()), vs), std::invalid_argument);
}

TEST_CASE("element arithmetic keeps a canonical form", "[ring]") {
  VarSpec vs = vars_tx(1, 0);
  WElement a = WElement::from_terms({{Monomial{}, Rational(1)}, {Monomial{}, Rational(-1)}});
  CHECK(a.is_zero());
  WElement t = var(vs, 0);
  CHECK((t - t).is_zero());
  CHECK((Rational(3) * t).coefficient(var(vs, 0).terms()[0].first) == 3);
  CHECK((-t + t).is_zero());
  CHECK((Rational(0) * t).is_zero());
}
