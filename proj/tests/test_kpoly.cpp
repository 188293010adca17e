#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace dmdeg;
using namespace testing;

namespace {

// Inclusion-exclusion over all subsets of the generators.
LaurentPoly2 taylor_numerator(const std::vector<Monomial>& gens, const VarSpec& vs) {
  LaurentPoly2 k;
  const std::size_t n = gens.size();
  for (std::size_t s = 0; s < (std::size_t{1} << n); ++s) {
    Monomial l;
    int sign = 1;
    for (std::size_t i = 0; i < n; ++i)
      if (s >> i & 1) l = Monomial::lcm(l, gens[i]), sign = -sign;
    Bidegree d = bidegree_of_monomial(l, vs);
    k.add(d.f, d.v, Integer(sign));
  }
  return k;
}

}  // namespace

TEST_CASE("Laurent polynomial arithmetic and printing", "[kpoly]") {
  LaurentPoly2 a{{1, 0, 1}, {0, 1, 1}}, b{{1, 0, 1}, {0, 1, -1}};
  CHECK(a * b == LaurentPoly2{{2, 0, 1}, {0, 2, -1}});
  CHECK((a - a).is_zero());
  CHECK((a + b) == LaurentPoly2{{1, 0, 2}});
  CHECK(LaurentPoly2{{0, 0, 3}}.to_string() == "3");
  CHECK(LaurentPoly2{}.to_string() == "0");
  CHECK(LaurentPoly2{{2, 1, 1}, {1, 1, -1}, {1, 0, -1}, {0, 0, 1}}.to_string() == "T1^2*T2 - T1*T2 - T1 + 1");
  CHECK(LaurentPoly2{{0, 1, -2}, {-1, 0, 1}}.to_string() == "-2*T2 + T1^-1");
  CHECK(LaurentPoly2{{4, 0, 3}, {3, 1, 6}, {2, 2, 3}}.to_string() == "3*T1^4 + 6*T1^3*T2 + 3*T1^2*T2^2");
}

TEST_CASE("substitution T -> 1 - T", "[kpoly]") {
  // (1 - T1)^2 = 1 - 2 T1 + T1^2
  auto s = substitute_one_minus(LaurentPoly2{{2, 0, 1}}, 3);
  CHECK(s.poly == LaurentPoly2{{0, 0, 1}, {1, 0, -2}, {2, 0, 1}});
  // (1 - T2)^-2 = 1 + 2 T2 + 3 T2^2 + ...
  auto n = substitute_one_minus(LaurentPoly2{{0, -2, 1}}, 3);
  CHECK(n.coefficient(0, 3) == 4);
  CHECK(n.coefficient(0, 2) == 3);
  CHECK_THROWS_AS(substitute_one_minus(LaurentPoly2{}, -1), std::invalid_argument);
  // Random: K(1 - (1 - T)) at exponents >= 0 is a polynomial identity, so
  // substituting twice returns the input when nothing is truncated.
  for (int it = 0; it < 50; ++it) {
    LaurentPoly2 k;
    for (int j = 0; j < 4; ++j) k.add(uniform(0, 3), uniform(0, 3), Integer(uniform(-3, 3)));
    auto once = substitute_one_minus(k, 6).poly;
    REQUIRE(substitute_one_minus(once, 6).poly == k);
  }
}

TEST_CASE("multidegree is the lowest homogeneous part", "[kpoly]") {
  LaurentPoly2 k1{{2, 1, 1}, {1, 1, -1}, {1, 0, -1}, {0, 0, 1}};
  auto m = multidegree(k1, 2);
  CHECK(m.to_string() == "T1^2 + T1*T2");
  CHECK(m.lower_terms_vanish);
  CHECK(m.b == std::vector<Integer>{1, 1, 0});
  CHECK_FALSE(multidegree(k1, 3).lower_terms_vanish);
  CHECK(multidegree(LaurentPoly2{{0, 0, 1}}, 0).to_string() == "1");
  CHECK(multidegree(LaurentPoly2{{1, 0, 1}, {0, 1, 1}, {1, 1, -1}}, 0).to_string() == "1");
  CHECK(multidegree(LaurentPoly2{{-1, 0, 1}, {0, 0, -1}}, 1).to_string() == "T1");
  CHECK_THROWS_AS(multidegree(k1, -1), std::invalid_argument);
}

TEST_CASE("generic prediction polynomial", "[kpoly]") {
  CHECK(generic_formula(Integer(3), 2, 4) == LaurentPoly2{{4, 0, 3}, {3, 1, 6}, {2, 2, 3}});
  CHECK(generic_formula(Integer(4), 2, 4).to_string() == "4*T1^4 + 8*T1^3*T2 + 4*T1^2*T2^2");
  CHECK(generic_formula(Integer(2), 1, 1).to_string() == "2*T1");
}

TEST_CASE("monomial numerators against inclusion-exclusion", "[kpoly][random]") {
  VarSpec vs = vars_tx(1, 1);
  const auto slots = weyl_slots(vs, true, true);
  for (int it = 0; it < 400; ++it) {
    std::vector<Monomial> gens;
    for (int k = uniform(0, 6); k > 0; --k) gens.push_back(random_monomial(slots, 4));
    REQUIRE(detail::monomial_numerator(gens, vs) == taylor_numerator(gens, vs));
  }
}

TEST_CASE("minimal generators of monomial ideals", "[kpoly]") {
  VarSpec vs = vars_tx(1, 0);
  Monomial a, b, c;
  a.e[vs.base(0)] = 1;
  b.e[vs.base(0)] = 2;
  b.e[vs.deriv(0)] = 1;
  c.e[vs.deriv(0)] = 3;
  auto m = detail::minimal_monomials({b, c, a, a});
  CHECK(m.size() == 2);
}
