#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace dmdeg;
using namespace testing;

namespace {

GeneratorList example1(const VarSpec& vs) {
  Ring d = Ring::weyl_d(vs);
  return {{dvar(vs, 0) - dvar(vs, 1)}, {multiply(var(vs, 0), dvar(vs, 0), d) + multiply(var(vs, 1), dvar(vs, 1), d)}};
}

std::vector<std::pair<int, int>> shift_list(const ResolutionLevel& l) {
  std::vector<std::pair<int, int>> s;
  for (const auto& b : l.shifts) s.emplace_back(b.f, b.v);
  std::sort(s.begin(), s.end());
  return s;
}

void check_resolution(const BifilteredPresentation& p) {
  auto res = bifiltered_resolution(p);
  auto rep = verify_complex(res, true);
  for (const auto& f : rep.failures) UNSCOPED_INFO(f);
  REQUIRE(rep.ok);
  REQUIRE(k_polynomial(res) == k_polynomial(p));
  REQUIRE(res.length() <= 2 * p.vars.size() + 2);
}

}  // namespace

TEST_CASE("two-variable system with a free resolution of length two", "[resolution]") {
  VarSpec vs = VarSpec::uniform({"t1", "t2"}, true);
  auto p = rees_presentation(example1(vs), {Bidegree{}}, vs);
  REQUIRE(certify(p.gb, Ring::rees(vs)));
  auto res = bifiltered_resolution(p);
  REQUIRE(res.length() == 2);
  CHECK(shift_list(res.levels[0]) == std::vector<std::pair<int, int>>{{0, 0}});
  CHECK(shift_list(res.levels[1]) == std::vector<std::pair<int, int>>{{1, 0}, {1, 1}});
  CHECK(shift_list(res.levels[2]) == std::vector<std::pair<int, int>>{{2, 1}});
  CHECK(verify_complex(res, true).ok);
  CHECK(k_polynomial(res) == LaurentPoly2{{0, 0, 1}, {1, 1, -1}, {1, 0, -1}, {2, 1, 1}});
}

TEST_CASE("free modules with shifts", "[resolution]") {
  VarSpec vs = VarSpec::uniform({"t"}, true);
  WElement one(Rational(1));
  auto p0 = rees_presentation({}, {Bidegree{}}, vs);
  CHECK(p0.gb.size() == 0);
  CHECK(k_polynomial(p0) == LaurentPoly2{{0, 0, 1}});
  auto p1 = rees_presentation({{one, one}}, {Bidegree{1, 0}, Bidegree{0, 1}}, vs);
  CHECK(k_polynomial(p1) == LaurentPoly2{{1, 0, 1}, {0, 1, 1}, {1, 1, -1}});
  check_resolution(p0);
  check_resolution(p1);
}

TEST_CASE("resolutions of A-hypergeometric systems are exact complexes", "[resolution][gkz]") {
  auto g = GkzInstance::make(example3_matrix(), beta(1, 2));
  for (auto sel : {VSelector::origin(), VSelector::along(0)}) {
    VarSpec vs = gkz_vars(4, sel.t_flags(4));
    check_resolution(rees_presentation(hypergeometric_ideal(g, vs), {}, vs));
  }
}

TEST_CASE("K does not depend on the tie-break order", "[resolution]") {
  VarSpec vs = VarSpec::uniform({"t1", "t2"}, true);
  PresentationOptions lex;
  lex.tiebreak = TermOrder::lex(vs, default_priority(vs));
  auto a = rees_presentation(example1(vs), {Bidegree{}}, vs);
  auto b = rees_presentation(example1(vs), {Bidegree{}}, vs, lex);
  CHECK(k_polynomial(a) == k_polynomial(b));
  check_resolution(b);
}

TEST_CASE("invalid presentations are rejected", "[resolution]") {
  VarSpec vs = VarSpec::uniform({"t"}, true);
  WElement one(Rational(1));
  // Generator with two components against one shift.
  CHECK_THROWS(rees_presentation({{one, one}}, {Bidegree{}}, vs));
  // Negative shifts need an explicit opt-in.
  CHECK_THROWS(rees_presentation({{dvar(vs, 0)}}, {Bidegree{-1, 0}}, vs));
  PresentationOptions opt;
  opt.allow_negative_shifts = true;
  CHECK_NOTHROW(rees_presentation({{dvar(vs, 0)}}, {Bidegree{-1, 0}}, vs, opt));
  // Tie-break built for another ring.
  PresentationOptions wrong;
  wrong.tiebreak = TermOrder::grevlex(VarSpec::uniform({"a", "b"}, true));
  CHECK_THROWS(rees_presentation({{dvar(vs, 0)}}, {Bidegree{}}, vs, wrong));
}
