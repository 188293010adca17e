#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace dmdeg;
using namespace testing;

namespace {

ParseError parse_error(std::string_view src, const VarSpec& vs) {
  try {
    parse_operator(src, vs);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("no ParseError for '" << src << "'");
  return ParseError(0, 0, "");
}

ParseError problem_error(std::string_view src) {
  try {
    parse_problem(src);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("no ParseError for problem:\n" << src);
  return ParseError(0, 0, "");
}

}  // namespace

TEST_CASE("operators are normalized with the commutation relations", "[parser]") {
  VarSpec vs = VarSpec::uniform({"t1", "t2"}, true);
  Ring d = Ring::weyl_d(vs);
  CHECK(parse_operator("dt1*t1", vs) == multiply(var(vs, 0), dvar(vs, 0), d) + WElement(Rational(1)));
  CHECK(render(parse_operator("dt1*t1", vs), vs) == render(parse_operator("t1*dt1 + 1", vs), vs));
  CHECK(parse_operator("t1*dt1 + t2*dt2", vs) == parse_operator("dt2*t2 + dt1*t1 - 2", vs));
  CHECK(parse_operator("d1 - d2", vs) == parse_operator("dt1 - dt2", vs));
  CHECK(parse_operator("(t1 + t2)^2", vs) == parse_operator("t1^2 + 2*t1*t2 + t2^2", vs));
  CHECK(parse_operator("-3/6*t1", vs) == parse_operator("-1/2*t1", vs));
  CHECK(parse_operator("0", vs).is_zero());
  CHECK(parse_operator("dt1^2*t1^2", vs) == parse_operator("t1^2*dt1^2 + 4*t1*dt1 + 2", vs));
  OperatorSyntax hom;
  hom.allow_homogenizers = true;
  CHECK(parse_operator("h*theta*t1", vs, hom) == WElement::monomial([&] {
          Monomial m;
          m.e[vs.h()] = 1;
          m.e[vs.theta()] = 1;
          m.e[vs.base(0)] = 1;
          return m;
        }()));
}

TEST_CASE("rendering round-trips", "[parser][random]") {
  OperatorSyntax hom;
  hom.allow_homogenizers = true;
  for (int nv : {1, 2, 4}) {
    VarSpec vs = vars_tx(nv / 2, nv - nv / 2);
    const auto slots = weyl_slots(vs, true, true);
    for (int it = 0; it < 60; ++it) {
      WElement p = random_element(slots, uniform(1, 5), 5, 30);
      // Non-integer coefficients too.
      if (it % 3 == 0) p = Rational(1, uniform(2, 9)) * p;
      std::string s = render(p, vs);
      INFO(s);
      REQUIRE(parse_operator(s, vs, hom) == p);
    }
  }
  // The generators of the worked examples.
  VarSpec v2 = VarSpec::uniform({"t1", "t2"}, true);
  VarSpec v4 = gkz_vars(4, std::vector<bool>(4, true));
  for (auto [src, vs] : std::vector<std::pair<std::string, VarSpec>>{
           {"dt1 - dt2", v2},
           {"t1*dt1 + t2*dt2", v2},
           {"d2*d4 - d3^2", v4},
           {"d1*d4 - d2*d3", v4},
           {"d1*d3 - d2^2", v4},
           {"d2*d4^2 - d3^3", v4},
           {"d1*d3^2 - d2^2*d4", v4},
           {"d1^2*d3 - d2^3", v4},
           {"x1*d1 + x2*d2 + x3*d3 + x4*d4 - 1", v4},
           {"x2*d2 + 3*x3*d3 + 4*x4*d4 - 2", v4},
           {"x2*d2 + 2*x3*d3 + 3*x4*d4 + 1/2", v4}}) {
    WElement p = parse_operator(src, vs);
    REQUIRE(parse_operator(render(p, vs), vs) == p);
  }
  CHECK(render(parse_operator("dx1*x1", v4), v4) == "x1*dx1 + 1");
}

TEST_CASE("operator syntax errors carry positions", "[parser]") {
  VarSpec vs = VarSpec::uniform({"t1", "x"}, false);
  auto e = parse_error("t1 + dt3", vs);
  CHECK(e.column() == 6);
  CHECK_THAT(e.message(), Catch::Matchers::ContainsSubstring("unknown identifier 'dt3'"));
  CHECK_THAT(parse_error("t1 x", vs).message(), Catch::Matchers::ContainsSubstring("missing operator"));
  CHECK(parse_error("t1 x", vs).column() == 4);
  CHECK_THAT(parse_error("1.5*x", vs).message(), Catch::Matchers::ContainsSubstring("decimal"));
  CHECK_THROWS_AS(parse_operator("x/0", vs), ParseError);
  CHECK_THROWS_AS(parse_operator("1/0*x", vs), ParseError);
  CHECK_THROWS_AS(parse_operator("x/2", vs), ParseError);  // only literals divide
  CHECK_THROWS_AS(parse_operator("x^1001", vs), ParseError);
  CHECK_THROWS_AS(parse_operator("x^", vs), ParseError);
  CHECK_THROWS_AS(parse_operator("(x + 1", vs), ParseError);
  CHECK_THROWS_AS(parse_operator("x + ", vs), ParseError);
  CHECK_THROWS_AS(parse_operator("h*x", vs), ParseError);  // homogenizers are internal
  CHECK_THROWS_AS(parse_operator("", vs), ParseError);
  // A variable named like a derivative is ambiguous.
  VarSpec amb({"x", "dx"}, {false, false});
  CHECK_THAT(parse_error("dx", amb).message(), Catch::Matchers::ContainsSubstring("ambiguous"));
  OperatorSyntax at;
  at.line = 7;
  at.column = 3;
  try {
    parse_operator("x + y", vs, at);
    FAIL("accepted an unknown variable");
  } catch (const ParseError& err) {
    CHECK(err.line() == 7);
    CHECK(err.column() == 7);
  }
}

TEST_CASE("order specifications", "[parser]") {
  VarSpec vs = VarSpec::uniform({"x1", "x2"}, false);
  Monomial a, b;
  a.e[vs.deriv(1)] = 1;
  b.e[vs.deriv(0)] = 1;
  CHECK(parse_order_spec("lex(dx2)", vs).compare(a, b) > 0);
  CHECK(parse_order_spec("lex", vs).compare(a, b) < 0);
  CHECK(parse_order_spec("weight(0 0 0 5); lex", vs).compare(a, b) > 0);
  CHECK(parse_order_spec("weight(0 0 0 5)", vs).weight_tier_count() == 1);
  CHECK(parse_order_spec("grevlex(d2, d1)", vs).compare(a, b) > 0);
  for (const char* bad : {"", "lex;", "foo", "weight(1 2)", "weight(1 -2 0 0)", "lex(dx9)", "lex(x1 x1)", "lex(x1"}) {
    INFO(bad);
    CHECK_THROWS_AS(parse_order_spec(bad, vs), ParseError);
  }
  try {
    parse_order_spec("grevlex; wait", vs, 4);
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
    CHECK(e.column() == 10);
  }
}

TEST_CASE("problem files", "[parser]") {
  Job j = parse_problem(
      "# comment\n"
      "vars = t1 t2\n"
      "tblock = origin\n"
      "gens:\n"
      "  dt1 - dt2   # trailing comment\n"
      "  t1*dt1 + t2*dt2\n");
  CHECK(j.mode == Job::Mode::raw);
  CHECK(j.gens.size() == 2);
  CHECK(j.vars.is_t(0));
  CHECK(j.rank == 1);

  Job s = parse_problem("vars = t\nrank = 2\nshifts_F = 1 0\nshifts_V = 0 1\ngens:\n  [1, 1]\n");
  CHECK(s.rank == 2);
  CHECK(s.shifts[0] == Bidegree{1, 0});
  CHECK(s.shifts[1] == Bidegree{0, 1});
  CHECK(s.gens[0].size() == 2);

  Job g = parse_problem("matrix:\n  1 1 1 1\n  0 1 2 3\nbeta = -1 3\ntblock = x2\norder = lex\n");
  CHECK(g.mode == Job::Mode::gkz);
  CHECK(g.beta() == beta(-1, 3));
  CHECK(g.vars.name(1) == "x2");
  CHECK(g.vars.is_t(1));
  CHECK_FALSE(g.vars.is_t(0));
  CHECK(g.order.has_value());

  Job l = parse_problem("matrix:\n  1 1\n  0 1\nbeta_list:\n  0 0\n  1/2 -3\n");
  CHECK(l.betas.size() == 2);
  CHECK(l.betas[1][0] == Rational(1, 2));
  CHECK_THROWS_AS(l.beta(), ParseError);

  Job none = parse_problem("vars = x\ntblock = none\ngens:\n  dx\n");
  CHECK_FALSE(none.vars.is_t(0));
}

TEST_CASE("problem file errors name their line", "[parser]") {
  CHECK(problem_error("vars = t1 t2\ngens:\n  dt1 - dt3\n").line() == 3);
  CHECK(problem_error("vars = t1 t2\ngens:\n  dt1 - dt3\n").column() == 9);
  CHECK(problem_error("vars = t1 t2\ngens:\n  dt1\nmatrix:\n  1 1 1 1\n  0 1 3 4\n").line() == 4);
  CHECK(problem_error("matrix:\n  1 1\n  0 1\nbeta = 1\n").line() == 4);
  CHECK(problem_error("matrix:\n  1 1\n  0\n").line() == 3);
  CHECK(problem_error("vars = x\nfoo = 1\ngens:\n  x\n").line() == 2);
  CHECK(problem_error("vars = x\ngens:\n  x\ngens:\n  x\n").line() == 4);
  CHECK(problem_error("vars = x\nrank = 0\ngens:\n  x\n").line() == 2);
  CHECK(problem_error("vars = t\nrank = 2\ngens:\n  [1]\n").line() == 4);
  CHECK(problem_error("vars = x\ntblock = y\ngens:\n  x\n").line() == 2);
  CHECK(problem_error("").line() == 1);
  CHECK(problem_error("matrix:\n  1 1\nbeta = 0.5\n").line() == 3);
  // Missing beta is reported when a command needs it, at the matrix block.
  Job m = parse_problem("\nmatrix:\n  1 1 1 1\n  0 1 3 4\n");
  try {
    m.beta();
    FAIL("missing beta accepted");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK_THAT(e.message(), Catch::Matchers::ContainsSubstring("beta"));
  }
}
