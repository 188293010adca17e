#include <catch_amalgamated.hpp>

#include "support.hpp"

#include <memory>

using namespace dmdeg;
using namespace testing;

namespace {

ModuleOrder module_order(const TermOrder& t, int rank = 1) {
  return ModuleOrder::term_over_position(std::make_shared<const TermOrder>(t), rank);
}

std::vector<FreeElement> as_free(const std::vector<WElement>& ps, const ModuleOrder& o) {
  std::vector<FreeElement> out;
  for (const auto& p : ps) out.push_back(FreeElement::from_ring(p, o));
  return out;
}

bool leads_interreduced(const GroebnerBasis& g) {
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j)
      if (i != j && g.elems[i].lead().comp == g.elems[j].lead().comp &&
          g.elems[i].lead().m.divides(g.elems[j].lead().m))
        return false;
  return true;
}

// Sum of q_k * g_k for a syzygy (q_k read off component k).
FreeElement apply_syzygy(const FreeElement& s, const GroebnerBasis& g, const Ring& ring) {
  FreeElement acc;
  acc.rank = g.rank();
  for (int k = 0; k < s.rank; ++k) {
    WElement q = s.component(k);
    if (q.terms().empty()) continue;
    acc = sum(acc, multiply(q, g.elems[k], ring, g.order), g.order);
  }
  return acc;
}

void check_basis(const std::vector<FreeElement>& gens, const GroebnerBasis& g, const Ring& ring) {
  REQUIRE(certify(g, ring));
  REQUIRE(leads_interreduced(g));
  for (const auto& f : gens) REQUIRE(is_member(f, g, ring));
  for (const auto& e : g.elems) REQUIRE(e.lead().c == 1);
}

}  // namespace

TEST_CASE("the Weyl commutator is not ignored", "[groebner]") {
  VarSpec vs({"x"}, {false});
  Ring ring = Ring::weyl_d(vs);
  ModuleOrder o = module_order(TermOrder::grevlex(vs));
  // Coprime leads but dx*x - x*dx = 1.
  auto g = buchberger(as_free({var(vs, 0), dvar(vs, 0)}, o), o, ring);
  REQUIRE(g.size() == 1);
  CHECK(g.elems[0].lead().m.is_one());
  // Commutatively the same generators form a basis already.
  Ring comm = Ring::commutative(vs);
  auto gc = buchberger(as_free({var(vs, 0), dvar(vs, 0)}, o), o, comm);
  CHECK(gc.size() == 2);
}

TEST_CASE("random Weyl ideals: certified, reduced, order independent", "[groebner][random]") {
  for (int nv : {1, 2}) {
    VarSpec vs = vars_tx(0, nv);
    Ring ring = Ring::weyl_d(vs);
    const auto slots = weyl_slots(vs);
    ModuleOrder o1 = module_order(TermOrder::grevlex(vs));
    ModuleOrder o2 = module_order(TermOrder::lex(vs, default_priority(vs)));
    for (int it = 0; it < (nv == 1 ? 100 : 40); ++it) {
      std::vector<WElement> ps{random_element(slots, 3, nv == 1 ? 3 : 2), random_element(slots, 2, 2)};
      auto gens = as_free(ps, o1);
      auto g1 = buchberger(gens, o1, ring);
      check_basis(gens, g1, ring);
      auto g2 = buchberger(as_free(ps, o2), o2, ring);
      check_basis(as_free(ps, o2), g2, ring);
      // Same left ideal.
      for (const auto& e : g2.elems) {
        FreeElement f = e;
        f.sort(o1);
        REQUIRE(is_member(f, g1, ring));
      }
      // Reduced bases are unique: recomputing from the basis gives it back.
      auto again = buchberger(g1.elems, o1, ring);
      REQUIRE(again.elems == g1.elems);
      // Syzygies apply to zero.
      auto syz = syzygies(g1, ring);
      for (const auto& s : syz.elems) REQUIRE(apply_syzygy(s, g1, ring).is_zero());
    }
  }
}

TEST_CASE("random submodules of W^2", "[groebner][random]") {
  VarSpec vs = vars_tx(1, 0);
  Ring ring = Ring::weyl_d(vs);
  const auto slots = weyl_slots(vs);
  auto t = std::make_shared<const TermOrder>(TermOrder::grevlex(vs));
  for (const auto& o : {ModuleOrder::term_over_position(t, 2), ModuleOrder::position_over_term(t, 2)}) {
    for (int it = 0; it < 20; ++it) {
      std::vector<FreeElement> gens;
      for (int k = 0; k < 3; ++k)
        gens.push_back(FreeElement::from_components({random_element(slots, 2, 2), random_element(slots, 2, 2)}, o));
      auto g = buchberger(gens, o, ring);
      check_basis(gens, g, ring);
      auto syz = syzygies(g, ring);
      for (const auto& s : syz.elems) REQUIRE(apply_syzygy(s, g, ring).is_zero());
    }
  }
}

TEST_CASE("commutative bases and membership", "[groebner]") {
  VarSpec vs({"x", "y"}, {false, false});
  Ring ring = Ring::commutative(vs);
  ModuleOrder o = module_order(TermOrder::lex(vs, default_priority(vs)));
  WElement x = var(vs, 0), y = var(vs, 1), one(Rational(1));
  auto mul = [&](const WElement& a, const WElement& b) { return multiply(a, b, ring); };
  // x^2 - y, x*y - 1  ==>  lex basis {x - y^2, y^3 - 1}
  auto g = buchberger(as_free({mul(x, x) - y, mul(x, y) - one}, o), o, ring);
  check_basis(as_free({mul(x, x) - y, mul(x, y) - one}, o), g, ring);
  REQUIRE(g.size() == 2);
  CHECK(is_member(FreeElement::from_ring(var(vs, 1, 3) - one, o), g, ring));
  CHECK_FALSE(is_member(FreeElement::from_ring(y - one, o), g, ring));
}

TEST_CASE("saturation by a central variable", "[groebner]") {
  VarSpec vs({"x", "y"}, {false, false});
  Ring ring = Ring::commutative(vs);
  ModuleOrder o = module_order(TermOrder::grevlex(vs));
  WElement h = slot_power(vs.h(), 1), x = var(vs, 0), y = var(vs, 1);
  auto mul = [&](const WElement& a, const WElement& b) { return multiply(a, b, ring); };
  auto g = buchberger(as_free({mul(h, x), mul(slot_power(vs.h(), 2), y) + var(vs, 0, 3)}, o), o, ring);
  auto s = saturate_central(g, vs.h(), ring);
  CHECK(certify(s, ring));
  CHECK(is_member(FreeElement::from_ring(x, o), s, ring));
  CHECK(is_member(FreeElement::from_ring(y, o), s, ring));
  CHECK(s.size() == 2);
  CHECK_THROWS_AS(saturate_central(g, vs.base(0), Ring::weyl_d(vs)), GroebnerError);
}

TEST_CASE("input validation", "[groebner]") {
  VarSpec vs({"x"}, {false});
  Ring ring = Ring::weyl_d(vs);
  ModuleOrder o1 = module_order(TermOrder::grevlex(vs));
  ModuleOrder o2 = module_order(TermOrder::grevlex(vs), 2);
  CHECK_THROWS_AS(buchberger(as_free({var(vs, 0)}, o1), o2, ring), GroebnerError);
  CHECK_THROWS_AS(buchberger(as_free({var(vs, 0)}, o1), o1, ring, nullptr, vs.base(0)), GroebnerError);
  // Empty and zero inputs give the zero module.
  CHECK(buchberger({}, o1, ring).size() == 0);
}
