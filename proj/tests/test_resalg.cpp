#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "blring/census.hpp"
#include "blring/refalg.hpp"
#include "blring/resalg.hpp"

using namespace blring;

namespace {

ResLat one_element() {
  ResLat l;
  l.size = 1;
  l.leq = {1};
  l.meet = {0};
  l.join = {0};
  l.odot = {0};
  l.arrow = {0};
  l.labels = {"*"};
  return l;
}

std::vector<const ResLat*> bl_reference_pool() {
  std::vector<const ResLat*> pool;
  for (const auto& ref : ref_tables()) pool.push_back(&ref.algebra);
  return pool;
}

}  // namespace

TEST_CASE("the reference catalog itself validates and classifies as printed") {
  struct Expect {
    const char* id;
    bool mv, chain;
  };
  const Expect expected[] = {
      {"3.1", true, true},   {"3.2", false, true},  {"3.3", true, false},
      {"3.4", true, true},   {"3.5", false, true},  {"3.6", false, true},
      {"3.7", false, true},  {"3.8", false, false},
      {"3.11-comet5", false, false}, {"3.11-interval6", false, false},
  };
  for (const auto& e : expected) {
    const ResLat& l = ref_table(e.id).algebra;
    Classification c = check_axioms(l);
    CAPTURE(e.id);
    CHECK(c.bl);
    CHECK(c.mv == e.mv);
    CHECK(c.chain == e.chain);
  }
}

TEST_CASE("Id lattices of the flagship rings hit their printed tables") {
  {
    FiniteRing r = mk_zn(4);
    ResLat l = from_ideal_lattice(all_ideals(r));
    // canonical ideal order makes the tables line up entry for entry
    CHECK(l.odot == ref_table("3.1").algebra.odot);
    CHECK(l.arrow == ref_table("3.1").algebra.arrow);
    CHECK(l.arrow_at(1, 0) == 1);  // I -> 0 = (0:I) = I
  }
  {
    FiniteRing r = mk_product(mk_zn(2), mk_zn(2));
    ResLat l = from_ideal_lattice(all_ideals(r));
    CHECK(are_isomorphic(l, ref_table("3.3").algebra).has_value());
  }
  {
    FiniteRing r = mk_zn(8);
    ResLat l = from_ideal_lattice(all_ideals(r));
    CHECK(l.odot == ref_table("3.4").algebra.odot);
    CHECK(l.arrow == ref_table("3.4").algebra.arrow);
  }
}

TEST_CASE("residuation holds on Id(R) for a spread of rings") {
  for (unsigned n : {2u, 4u, 6u, 9u, 12u, 30u}) {
    FiniteRing r = mk_zn(n);
    ResLat l = from_ideal_lattice(all_ideals(r));
    CHECK(check_axioms(l).residuated);
  }
  FiniteRing z4x = mk_poly_quotient(PolySpec(4, {0, 0, 1}));
  ResLat nonbl = from_ideal_lattice(all_ideals(z4x));
  Classification c = check_axioms(nonbl);
  CHECK(c.residuated);       // Id(R) is always residuated
  CHECK_FALSE(c.prelinear);  // but this one is not a BL-ring
  CHECK_FALSE(c.bl);
}

TEST_CASE("from_tables accepts the printed arrow and rejects a corrupt one") {
  AlgebraTableSpec spec;
  spec.size = 3;
  spec.leq = {1, 1, 1, 0, 1, 1, 0, 0, 1};
  spec.odot = {0, 0, 0, 0, 1, 1, 0, 1, 2};
  spec.arrow = {2, 2, 2, 0, 2, 2, 0, 1, 2};
  spec.labels = {"0", "I", "R"};
  ResLat l = from_tables(spec);
  CHECK(check_axioms(l).bl);

  spec.arrow[3] = 1;  // I -> 0 must be 0 here
  CHECK_THROWS_AS(from_tables(spec), NotResiduatedError);

  spec.arrow.clear();  // omitted arrow is computed
  ResLat l2 = from_tables(spec);
  CHECK(l2.arrow == l.arrow);
}

TEST_CASE("from_tables rejects broken orders, monoids, residua") {
  AlgebraTableSpec spec;
  spec.size = 2;
  spec.leq = {1, 1, 1, 1};  // antisymmetry fails
  spec.odot = {0, 0, 0, 1};
  CHECK_THROWS_AS(from_tables(spec), NotALatticeError);

  // the four-chain assignment whose product is not associative
  AlgebraTableSpec c2;
  c2.size = 4;
  c2.leq = {1, 1, 1, 1, 0, 1, 1, 1, 0, 0, 1, 1, 0, 0, 0, 1};
  c2.odot = {0, 0, 0, 0, 0, 0, 1, 1, 0, 1, 1, 2, 0, 1, 2, 3};
  CHECK_THROWS_AS(from_tables(c2), NotAMonoidError);

  // diamond with I*I = 0: {z : I*z <= 0} has no maximum
  AlgebraTableSpec dm;
  dm.size = 4;
  dm.leq = {1, 1, 1, 1, 0, 1, 0, 1, 0, 0, 1, 1, 0, 0, 0, 1};
  dm.odot = {0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 2, 2, 0, 1, 2, 3};
  CHECK_THROWS_AS(from_tables(dm), NotResiduatedError);
}

TEST_CASE("residuum computes the printed arrows and reports missing maxima") {
  const ResLat& g3 = ref_table("3.2").algebra;
  ResiduumResult rr = residuum(g3.size, g3.leq, g3.odot);
  REQUIRE(rr.ok());
  CHECK(rr.arrow == g3.arrow);

  std::vector<std::uint8_t> leq = {1, 1, 1, 1, 0, 1, 0, 1,
                                   0, 0, 1, 1, 0, 0, 0, 1};
  std::vector<Elem> odot = {0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 2, 2, 0, 1, 2, 3};
  ResiduumResult bad = residuum(4, leq, odot);
  REQUIRE_FALSE(bad.ok());
  CHECK((*bad.no_maximum)[0] == 1);
  CHECK((*bad.no_maximum)[1] == 0);
}

TEST_CASE("forced arrow rows: 1->y = y and 0->y = 1") {
  for (const ResLat* l : bl_reference_pool())
    for (Elem y = 0; y < l->size; ++y) {
      CHECK(l->arrow_at(l->top, y) == y);
      CHECK(l->arrow_at(l->bot, y) == l->top);
    }
}

TEST_CASE("classification of the divisibility failure (four-chain case 4)") {
  AlgebraTableSpec spec;
  spec.size = 4;
  spec.leq = {1, 1, 1, 1, 0, 1, 1, 1, 0, 0, 1, 1, 0, 0, 0, 1};
  spec.odot = {0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 2, 2, 0, 1, 2, 3};
  spec.labels = {"0", "I", "J", "R"};
  ResLat l = from_tables(spec);
  Classification c = check_axioms(l);
  CHECK(c.residuated);
  CHECK(c.prelinear);
  CHECK_FALSE(c.divisible);
  CHECK_FALSE(c.bl);
  REQUIRE(c.failure_witness.has_value());
  CHECK(c.failure_witness->law == "divisibility");
  CHECK(c.failure_witness->at[0] == 2);  // J * (J -> I) = 0 but J ^ I = I
  CHECK(c.failure_witness->at[1] == 1);
}

TEST_CASE("negation and oplus derived operations") {
  const ResLat& mv3 = ref_table("3.1").algebra;
  CHECK(mv3.neg(1) == 1);  // I* = I
  const ResLat& g3 = ref_table("3.2").algebra;
  CHECK(g3.neg(1) == 0);          // I* = 0
  CHECK(g3.neg(g3.neg(1)) == 2);  // I** = 1
  for (const ResLat* l : bl_reference_pool()) {
    CHECK(l->neg(l->bot) == l->top);
    CHECK(l->neg(l->top) == l->bot);
  }
}

TEST_CASE("MV axiom checker agrees with the involution test") {
  for (const ResLat* l : bl_reference_pool()) {
    Classification c = check_axioms(*l);
    MvCheck mv = verify_mv_axioms(*l);
    CHECK(c.mv == mv.ok);
  }
  for (std::size_t order = 2; order <= 5; ++order)
    for (const CensusRecord& rec : enumerate_bl(order).records)
      CHECK(rec.classification.mv == verify_mv_axioms(rec.tables).ok);
  // the idempotent four-chain fails with a witness
  MvCheck bad = verify_mv_axioms(ref_table("3.7").algebra);
  CHECK_FALSE(bad.ok);
  CHECK(bad.witness.has_value());
}

TEST_CASE("MV structure round-trips through oplus and negation") {
  std::vector<ResLat> mvs = {ref_table("3.1").algebra,
                             ref_table("3.3").algebra,
                             ref_table("3.4").algebra, lukasiewicz_chain(5)};
  for (std::size_t order = 2; order <= 5; ++order)
    for (const CensusRecord& rec : enumerate_bl(order).records)
      if (rec.classification.mv) mvs.push_back(rec.tables);
  for (const ResLat& l : mvs) {
    REQUIRE(check_axioms(l).mv);
    for (Elem x = 0; x < l.size; ++x)
      for (Elem y = 0; y < l.size; ++y) {
        CHECK(l.odot_at(x, y) == l.neg(l.oplus(l.neg(x), l.neg(y))));
        CHECK(l.arrow_at(x, y) == l.oplus(l.neg(x), y));
        CHECK(l.join_at(x, y) == l.arrow_at(l.arrow_at(x, y), y));
      }
  }
}

TEST_CASE("BL law scans over the catalog") {
  for (const ResLat* lp : bl_reference_pool()) {
    const ResLat& l = *lp;
    for (Elem x = 0; x < l.size; ++x) {
      CHECK(l.arrow_at(x, x) == l.top);
      CHECK(l.le(x, l.neg(l.neg(x))));
      CHECK(l.neg(l.neg(l.neg(x))) == l.neg(x));
      for (Elem y = 0; y < l.size; ++y)
        CHECK(l.le(l.odot_at(x, y), l.meet_at(x, y)));
    }
  }
}

TEST_CASE("direct products") {
  const ResLat& g3 = ref_table("3.2").algebra;
  ResLat sq = direct_product(g3, g3);
  CHECK(sq.size == 9);
  auto iso = are_isomorphic(sq, ref_table("3.8").algebra);
  REQUIRE(iso.has_value());

  ResLat unit = direct_product(g3, one_element());
  CHECK(unit.size == 3);
  CHECK(are_isomorphic(unit, g3).has_value());

  FiniteRing z2 = mk_zn(2);
  ResLat id2 = from_ideal_lattice(all_ideals(z2));
  CHECK(are_isomorphic(direct_product(id2, id2), ref_table("3.3").algebra)
            .has_value());

  Classification cp =
      check_axioms(direct_product(g3, ref_table("3.4").algebra));
  CHECK(cp.bl);
  CHECK_FALSE(cp.chain);
}

TEST_CASE("product classification: bl(AxB) = bl(A) and bl(B)") {
  AlgebraTableSpec bad;  // four-chain divisibility failure
  bad.size = 4;
  bad.leq = {1, 1, 1, 1, 0, 1, 1, 1, 0, 0, 1, 1, 0, 0, 0, 1};
  bad.odot = {0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 2, 2, 0, 1, 2, 3};
  ResLat non_bl = from_tables(bad);
  REQUIRE_FALSE(check_axioms(non_bl).bl);

  std::vector<const ResLat*> pool = {&ref_table("3.1").algebra,
                                     &ref_table("3.3").algebra, &non_bl};
  for (const ResLat* a : pool)
    for (const ResLat* b : pool) {
      Classification cp = check_axioms(direct_product(*a, *b));
      CHECK(cp.bl == (check_axioms(*a).bl && check_axioms(*b).bl));
      CHECK_FALSE(cp.chain);  // no factor is trivial here
    }
}

TEST_CASE("one-element algebra is degenerate, not BL") {
  Classification c = check_axioms(one_element());
  CHECK(c.degenerate);
  CHECK_FALSE(c.bl);
}

TEST_CASE("subalgebra closures in the order-9 square") {
  const ResLat& b = ref_table("3.8").algebra;
  Subalgebra s = subalgebra(b, {4, 7});  // D, G
  CHECK(s.carrier == std::vector<Elem>{0, 4, 5, 7, 8});
  CHECK(s.algebra.odot == ref_table("3.11-comet5").algebra.odot);
  CHECK(s.algebra.arrow == ref_table("3.11-comet5").algebra.arrow);

  Subalgebra trivial = subalgebra(b, {});
  CHECK(trivial.carrier == std::vector<Elem>{0, 8});
  CHECK(check_axioms(trivial.algebra).mv);

  std::vector<Elem> every(b.size);
  for (Elem x = 0; x < b.size; ++x) every[x] = x;
  CHECK(subalgebra(b, every).carrier == every);
}

TEST_CASE("isomorphism search") {
  const ResLat& mv3 = ref_table("3.1").algebra;
  const ResLat& g3 = ref_table("3.2").algebra;
  CHECK_FALSE(are_isomorphic(mv3, g3).has_value());

  auto self = are_isomorphic(g3, g3);
  REQUIRE(self.has_value());
  CHECK(*self == std::vector<Elem>{0, 1, 2});

  // symmetry and classification preservation across the catalog
  for (const ResLat* a : bl_reference_pool())
    for (const ResLat* b : bl_reference_pool()) {
      auto ab = are_isomorphic(*a, *b);
      auto ba = are_isomorphic(*b, *a);
      CHECK(ab.has_value() == ba.has_value());
      if (ab) {
        Classification ca = check_axioms(*a), cb = check_axioms(*b);
        CHECK(ca.bl == cb.bl);
        CHECK(ca.mv == cb.mv);
        CHECK(ca.chain == cb.chain);
      }
    }
}

TEST_CASE("lukasiewicz and idempotent chains classify as expected") {
  for (std::size_t n = 2; n <= 6; ++n) {
    Classification lc = check_axioms(lukasiewicz_chain(n));
    CHECK(lc.mv);
    CHECK(lc.chain);
    Classification gc = check_axioms(godel_chain(n));
    CHECK(gc.bl);
    CHECK(gc.chain);
    CHECK(gc.mv == (n == 2));
  }
  CHECK(are_isomorphic(lukasiewicz_chain(3), ref_table("3.1").algebra)
            .has_value());
  CHECK(are_isomorphic(godel_chain(3), ref_table("3.2").algebra).has_value());
  CHECK(are_isomorphic(godel_chain(4), ref_table("3.7").algebra).has_value());
}
