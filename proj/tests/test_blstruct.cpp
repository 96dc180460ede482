#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "blring/blstruct.hpp"
#include "blring/census.hpp"
#include "blring/refalg.hpp"
#include "oracles.hpp"

using namespace blring;

TEST_CASE("idempotents") {
  CHECK(idempotents(ref_table("3.1").algebra) == std::vector<Elem>{0, 2});
  CHECK(idempotents(ref_table("3.2").algebra) == std::vector<Elem>{0, 1, 2});
  for (const auto& ref : ref_tables()) {
    auto idem = idempotents(ref.algebra);
    CHECK(std::count(idem.begin(), idem.end(), ref.algebra.bot) == 1);
    CHECK(std::count(idem.begin(), idem.end(), ref.algebra.top) == 1);
  }
}

TEST_CASE("boolean elements") {
  // diamond: I v I* = I v J = 1, so everything is boolean
  CHECK(boolean_elements(ref_table("3.3").algebra) ==
        std::vector<Elem>{0, 1, 2, 3});
  // idempotent 3-chain: I* = 0 and I v 0 = I != 1
  CHECK(boolean_elements(ref_table("3.2").algebra) == std::vector<Elem>{0, 2});
  for (const auto& ref : ref_tables()) {
    auto b = boolean_elements(ref.algebra);
    CHECK(std::count(b.begin(), b.end(), ref.algebra.bot) == 1);
    CHECK(std::count(b.begin(), b.end(), ref.algebra.top) == 1);
  }
}

TEST_CASE("comet report for the printed order-5 comet") {
  const ResLat& c5 = ref_table("3.11-comet5").algebra;
  CometReport rep = comet_report(c5);
  CHECK(rep.is_comet);
  CHECK(c5.label(rep.pivot) == "D");
  CHECK_FALSE(rep.is_chain);
  CHECK(rep.d_set == oracle::d_set_naive(c5));
}

TEST_CASE("the diamond MV-algebra is not a comet") {
  const ResLat& d = ref_table("3.3").algebra;
  CometReport rep = comet_report(d);
  CHECK_FALSE(rep.is_comet);
  CHECK(rep.pivot == d.bot);
  CHECK(rep.d_set == std::vector<Elem>{0});
  CHECK(rep.d_set == oracle::d_set_naive(d));
}

TEST_CASE("every BL-chain is a comet with pivot 1") {
  for (const char* id : {"3.1", "3.2", "3.4", "3.5", "3.6", "3.7"}) {
    const ResLat& l = ref_table(id).algebra;
    CometReport rep = comet_report(l);
    CAPTURE(id);
    CHECK(rep.is_chain);
    CHECK(rep.is_comet);
    CHECK(rep.pivot == l.top);
  }
  for (std::size_t n = 2; n <= 6; ++n) {
    CometReport rep = comet_report(godel_chain(n));
    CHECK(rep.is_comet);
    CHECK(rep.pivot + 1 == n);
  }
}

TEST_CASE("D(L) agrees with the brute-force oracle on the census") {
  for (std::size_t order = 2; order <= 5; ++order)
    for (const CensusRecord& rec : enumerate_bl(order).records)
      CHECK(comet_report(rec.tables).d_set == oracle::d_set_naive(rec.tables));
}

TEST_CASE("comet_report refuses non-BL input") {
  AlgebraTableSpec spec;  // four-chain divisibility failure
  spec.size = 4;
  spec.leq = {1, 1, 1, 1, 0, 1, 1, 1, 0, 0, 1, 1, 0, 0, 0, 1};
  spec.odot = {0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 2, 2, 0, 1, 2, 3};
  CHECK_THROWS_AS(comet_report(from_tables(spec)), NotBLError);
}

TEST_CASE("interval algebras of the order-9 square") {
  const ResLat& b = ref_table("3.8").algebra;

  IntervalAlgebra at_c = interval_algebra(b, 3);
  CHECK(at_c.carrier == std::vector<Elem>{3, 4, 5, 6, 7, 8});
  CHECK(at_c.algebra.odot == ref_table("3.11-interval6").algebra.odot);
  CHECK(at_c.algebra.arrow == ref_table("3.11-interval6").algebra.arrow);
  CHECK(check_axioms(at_c.algebra).bl);

  IntervalAlgebra at_bottom = interval_algebra(b, b.bot);
  CHECK(at_bottom.algebra.odot == b.odot);
  CHECK(at_bottom.algebra.arrow == b.arrow);

  IntervalAlgebra at_f = interval_algebra(b, 6);
  CHECK(at_f.algebra.size == 3);
  CHECK(are_isomorphic(at_f.algebra, ref_table("3.2").algebra).has_value());

  CHECK_THROWS_AS(interval_algebra(ref_table("3.1").algebra, 1),
                  NotIdempotentError);
}

TEST_CASE("interval arrows are recomputed, not truncated") {
  // in the square, D -> C = F falls outside [D, Z]; the interval residuum
  // must replace it
  const ResLat& b = ref_table("3.8").algebra;
  IntervalAlgebra at_d = interval_algebra(b, 4);
  CHECK(at_d.carrier == std::vector<Elem>{4, 5, 7, 8});
  for (std::size_t i = 0; i < at_d.carrier.size(); ++i)
    for (std::size_t j = 0; j < at_d.carrier.size(); ++j) {
      Elem v = at_d.algebra.arrow_at(Elem(i), Elem(j));
      CHECK(b.le(4, at_d.carrier[v]));
    }
  CHECK(check_axioms(at_d.algebra).bl);
}

TEST_CASE("comet decomposition of the square gives two copies of (3.2)") {
  Decomposition d = comet_decomposition(ref_table("3.8").algebra);
  REQUIRE(d.factors.size() == 2);
  for (const ResLat& f : d.factors) {
    CHECK(f.size == 3);
    CHECK(are_isomorphic(f, ref_table("3.2").algebra).has_value());
  }
  CHECK(d.embedding.size() == 9);
}

TEST_CASE("comet decomposition of the diamond gives two 2-chains") {
  Decomposition d = comet_decomposition(ref_table("3.3").algebra);
  REQUIRE(d.factors.size() == 2);
  CHECK(d.factors[0].size == 2);
  CHECK(d.factors[1].size == 2);
}

TEST_CASE("chains are their own decomposition") {
  for (const char* id : {"3.1", "3.2", "3.4", "3.5", "3.6", "3.7"}) {
    Decomposition d = comet_decomposition(ref_table(id).algebra);
    CHECK(d.factors.size() == 1);
    CHECK(d.factors[0].size == ref_table(id).algebra.size);
  }
}

TEST_CASE("decomposition sizes multiply up across the census") {
  for (std::size_t order = 2; order <= 5; ++order)
    for (const CensusRecord& rec : enumerate_bl(order).records) {
      Decomposition d = comet_decomposition(rec.tables);
      std::size_t prod = 1;
      for (const ResLat& f : d.factors) {
        prod *= f.size;
        CHECK(comet_report(f).is_comet);
      }
      CHECK(prod == rec.tables.size);
    }
}
