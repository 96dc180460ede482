#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "blring/finring.hpp"
#include "blring/ideals.hpp"
#include "oracles.hpp"

using namespace blring;

TEST_CASE("residue rings match residue arithmetic") {
  for (unsigned n = 1; n <= 24; ++n) {
    FiniteRing r = mk_zn(n);
    CHECK(oracle::check_zn_tables(r, n));
  }
  FiniteRing z4 = mk_zn(4);
  CHECK(z4.mul_at(2, 2) == 0);
  FiniteRing z6 = mk_zn(6);
  CHECK(z6.mul_at(5, 5) == 1);
  CHECK(z6.mul_at(2, 3) == 0);
  CHECK(z6.labels[5] == "5");
}

TEST_CASE("the order-1 ring is flagged degenerate") {
  FiniteRing r = mk_zn(1);
  CHECK(r.zero == r.one);
  CHECK(r.is_trivial());
  CHECK(ring_predicates(r).is_trivial);
  CHECK_FALSE(ring_predicates(r).is_field);
}

TEST_CASE("ring order cap") {
  CHECK_THROWS_AS(mk_zn(5000), OrderCapError);
  CHECK_THROWS_AS(mk_poly_quotient(PolySpec(2, {0, 0, 0, 0, 0, 0, 0, 1}), 100),
                  OrderCapError);
  CHECK_THROWS_AS(mk_product(mk_zn(64), mk_zn(65)), OrderCapError);
}

TEST_CASE("polynomial quotient basics") {
  // Z_2[X]/(X^2): order 4, X*X = 0
  FiniteRing r = mk_poly_quotient(PolySpec(2, {0, 0, 1}));
  CHECK(r.order == 4);
  CHECK(r.labels[2] == "X");
  CHECK(r.labels[3] == "X+1");
  CHECK(r.mul_at(2, 2) == 0);
  validate_ring(r);

  FiniteRing r9 = mk_poly_quotient(PolySpec(3, {0, 0, 1}));
  CHECK(r9.order == 9);
  CHECK(r9.mul_at(3, 3) == 0);  // X*X
  validate_ring(r9);

  // irreducible modulus gives a field
  FiniteRing f4 = mk_poly_quotient(PolySpec(2, {1, 1, 1}));
  CHECK(ring_predicates(f4).is_field);
  validate_ring(f4);
  // reducible modulus does not
  CHECK_FALSE(ring_predicates(r).is_field);
}

TEST_CASE("polynomial coefficients are reduced, monicity is checked") {
  PolySpec s(3, {4, 3, 7});
  CHECK(s.coeffs == std::vector<unsigned>{1, 0, 1});
  CHECK(s.to_string() == "X^2+1");
  CHECK_THROWS_AS(PolySpec(6, {2, 0, 2}), NonMonicError);
  CHECK_THROWS_AS(PolySpec(6, {1}), Error);
}

TEST_CASE("degree-1 quotient is the residue ring itself") {
  for (unsigned n : {2u, 3u, 5u, 6u, 9u}) {
    FiniteRing q = mk_poly_quotient(PolySpec(n, {0, 1}));
    FiniteRing z = mk_zn(n);
    REQUIRE(q.order == z.order);
    // the evaluation map is the identity on indices
    CHECK(q.add == z.add);
    CHECK(q.mul == z.mul);
  }
}

TEST_CASE("products: order, projections, unit factor") {
  FiniteRing a = mk_zn(4), b = mk_zn(6);
  FiniteRing p = mk_product(a, b);
  CHECK(p.order == 24);
  validate_ring(p);
  for (Elem x = 0; x < p.order; ++x)
    for (Elem y = 0; y < p.order; ++y) {
      // componentwise projections commute with both operations
      CHECK(p.add_at(x, y) / b.order ==
            a.add_at(Elem(x / b.order), Elem(y / b.order)));
      CHECK(p.add_at(x, y) % b.order ==
            b.add_at(Elem(x % b.order), Elem(y % b.order)));
      CHECK(p.mul_at(x, y) / b.order ==
            a.mul_at(Elem(x / b.order), Elem(y / b.order)));
      CHECK(p.mul_at(x, y) % b.order ==
            b.mul_at(Elem(x % b.order), Elem(y % b.order)));
    }

  FiniteRing unit = mk_product(a, mk_zn(1));
  CHECK(unit.order == a.order);
  CHECK(unit.add == a.add);
  CHECK(unit.mul == a.mul);
}

TEST_CASE("quotient rings against the coset oracle") {
  FiniteRing z6 = mk_zn(6);
  Ideal two = principal_ideal(z6, 2);
  FiniteRing q = quotient_ring(z6, two);
  CHECK(q.order == 2);
  CHECK(ring_predicates(q).is_field);

  auto part = oracle::coset_partition(z6, two.members);
  REQUIRE(part.classes == q.order);
  for (Elem x = 0; x < q.order; ++x)
    for (Elem y = 0; y < q.order; ++y) {
      Elem rx = part.rep_of[x], ry = part.rep_of[y];
      CHECK(q.add_at(x, y) == part.class_of[z6.add_at(rx, ry)]);
      CHECK(q.mul_at(x, y) == part.class_of[z6.mul_at(rx, ry)]);
    }
}

TEST_CASE("quotient by (2) in Z_4 is a field, witnessing maximality") {
  FiniteRing z4 = mk_zn(4);
  FiniteRing q = quotient_ring(z4, principal_ideal(z4, 2));
  CHECK(q.order == 2);
  CHECK(ring_predicates(q).is_field);
}

TEST_CASE("quotient by the zero ideal is the ring itself") {
  FiniteRing r = mk_poly_quotient(PolySpec(2, {0, 0, 1}));
  FiniteRing q = quotient_ring(r, principal_ideal(r, r.zero));
  CHECK(q.order == r.order);
  CHECK(q.add == r.add);
  CHECK(q.mul == r.mul);
}

TEST_CASE("quotient rejects non-ideals") {
  FiniteRing z4 = mk_zn(4);
  Ideal bogus;
  bogus.ring = &z4;
  bogus.members = MemberSet(4);
  bogus.members.set(0);
  bogus.members.set(1);
  CHECK_THROWS_AS(quotient_ring(z4, bogus), NotAnIdealError);
}

TEST_CASE("element classification") {
  FiniteRing z6 = mk_zn(6);
  CHECK(element_class(z6, 5) == ElementClass::Unit);
  CHECK(element_class(z6, 2) == ElementClass::ZeroDivisor);
  CHECK(element_class(z6, 0) == ElementClass::Zero);
}

TEST_CASE("unit xor zero divisor, checked independently per element") {
  std::vector<FiniteRing> rings;
  for (unsigned n = 2; n <= 20; ++n) rings.push_back(mk_zn(n));
  rings.push_back(mk_poly_quotient(PolySpec(2, {0, 0, 1})));
  rings.push_back(mk_poly_quotient(PolySpec(4, {0, 0, 1})));
  rings.push_back(mk_product(mk_zn(2), mk_zn(9)));
  for (const FiniteRing& r : rings) {
    for (Elem a = 0; a < r.order; ++a) {
      bool unit = false, zd = false;
      for (Elem b = 0; b < r.order; ++b) {
        if (r.mul_at(a, b) == r.one) unit = true;
        if (a != r.zero && b != r.zero && r.mul_at(a, b) == r.zero) zd = true;
      }
      if (a == r.zero) {
        CHECK(element_class(r, a) == ElementClass::Zero);
      } else {
        CHECK(unit != zd);
        CHECK(element_class(r, a) ==
              (unit ? ElementClass::Unit : ElementClass::ZeroDivisor));
      }
    }
  }
}

TEST_CASE("field and integral-domain predicates") {
  auto p5 = ring_predicates(mk_zn(5));
  CHECK(p5.is_field);
  CHECK(p5.is_integral_domain);
  auto p6 = ring_predicates(mk_zn(6));
  CHECK_FALSE(p6.is_field);
  CHECK_FALSE(p6.is_integral_domain);
}

TEST_CASE("CRT split of Z_6 along (2) and (3)") {
  FiniteRing z6 = mk_zn(6);
  CrtWitness w = crt_split(z6, principal_ideal(z6, 2), principal_ideal(z6, 3));
  CHECK(w.product_equals_intersection);
  CHECK(w.is_bijection);
  CHECK(w.is_homomorphism);
  CHECK(w.quotient.order == 6);
  CHECK(w.product.order == 6);
}

TEST_CASE("CRT with the whole ring is the trivial split") {
  FiniteRing z6 = mk_zn(6);
  Ideal whole = principal_ideal(z6, 1);
  Ideal three = principal_ideal(z6, 3);
  CrtWitness w = crt_split(z6, whole, three);
  CHECK(w.product_equals_intersection);
  CHECK(w.is_bijection);
  CHECK(w.is_homomorphism);
  CHECK(w.quotient.order == 3);  // R/(R ^ (3)) = R/(3), three cosets
}

TEST_CASE("CRT rejects non-coprime ideals") {
  FiniteRing z4 = mk_zn(4);
  Ideal two = principal_ideal(z4, 2);
  CHECK_THROWS_AS(crt_split(z4, two, two), NotCoprimeError);
}

TEST_CASE("CRT certifies every coprime pair of principal ideals") {
  for (unsigned n : {6u, 10u, 12u, 15u, 30u}) {
    FiniteRing r = mk_zn(n);
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) {
        Ideal ia = principal_ideal(r, a), ib = principal_ideal(r, b);
        if (!ideal_sum(ia, ib).is_whole_ring()) continue;
        CrtWitness w = crt_split(r, ia, ib);
        CHECK(w.product_equals_intersection);
        CHECK(w.is_bijection);
        CHECK(w.is_homomorphism);
      }
  }
}

TEST_CASE("full ring axiom scan on constructed rings") {
  for (unsigned n = 1; n <= 16; ++n) validate_ring(mk_zn(n));
  for (unsigned n : {2u, 3u}) {
    validate_ring(mk_poly_quotient(PolySpec(n, {0, 0, 1})));
    validate_ring(mk_poly_quotient(PolySpec(n, {1, 1, 1})));
    validate_ring(mk_poly_quotient(PolySpec(n, {0, 1, 0, 1})));
  }
  validate_ring(mk_product(mk_zn(2), mk_zn(2)));
  validate_ring(mk_product(mk_poly_quotient(PolySpec(2, {0, 0, 1})), mk_zn(3)));
  FiniteRing z12 = mk_zn(12);
  validate_ring(quotient_ring(z12, principal_ideal(z12, 4)));
}

TEST_CASE("axiom scan rejects corrupted tables") {
  FiniteRing r = mk_zn(4);
  r.mul[1 * 4 + 2] = 3;  // breaks commutativity with mul[2][1] = 2
  CHECK_THROWS_AS(validate_ring(r), Error);
}
