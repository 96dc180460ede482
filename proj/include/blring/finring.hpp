#ifndef BLRING_FINRING_HPP
#define BLRING_FINRING_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "blring/types.hpp"

namespace blring {

using MemberSet = boost::dynamic_bitset<>;

/// A finite commutative unitary ring given by full addition and
/// multiplication tables over element indices 0..order-1.
///
/// Instances are immutable after construction; all operations on them are
/// pure.  Ideals and ideal lattices keep a non-owning pointer to their ring,
/// so the ring must outlive them.
struct FiniteRing {
  std::size_t order = 0;
  std::vector<Elem> add;  // order*order, row-major
  std::vector<Elem> mul;  // order*order, row-major
  Elem zero = 0;
  Elem one = 0;
  std::vector<std::string> labels;
  std::string name;

  Elem add_at(Elem a, Elem b) const { return add[std::size_t(a) * order + b]; }
  Elem mul_at(Elem a, Elem b) const { return mul[std::size_t(a) * order + b]; }
  bool is_trivial() const { return order == 1; }
  const std::string& label(Elem a) const { return labels[a]; }
};

/// Monic polynomial modulus over Z_n, constant coefficient first.
/// Coefficients are reduced mod n on construction; the reduced leading
/// coefficient must be 1.
struct PolySpec {
  unsigned modulus = 2;
  std::vector<unsigned> coeffs;  // f = coeffs[0] + coeffs[1] X + ...

  PolySpec(unsigned n, std::vector<unsigned> cs);
  unsigned degree() const { return unsigned(coeffs.size()) - 1; }
  std::string to_string() const;  // e.g. "X^2+2X+1"
};

enum class ElementClass { Zero, Unit, ZeroDivisor };

struct RingPredicates {
  bool is_field = false;
  bool is_integral_domain = false;
  bool is_trivial = false;
};

struct Ideal;  // ideals.hpp

/// Certificate produced by crt_split: the coset map
/// x + (I∩J)  ->  (x + I, x + J) as an index table, together with the three
/// quotient rings it connects.
struct CrtWitness {
  bool product_equals_intersection = false;  // I⊗J == I∩J
  FiniteRing quotient;                       // R/(I∩J)
  FiniteRing product;                        // R/I × R/J
  std::vector<Elem> iso;                     // quotient index -> product index
  bool is_bijection = false;
  bool is_homomorphism = false;
};

FiniteRing mk_zn(unsigned n, std::size_t order_cap = kDefaultRingOrderCap);
FiniteRing mk_poly_quotient(const PolySpec& spec,
                            std::size_t order_cap = kDefaultRingOrderCap);
FiniteRing mk_product(const FiniteRing& a, const FiniteRing& b,
                      std::size_t order_cap = kDefaultRingOrderCap);
FiniteRing quotient_ring(const FiniteRing& r, const Ideal& ideal);

ElementClass element_class(const FiniteRing& r, Elem a);
RingPredicates ring_predicates(const FiniteRing& r);

/// Requires I + J = R; throws NotCoprimeError otherwise.
CrtWitness crt_split(const FiniteRing& r, const Ideal& i, const Ideal& j);

/// Full table scan of the ring axioms (abelian group, commutative monoid,
/// distributivity).  O(order^3); meant for tests and imported tables.
void validate_ring(const FiniteRing& r);

std::string element_class_name(ElementClass c);

}  // namespace blring

#endif
