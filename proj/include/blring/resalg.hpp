#ifndef BLRING_RESALG_HPP
#define BLRING_RESALG_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "blring/ideals.hpp"
#include "blring/types.hpp"

namespace blring {

/// A finite bounded lattice carrying a commutative monoid ⊙ and its
/// residuum →.  Tables are row-major over element indices; bot/top are the
/// lattice bounds.  Values are plain data — copies are independent.
struct ResLat {
  std::size_t size = 0;
  std::vector<std::uint8_t> leq;
  std::vector<Elem> meet;
  std::vector<Elem> join;
  std::vector<Elem> odot;
  std::vector<Elem> arrow;
  Elem bot = 0;
  Elem top = 0;
  std::vector<std::string> labels;

  bool le(Elem x, Elem y) const { return leq[std::size_t(x) * size + y] != 0; }
  Elem meet_at(Elem x, Elem y) const { return meet[std::size_t(x) * size + y]; }
  Elem join_at(Elem x, Elem y) const { return join[std::size_t(x) * size + y]; }
  Elem odot_at(Elem x, Elem y) const { return odot[std::size_t(x) * size + y]; }
  Elem arrow_at(Elem x, Elem y) const {
    return arrow[std::size_t(x) * size + y];
  }
  /// x* = x → 0
  Elem neg(Elem x) const { return arrow_at(x, bot); }
  /// x ⊕ y = (x* ⊙ y*)*
  Elem oplus(Elem x, Elem y) const { return neg(odot_at(neg(x), neg(y))); }
  const std::string& label(Elem x) const { return labels[x]; }
};

/// First failed law instance found by a scan, in scan order.
struct LawWitness {
  std::string law;
  std::array<Elem, 3> at{0, 0, 0};
  std::string detail;
};

struct Classification {
  bool residuated = false;
  bool prelinear = false;
  bool divisible = false;
  bool bl = false;
  bool mv = false;
  bool chain = false;
  bool degenerate = false;  // one-element carrier
  std::optional<LawWitness> failure_witness;
};

/// Import format for explicit tables.  Either `leq` or both `meet`/`join`
/// must be present; `arrow` is optional (computed when absent, verified when
/// given).
struct AlgebraTableSpec {
  std::size_t size = 0;
  std::vector<std::uint8_t> leq;
  std::vector<Elem> meet;
  std::vector<Elem> join;
  std::vector<Elem> odot;
  std::vector<Elem> arrow;
  std::vector<std::string> labels;
};

/// Outcome of the residuum computation: either the full → table or the
/// first pair (x, y) whose candidate set has no maximum.
struct ResiduumResult {
  std::vector<Elem> arrow;
  std::optional<std::array<Elem, 2>> no_maximum;
  bool ok() const { return !no_maximum.has_value(); }
};

ResiduumResult residuum(std::size_t size, const std::vector<std::uint8_t>& leq,
                        const std::vector<Elem>& odot);

/// (Id(R), ∩, +, ⊗, (:)) with I → J = (J : I); validated on construction.
ResLat from_ideal_lattice(const IdealLattice& lat);

/// Validates the spec and builds the algebra.  Throws NotALatticeError /
/// NotAMonoidError / NotResiduatedError, each naming a witness.
ResLat from_tables(const AlgebraTableSpec& spec);

Classification check_axioms(const ResLat& l);

struct MvCheck {
  bool ok = false;
  std::optional<LawWitness> witness;
};

/// Checks the ⊕/* axiomatization directly: (L,⊕,0) abelian monoid,
/// x** = x, x ⊕ 0* = 0*, and (x*⊕y)*⊕y = (y*⊕x)*⊕x.
MvCheck verify_mv_axioms(const ResLat& l);

ResLat direct_product(const ResLat& a, const ResLat& b);

struct Subalgebra {
  ResLat algebra;
  std::vector<Elem> carrier;  // subalgebra index -> parent index
};

/// Closure of gens ∪ {bot, top} under ∧, ∨, ⊙, →.
Subalgebra subalgebra(const ResLat& l, const std::vector<Elem>& gens);

/// A bijection preserving ≤, ⊙ and → (hence ∧, ∨, 0, 1), or nothing.
std::optional<std::vector<Elem>> are_isomorphic(const ResLat& a,
                                                const ResLat& b);

std::string classification_summary(const Classification& c);

}  // namespace blring

#endif
