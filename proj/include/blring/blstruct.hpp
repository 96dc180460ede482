#ifndef BLRING_BLSTRUCT_HPP
#define BLRING_BLSTRUCT_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "blring/resalg.hpp"

namespace blring {

/// Structure report of a finite BL-algebra: idempotents, the set D(L) of
/// idempotents that are comparable to every idempotent and whose idempotent
/// down-set is a chain, and its maximum (the pivot).
struct CometReport {
  std::vector<Elem> idempotents;
  std::vector<Elem> d_set;
  Elem pivot = 0;  // max D(L); bot when D(L) = {bot}
  bool is_comet = false;
  bool is_chain = false;
};

struct IntervalAlgebra {
  ResLat algebra;
  std::vector<Elem> carrier;  // interval index -> parent index
};

struct Decomposition {
  std::vector<ResLat> factors;
  /// Bijection from the iterated direct product of `factors` onto L.
  std::vector<Elem> embedding;
};

std::vector<Elem> idempotents(const ResLat& l);

/// {x : x idempotent and x ∨ x* = top}
std::vector<Elem> boolean_elements(const ResLat& l);

/// Requires l to be a BL-algebra (throws NotBLError otherwise).
CometReport comet_report(const ResLat& l);

/// Upper interval [b, top] with ∧, ∨, ⊙ restricted and → recomputed as the
/// residuum within the interval.  Requires b ⊙ b = b.
IntervalAlgebra interval_algebra(const ResLat& l, Elem b);

/// Splits along the canonically smallest nontrivial Boolean element until
/// none remains; verifies the factor product is isomorphic to l and that
/// every terminal factor is a comet.
Decomposition comet_decomposition(const ResLat& l);

}  // namespace blring

#endif
