#ifndef BLRING_REFALG_HPP
#define BLRING_REFALG_HPP

#include <string>
#include <vector>

#include "blring/resalg.hpp"

namespace blring {

/// One entry of the reference catalog: a small residuated lattice that
/// reports and golden tests compare against.  `id` is the stable report
/// label, `name` a structural description.
struct ReferenceAlgebra {
  std::string id;
  std::string name;
  ResLat algebra;
};

/// The catalog: the order-3 chains, the five order-4 algebras, the order-9
/// square of the idempotent 3-chain, its order-5 comet subalgebra and its
/// order-6 upper interval.
const std::vector<ReferenceAlgebra>& ref_tables();

const ReferenceAlgebra& ref_table(const std::string& id);

/// MV-chain of the given order (x ⊙ y = max(x + y - top, 0)).
ResLat lukasiewicz_chain(std::size_t n);

/// Idempotent chain of the given order (x ⊙ y = min(x, y)).
ResLat godel_chain(std::size_t n);

/// Id of the matching reference algebra, or "" if none matches.
std::string match_ref_table(const ResLat& l);

}  // namespace blring

#endif
