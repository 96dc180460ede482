#ifndef BLRING_CENSUS_HPP
#define BLRING_CENSUS_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "blring/blstruct.hpp"
#include "blring/resalg.hpp"

namespace blring {

/// A canonical bounded lattice: element 0 is bottom, element n-1 is top,
/// and leq is the lexicographically least matrix over permutations of the
/// middle elements.  `automorphisms` are the full-carrier permutations
/// preserving leq.
struct BoundedLattice {
  std::size_t size = 0;
  std::vector<std::uint8_t> leq;
  std::vector<Elem> meet;
  std::vector<Elem> join;
  std::vector<std::vector<Elem>> automorphisms;

  bool le(Elem x, Elem y) const { return leq[std::size_t(x) * size + y] != 0; }
  bool is_chain() const;
};

/// All bounded lattices on n unlabeled elements, canonical representatives,
/// deterministically ordered.  n <= kLatticeOrderCap.
std::vector<BoundedLattice> enumerate_lattices(std::size_t n);

struct CensusRecord {
  std::size_t order = 0;
  std::size_t lattice_id = 0;  // index into enumerate_lattices(order)
  ResLat tables;               // canonical representative
  Classification classification;
  CometReport comet;
};

/// Per-lattice search statistics (every residuated candidate is accounted
/// for as kept, prelinearity reject or divisibility reject).
struct LatticeCensusStats {
  std::size_t lattice_id = 0;
  bool is_chain = false;
  std::size_t monoid_candidates = 0;
  std::size_t residuated = 0;
  std::size_t prel_rejects = 0;
  std::size_t div_rejects = 0;
  std::size_t records = 0;
};

struct CensusOptions {
  std::size_t max_order = kDefaultCensusCap;
  bool chains_only = false;
};

struct CensusResult {
  std::size_t order = 0;
  std::vector<BoundedLattice> lattices;
  std::vector<CensusRecord> records;
  std::vector<LatticeCensusStats> stats;

  std::size_t mv_count() const;
  std::size_t chain_count() const;
  std::size_t comet_count() const;
};

/// All BL-algebras of the given order up to isomorphism: for each canonical
/// lattice, every monoid table admitting a residuum and passing (prel) and
/// (div), deduplicated under lattice automorphisms.
CensusResult enumerate_bl(std::size_t order, const CensusOptions& opts = {});

enum class Chain4Verdict { MV, BLnotMV, NotAssociative, DivFails, Impossible };

/// One assignment of I⊙I, J⊙J, I⊙J on the four-chain 0 < I < J < 1.
struct Chain4Case {
  int case_id = 0;           // 1..12
  std::array<Elem, 3> assignment{};  // values of I⊙I, J⊙J, I⊙J (indices)
  Chain4Verdict verdict = Chain4Verdict::Impossible;
  std::string witness;
  std::string matched_ref;  // reference table id for the BL outcomes
};

/// The twelve admissible assignments on the 4-chain, in the source order.
std::vector<Chain4Case> chain4_ledger();

std::string verdict_name(Chain4Verdict v);

struct AtlasRow {
  std::string spec;  // ring mini-language spec
  std::string name;
  std::size_t order = 0;
  IdealCounts counts;
  Classification classification;
  bool comet = false;
  std::string matched_ref;  // reference table id for 3- and 4-ideal lattices
};

struct AtlasConfig {
  unsigned zn_max = 0;             // Z_n for 2..zn_max
  std::size_t polyquot_max = 0;    // all monic f, deg >= 2, n^deg <= polyquot_max
  unsigned product_max = 0;        // Z_a x Z_b, 2 <= a <= b <= product_max
  std::vector<std::string> specs;  // extra explicit ring specs
  std::size_t order_cap = kDefaultRingOrderCap;
};

struct AtlasReport {
  std::string family;
  std::vector<AtlasRow> rows;
  std::size_t bl_count = 0;
  std::size_t mv_count = 0;
  std::size_t non_mv_bl_count = 0;
  std::vector<std::string> matched_refs;  // distinct, sorted
};

/// Classifies Id(R) for every ring in the configured families and matches
/// 3- and 4-element ideal lattices against the reference tables.
AtlasReport ring_atlas(const AtlasConfig& cfg);

}  // namespace blring

#endif
