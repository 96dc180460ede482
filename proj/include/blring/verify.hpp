#ifndef BLRING_VERIFY_HPP
#define BLRING_VERIFY_HPP

#include <cstddef>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "blring/types.hpp"

namespace blring {

/// Bounds for the ring-family property sweep.
struct SweepOptions {
  unsigned zn_max = 50;
  std::size_t polyquot_max_order = 512;  // all monic f, deg >= 2
  unsigned product_max = 12;             // Z_a x Z_b with a <= b <= product_max
};

struct SweepResult {
  std::size_t rings = 0;
  std::size_t checks = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Runs the ring-family property suite: unit-xor-zero-divisor, domain ⇔
/// field, maximal ⇔ prime, n_m = n_p, three-ideal rings have I² = {0},
/// locality ⇔ non-units form an ideal, zero-divisor ideals have nonzero
/// annihilator, residuation of Id(R), multiplication ring ⇒ BL, and the
/// product laws n_I(A×B) = n_I(A)·n_I(B) with factor-wise ideals.
SweepResult property_sweep(const SweepOptions& opts = {});

struct CensusScanResult {
  std::size_t records = 0;
  std::size_t checks = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Census-wide structure scans for orders 2..max_order: census soundness,
/// the comet/pivot/chain equivalences, total order of D(L), comet
/// decomposition reconstruction, and BL-ness of every idempotent interval.
CensusScanResult census_scans(std::size_t max_order);

enum class RowStatus { Match, Mismatch, PaperDiscrepancy, Skipped };

struct VerifyRow {
  std::string claim;
  RowStatus status = RowStatus::Match;
  std::string details;
};

struct VerifyOptions {
  std::size_t census_max_order = 5;
  SweepOptions sweep;
  bool run_sweep = true;
};

struct VerifyReport {
  std::vector<VerifyRow> rows;

  std::size_t count(RowStatus s) const;
  /// 0 iff no mismatch and no skipped row.
  int exit_code() const;
  std::string to_text() const;
  nlohmann::json to_json() const;
  static VerifyReport from_json(const nlohmann::json& j);
};

/// One-shot report checking every tabulated claim of the source article:
/// the printed tables, the census counts, the twelve-case ledger, the
/// property sweep and the two documented discrepancies.
VerifyReport verify_paper(const VerifyOptions& opts = {});

std::string row_status_name(RowStatus s);

}  // namespace blring

#endif
