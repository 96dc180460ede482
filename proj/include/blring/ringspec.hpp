#ifndef BLRING_RINGSPEC_HPP
#define BLRING_RINGSPEC_HPP

#include <memory>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "blring/finring.hpp"
#include "blring/resalg.hpp"

namespace blring {

/// Ring description: zn:6, polyquot:2:x^2, prod:(zn:2,zn:2),
/// quot:(zn:8,ideal:[0,4]).  Round-trips through both the mini-language and
/// JSON.
struct RingSpec {
  enum class Kind { Zn, PolyQuot, Product, Quotient };
  Kind kind = Kind::Zn;
  unsigned n = 0;                    // Zn and PolyQuot modulus
  std::vector<unsigned> coeffs;      // PolyQuot: constant first
  std::vector<RingSpec> factors;     // Product
  std::vector<unsigned> ideal_gens;  // Quotient: generator elements
};

RingSpec parse_ring_spec(const std::string& text);
std::string ring_spec_to_string(const RingSpec& spec);

nlohmann::json ring_spec_to_json(const RingSpec& spec);
RingSpec ring_spec_from_json(const nlohmann::json& j);

FiniteRing build_ring(const RingSpec& spec,
                      std::size_t order_cap = kDefaultRingOrderCap);

/// Polynomial text like "x^2+2x+1" over Z_n -> constant-first coefficients.
std::vector<unsigned> parse_poly(const std::string& text, unsigned modulus);

nlohmann::json algebra_spec_to_json(const AlgebraTableSpec& spec);
AlgebraTableSpec algebra_spec_from_json(const nlohmann::json& j);
AlgebraTableSpec algebra_spec_of(const ResLat& l);

/// File helpers (throw IoError).
AlgebraTableSpec load_algebra_spec(const std::string& path);
void save_json(const nlohmann::json& j, const std::string& path);

}  // namespace blring

#endif
