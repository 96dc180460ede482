#ifndef BLRING_TYPES_HPP
#define BLRING_TYPES_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace blring {

/// Element of a finite carrier, addressed by dense index.
using Elem = std::uint16_t;

/// Default bound on the order of any constructed ring (table storage guard).
inline constexpr std::size_t kDefaultRingOrderCap = 4096;

/// Largest order accepted by the lattice enumerator.
inline constexpr std::size_t kLatticeOrderCap = 7;

/// Default order cap for the BL census (order 7 must be requested explicitly).
inline constexpr std::size_t kDefaultCensusCap = 6;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonMonicError : Error {
  using Error::Error;
};
struct NotAnIdealError : Error {
  using Error::Error;
};
struct NotCoprimeError : Error {
  using Error::Error;
};
struct RingMismatchError : Error {
  using Error::Error;
};
struct OrderCapError : Error {
  using Error::Error;
};
struct CapExceededError : Error {
  using Error::Error;
};
struct DegenerateRingError : Error {
  using Error::Error;
};
struct NotALatticeError : Error {
  using Error::Error;
};
struct NotAMonoidError : Error {
  using Error::Error;
};
struct NotResiduatedError : Error {
  using Error::Error;
};
struct NotBLError : Error {
  using Error::Error;
};
struct NotIdempotentError : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};
struct IoError : Error {
  using Error::Error;
};

}  // namespace blring

#endif
