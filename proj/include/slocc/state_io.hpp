#pragma once

// Text formats.
//
// State file:
//   format: d1 d2 ... dn
//   i1 i2 ... in : <scalar>        (one line per nonzero entry; omitted = 0)
// `#` starts a comment. LF or CRLF accepted; LF emitted.
//
// Operation file: blocks of
//   party <j>                      (1-based)
//   d_j rows of d_j scalars
// Parties without a block get the identity.
//
// Point file (a party-vector tuple): blocks of
//   party <j>
//   one row of d_j scalars
// Every party must appear.

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include "slocc/tensor.hpp"

namespace slocc {

State parse_state(std::string_view text);
std::string serialize_state(const State& a);

ComplexOperation parse_operation(std::string_view text, const TensorFormat& format);
std::string serialize_operation(const ComplexOperation& op);

PartyVectors<Complex> parse_point(std::string_view text, const TensorFormat& format);

/// Reads a whole file; throws IoError when it cannot be opened.
std::string read_text_file(const std::filesystem::path& path);

class IoError : public Error {
 public:
  using Error::Error;
};

/// SplitMix64: state += 0x9E3779B97F4A7C15, then the standard xor-shift /
/// multiply finalizer. Fixed so seeded draws reproduce across builds.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /// Uniform-ish integer in [-bound, bound] as next() % (2 bound + 1) - bound.
  long symmetric(long bound);

 private:
  std::uint64_t state_;
};

/// Entries a + b i with a, b integers in [-bound, bound], drawn re then im in
/// row-major order. An all-zero draw is discarded and drawing continues from
/// the same stream.
State random_state(const TensorFormat& format, std::uint64_t seed, long bound = 3);
State random_state(const TensorFormat& format, SplitMix64& rng, long bound = 3);

/// Factors with Gaussian-integer entries in [-bound, bound]; each factor is
/// redrawn until its determinant is nonzero.
ComplexOperation random_invertible_operation(const TensorFormat& format,
                                             SplitMix64& rng, long bound = 2);

}  // namespace slocc
