#pragma once

#include <cstdint>
#include <span>

namespace infoconc {

// Stateless splitmix64 scramble, used for seeding and stream derivation.
std::uint64_t mix64(std::uint64_t x);

// xoshiro256++ with the sampling transforms this library needs.
//
// Stream derivation rule (part of the simulation file-format contract,
// schema version 1): the stream for chunk c of a run with seed s has its
// four state words drawn from a splitmix64 sequence started at
//     mix64(s) ^ mix64(c + 1).
// Reports produced with one rule version are reproducible forever.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  static Rng for_chunk(std::uint64_t seed, std::uint64_t chunk);

  std::uint64_t next_u64();

  // Uniform on [0, 1) with 53 random bits.
  double uniform01();

  // Standard exponential.
  double exponential();

  // Standard normal (Box-Muller, second value cached).
  double normal();

  // Gamma(shape, 1), shape > 0.  Marsaglia-Tsang squeeze for shape >= 1,
  // boosted by U^{1/shape} below 1.
  double gamma(double shape);

  double beta(double a, double b);

  // Uniform point on the standard simplex {w_i >= 0, sum w_i = 1}.
  void simplex_uniform(std::span<double> out);

 private:
  std::uint64_t s_[4];
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace infoconc
