#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <string_view>

#include "whitehead/mat3.hpp"

namespace whitehead {

/// Deterministic random source: std::mt19937_64 (fully specified by the
/// standard) feeding a hand-written Box-Muller transform, so samples are
/// identical across standard libraries. Sub-streams are derived by hashing
/// (seed, tag) through SplitMix64; a stream is never shared between workers.
class SeedStream {
 public:
  explicit SeedStream(std::uint64_t seed);

  std::uint64_t seed() const { return seed_; }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform();
  /// Standard real normal.
  double normal();
  /// Standard complex normal: re, im independent N(0, 1/2), so E|z|^2 = 1.
  Cplx complex_normal();

  SeedStream split(std::uint64_t tag) const;
  SeedStream split(std::string_view name) const;

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

/// SplitMix64 finalizer.
std::uint64_t splitmix64(std::uint64_t x);

/// Matrix with i.i.d. standard complex normal entries.
Mat3 random_gaussian_matrix(SeedStream& rng);

/// Gaussian matrix divided by the principal cube root of its determinant;
/// resamples while |det| < 1e-8. det(result) == 1 within 1e-12.
Mat3 random_sl3(SeedStream& rng);

}  // namespace whitehead
