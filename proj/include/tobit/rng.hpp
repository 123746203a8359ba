#pragma once

#include <array>
#include <cstdint>

namespace tobit {

/// Deterministic random stream: xoshiro256++ (Blackman & Vigna 2019) seeded
/// through splitmix64. Period 2^256 - 1. The generator is fully self-contained
/// so a given seed reproduces the same draw sequence on every platform.
///
/// Substreams: split(k) derives a child stream from (origin seed, k) via a
/// splitmix64 hash. The derivation ignores how far the parent has advanced,
/// so replicate k always gets the same stream for a given base seed.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed);

  static constexpr const char* algorithm_name() {
    return "xoshiro256++ (splitmix64-seeded, hash-split substreams)";
  }

  std::uint64_t seed() const { return origin_seed_; }

  std::uint64_t next_u64();

  /// Uniform draw strictly inside (0, 1): (k + 1/2) * 2^-53 for a 53-bit k.
  double next_uniform();

  /// Standard normal via the inverse CDF (Wichura's PPND16 applied to
  /// next_uniform), one uniform per draw.
  double next_normal();

  /// Child stream derived from (seed(), index); independent of parent state.
  RngStream split(std::uint64_t index) const;

 private:
  std::uint64_t origin_seed_;
  std::array<std::uint64_t, 4> state_;
};

}  // namespace tobit
