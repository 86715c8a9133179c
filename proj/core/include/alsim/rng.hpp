#pragma once

#include <cstddef>
#include <cstdint>

namespace alsim {

/// SplitMix64 finalizer. Used to expand a 64-bit seed into generator state and
/// to derive independent sub-stream seeds.
std::uint64_t splitmix64(std::uint64_t& state) noexcept;

/// Seed for sub-stream `stream` of a run seeded with `master`. Stable across
/// platforms; distinct streams give statistically independent generators.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) noexcept;

/// xoshiro256** seeded through SplitMix64.
///
/// Every derived variate (uniform doubles, bounded integers, normals) is built
/// from the raw 64-bit output with integer arithmetic or <cmath> elementary
/// functions only, so a given seed produces the same stream on every platform
/// with IEEE-754 doubles. std::*_distribution is deliberately not used since
/// its algorithms are implementation-defined.
class Rng {
public:
  explicit Rng(std::uint64_t seed) noexcept;

  std::uint64_t seed() const noexcept { return seed_; }

  std::uint64_t next_u64() noexcept;

  /// Uniform on [0, 1) with 53 bits of resolution.
  double next_uniform() noexcept;

  /// Uniform integer on [0, bound). `bound` must be positive.
  std::uint64_t next_below(std::uint64_t bound) noexcept;

  /// Standard normal variate (Marsaglia polar method).
  double next_normal() noexcept;

private:
  std::uint64_t seed_;
  std::uint64_t s_[4];
  double spare_normal_ = 0.0;
  bool has_spare_ = false;
};

} // namespace alsim
