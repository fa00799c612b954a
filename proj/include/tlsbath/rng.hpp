#pragma once

#include <array>
#include <cstdint>

namespace tlsbath::rng {

/// SplitMix64 step; advances `state`.
std::uint64_t splitmix64(std::uint64_t& state);

/// Counter-based child seed: stream `index` of `master`. Distinct indices give
/// statistically independent streams; the mapping never depends on call order.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

/// xoshiro256** seeded through SplitMix64. All draws are implemented here so a
/// seed reproduces the same sequence on every platform.
class Stream {
 public:
  explicit Stream(std::uint64_t seed);

  std::uint64_t next_u64();
  /// Uniform on the open interval (0, 1).
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  double normal();
  /// Poisson variate (inversion for small means, PTRS otherwise).
  std::uint64_t poisson(double mean);
  /// Binomial(n, p): exact inversion when min(p, 1-p) n < 30, otherwise a
  /// rounded normal approximation clamped to [0, n].
  std::uint64_t binomial(std::uint64_t n, double p);

 private:
  std::array<std::uint64_t, 4> s_{};
};

}  // namespace tlsbath::rng
