#pragma once

#include <cstdint>

namespace airslot {

/// SplitMix64 (Steele, Lea, Flood 2014). Chosen as the project-wide
/// generator because the update is a handful of integer operations that
/// reproduce bit-identically on any platform and in any language, which
/// the determinism contract of every seeded artifact relies on.
///
/// Derived draws are fixed here once and documented in the README:
///  - next_double(): (next_u64() >> 11) * 2^-53, uniform in [0, 1)
///  - below(n): masked rejection sampling, unbiased, uniform in [0, n)
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, n). n = 0 returns 0.
  std::uint64_t below(std::uint64_t n) {
    if (n <= 1) return 0;
    std::uint64_t mask = ~0ULL >> __builtin_clzll((n - 1) | 1);
    for (;;) {
      std::uint64_t r = next_u64() & mask;
      if (r < n) return r;
    }
  }

  /// Uniform double in [lo, hi).
  double range(double lo, double hi) { return lo + next_double() * (hi - lo); }

 private:
  std::uint64_t state_;
};

}  // namespace airslot
