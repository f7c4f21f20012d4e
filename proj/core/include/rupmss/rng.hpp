#pragma once

#include <cstdint>

namespace rupmss {

/// SplitMix64 generator. Stable output for a given seed on every platform,
/// which the reproducibility contracts of the solvers rely on.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Unbiased draw in [0, n).
  std::uint64_t bounded(std::uint64_t n) {
    const std::uint64_t min = (0 - n) % n;  // 2^64 mod n
    std::uint64_t x = next();
    while (x < min) x = next();
    return x % n;
  }

  /// Uniform integer in [lo, hi], inclusive.
  long long uniform(long long lo, long long hi) {
    return lo + static_cast<long long>(bounded(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

/// Mixes an auxiliary value into a seed; used to derive per-subproblem seeds.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  Rng r(seed ^ (salt + 0x9e3779b97f4a7c15ULL));
  return r.next();
}

}  // namespace rupmss
