#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

// Self-contained deterministic randomness. Standard-library distributions are
// implementation-defined, which would break the bit-reproducibility contract
// of sweep outputs, so all draws here are fully specified.

namespace etdec {

/// SplitMix64 finalizer; bijective 64-bit mixer.
constexpr std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Absorbs words into a key one at a time (order-sensitive).
constexpr std::uint64_t mix_key(std::uint64_t key, std::uint64_t word) {
  return splitmix64(key ^ splitmix64(word));
}

/// Uniform double in the open interval (0,1); never 0 or 1.
inline double uniform_open01(std::uint64_t word) {
  return (static_cast<double>(word >> 11) + 0.5) * 0x1.0p-53;
}

/// Small sequential generator for seeded one-off choices (puncture patterns,
/// circulant shifts, test-case generation).
class SplitMixEngine {
 public:
  explicit SplitMixEngine(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Unbiased uniform in [0, n). Rejection sampling over a power-of-two mask.
  std::uint64_t bounded(std::uint64_t n) {
    std::uint64_t mask = n - 1;
    mask |= mask >> 1;
    mask |= mask >> 2;
    mask |= mask >> 4;
    mask |= mask >> 8;
    mask |= mask >> 16;
    mask |= mask >> 32;
    for (;;) {
      std::uint64_t v = next() & mask;
      if (v < n) return v;
    }
  }

  double uniform01() { return uniform_open01(next()); }

 private:
  std::uint64_t state_;
};

/// k distinct values from [0, n), in draw order (partial Fisher-Yates).
inline std::vector<std::uint32_t> sample_without_replacement(SplitMixEngine& rng,
                                                             std::uint32_t n,
                                                             std::uint32_t k) {
  std::vector<std::uint32_t> pool(n);
  for (std::uint32_t i = 0; i < n; ++i) pool[i] = i;
  std::vector<std::uint32_t> out(k);
  for (std::uint32_t i = 0; i < k; ++i) {
    std::uint64_t j = i + rng.bounded(n - i);
    std::swap(pool[i], pool[j]);
    out[i] = pool[i];
  }
  return out;
}

/// Counter-based Gaussian stream: sample i depends only on (seed, stream, i),
/// so trials can be evaluated in any order or partitioned across workers
/// without changing a single draw.
class NoiseStream {
 public:
  NoiseStream(std::uint64_t seed, std::uint64_t stream)
      : key_(mix_key(mix_key(0x243f6a8885a308d3ULL, seed), stream)) {}

  /// Standard normal via Box-Muller on counters (2i, 2i+1).
  double normal(std::uint64_t i) const {
    double u1 = uniform_open01(splitmix64(key_ ^ splitmix64(2 * i)));
    double u2 = uniform_open01(splitmix64(key_ ^ splitmix64(2 * i + 1)));
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

 private:
  std::uint64_t key_;
};

}  // namespace etdec
