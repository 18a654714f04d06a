#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace ihs {

/// Explicitly seeded 64-bit generator (std::mt19937_64) with bit-exact derived
/// draws. The standard distributions are avoided on purpose: their output is
/// implementation-defined, which would break cross-platform reproducibility of
/// generated instances.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// One draw; true with probability p.
  bool bernoulli(double p) { return uniform01() < p; }

  /// Fair coin from the top bit of one draw.
  bool coin() { return (next() >> 63) != 0; }

  /// Uniform integer in [0, bound), bound > 0, by rejection.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = bound * (~std::uint64_t{0} / bound);
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return x % bound;
  }

  /// Number of failures before the next success of a Bernoulli(p) sequence,
  /// 0 < p < 1. One draw.
  std::uint64_t geometric_skip(double log1m_p) {
    // 1 - uniform01() lies in (0, 1], so the log is finite.
    const double u = 1.0 - uniform01();
    const double k = std::floor(std::log(u) / log1m_p);
    return k >= 1.8e19 ? ~std::uint64_t{0} : static_cast<std::uint64_t>(k);
  }

 private:
  std::mt19937_64 engine_;
};

/// splitmix64 finalizer; derives independent child seeds from (seed, stream).
inline std::uint64_t split_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace ihs
