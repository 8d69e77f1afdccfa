#pragma once

#include <cstdint>
#include <random>

namespace tsetlin {

/// Mixes a 64-bit value into a well-distributed seed (splitmix64 step).
inline std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d49bb133111ebULL;
  return x ^ (x >> 31);
}

/// Deterministic random stream. All randomized behaviour in the library draws
/// from this type only, so a fixed seed fixes the whole trajectory. Derived
/// streams (split) are seeded from the parent and stay independent of it.
///
/// The draw helpers below avoid std::*_distribution on purpose: their output
/// is pinned to the engine sequence, not to a library implementation.
class rng {
public:
  explicit rng(std::uint64_t seed) : gen_(mix_seed(seed)) {}

  std::uint64_t next() { return gen_(); }

  /// Uniform in [0, bound), bound >= 1. Multiply-shift reduction; the bias is
  /// below 2^-32 and the result depends only on the engine sequence.
  std::uint32_t below(std::uint32_t bound) {
    const std::uint32_t x = static_cast<std::uint32_t>(gen_() >> 32);
    return static_cast<std::uint32_t>(
        (static_cast<std::uint64_t>(x) * bound) >> 32);
  }

  /// Uniform in [0, 1) with 53 random bits.
  double unit() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  /// One draw is always consumed, so the consumption pattern does not depend
  /// on p. p <= 0 never fires, p >= 1 always fires.
  bool bernoulli(double p) { return unit() < p; }

  /// Independent child stream; advances this stream by one draw.
  rng split() { return rng(gen_()); }

  /// Recorded in benchmark report metadata.
  static constexpr const char* identity() { return "mt19937_64"; }

private:
  std::mt19937_64 gen_;
};

} // namespace tsetlin
