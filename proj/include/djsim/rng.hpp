#pragma once

#include <cstdint>

namespace djsim {

/// splitmix64 finalizer. Used wherever a seed needs mixing into a
/// well-distributed 64-bit value.
inline std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ull;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebull;
  x ^= x >> 31;
  return x;
}

/// Deterministic 64-bit generator (splitmix64). The standard <random>
/// distributions are implementation-defined, so every seeded artifact
/// (tables, noise draws, sweep sub-seeds) goes through this generator
/// to keep identical seeds producing identical results everywhere.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound). Lemire multiply-shift; bound must be > 0.
  std::uint64_t below(std::uint64_t bound) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * bound) >> 64);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform double in [-bound, bound).
  double symmetric(double bound) { return bound * (2.0 * uniform01() - 1.0); }

private:
  std::uint64_t state_;
};

/// Stable sub-seed derivation for independent streams (per-trial Monte
/// Carlo seeds, per-class table generators).
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) {
  return mix64(mix64(seed + 0x9e3779b97f4a7c15ull * (a + 1)) ^ (b + 0x2545f4914f6cdd1dull));
}

} // namespace djsim
