#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace alphasim {

/// SplitMix64 mixing step. Used for seed derivation only.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Deterministic PRNG: a SplitMix64-seeded std::mt19937_64 with hand-rolled
/// draw helpers. std::mt19937_64 output is pinned by the standard and the
/// helpers below avoid the library distributions (whose sequences are not),
/// so the same 64-bit seed reproduces the same stream on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed) {
    std::uint64_t s = seed;
    engine_.seed(splitmix64(s));
  }

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform integer in [0, n); unbiased via rejection. n must be > 0.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t v = next_u64();
    while (v >= limit) v = next_u64();
    return v % n;
  }

  /// Uniform double in [0, 1) with 53 random mantissa bits.
  double unit() { return double(next_u64() >> 11) * 0x1.0p-53; }

  int bit() { return int(next_u64() >> 63); }

  bool chance(double p) { return unit() < p; }

  /// Child stream derived from the original seed and a tag; independent of
  /// how much this stream has been consumed.
  Rng fork(std::uint64_t tag) const {
    std::uint64_t s = seed_ ^ (0xD1B54A32D192ED03ULL * (tag + 1));
    return Rng(splitmix64(s));
  }

  /// Fisher-Yates shuffle using below(); deterministic given the stream.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = std::size_t(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace alphasim
