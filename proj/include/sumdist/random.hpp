#ifndef SUMDIST_RANDOM_HPP
#define SUMDIST_RANDOM_HPP

#include <cstdint>
#include <random>

namespace sumdist {

/// Seeded generator with draws that are bit-identical across standard
/// libraries (std::uniform_int_distribution is not).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform on [1, bound] by multiply-shift; bias at most bound / 2^64.
  std::uint64_t uniform_label(std::uint64_t bound) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(engine_()) * bound) >> 64) + 1;
  }

  /// Uniform on [0, bound).
  std::uint64_t below(std::uint64_t bound) { return uniform_label(bound) - 1; }

  /// Uniform double in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return unit() < p; }

 private:
  std::mt19937_64 engine_;
};

/// SplitMix64 finalizer over (seed, index); used for per-task sub-seeds.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace sumdist

#endif
