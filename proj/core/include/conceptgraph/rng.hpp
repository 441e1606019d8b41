#pragma once

#include <cstdint>
#include <random>

namespace conceptgraph {

/// SplitMix64 finalizer. Used to derive independent stream seeds.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Seed of realization `index` under `master_seed`:
///   splitmix64(splitmix64(master_seed) ^ (index + 1))
/// Pure function of its inputs, so replays are machine- and thread-count
/// independent.
constexpr std::uint64_t derive_seed(std::uint64_t master_seed,
                                    std::uint64_t index) noexcept {
  return splitmix64(splitmix64(master_seed) ^ (index + 1));
}

/// mt19937_64 engine with distribution code kept in-house. The standard
/// distributions are implementation-defined, which would break
/// cross-platform replay of logged seeds.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, bound). `bound` must be positive.
  std::uint64_t uniform_below(std::uint64_t bound) {
    // Lemire's nearly-divisionless method.
    __extension__ using U128 = unsigned __int128;
    U128 product = static_cast<U128>(next()) * bound;
    auto low = static_cast<std::uint64_t>(product);
    if (low < bound) {
      const std::uint64_t threshold = -bound % bound;
      while (low < threshold) {
        product = static_cast<U128>(next()) * bound;
        low = static_cast<std::uint64_t>(product);
      }
    }
    return static_cast<std::uint64_t>(product >> 64);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  bool bernoulli(double p) { return uniform01() < p; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace conceptgraph
