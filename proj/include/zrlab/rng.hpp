// Deterministic random number utilities.
//
// Everything downstream (samplers, Monte Carlo estimators, report sweeps)
// must be byte-identical given the same seed, across platforms and thread
// counts.  std::mt19937_64 has a fully specified output sequence, but the
// standard *distributions* do not, so this header provides its own bounded
// integer draws, uniform doubles and gaussians on top of the raw engine.
#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace zrlab {

/// One step of the splitmix64 mixing function (public-domain constants).
inline std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Derives an independent child seed from a root seed and a stream index.
/// Counter-based: split_seed(s, i) for distinct i gives decorrelated streams,
/// so parallel tasks can be seeded by task index without sharing state.
inline std::uint64_t split_seed(std::uint64_t root, std::uint64_t stream) {
  return splitmix64(root ^ splitmix64(stream + 0x632be59bd9b4e019ULL));
}

/// Deterministic RNG wrapper: specified engine + hand-rolled distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(splitmix64(seed)) {}

  std::uint64_t next_u64() { return eng_(); }

  /// Uniform integer in [0, bound) by rejection sampling (no modulo bias).
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("Rng::below: bound must be positive");
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t v = eng_();
    while (v >= limit) v = eng_();
    return v % bound;
  }

  int below_int(int bound) { return static_cast<int>(below(static_cast<std::uint64_t>(bound))); }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  /// Standard normal via Box-Muller (deterministic; caches the second value).
  double gaussian() {
    if (has_cached_) {
      has_cached_ = false;
      return cached_;
    }
    double u1 = uniform01();
    while (u1 <= 0.0) u1 = uniform01();  // avoid log(0)
    const double u2 = uniform01();
    const double mag = std::sqrt(-2.0 * std::log(u1));
    constexpr double two_pi = 6.283185307179586476925286766559;
    cached_ = mag * std::sin(two_pi * u2);
    has_cached_ = true;
    return mag * std::cos(two_pi * u2);
  }

  /// In-place Fisher-Yates shuffle using this engine's bounded draws.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      const std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 eng_;
  double cached_ = 0.0;
  bool has_cached_ = false;
};

}  // namespace zrlab
