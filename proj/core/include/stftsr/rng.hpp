#pragma once

#include <cstdint>

namespace stftsr {

// Self-contained splitmix64 generator. Used everywhere randomness is needed so
// that sampled instances are bit-for-bit reproducible across platforms and
// standard library versions (std::uniform_real_distribution is not portable).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform double in [lo, hi).
  double next_uniform(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

  /// Uniform integer in [0, n).
  std::uint64_t next_below(std::uint64_t n) { return next_u64() % n; }

 private:
  std::uint64_t state_;
};

/// Mixes one 64-bit word (same finalizer as splitmix64).
inline std::uint64_t mix_u64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Deterministic seed-splitting rule used by the sweep harness:
/// seed = mix(master ^ mix(delta_index + 1) ^ mix(trial_index + 0x10001)
///            ^ mix(mode_id + 0x20002)).
inline std::uint64_t derive_trial_seed(std::uint64_t master_seed,
                                       std::uint64_t delta_index,
                                       std::uint64_t trial_index,
                                       std::uint64_t mode_id) {
  return mix_u64(master_seed ^ mix_u64(delta_index + 1) ^
                 mix_u64(trial_index + 0x10001ULL) ^ mix_u64(mode_id + 0x20002ULL));
}

}  // namespace stftsr
