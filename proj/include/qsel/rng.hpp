#pragma once

#include <cstdint>
#include <random>

namespace qsel {

// SplitMix64 output function (Steele/Lea/Vigna). The state sequence is an
// arithmetic progression with this increment, so the r-th output of a
// sequence seeded with `s` can be computed in O(1).
inline constexpr std::uint64_t kSplitMix64Gamma = 0x9e3779b97f4a7c15ULL;

inline std::uint64_t splitmix64(std::uint64_t state) {
  std::uint64_t z = state + kSplitMix64Gamma;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Stream-derivation rule: replication r under base seed s is seeded with the
// (r+1)-th output of the SplitMix64 sequence started at s. Streams depend
// only on (seed, replication), never on thread count or execution order.
inline std::uint64_t derive_stream_seed(std::uint64_t seed,
                                        std::uint64_t replication) {
  return splitmix64(seed + replication * kSplitMix64Gamma);
}

// Uniform variate source for one replication. Wraps std::mt19937_64, whose
// output sequence is pinned down by the standard, and converts to doubles
// explicitly; std::uniform_real_distribution is implementation-defined and
// would break bit-reproducibility across platforms.
class UniformRng {
 public:
  explicit UniformRng(std::uint64_t stream_seed) : engine_(stream_seed) {}

  // Uniform on [0, 1), 53-bit resolution.
  double next_unit() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Uniform on (0, 1); zero draws are rejected so log() stays finite.
  double next_unit_open() {
    double u;
    do {
      u = next_unit();
    } while (u == 0.0);
    return u;
  }

  std::uint64_t next_raw() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace qsel
