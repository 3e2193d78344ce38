#pragma once

#include <cstdint>

namespace liedist {

/// SplitMix64. Used everywhere a deterministic stream is needed; child
/// streams are derived by seeding with next() ^ tag, which keeps samplers
/// independent without shared state.
class SplitMix {
 public:
  explicit SplitMix(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1).
  double next_unit() {
    return static_cast<double>(next() >> 11) * (1.0 / 9007199254740992.0);
  }

  SplitMix split(std::uint64_t tag) { return SplitMix(next() ^ tag); }

 private:
  std::uint64_t state_;
};

}  // namespace liedist
