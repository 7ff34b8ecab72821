#pragma once

#include <cstdint>

namespace planarflow {

// Deterministic splittable RNG (splitmix64 core). Splitting derives an
// independent stream from a label, so generators and test drivers can hand
// out reproducible sub-streams without sharing mutable state.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed * 0x9E3779B97F4A7C15ULL + 1) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [lo, hi] inclusive.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    std::uint64_t span = std::uint64_t(hi - lo) + 1;
    return lo + std::int64_t(next() % span);
  }

  bool coin() { return next() & 1; }

  Rng split(std::uint64_t label) {
    Rng child(state_ ^ (label * 0xD2B74407B1CE6E93ULL + 0x9E3779B97F4A7C15ULL));
    child.next();
    return child;
  }

 private:
  std::uint64_t state_;
};

}  // namespace planarflow
