#pragma once

#include "aplab/common.hpp"

namespace aplab {

// SplitMix64.  Fixed algorithm, identical stream on every platform; all
// seeded generation in the project goes through this so that fixtures and
// sweep rows are reproducible byte for byte.
class SplitMix64 {
 public:
  explicit SplitMix64(u64 seed) : state_(seed) {}

  u64 next() {
    u64 z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n) by rejection; exact, unbiased.
  u64 next_below(u64 n) {
    u64 threshold = (0 - n) % n;
    for (;;) {
      u64 r = next();
      if (r >= threshold) return r % n;
    }
  }

  // Uniform double in [0, 1) with 53 random bits.
  double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  u64 state_;
};

// Per-grid-point seed derivation for sweeps: one SplitMix64 scramble of the
// base seed xored with a golden-ratio multiple of the grid index.
inline u64 mix_seed(u64 base_seed, u64 grid_index) {
  SplitMix64 g(base_seed ^ (grid_index * 0x9e3779b97f4a7c15ULL + 0x2545f4914f6cdd1dULL));
  return g.next();
}

}  // namespace aplab
