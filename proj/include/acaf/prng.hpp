#pragma once

#include <cstdint>

#include "acaf/rational.hpp"

namespace acaf {

// SplitMix64. This exact generator is part of the interface contract:
// seeded runs must reproduce byte-identical reports across platforms,
// so no libc randomness is used anywhere.
struct SplitMix64 {
  uint64_t state;

  explicit SplitMix64(uint64_t seed) : state(seed) {}

  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, bound)
  uint64_t below(uint64_t bound) { return next() % bound; }

  // uniform integer in [lo, hi], inclusive
  long range(long lo, long hi) {
    return lo + static_cast<long>(below(static_cast<uint64_t>(hi - lo + 1)));
  }

  // small rational: numerator in [-3,3], denominator in {1,2,3}
  Rat small_rat() { return rat(range(-3, 3), range(1, 3)); }

  // small nonzero rational
  Rat small_rat_nonzero() {
    Rat r = small_rat();
    return is_zero(r) ? rat(1) : r;
  }
};

}  // namespace acaf
