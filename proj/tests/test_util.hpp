// Shared test helpers: deterministic pseudo-random scalars and tolerance
// shorthand.

#pragma once

#include <cstdint>

#include "outpost/complex.hpp"
#include "outpost/real.hpp"

namespace testutil {

// Fixed-seed linear congruential stream; deterministic across platforms.
struct Lcg {
  uint64_t s;
  explicit Lcg(uint64_t seed = 0x9e3779b97f4a7c15ULL) : s(seed) {}
  uint64_t next() {
    s = s * 6364136223846793005ULL + 1442695040888963407ULL;
    return s >> 11;
  }
  // uniform in [lo, hi] with ~16 base-10 digits
  double uniform(double lo, double hi) {
    return lo + (hi - lo) * (static_cast<double>(next() % (1ULL << 53)) / 9007199254740992.0);
  }
  outpost::mp::Real real(double lo, double hi) { return outpost::mp::Real(uniform(lo, hi)); }
  outpost::mp::Complex complex(double lo, double hi) {
    outpost::mp::Real re = real(lo, hi), im = real(lo, hi);
    return outpost::mp::Complex(re, im);
  }
};

inline outpost::mp::Real tol10(long d) { return outpost::mp::pow10(d); }

}  // namespace testutil
