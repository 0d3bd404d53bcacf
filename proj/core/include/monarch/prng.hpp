#pragma once

#include <cstdint>

namespace monarch {

// SplitMix64 finalizer. All randomness in the project flows through this
// mixer so that fixtures replay identically across platforms and builds.
inline uint64_t mix64(uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

/// Sequential SplitMix64 stream, used by the instance generators.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next() { return mix64(state_++); }

  /// Uniform draw in [0, bound) by rejection on the top multiple of bound.
  uint64_t next_below(uint64_t bound) {
    const uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return x % bound;
  }

  bool next_bool() { return next() >> 63; }

  /// Uniform double in (0, 1).
  double next_unit() { return ((next() >> 11) + 0.5) * 0x1p-53; }

 private:
  uint64_t state_;
};

/// Counter-based keyed hash: one 64-bit word per (seed, a, b) key with no
/// stored state, so sketch coordinates can be rehashed on demand.
inline uint64_t keyed_hash(uint64_t seed, uint64_t a, uint64_t b) {
  uint64_t z = seed ^ (0x9e3779b97f4a7c15ull * (a + 1));
  z = mix64(z);
  return mix64(z ^ (0xd1342543de82ef95ull * (b + 1)));
}

/// Uniform in (0, 1) from a keyed counter; never returns 0 or 1.
inline double keyed_unit(uint64_t seed, uint64_t a, uint64_t b) {
  return ((keyed_hash(seed, a, b) >> 11) + 0.5) * 0x1p-53;
}

}  // namespace monarch
