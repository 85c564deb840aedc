#pragma once

#include <cstdint>

namespace housesim {

// splitmix64. The exact constants are part of the trace-compatibility
// contract (see docs/protocol.md): any reimplementation must reproduce
// the same stream for the same seed.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // uniform in [0,1), 53-bit resolution
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // uniform in 0..7, taken from the top bits
  uint32_t next_bit_index() { return static_cast<uint32_t>(next() >> 61); }

 private:
  uint64_t state_;
};

}  // namespace housesim
