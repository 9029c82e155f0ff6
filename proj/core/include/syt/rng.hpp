#pragma once

#include <cstdint>

#include "syt/numbers.hpp"

namespace syt {

// SplitMix64. Chosen for portability: the stream is a pure function of the
// 64-bit state, so identical seeds reproduce bit-identical runs on any
// platform. Independent streams are derived by folding a stream index into
// the seed through one extra mixing round; per-trial generators use
// stream = trial index, which makes results schedule-independent.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0)
      : state_(mix(seed + 0x9e3779b97f4a7c15ULL * (stream + 1))) {}

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix(state_);
  }

  // uniform in [0, n), n > 0, by rejection from the top of the 64-bit range
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return v % n;
  }

  // uniform in [0, n) for big n, by rejection on fixed-width draws
  Int below_big(const Int& n) {
    const std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    const std::size_t words = (bits + 63) / 64;
    while (true) {
      Int v = 0;
      for (std::size_t w = 0; w < words; ++w) {
        v <<= 64;
        std::uint64_t x = next();
        v += Int(static_cast<unsigned long>(x >> 32)) << 32;
        v += static_cast<unsigned long>(x & 0xffffffffULL);
      }
      v >>= (64 * words - bits);
      if (v < n) return v;
    }
  }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ULL;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebULL;
    z ^= z >> 31;
    return z;
  }

  std::uint64_t state_;
};

}  // namespace syt
