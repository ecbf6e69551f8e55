//
// moleval - Copyright (c) 2026 the moleval authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MOLEVAL_RNG_HPP
#define MOLEVAL_RNG_HPP

#include <cstdint>

namespace moleval {

// SplitMix64 finalizer (Steele, Lea & Flood / Vigna). Platform-stable.
inline constexpr std::uint64_t splitmix_finalize(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Seedable 64-bit generator used for all data-pipeline randomness. Golden
// fixtures depend on this exact sequence; do not change the constants.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return splitmix_finalize(state_);
  }

  // Unbiased uniform draw in [0, n). Rejection-sampled, so the result stream
  // depends only on the seed, never on the platform.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = ~0ULL - ~0ULL % n;
    std::uint64_t v = next();
    while (v >= limit) v = next();
    return v % n;
  }

  std::uint64_t state() const { return state_; }

 private:
  std::uint64_t state_;
};

// Stream-split rule: the stream for (root seed, batch b, example i) is seeded
// with  m(m(root ^ m(b + 1)) ^ m(i + 1))  where m is the SplitMix64 finalizer.
// Distinct (b, i) pairs yield decorrelated, reproducible streams.
inline constexpr std::uint64_t derive_stream_seed(std::uint64_t root,
                                                  std::uint64_t batch,
                                                  std::uint64_t example) {
  std::uint64_t s = splitmix_finalize(root ^ splitmix_finalize(batch + 1));
  return splitmix_finalize(s ^ splitmix_finalize(example + 1));
}

}  // namespace moleval

#endif  // MOLEVAL_RNG_HPP
