//
// moleval - Copyright (c) 2026 the moleval authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MOLEVAL_HASH_HPP
#define MOLEVAL_HASH_HPP

#include <cstdint>
#include <string_view>

namespace moleval {

// 64-bit FNV-1a. Fixed across platforms; all fingerprint bits and config
// fingerprints are derived from this, never from std::hash.
inline constexpr std::uint64_t kFnvOffset = 0xcbf29ce484222325ULL;
inline constexpr std::uint64_t kFnvPrime = 0x100000001b3ULL;

inline constexpr std::uint64_t fnv1a64(const void *data, std::size_t len,
                                       std::uint64_t seed = kFnvOffset) {
  const auto *p = static_cast<const unsigned char *>(data);
  std::uint64_t h = seed;
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= kFnvPrime;
  }
  return h;
}

inline constexpr std::uint64_t fnv1a64(std::string_view s,
                                       std::uint64_t seed = kFnvOffset) {
  std::uint64_t h = seed;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= kFnvPrime;
  }
  return h;
}

inline constexpr std::uint64_t fnv1a64_u64(std::uint64_t v,
                                           std::uint64_t seed = kFnvOffset) {
  std::uint64_t h = seed;
  for (int i = 0; i < 8; ++i) {
    h ^= v & 0xff;
    h *= kFnvPrime;
    v >>= 8;
  }
  return h;
}

}  // namespace moleval

#endif  // MOLEVAL_HASH_HPP
