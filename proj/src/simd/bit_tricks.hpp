#pragma once

// Word-level helpers shared by the scalar and AVX2 kernel files.

#include <cstdint>

namespace orient_shatter::simd::detail {

// kLowGroup[k]: bits whose index has bit k clear, i.e. the "coordinate k = 0"
// positions inside a word.
inline constexpr std::uint64_t kLowGroup[6] = {
    0x5555555555555555ULL, 0x3333333333333333ULL, 0x0F0F0F0F0F0F0F0FULL,
    0x00FF00FF00FF00FFULL, 0x0000FFFF0000FFFFULL, 0x00000000FFFFFFFFULL,
};

// Packs the bits at kLowGroup[k] positions into the low 32 bits.
inline std::uint64_t compress_low(std::uint64_t w, std::uint32_t k) {
  w &= kLowGroup[k];
  for (std::uint32_t j = k; j < 5; ++j) {
    w = (w | (w >> (1u << j))) & kLowGroup[j + 1];
  }
  return w;
}

inline std::uint64_t fold_word(std::uint64_t w, std::uint32_t k, bool use_and) {
  const std::uint32_t s = 1u << k;
  return use_and ? (w & (w >> s)) : (w | (w >> s));
}

inline std::uint64_t swap_in_word(std::uint64_t w, std::uint32_t k) {
  const std::uint32_t s = 1u << k;
  const std::uint64_t lo = kLowGroup[k];
  return ((w >> s) & lo) | ((w & lo) << s);
}

inline std::uint64_t reverse64(std::uint64_t w) {
  w = ((w >> 1) & 0x5555555555555555ULL) | ((w & 0x5555555555555555ULL) << 1);
  w = ((w >> 2) & 0x3333333333333333ULL) | ((w & 0x3333333333333333ULL) << 2);
  w = ((w >> 4) & 0x0F0F0F0F0F0F0F0FULL) | ((w & 0x0F0F0F0F0F0F0F0FULL) << 4);
  return __builtin_bswap64(w);
}

}  // namespace orient_shatter::simd::detail
