// AVX2 variants of the bit-table kernels. This translation unit is compiled
// with -mavx2; nothing here runs unless dispatch confirmed CPU support.

#include <immintrin.h>

#include <cstring>

#include "bit_tricks.hpp"
#include "orient_shatter/simd/kernels.hpp"

namespace orient_shatter::simd {
namespace {

using detail::compress_low;
using detail::fold_word;

inline __m256i load(const std::uint64_t* p) {
  return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}

inline void store(std::uint64_t* p, __m256i v) {
  _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v);
}

inline __m256i shift_right(__m256i v, std::uint32_t s) {
  return _mm256_srl_epi64(v, _mm_cvtsi32_si128(static_cast<int>(s)));
}

inline __m256i shift_left(__m256i v, std::uint32_t s) {
  return _mm256_sll_epi64(v, _mm_cvtsi32_si128(static_cast<int>(s)));
}

inline __m256i broadcast(std::uint64_t w) { return _mm256_set1_epi64x(static_cast<long long>(w)); }

// Lane-wise compress_low; result in the low dword of each 64-bit lane.
inline __m256i compress_lanes(__m256i v, std::uint32_t k) {
  v = _mm256_and_si256(v, broadcast(detail::kLowGroup[k]));
  for (std::uint32_t j = k; j < 5; ++j) {
    v = _mm256_and_si256(_mm256_or_si256(v, shift_right(v, 1u << j)),
                         broadcast(detail::kLowGroup[j + 1]));
  }
  return v;
}

// Gathers the low dwords of the four lanes into two packed 64-bit words.
inline void store_low_dwords(std::uint64_t* dst, __m256i v) {
  const __m256i idx = _mm256_setr_epi32(0, 2, 4, 6, 1, 3, 5, 7);
  const __m256i packed = _mm256_permutevar8x32_epi32(v, idx);
  _mm_storeu_si128(reinterpret_cast<__m128i*>(dst), _mm256_castsi256_si128(packed));
}

template <class VecOp, class WordOp>
inline void binary_loop(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b,
                        std::size_t n, VecOp vop, WordOp wop) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) store(dst + i, vop(load(a + i), load(b + i)));
  for (; i < n; ++i) dst[i] = wop(a[i], b[i]);
}

void not_avx2(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
  const __m256i ones = _mm256_set1_epi64x(-1);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) store(dst + i, _mm256_xor_si256(load(src + i), ones));
  for (; i < n; ++i) dst[i] = ~src[i];
}

void and_avx2(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b,
              std::size_t n) {
  binary_loop(
      dst, a, b, n, [](__m256i x, __m256i y) { return _mm256_and_si256(x, y); },
      [](std::uint64_t x, std::uint64_t y) { return x & y; });
}

void or_avx2(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b,
             std::size_t n) {
  binary_loop(
      dst, a, b, n, [](__m256i x, __m256i y) { return _mm256_or_si256(x, y); },
      [](std::uint64_t x, std::uint64_t y) { return x | y; });
}

void xor_avx2(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b,
              std::size_t n) {
  binary_loop(
      dst, a, b, n, [](__m256i x, __m256i y) { return _mm256_xor_si256(x, y); },
      [](std::uint64_t x, std::uint64_t y) { return x ^ y; });
}

void andnot_avx2(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b,
                 std::size_t n) {
  // _mm256_andnot_si256(y, x) = ~y & x
  binary_loop(
      dst, a, b, n, [](__m256i x, __m256i y) { return _mm256_andnot_si256(y, x); },
      [](std::uint64_t x, std::uint64_t y) { return x & ~y; });
}

std::uint64_t popcount_avx2(const std::uint64_t* a, std::size_t n) {
  const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4, 0, 1, 1,
                                       2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low = _mm256_set1_epi8(0x0F);
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i v = load(a + i);
    const __m256i lo = _mm256_and_si256(v, low);
    const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low);
    const __m256i cnt = _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
    acc = _mm256_add_epi64(acc, _mm256_sad_epu8(cnt, _mm256_setzero_si256()));
  }
  std::uint64_t lanes[4];
  store(lanes, acc);
  std::uint64_t total = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  for (; i < n; ++i) total += static_cast<std::uint64_t>(__builtin_popcountll(a[i]));
  return total;
}

bool equal_avx2(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i d = _mm256_xor_si256(load(a + i), load(b + i));
    if (!_mm256_testz_si256(d, d)) return false;
  }
  for (; i < n; ++i) {
    if (a[i] != b[i]) return false;
  }
  return true;
}

bool is_zero_avx2(const std::uint64_t* a, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i v = load(a + i);
    if (!_mm256_testz_si256(v, v)) return false;
  }
  for (; i < n; ++i) {
    if (a[i] != 0) return false;
  }
  return true;
}

bool is_subset_avx2(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    // testc(b, a) == 1  <=>  ~b & a == 0
    if (!_mm256_testc_si256(load(b + i), load(a + i))) return false;
  }
  for (; i < n; ++i) {
    if ((a[i] & ~b[i]) != 0) return false;
  }
  return true;
}

inline __m256i reverse_bits_in_lanes(__m256i v) {
  const __m256i low = _mm256_set1_epi8(0x0F);
  // reversed nibble, placed in the high half / low half of the output byte
  const __m256i rev_hi = _mm256_setr_epi8(
      0x00, static_cast<char>(0x80), 0x40, static_cast<char>(0xC0), 0x20, static_cast<char>(0xA0),
      0x60, static_cast<char>(0xE0), 0x10, static_cast<char>(0x90), 0x50, static_cast<char>(0xD0),
      0x30, static_cast<char>(0xB0), 0x70, static_cast<char>(0xF0), 0x00, static_cast<char>(0x80),
      0x40, static_cast<char>(0xC0), 0x20, static_cast<char>(0xA0), 0x60, static_cast<char>(0xE0),
      0x10, static_cast<char>(0x90), 0x50, static_cast<char>(0xD0), 0x30, static_cast<char>(0xB0),
      0x70, static_cast<char>(0xF0));
  const __m256i rev_lo = _mm256_setr_epi8(0x0, 0x8, 0x4, 0xC, 0x2, 0xA, 0x6, 0xE, 0x1, 0x9, 0x5,
                                          0xD, 0x3, 0xB, 0x7, 0xF, 0x0, 0x8, 0x4, 0xC, 0x2, 0xA,
                                          0x6, 0xE, 0x1, 0x9, 0x5, 0xD, 0x3, 0xB, 0x7, 0xF);
  const __m256i lo = _mm256_and_si256(v, low);
  const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low);
  const __m256i bytes =
      _mm256_or_si256(_mm256_shuffle_epi8(rev_hi, lo), _mm256_shuffle_epi8(rev_lo, hi));
  const __m256i byte_order = _mm256_setr_epi8(7, 6, 5, 4, 3, 2, 1, 0, 15, 14, 13, 12, 11, 10, 9,
                                              8, 7, 6, 5, 4, 3, 2, 1, 0, 15, 14, 13, 12, 11, 10,
                                              9, 8);
  return _mm256_shuffle_epi8(bytes, byte_order);
}

void reverse_avx2(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i v = load(src + (n - 4 - i));
    v = _mm256_permute4x64_epi64(v, 0x1B);
    store(dst + i, reverse_bits_in_lanes(v));
  }
  for (; i < n; ++i) dst[i] = detail::reverse64(src[n - 1 - i]);
}

void project_avx2(std::uint64_t* dst, const std::uint64_t* src, std::uint32_t m,
                  std::uint32_t coord, Fold fold) {
  const bool use_and = fold == Fold::And;
  const std::size_t n_in = words_for_dim(m);
  if (coord < 6) {
    if (m <= 6) {
      dst[0] = compress_low(fold_word(src[0], coord, use_and), coord);
      return;
    }
    const std::uint32_t s = 1u << coord;
    std::size_t i = 0;
    for (; i + 4 <= n_in; i += 4) {
      const __m256i v = load(src + i);
      const __m256i sh = shift_right(v, s);
      const __m256i folded = use_and ? _mm256_and_si256(v, sh) : _mm256_or_si256(v, sh);
      store_low_dwords(dst + i / 2, compress_lanes(folded, coord));
    }
    for (; i < n_in; i += 2) {
      const std::uint64_t lo = compress_low(fold_word(src[i], coord, use_and), coord);
      const std::uint64_t hi = compress_low(fold_word(src[i + 1], coord, use_and), coord);
      dst[i / 2] = lo | (hi << 32);
    }
    return;
  }
  const std::size_t block = std::size_t{1} << (coord - 6);
  if (block == 1) {
    std::size_t k = 0;
    const std::size_t n_out = n_in / 2;
    for (; k + 4 <= n_out; k += 4) {
      const __m256i a = load(src + 2 * k);
      const __m256i b = load(src + 2 * k + 4);
      const __m256i even = _mm256_unpacklo_epi64(a, b);
      const __m256i odd = _mm256_unpackhi_epi64(a, b);
      const __m256i r = use_and ? _mm256_and_si256(even, odd) : _mm256_or_si256(even, odd);
      store(dst + k, _mm256_permute4x64_epi64(r, 0xD8));
    }
    for (; k < n_out; ++k) {
      dst[k] = use_and ? (src[2 * k] & src[2 * k + 1]) : (src[2 * k] | src[2 * k + 1]);
    }
    return;
  }
  std::size_t out = 0;
  for (std::size_t base = 0; base < n_in; base += 2 * block) {
    const std::uint64_t* lo = src + base;
    const std::uint64_t* hi = src + base + block;
    if (use_and) {
      and_avx2(dst + out, lo, hi, block);
    } else {
      or_avx2(dst + out, lo, hi, block);
    }
    out += block;
  }
}

void select_half_avx2(std::uint64_t* dst, const std::uint64_t* src, std::uint32_t m,
                      std::uint32_t coord, bool value) {
  const std::size_t n_in = words_for_dim(m);
  if (coord < 6) {
    const std::uint32_t shift = value ? (1u << coord) : 0u;
    if (m <= 6) {
      dst[0] = compress_low(src[0] >> shift, coord);
      return;
    }
    std::size_t i = 0;
    for (; i + 4 <= n_in; i += 4) {
      store_low_dwords(dst + i / 2, compress_lanes(shift_right(load(src + i), shift), coord));
    }
    for (; i < n_in; i += 2) {
      const std::uint64_t lo = compress_low(src[i] >> shift, coord);
      const std::uint64_t hi = compress_low(src[i + 1] >> shift, coord);
      dst[i / 2] = lo | (hi << 32);
    }
    return;
  }
  const std::size_t block = std::size_t{1} << (coord - 6);
  const std::size_t offset = value ? block : 0;
  std::size_t out = 0;
  for (std::size_t base = 0; base < n_in; base += 2 * block) {
    std::memcpy(dst + out, src + base + offset, block * sizeof(std::uint64_t));
    out += block;
  }
}

void swap_coordinate_avx2(std::uint64_t* dst, const std::uint64_t* src, std::uint32_t m,
                          std::uint32_t coord) {
  const std::size_t n = words_for_dim(m);
  if (coord < 6) {
    const std::uint32_t s = 1u << coord;
    const __m256i lo_mask = broadcast(detail::kLowGroup[coord]);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
      const __m256i v = load(src + i);
      const __m256i down = _mm256_and_si256(shift_right(v, s), lo_mask);
      const __m256i up = shift_left(_mm256_and_si256(v, lo_mask), s);
      store(dst + i, _mm256_or_si256(down, up));
    }
    for (; i < n; ++i) dst[i] = detail::swap_in_word(src[i], coord);
    return;
  }
  const std::size_t block = std::size_t{1} << (coord - 6);
  for (std::size_t base = 0; base < n; base += 2 * block) {
    std::memcpy(dst + base, src + base + block, block * sizeof(std::uint64_t));
    std::memcpy(dst + base + block, src + base, block * sizeof(std::uint64_t));
  }
}

constexpr KernelTable kAvx2{
    Isa::Avx2,       "avx2",         not_avx2,         and_avx2,
    or_avx2,         xor_avx2,       andnot_avx2,      popcount_avx2,
    equal_avx2,      is_zero_avx2,   is_subset_avx2,   reverse_avx2,
    project_avx2,    select_half_avx2, swap_coordinate_avx2,
};

}  // namespace

const KernelTable* detail::avx2_table() { return &kAvx2; }

}  // namespace orient_shatter::simd
