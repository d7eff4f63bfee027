#include "orient_shatter/simd/kernels.hpp"

#include "bit_tricks.hpp"

namespace orient_shatter::simd {
namespace {

using detail::compress_low;
using detail::fold_word;

void not_scalar(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = ~src[i];
}

void and_scalar(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b,
                std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] & b[i];
}

void or_scalar(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b,
               std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] | b[i];
}

void xor_scalar(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b,
                std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] ^ b[i];
}

void andnot_scalar(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b,
                   std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] & ~b[i];
}

std::uint64_t popcount_scalar(const std::uint64_t* a, std::size_t n) {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < n; ++i) total += static_cast<std::uint64_t>(__builtin_popcountll(a[i]));
  return total;
}

bool equal_scalar(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] != b[i]) return false;
  }
  return true;
}

bool is_zero_scalar(const std::uint64_t* a, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] != 0) return false;
  }
  return true;
}

bool is_subset_scalar(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    if ((a[i] & ~b[i]) != 0) return false;
  }
  return true;
}

void reverse_scalar(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = detail::reverse64(src[n - 1 - i]);
}

void project_scalar(std::uint64_t* dst, const std::uint64_t* src, std::uint32_t m,
                    std::uint32_t coord, Fold fold) {
  const bool use_and = fold == Fold::And;
  if (coord < 6) {
    if (m <= 6) {
      dst[0] = compress_low(fold_word(src[0], coord, use_and), coord);
      return;
    }
    const std::size_t n_out = words_for_dim(m - 1);
    for (std::size_t i = 0; i < n_out; ++i) {
      const std::uint64_t lo = compress_low(fold_word(src[2 * i], coord, use_and), coord);
      const std::uint64_t hi = compress_low(fold_word(src[2 * i + 1], coord, use_and), coord);
      dst[i] = lo | (hi << 32);
    }
    return;
  }
  const std::size_t block = std::size_t{1} << (coord - 6);
  const std::size_t n_in = words_for_dim(m);
  std::size_t out = 0;
  for (std::size_t base = 0; base < n_in; base += 2 * block) {
    const std::uint64_t* lo = src + base;
    const std::uint64_t* hi = src + base + block;
    if (use_and) {
      for (std::size_t j = 0; j < block; ++j) dst[out + j] = lo[j] & hi[j];
    } else {
      for (std::size_t j = 0; j < block; ++j) dst[out + j] = lo[j] | hi[j];
    }
    out += block;
  }
}

void select_half_scalar(std::uint64_t* dst, const std::uint64_t* src, std::uint32_t m,
                        std::uint32_t coord, bool value) {
  if (coord < 6) {
    const std::uint32_t shift = value ? (1u << coord) : 0u;
    if (m <= 6) {
      dst[0] = compress_low(src[0] >> shift, coord);
      return;
    }
    const std::size_t n_out = words_for_dim(m - 1);
    for (std::size_t i = 0; i < n_out; ++i) {
      const std::uint64_t lo = compress_low(src[2 * i] >> shift, coord);
      const std::uint64_t hi = compress_low(src[2 * i + 1] >> shift, coord);
      dst[i] = lo | (hi << 32);
    }
    return;
  }
  const std::size_t block = std::size_t{1} << (coord - 6);
  const std::size_t n_in = words_for_dim(m);
  const std::size_t offset = value ? block : 0;
  std::size_t out = 0;
  for (std::size_t base = 0; base < n_in; base += 2 * block) {
    for (std::size_t j = 0; j < block; ++j) dst[out + j] = src[base + offset + j];
    out += block;
  }
}

void swap_coordinate_scalar(std::uint64_t* dst, const std::uint64_t* src, std::uint32_t m,
                            std::uint32_t coord) {
  const std::size_t n = words_for_dim(m);
  if (coord < 6) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = detail::swap_in_word(src[i], coord);
    return;
  }
  const std::size_t block = std::size_t{1} << (coord - 6);
  for (std::size_t base = 0; base < n; base += 2 * block) {
    for (std::size_t j = 0; j < block; ++j) {
      dst[base + j] = src[base + block + j];
      dst[base + block + j] = src[base + j];
    }
  }
}

constexpr KernelTable kScalar{
    Isa::Scalar,       "scalar",         not_scalar,         and_scalar,
    or_scalar,         xor_scalar,       andnot_scalar,      popcount_scalar,
    equal_scalar,      is_zero_scalar,   is_subset_scalar,   reverse_scalar,
    project_scalar,    select_half_scalar, swap_coordinate_scalar,
};

}  // namespace

const KernelTable& detail::scalar_table() { return kScalar; }

}  // namespace orient_shatter::simd
