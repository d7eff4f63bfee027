#pragma once

// Bit-table kernels behind every System/Family operation.
//
// A table of dimension m holds 2^m bits packed little-endian into 64-bit
// words: bit i of the table is bit (i % 64) of word (i / 64). Tables with
// m < 6 occupy one word and keep every bit above 2^m cleared; all kernels
// preserve that tail invariant.
//
// Two implementations exist: a portable scalar reference and an AVX2 variant.
// `active()` picks the widest one the CPU supports at first use; tests pin a
// specific table through `table(Isa)` and compare them bit for bit.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace orient_shatter::simd {

enum class Isa { Scalar, Avx2 };

enum class Fold { Or, And };

struct KernelTable {
  Isa isa;
  std::string_view name;

  // Word-wise boolean algebra over n words. dst may alias an input.
  void (*bit_not)(std::uint64_t* dst, const std::uint64_t* src, std::size_t n);
  void (*bit_and)(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b,
                  std::size_t n);
  void (*bit_or)(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b,
                 std::size_t n);
  void (*bit_xor)(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b,
                  std::size_t n);
  // dst = a & ~b
  void (*bit_andnot)(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b,
                     std::size_t n);

  std::uint64_t (*popcount)(const std::uint64_t* a, std::size_t n);
  bool (*equal)(const std::uint64_t* a, const std::uint64_t* b, std::size_t n);
  bool (*is_zero)(const std::uint64_t* a, std::size_t n);
  // a & ~b == 0
  bool (*is_subset)(const std::uint64_t* a, const std::uint64_t* b, std::size_t n);

  // dst[i] = bit-reverse(src[n - 1 - i]); index p maps to (64n - 1 - p).
  // dst must not alias src.
  void (*reverse)(std::uint64_t* dst, const std::uint64_t* src, std::size_t n);

  // Removes coordinate `coord` from a dimension-m table by OR-ing (exists) or
  // AND-ing (forall) the two entries that differ only in that coordinate.
  // dst receives a dimension-(m-1) table. Requires coord < m.
  void (*project)(std::uint64_t* dst, const std::uint64_t* src, std::uint32_t m,
                  std::uint32_t coord, Fold fold);

  // The half of the table where `coord` equals `value`, as a dimension-(m-1)
  // table. Requires coord < m.
  void (*select_half)(std::uint64_t* dst, const std::uint64_t* src, std::uint32_t m,
                      std::uint32_t coord, bool value);

  // dst[p] = src[p ^ (1 << coord)]. dst must not alias src.
  void (*swap_coordinate)(std::uint64_t* dst, const std::uint64_t* src, std::uint32_t m,
                          std::uint32_t coord);
};

// Number of 64-bit words backing a dimension-m table.
constexpr std::size_t words_for_dim(std::uint32_t m) {
  return m < 6 ? 1 : (std::size_t{1} << (m - 6));
}

// Mask of valid bits in the single word of a dimension-m table, m <= 6.
constexpr std::uint64_t tail_mask(std::uint32_t m) {
  return m >= 6 ? ~std::uint64_t{0} : ((std::uint64_t{1} << (std::uint64_t{1} << m)) - 1);
}

bool available(Isa isa);

// Throws std::invalid_argument when the ISA is not available on this CPU.
const KernelTable& table(Isa isa);

// The dispatched table. Honors ORIENT_SHATTER_ISA=scalar|avx2 when set.
const KernelTable& active();

// Overrides the dispatched table for the rest of the process (tests, benchmarks).
void force(Isa isa);

std::vector<Isa> available_isas();

namespace detail {
const KernelTable& scalar_table();
const KernelTable* avx2_table();  // nullptr when not compiled in
}  // namespace detail

}  // namespace orient_shatter::simd
