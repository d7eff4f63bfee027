#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "orient_shatter/simd/kernels.hpp"

namespace orient_shatter {

// Dense table of 2^dim bits indexed by dim-bit words (coordinate i = bit i).
// Backs both System membership and Family subset tables. All operations go
// through the dispatched kernel table.
class BitTable {
 public:
  BitTable() : BitTable(0) {}
  explicit BitTable(std::uint32_t dim);

  static BitTable filled(std::uint32_t dim, bool value);

  std::uint32_t dim() const noexcept { return dim_; }
  std::uint64_t size() const noexcept { return std::uint64_t{1} << dim_; }
  std::uint64_t full_index() const noexcept { return size() - 1; }

  bool test(std::uint64_t index) const noexcept {
    return ((words_[index >> 6] >> (index & 63)) & 1u) != 0;
  }
  void set(std::uint64_t index, bool value = true) noexcept {
    const std::uint64_t bit = std::uint64_t{1} << (index & 63);
    if (value) {
      words_[index >> 6] |= bit;
    } else {
      words_[index >> 6] &= ~bit;
    }
  }

  std::span<const std::uint64_t> words() const noexcept { return words_; }
  std::span<std::uint64_t> mutable_words() noexcept { return words_; }

  std::uint64_t count() const;
  bool none() const;
  bool all() const;

  bool operator==(const BitTable& other) const;

  BitTable operator~() const;
  BitTable operator&(const BitTable& other) const;
  BitTable operator|(const BitTable& other) const;
  BitTable operator^(const BitTable& other) const;
  // this & ~other
  BitTable minus(const BitTable& other) const;

  bool is_subset_of(const BitTable& other) const;

  // result[i] = this[full_index() ^ i]
  BitTable reversed() const;

  // Removes coordinate `coord` (OR = exists, AND = forall); dim drops by one.
  BitTable project(std::uint32_t coord, simd::Fold fold) const;
  // Entries with coordinate `coord` fixed to `value`; dim drops by one.
  BitTable half(std::uint32_t coord, bool value) const;
  // result[i] = this[i ^ (1 << coord)]
  BitTable swapped(std::uint32_t coord) const;

  // Smallest set index, if any.
  std::optional<std::uint64_t> first_set() const;

  template <class Fn>
  void for_each_set(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int b = __builtin_ctzll(bits);
        fn((static_cast<std::uint64_t>(w) << 6) | static_cast<std::uint64_t>(b));
        bits &= bits - 1;
      }
    }
  }

  std::vector<std::uint64_t> set_indices() const;

 private:
  void check_same_dim(const BitTable& other) const;
  void clear_tail() noexcept;

  std::uint32_t dim_;
  std::vector<std::uint64_t> words_;
};

// Renders a dim-bit word with coordinate 0 leftmost, e.g. 0b10 over m=2 -> "01".
std::string format_word(std::uint64_t word, std::uint32_t dim);

// Inverse of format_word. Throws InputError on bad characters or length.
std::uint64_t parse_word(const std::string& text, std::uint32_t dim);

}  // namespace orient_shatter
