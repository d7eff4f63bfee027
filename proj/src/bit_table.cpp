#include "orient_shatter/bit_table.hpp"

#include "orient_shatter/errors.hpp"

namespace orient_shatter {

namespace {
constexpr std::uint32_t kMaxTableDim = 40;
}

BitTable::BitTable(std::uint32_t dim) : dim_(dim) {
  if (dim > kMaxTableDim) throw CapExceeded("bit table dimension", dim, kMaxTableDim);
  words_.assign(simd::words_for_dim(dim), 0);
}

BitTable BitTable::filled(std::uint32_t dim, bool value) {
  BitTable t(dim);
  if (value) {
    for (auto& w : t.words_) w = ~std::uint64_t{0};
    t.clear_tail();
  }
  return t;
}

void BitTable::clear_tail() noexcept {
  if (dim_ < 6) words_[0] &= simd::tail_mask(dim_);
}

void BitTable::check_same_dim(const BitTable& other) const {
  if (other.dim_ != dim_) {
    throw InputError("bit table dimension mismatch: " + std::to_string(dim_) + " vs " +
                     std::to_string(other.dim_));
  }
}

std::uint64_t BitTable::count() const {
  return simd::active().popcount(words_.data(), words_.size());
}

bool BitTable::none() const { return simd::active().is_zero(words_.data(), words_.size()); }

bool BitTable::all() const { return count() == size(); }

bool BitTable::operator==(const BitTable& other) const {
  return dim_ == other.dim_ && simd::active().equal(words_.data(), other.words_.data(), words_.size());
}

BitTable BitTable::operator~() const {
  BitTable out(dim_);
  simd::active().bit_not(out.words_.data(), words_.data(), words_.size());
  out.clear_tail();
  return out;
}

BitTable BitTable::operator&(const BitTable& other) const {
  check_same_dim(other);
  BitTable out(dim_);
  simd::active().bit_and(out.words_.data(), words_.data(), other.words_.data(), words_.size());
  return out;
}

BitTable BitTable::operator|(const BitTable& other) const {
  check_same_dim(other);
  BitTable out(dim_);
  simd::active().bit_or(out.words_.data(), words_.data(), other.words_.data(), words_.size());
  return out;
}

BitTable BitTable::operator^(const BitTable& other) const {
  check_same_dim(other);
  BitTable out(dim_);
  simd::active().bit_xor(out.words_.data(), words_.data(), other.words_.data(), words_.size());
  return out;
}

BitTable BitTable::minus(const BitTable& other) const {
  check_same_dim(other);
  BitTable out(dim_);
  simd::active().bit_andnot(out.words_.data(), words_.data(), other.words_.data(), words_.size());
  return out;
}

bool BitTable::is_subset_of(const BitTable& other) const {
  check_same_dim(other);
  return simd::active().is_subset(words_.data(), other.words_.data(), words_.size());
}

BitTable BitTable::reversed() const {
  BitTable out(dim_);
  simd::active().reverse(out.words_.data(), words_.data(), words_.size());
  if (dim_ < 6) out.words_[0] >>= (64 - size());
  return out;
}

BitTable BitTable::project(std::uint32_t coord, simd::Fold fold) const {
  if (coord >= dim_) throw InputError("projection coordinate out of range");
  BitTable out(dim_ - 1);
  simd::active().project(out.words_.data(), words_.data(), dim_, coord, fold);
  return out;
}

BitTable BitTable::half(std::uint32_t coord, bool value) const {
  if (coord >= dim_) throw InputError("half-table coordinate out of range");
  BitTable out(dim_ - 1);
  simd::active().select_half(out.words_.data(), words_.data(), dim_, coord, value);
  return out;
}

BitTable BitTable::swapped(std::uint32_t coord) const {
  if (coord >= dim_) throw InputError("swap coordinate out of range");
  BitTable out(dim_);
  simd::active().swap_coordinate(out.words_.data(), words_.data(), dim_, coord);
  return out;
}

std::optional<std::uint64_t> BitTable::first_set() const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) {
      return (static_cast<std::uint64_t>(w) << 6) |
             static_cast<std::uint64_t>(__builtin_ctzll(words_[w]));
    }
  }
  return std::nullopt;
}

std::vector<std::uint64_t> BitTable::set_indices() const {
  std::vector<std::uint64_t> out;
  out.reserve(count());
  for_each_set([&](std::uint64_t i) { out.push_back(i); });
  return out;
}

std::string format_word(std::uint64_t word, std::uint32_t dim) {
  std::string s(dim, '0');
  for (std::uint32_t i = 0; i < dim; ++i) {
    if ((word >> i) & 1u) s[i] = '1';
  }
  return s;
}

std::uint64_t parse_word(const std::string& text, std::uint32_t dim) {
  if (text.size() != dim) {
    throw InputError("word '" + text + "' has length " + std::to_string(text.size()) +
                     ", expected " + std::to_string(dim));
  }
  std::uint64_t w = 0;
  for (std::uint32_t i = 0; i < dim; ++i) {
    if (text[i] == '1') {
      w |= std::uint64_t{1} << i;
    } else if (text[i] != '0') {
      throw InputError("word '" + text + "' contains a character other than 0/1");
    }
  }
  return w;
}

}  // namespace orient_shatter
