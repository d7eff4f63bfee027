#include <doctest.h>

#include <random>
#include <vector>

#include "orient_shatter/bit_table.hpp"
#include "orient_shatter/simd/kernels.hpp"

namespace simd = orient_shatter::simd;

namespace {

std::vector<std::uint64_t> random_table(std::mt19937_64& rng, std::uint32_t m) {
  std::vector<std::uint64_t> w(simd::words_for_dim(m));
  for (auto& x : w) x = rng();
  w[0] &= simd::tail_mask(m);
  if (m < 6) w.resize(1);
  return w;
}

bool bit(const std::vector<std::uint64_t>& w, std::uint64_t i) { return (w[i >> 6] >> (i & 63)) & 1u; }

// Naive per-bit references.
std::vector<std::uint64_t> naive_project(const std::vector<std::uint64_t>& src, std::uint32_t m,
                                         std::uint32_t c, simd::Fold fold) {
  std::vector<std::uint64_t> out(simd::words_for_dim(m - 1), 0);
  for (std::uint64_t i = 0; i < (std::uint64_t{1} << (m - 1)); ++i) {
    const std::uint64_t lo = i & ((std::uint64_t{1} << c) - 1);
    const std::uint64_t p0 = ((i >> c) << (c + 1)) | lo;
    const std::uint64_t p1 = p0 | (std::uint64_t{1} << c);
    const bool v = fold == simd::Fold::Or ? (bit(src, p0) || bit(src, p1)) : (bit(src, p0) && bit(src, p1));
    if (v) out[i >> 6] |= std::uint64_t{1} << (i & 63);
  }
  return out;
}

std::vector<std::uint64_t> naive_half(const std::vector<std::uint64_t>& src, std::uint32_t m,
                                      std::uint32_t c, bool value) {
  std::vector<std::uint64_t> out(simd::words_for_dim(m - 1), 0);
  for (std::uint64_t i = 0; i < (std::uint64_t{1} << (m - 1)); ++i) {
    const std::uint64_t lo = i & ((std::uint64_t{1} << c) - 1);
    const std::uint64_t p = ((i >> c) << (c + 1)) | lo | (value ? std::uint64_t{1} << c : 0);
    if (bit(src, p)) out[i >> 6] |= std::uint64_t{1} << (i & 63);
  }
  return out;
}

std::vector<std::uint64_t> naive_swap(const std::vector<std::uint64_t>& src, std::uint32_t m,
                                      std::uint32_t c) {
  std::vector<std::uint64_t> out(src.size(), 0);
  for (std::uint64_t i = 0; i < (std::uint64_t{1} << m); ++i) {
    if (bit(src, i ^ (std::uint64_t{1} << c))) out[i >> 6] |= std::uint64_t{1} << (i & 63);
  }
  return out;
}

std::vector<std::uint64_t> naive_reverse(const std::vector<std::uint64_t>& src) {
  const std::uint64_t bits = src.size() * 64;
  std::vector<std::uint64_t> out(src.size(), 0);
  for (std::uint64_t i = 0; i < bits; ++i) {
    if (bit(src, bits - 1 - i)) out[i >> 6] |= std::uint64_t{1} << (i & 63);
  }
  return out;
}

}  // namespace

TEST_CASE("scalar table is always available and dispatch picks a valid ISA") {
  CHECK(simd::available(simd::Isa::Scalar));
  CHECK(simd::table(simd::Isa::Scalar).isa == simd::Isa::Scalar);
  const auto isas = simd::available_isas();
  REQUIRE_FALSE(isas.empty());
  CHECK(simd::available(simd::active().isa));
}

TEST_CASE("every kernel table matches the per-bit reference") {
  std::mt19937_64 rng(7);
  for (simd::Isa isa : simd::available_isas()) {
    const simd::KernelTable& k = simd::table(isa);
    CAPTURE(k.name);
    for (std::uint32_t m = 1; m <= 13; ++m) {
      for (int trial = 0; trial < 4; ++trial) {
        const auto a = random_table(rng, m);
        const auto b = random_table(rng, m);
        const std::size_t n = a.size();
        CAPTURE(m);

        std::vector<std::uint64_t> out(n), want(n);
        k.bit_and(out.data(), a.data(), b.data(), n);
        for (std::size_t i = 0; i < n; ++i) want[i] = a[i] & b[i];
        CHECK(out == want);
        k.bit_or(out.data(), a.data(), b.data(), n);
        for (std::size_t i = 0; i < n; ++i) want[i] = a[i] | b[i];
        CHECK(out == want);
        k.bit_xor(out.data(), a.data(), b.data(), n);
        for (std::size_t i = 0; i < n; ++i) want[i] = a[i] ^ b[i];
        CHECK(out == want);
        k.bit_andnot(out.data(), a.data(), b.data(), n);
        for (std::size_t i = 0; i < n; ++i) want[i] = a[i] & ~b[i];
        CHECK(out == want);
        k.bit_not(out.data(), a.data(), n);
        for (std::size_t i = 0; i < n; ++i) want[i] = ~a[i];
        CHECK(out == want);

        std::uint64_t pc = 0;
        for (auto w : a) pc += static_cast<std::uint64_t>(__builtin_popcountll(w));
        CHECK(k.popcount(a.data(), n) == pc);
        CHECK(k.equal(a.data(), a.data(), n));
        CHECK(k.equal(a.data(), b.data(), n) == (a == b));
        std::vector<std::uint64_t> zero(n, 0);
        CHECK(k.is_zero(zero.data(), n));
        std::vector<std::uint64_t> both(n);
        for (std::size_t i = 0; i < n; ++i) both[i] = a[i] & b[i];
        CHECK(k.is_subset(both.data(), a.data(), n));
        bool sub = true;
        for (std::size_t i = 0; i < n; ++i) sub = sub && (a[i] & ~b[i]) == 0;
        CHECK(k.is_subset(a.data(), b.data(), n) == sub);

        k.reverse(out.data(), a.data(), n);
        CHECK(out == naive_reverse(a));

        for (std::uint32_t c = 0; c < m; ++c) {
          CAPTURE(c);
          std::vector<std::uint64_t> half(simd::words_for_dim(m - 1));
          for (auto fold : {simd::Fold::Or, simd::Fold::And}) {
            k.project(half.data(), a.data(), m, c, fold);
            CHECK(half == naive_project(a, m, c, fold));
          }
          for (bool v : {false, true}) {
            k.select_half(half.data(), a.data(), m, c, v);
            CHECK(half == naive_half(a, m, c, v));
          }
          k.swap_coordinate(out.data(), a.data(), m, c);
          CHECK(out == naive_swap(a, m, c));
        }
      }
    }
  }
}

TEST_CASE("BitTable results do not depend on the forced ISA") {
  using orient_shatter::BitTable;
  std::mt19937_64 rng(11);
  for (std::uint32_t m = 0; m <= 12; ++m) {
    BitTable t(m);
    for (std::uint64_t i = 0; i < t.size(); ++i) t.set(i, rng() & 1u);
    std::vector<std::vector<std::uint64_t>> results;
    for (simd::Isa isa : simd::available_isas()) {
      simd::force(isa);
      std::vector<std::uint64_t> r;
      const BitTable rev = t.reversed();
      r.insert(r.end(), rev.words().begin(), rev.words().end());
      r.push_back((~t).count());
      if (m > 0) {
        const BitTable p = t.project(m - 1, simd::Fold::And);
        r.insert(r.end(), p.words().begin(), p.words().end());
        const BitTable s = t.swapped(0);
        r.insert(r.end(), s.words().begin(), s.words().end());
      }
      results.push_back(std::move(r));
    }
    for (const auto& r : results) CHECK(r == results.front());
  }
  simd::force(simd::available_isas().back());
}

TEST_CASE("complement keeps the tail of small tables clear") {
  using orient_shatter::BitTable;
  for (std::uint32_t m = 0; m <= 6; ++m) {
    const BitTable t(m);
    CHECK((~t).count() == (std::uint64_t{1} << m));
    CHECK((~t).all());
    CHECK(t.reversed().none());
  }
}

TEST_CASE("word formatting puts coordinate 0 leftmost") {
  CHECK(orient_shatter::format_word(0b10, 2) == "01");
  CHECK(orient_shatter::parse_word("01", 2) == 0b10);
  CHECK(orient_shatter::format_word(0, 0).empty());
  CHECK_THROWS(orient_shatter::parse_word("0x", 2));
  CHECK_THROWS(orient_shatter::parse_word("010", 2));
}
