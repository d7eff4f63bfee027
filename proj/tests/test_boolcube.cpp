#include <doctest.h>

#include <random>
#include <vector>

#include "oracle.hpp"
#include "orient_shatter/boolcube.hpp"
#include "orient_shatter/errors.hpp"

using namespace orient_shatter;

namespace {

System sys(std::uint32_t m, std::vector<std::string> words) {
  std::vector<std::uint64_t> pts;
  for (const auto& w : words) pts.push_back(parse_word(w, m));
  return make_system(GroundSet::anonymous(m), pts);
}

System random_system(std::mt19937_64& rng, std::uint32_t m) {
  BitTable t(m);
  for (std::uint64_t i = 0; i < t.size(); ++i) t.set(i, rng() & 1u);
  return System(GroundSet::anonymous(m), t);
}

Family random_family(std::mt19937_64& rng, std::uint32_t m) {
  BitTable t(m);
  for (std::uint64_t i = 0; i < t.size(); ++i) t.set(i, rng() & 1u);
  return Family(GroundSet::anonymous(m), t);
}

}  // namespace

TEST_CASE("make_system builds the listed points") {
  const System s = sys(2, {"00", "01", "10"});
  CHECK(s.size() == 3);
  CHECK_FALSE(s.contains(parse_word("11", 2)));

  const System e = make_system(GroundSet::anonymous(0), std::vector<std::uint64_t>{0});
  CHECK(e.size() == 1);
  CHECK(is_trivial(e));

  std::vector<std::uint64_t> all(8);
  for (std::uint64_t i = 0; i < 8; ++i) all[i] = i;
  const System f = make_system(GroundSet::anonymous(3), all);
  CHECK(f == System::full(GroundSet::anonymous(3)));
  CHECK(is_trivial(f));

  CHECK_THROWS_AS(make_system(GroundSet::anonymous(2), std::vector<std::uint64_t>{4}), InputError);
}

TEST_CASE("ground set labels") {
  CHECK_THROWS_AS(GroundSet({"a", "a"}), InputError);
  const GroundSet g({"a", "b", "c"});
  CHECK(g.index_of("c") == 2);
  CHECK_THROWS_AS(g.index_of("z"), InputError);
  CHECK(g.subset(0b101).labels()[1] == "c");
  CHECK_THROWS_AS(GroundSet::anonymous(30), CapExceeded);
}

TEST_CASE("complement") {
  const System s = sys(2, {"00", "01", "10"});
  const System c = complement(s);
  CHECK(c.size() == 1);
  CHECK(c.contains(parse_word("11", 2)));
  CHECK(complement(System::empty(GroundSet::anonymous(3))) == System::full(GroundSet::anonymous(3)));
  std::mt19937_64 rng(1);
  for (int i = 0; i < 100; ++i) {
    const System r = random_system(rng, static_cast<std::uint32_t>(rng() % 9));
    CHECK(complement(complement(r)) == r);
  }
}

TEST_CASE("antipodal and symmetry") {
  const System s = sys(2, {"00", "11"});
  CHECK(antipodal(s) == s);
  CHECK(is_symmetric(s));
  CHECK_FALSE(is_trivial(s));
  CHECK(antipodal(sys(2, {"00"})) == sys(2, {"11"}));
  CHECK(is_symmetric(System::full(GroundSet::anonymous(2))));
  CHECK(is_trivial(System::full(GroundSet::anonymous(2))));
  CHECK_FALSE(is_symmetric(sys(2, {"00", "01", "10"})));

  std::mt19937_64 rng(2);
  for (int i = 0; i < 100; ++i) {
    const std::uint32_t m = static_cast<std::uint32_t>(rng() % 9);
    const System r = random_system(rng, m);
    CHECK(antipodal(antipodal(r)) == r);
    bool brute = true;
    for (std::uint64_t p = 0; p <= oracle::full(m); ++p) {
      brute = brute && r.contains(p) == r.contains(oracle::full(m) ^ p);
    }
    CHECK(is_symmetric(r) == brute);
  }
}

TEST_CASE("cube enumeration") {
  std::vector<Cube> c1(enumerate_cubes(GroundSet::anonymous(1)).begin(), enumerate_cubes(GroundSet::anonymous(1)).end());
  REQUIRE(c1.size() == 3);
  CHECK(c1[0].to_string() == "0");
  CHECK(c1[1].to_string() == "1");
  CHECK(c1[2].to_string() == "*");

  for (std::uint32_t m = 0; m <= 6; ++m) {
    std::uint64_t count = 0;
    std::vector<std::uint64_t> per_y(std::uint64_t{1} << m, 0);
    Cube prev;
    bool first = true;
    for (const Cube& c : enumerate_cubes(GroundSet::anonymous(m))) {
      ++count;
      ++per_y[c.free_mask()];
      CHECK((c.fixed_values() & c.free_mask()) == 0);
      if (!first) CHECK(prev < c);
      prev = c;
      first = false;
    }
    std::uint64_t three = 1;
    for (std::uint32_t i = 0; i < m; ++i) three *= 3;
    CHECK(count == three);
    for (std::uint64_t y = 0; y < per_y.size(); ++y) {
      CHECK(per_y[y] == (std::uint64_t{1} << (m - __builtin_popcountll(y))));
    }
    if (m == 2) {
      std::uint64_t points = 0;
      for (const Cube& c : enumerate_cubes(GroundSet::anonymous(m))) points += c.free_count() == 0;
      CHECK(points == 4);
    }
  }
  CHECK_THROWS_AS(Cube(2, 0b01, 0b01), InputError);
}

TEST_CASE("restrict matches brute force") {
  const System s = sys(2, {"00", "01", "10"});
  // coordinate 0 fixed to 0, coordinate 1 free
  const System r = restrict(s, Cube(2, 0b10, 0));
  CHECK(r.dim() == 1);
  CHECK(r.size() == 2);
  CHECK(r.ground().label(0) == "x1");
  CHECK(restrict(s, Cube::whole(2)) == s);
  CHECK(restrict(System::empty(GroundSet::anonymous(3)), Cube(3, 0b101, 0b010)).size() == 0);

  std::mt19937_64 rng(3);
  for (int i = 0; i < 60; ++i) {
    const std::uint32_t m = 1 + static_cast<std::uint32_t>(rng() % 8);
    const System x = random_system(rng, m);
    const std::uint64_t free = rng() & oracle::full(m);
    const std::uint64_t fixed = rng() & oracle::full(m) & ~free;
    const System got = restrict(x, Cube(m, free, fixed));
    REQUIRE(got.dim() == static_cast<std::uint32_t>(__builtin_popcountll(free)));
    // Compact point j corresponds to the ambient point with the free bits of
    // `free` taken from j in increasing order.
    for (std::uint64_t j = 0; j < got.members().size(); ++j) {
      std::uint64_t p = fixed;
      std::uint32_t k = 0;
      for (std::uint32_t c = 0; c < m; ++c) {
        if ((free >> c) & 1u) {
          if ((j >> k) & 1u) p |= std::uint64_t{1} << c;
          ++k;
        }
      }
      CHECK(got.contains(j) == x.contains(p));
    }
  }
}

TEST_CASE("coordinate restrictions") {
  const System s = make_system(GroundSet({"a", "b"}),
                               std::vector<std::uint64_t>{0b00, 0b10, 0b01});  // 00, 01, 10
  const auto [s0, s1] = coordinate_restrictions(s, "a");
  CHECK(s0.size() == 2);
  CHECK(s1.size() == 1);
  CHECK(s1.contains(0));
  CHECK(s0.ground().labels()[0] == "b");

  const System f = System::full(GroundSet::anonymous(4));
  for (std::uint32_t x = 0; x < 4; ++x) {
    const auto [a, b] = coordinate_restrictions(f, x);
    CHECK(a == System::full(a.ground()));
    CHECK(b == System::full(b.ground()));
    CHECK(a.dim() == 3);
  }
  const auto [e0, e1] = coordinate_restrictions(System::empty(GroundSet::anonymous(3)), 1);
  CHECK(e0.size() == 0);
  CHECK(e1.size() == 0);
}

TEST_CASE("co-complement") {
  CHECK(co_complement(Family(GroundSet::anonymous(3), BitTable::filled(3, true))).size() == 0);

  // m = 1, F = {empty}: Y in F* iff X - Y not in F, so F* = {empty}.
  BitTable t(1);
  t.set(0);
  const Family f(GroundSet::anonymous(1), t);
  const Family fc = co_complement(f);
  CHECK(fc.size() == 1);
  CHECK(fc.contains(0));

  std::mt19937_64 rng(4);
  for (int i = 0; i < 100; ++i) {
    const std::uint32_t m = static_cast<std::uint32_t>(rng() % 9);
    const Family r = random_family(rng, m);
    CHECK(co_complement(co_complement(r)) == r);
    const Family c = co_complement(r);
    for (std::uint64_t y = 0; y <= oracle::full(m); ++y) {
      CHECK(c.contains(y) == !r.contains(oracle::full(m) & ~y));
    }
  }
}

TEST_CASE("family helpers") {
  BitTable t(2);
  t.set(0);
  t.set(1);
  const Family f(GroundSet::anonymous(2), t);
  CHECK(f.is_downward_closed());
  CHECK(f.max_cardinality() == 1);
  t.set(0, false);
  CHECK_FALSE(Family(GroundSet::anonymous(2), t).is_downward_closed());
  CHECK(Family(GroundSet::anonymous(2), BitTable(2)).max_cardinality() == -1);
}
