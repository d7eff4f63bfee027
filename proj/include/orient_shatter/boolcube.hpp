#pragma once

// Systems over {0,1}^X: a ground set X of m labeled coordinates and a dense
// membership table with one bit per point. Points and subsets of X are both
// m-bit words with coordinate i at bit i.

#include <compare>
#include <cstdint>
#include <iterator>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "orient_shatter/bit_table.hpp"

namespace orient_shatter {

inline constexpr std::uint32_t kDefaultMaxDim = 20;

class GroundSet {
 public:
  GroundSet() = default;
  explicit GroundSet(std::vector<std::string> labels, std::uint32_t max_dim = kDefaultMaxDim);

  // Coordinates named x0, x1, ...
  static GroundSet anonymous(std::uint32_t m, std::uint32_t max_dim = kDefaultMaxDim);

  std::uint32_t size() const noexcept { return static_cast<std::uint32_t>(labels_.size()); }
  const std::string& label(std::uint32_t i) const { return labels_.at(i); }
  std::span<const std::string> labels() const noexcept { return labels_; }
  std::uint64_t full_mask() const noexcept { return (std::uint64_t{1} << size()) - 1; }

  // Throws InputError for an unknown label.
  std::uint32_t index_of(const std::string& label) const;

  // The coordinates selected by `mask`, in increasing index order.
  GroundSet subset(std::uint64_t mask) const;

  bool operator==(const GroundSet&) const = default;

 private:
  std::vector<std::string> labels_;
};

class System {
 public:
  System() : System(GroundSet{}, BitTable(0)) {}
  System(GroundSet ground, BitTable members);

  static System empty(GroundSet ground);
  static System full(GroundSet ground);

  const GroundSet& ground() const noexcept { return ground_; }
  std::uint32_t dim() const noexcept { return ground_.size(); }
  const BitTable& members() const noexcept { return members_; }

  bool contains(std::uint64_t point) const noexcept { return members_.test(point); }
  std::uint64_t size() const { return members_.count(); }

  bool operator==(const System& other) const {
    return ground_ == other.ground_ && members_ == other.members_;
  }

 private:
  GroundSet ground_;
  BitTable members_;
};

// A family of subsets of a ground set, stored as a table over all 2^m subsets.
class Family {
 public:
  Family() : Family(GroundSet{}, BitTable(0)) {}
  Family(GroundSet ground, BitTable subsets);

  const GroundSet& ground() const noexcept { return ground_; }
  std::uint32_t dim() const noexcept { return ground_.size(); }
  const BitTable& table() const noexcept { return subsets_; }

  bool contains(std::uint64_t subset) const noexcept { return subsets_.test(subset); }
  std::uint64_t size() const { return subsets_.count(); }

  bool is_downward_closed() const;
  // Largest member cardinality, -1 for the empty family.
  int max_cardinality() const;

  bool is_subset_of(const Family& other) const;
  bool operator==(const Family& other) const {
    return ground_ == other.ground_ && subsets_ == other.subsets_;
  }

 private:
  GroundSet ground_;
  BitTable subsets_;
};

enum class CoordState : std::uint8_t { Fixed0, Fixed1, Free };

// A sub-cube of {0,1}^X: Free coordinates form dim(C), the rest are fixed.
class Cube {
 public:
  Cube() = default;
  // Throws InputError if fixed_values touches a free or out-of-range coordinate.
  Cube(std::uint32_t ambient_dim, std::uint64_t free_mask, std::uint64_t fixed_values);

  static Cube whole(std::uint32_t ambient_dim) {
    return Cube(ambient_dim, (std::uint64_t{1} << ambient_dim) - 1, 0);
  }

  std::uint32_t ambient_dim() const noexcept { return ambient_dim_; }
  std::uint64_t free_mask() const noexcept { return free_mask_; }
  std::uint64_t fixed_values() const noexcept { return fixed_values_; }
  std::uint32_t free_count() const noexcept {
    return static_cast<std::uint32_t>(__builtin_popcountll(free_mask_));
  }
  CoordState state(std::uint32_t coord) const;

  bool contains(std::uint64_t point) const noexcept {
    return (point & ~free_mask_) == fixed_values_;
  }

  // One character per coordinate: '0', '1', or '*' for free.
  std::string to_string() const;

  // Enumeration order: free-coordinate count, then free mask, then fixed
  // values (both compared as integers).
  std::strong_ordering operator<=>(const Cube& other) const;
  bool operator==(const Cube& other) const = default;

 private:
  std::uint32_t ambient_dim_ = 0;
  std::uint64_t free_mask_ = 0;
  std::uint64_t fixed_values_ = 0;
};

// Lazily yields all 3^m cubes in Cube's ordering.
class CubeRange {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Cube;
    using difference_type = std::ptrdiff_t;
    using pointer = const Cube*;
    using reference = const Cube&;

    iterator() = default;
    const Cube& operator*() const noexcept { return current_; }
    const Cube* operator->() const noexcept { return &current_; }
    iterator& operator++();
    iterator operator++(int) {
      iterator copy = *this;
      ++*this;
      return copy;
    }
    bool operator==(const iterator& other) const noexcept {
      return done_ == other.done_ && (done_ || current_ == other.current_);
    }

   private:
    friend class CubeRange;
    explicit iterator(std::uint32_t m) : current_(Cube(m, 0, 0)), done_(false) {}
    Cube current_;
    bool done_ = true;
  };

  explicit CubeRange(std::uint32_t m) : m_(m) {}
  iterator begin() const { return iterator(m_); }
  iterator end() const { return iterator(); }

 private:
  std::uint32_t m_;
};

System make_system(GroundSet ground, std::span<const std::uint64_t> points);

System complement(const System& s);
// f in result <=> (1 - f) in s
System antipodal(const System& s);
bool is_symmetric(const System& s);
bool is_trivial(const System& s);

CubeRange enumerate_cubes(const GroundSet& ground);

// The system over dim(c) induced by s on the cube c.
System restrict(const System& s, const Cube& c);

// Restrictions to the cubes fixing coordinate x to 0 and to 1.
std::pair<System, System> coordinate_restrictions(const System& s, std::uint32_t x);
std::pair<System, System> coordinate_restrictions(const System& s, const std::string& label);

// Y in result <=> (X - Y) not in f
Family co_complement(const Family& f);

}  // namespace orient_shatter
