#pragma once

// Shattered / strongly shattered families of a system, VC and dual VC
// dimension, the Sandwich and Sauer-Shelah checks, shattering-extremal (SE)
// detection, lopsidedness witnesses, and hypercube geodesics inside a system.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "orient_shatter/boolcube.hpp"

namespace orient_shatter {

inline constexpr std::uint32_t kDefaultMaxLopsidedDim = 14;
inline constexpr std::uint32_t kDefaultMaxDualityDim = 12;
inline constexpr std::uint64_t kDefaultMaxPartialCubeSize = std::uint64_t{1} << 14;

struct ShatterProfile {
  Family str;
  Family sstr;
  int vc = -1;
  int dvc = -1;
  std::uint64_t size = 0;
};

// S shatters Y: every pattern on Y extends to a member (forall f, exists g).
bool shatters(const System& s, std::uint64_t y);
// S strongly shatters Y: one outside assignment works for every pattern on Y.
bool strongly_shatters(const System& s, std::uint64_t y);

// Direct computation by project-and-test over the subset lattice.
Family shattered_family(const System& s);
Family strongly_shattered_family(const System& s);

// Independent route: recursion on the two restrictions associated with the
// last coordinate. Exponential; meant for cross-validation at small m.
Family shattered_family_recursive(const System& s);
Family strongly_shattered_family_recursive(const System& s);

ShatterProfile profile(const System& s);

struct SandwichTriple {
  std::uint64_t sstr = 0;
  std::uint64_t size = 0;
  std::uint64_t str = 0;
  bool operator==(const SandwichTriple&) const = default;
};

// Throws InternalInconsistency if |sstr| <= |S| <= |str| fails.
SandwichTriple sandwich_check(const System& s);

// Sum of C(m, i) for i = 0..vc(S); 0 for the empty system. Throws
// InternalInconsistency if |S| exceeds it.
std::uint64_t sauer_bound(const System& s);

struct DualityResult {
  bool ok = true;
  // X' of the first partition {X', X - X'} where the exactly-one rule broke.
  std::optional<std::uint64_t> violating_partition;
  // Name of the family identity that failed, if any.
  std::string failed_identity;
};

// Checks, on every partition, that exactly one of [S shatters X'] and
// [not-S strongly shatters X''] holds, plus str(~S) = sstr(S)* and
// sstr(~S) = str(S)*.
DualityResult duality_check(const System& s, std::uint32_t max_dim = kDefaultMaxDualityDim);

bool is_se(const System& s);

struct SeCriteria {
  bool str_equals_sstr = false;
  bool sstr_size_equals_size = false;
  bool size_equals_str_size = false;
  bool complement_se = false;

  bool consistent() const {
    return str_equals_sstr == sstr_size_equals_size && str_equals_sstr == size_equals_str_size &&
           str_equals_sstr == complement_se;
  }
};

SeCriteria se_char_check(const System& s);

// First cube (in enumeration order) whose restriction is non-trivial and
// symmetric; none exactly when S is SE. Throws CapExceeded above max_dim.
std::optional<Cube> find_symmetric_restriction(const System& s,
                                               std::uint32_t max_dim = kDefaultMaxLopsidedDim);

struct FlipSequence {
  std::uint64_t start = 0;
  std::uint64_t end = 0;
  std::vector<std::uint32_t> steps;  // coordinate flipped at each step
};

class NoGeodesic : public std::runtime_error {
 public:
  NoGeodesic(std::uint64_t hamming, std::optional<std::uint64_t> path_length);

  std::uint64_t hamming() const noexcept { return hamming_; }
  // In-system BFS distance; nullopt when the endpoints are disconnected.
  std::optional<std::uint64_t> path_length() const noexcept { return path_length_; }

 private:
  std::uint64_t hamming_;
  std::optional<std::uint64_t> path_length_;
};

// Shortest flip path from f to g through members of S (BFS, neighbors in
// increasing coordinate order). Throws NoGeodesic if that path is longer than
// the Hamming distance, InputError if f or g is not a member.
FlipSequence flip_geodesic(const System& s, std::uint64_t f, std::uint64_t g);

struct PartialCubeResult {
  bool ok = true;
  // First pair (f, g) whose in-system distance differs from Hamming distance.
  std::optional<std::pair<std::uint64_t, std::uint64_t>> witness;
};

PartialCubeResult partial_cube_check(const System& s,
                                     std::uint64_t max_size = kDefaultMaxPartialCubeSize);
bool is_partial_cube(const System& s, std::uint64_t max_size = kDefaultMaxPartialCubeSize);

// Scatter the low bits of `compact` into the set positions of `mask`.
std::uint64_t deposit_bits(std::uint64_t compact, std::uint64_t mask);

}  // namespace orient_shatter
