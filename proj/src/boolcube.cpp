#include "orient_shatter/boolcube.hpp"

#include <unordered_set>

#include "orient_shatter/errors.hpp"

namespace orient_shatter {

GroundSet::GroundSet(std::vector<std::string> labels, std::uint32_t max_dim)
    : labels_(std::move(labels)) {
  if (labels_.size() > max_dim) {
    throw CapExceeded("ground set dimension", labels_.size(), max_dim);
  }
  std::unordered_set<std::string> seen;
  for (const auto& l : labels_) {
    if (!seen.insert(l).second) throw InputError("duplicate ground-set label '" + l + "'");
  }
}

GroundSet GroundSet::anonymous(std::uint32_t m, std::uint32_t max_dim) {
  std::vector<std::string> labels;
  labels.reserve(m);
  for (std::uint32_t i = 0; i < m; ++i) labels.push_back("x" + std::to_string(i));
  return GroundSet(std::move(labels), max_dim);
}

std::uint32_t GroundSet::index_of(const std::string& label) const {
  for (std::uint32_t i = 0; i < size(); ++i) {
    if (labels_[i] == label) return i;
  }
  throw InputError("unknown coordinate '" + label + "'");
}

GroundSet GroundSet::subset(std::uint64_t mask) const {
  GroundSet out;
  for (std::uint32_t i = 0; i < size(); ++i) {
    if ((mask >> i) & 1u) out.labels_.push_back(labels_[i]);
  }
  return out;
}

System::System(GroundSet ground, BitTable members)
    : ground_(std::move(ground)), members_(std::move(members)) {
  if (members_.dim() != ground_.size()) {
    throw InputError("membership table dimension does not match ground set");
  }
}

System System::empty(GroundSet ground) {
  const auto m = ground.size();
  return System(std::move(ground), BitTable(m));
}

System System::full(GroundSet ground) {
  const auto m = ground.size();
  return System(std::move(ground), BitTable::filled(m, true));
}

Family::Family(GroundSet ground, BitTable subsets)
    : ground_(std::move(ground)), subsets_(std::move(subsets)) {
  if (subsets_.dim() != ground_.size()) {
    throw InputError("family table dimension does not match ground set");
  }
}

bool Family::is_downward_closed() const {
  // Closed iff removing any single element keeps membership:
  // members with coordinate i set must map to members after clearing it.
  for (std::uint32_t i = 0; i < dim(); ++i) {
    const BitTable with = subsets_.half(i, true);
    const BitTable without = subsets_.half(i, false);
    if (!with.is_subset_of(without)) return false;
  }
  return true;
}

int Family::max_cardinality() const {
  int best = -1;
  subsets_.for_each_set([&](std::uint64_t y) { best = std::max(best, __builtin_popcountll(y)); });
  return best;
}

bool Family::is_subset_of(const Family& other) const {
  if (!(ground_ == other.ground_)) throw InputError("families over different ground sets");
  return subsets_.is_subset_of(other.subsets_);
}

Cube::Cube(std::uint32_t ambient_dim, std::uint64_t free_mask, std::uint64_t fixed_values)
    : ambient_dim_(ambient_dim), free_mask_(free_mask), fixed_values_(fixed_values) {
  const std::uint64_t full = (std::uint64_t{1} << ambient_dim) - 1;
  if ((free_mask & ~full) != 0 || (fixed_values & ~full) != 0) {
    throw InputError("cube mask outside the ambient dimension");
  }
  if ((free_mask & fixed_values) != 0) {
    throw InputError("cube fixes a value on a free coordinate");
  }
}

CoordState Cube::state(std::uint32_t coord) const {
  if (coord >= ambient_dim_) throw InputError("cube coordinate out of range");
  if ((free_mask_ >> coord) & 1u) return CoordState::Free;
  return ((fixed_values_ >> coord) & 1u) ? CoordState::Fixed1 : CoordState::Fixed0;
}

std::string Cube::to_string() const {
  std::string s(ambient_dim_, '0');
  for (std::uint32_t i = 0; i < ambient_dim_; ++i) {
    if ((free_mask_ >> i) & 1u) {
      s[i] = '*';
    } else if ((fixed_values_ >> i) & 1u) {
      s[i] = '1';
    }
  }
  return s;
}

std::strong_ordering Cube::operator<=>(const Cube& other) const {
  if (auto c = ambient_dim_ <=> other.ambient_dim_; c != 0) return c;
  if (auto c = free_count() <=> other.free_count(); c != 0) return c;
  if (auto c = free_mask_ <=> other.free_mask_; c != 0) return c;
  return fixed_values_ <=> other.fixed_values_;
}

CubeRange::iterator& CubeRange::iterator::operator++() {
  if (done_) return *this;
  const std::uint32_t m = current_.ambient_dim();
  const std::uint64_t full = (std::uint64_t{1} << m) - 1;
  std::uint64_t free = current_.free_mask();
  const std::uint64_t fixed_space = full & ~free;
  // next submask of fixed_space in increasing order
  const std::uint64_t next_fixed = ((current_.fixed_values() | ~fixed_space) + 1) & fixed_space;
  if (next_fixed != 0) {
    current_ = Cube(m, free, next_fixed);
    return *this;
  }
  // next free mask with the same popcount (Gosper), else the next popcount
  const std::uint32_t k = current_.free_count();
  if (free != 0) {
    const std::uint64_t c = free & (~free + 1);
    const std::uint64_t r = free + c;
    const std::uint64_t next = (((r ^ free) >> 2) / c) | r;
    if ((next & ~full) == 0) {
      current_ = Cube(m, next, 0);
      return *this;
    }
  }
  if (k + 1 > m) {
    done_ = true;
    return *this;
  }
  current_ = Cube(m, (std::uint64_t{1} << (k + 1)) - 1, 0);
  return *this;
}

System make_system(GroundSet ground, std::span<const std::uint64_t> points) {
  const auto m = ground.size();
  BitTable members(m);
  for (auto p : points) {
    if (p >= members.size()) {
      throw InputError("point " + std::to_string(p) + " outside {0,1}^" + std::to_string(m));
    }
    members.set(p);
  }
  return System(std::move(ground), std::move(members));
}

System complement(const System& s) { return System(s.ground(), ~s.members()); }

System antipodal(const System& s) { return System(s.ground(), s.members().reversed()); }

bool is_symmetric(const System& s) { return s.members() == s.members().reversed(); }

bool is_trivial(const System& s) { return s.members().none() || s.members().all(); }

CubeRange enumerate_cubes(const GroundSet& ground) { return CubeRange(ground.size()); }

System restrict(const System& s, const Cube& c) {
  if (c.ambient_dim() != s.dim()) throw InputError("cube and system have different ground sets");
  BitTable t = s.members();
  // Drop fixed coordinates from the top so lower indices stay put.
  for (std::uint32_t i = s.dim(); i-- > 0;) {
    if (c.state(i) != CoordState::Free) t = t.half(i, c.state(i) == CoordState::Fixed1);
  }
  return System(s.ground().subset(c.free_mask()), std::move(t));
}

std::pair<System, System> coordinate_restrictions(const System& s, std::uint32_t x) {
  if (x >= s.dim()) throw InputError("unknown coordinate index " + std::to_string(x));
  const GroundSet rest = s.ground().subset(s.ground().full_mask() & ~(std::uint64_t{1} << x));
  return {System(rest, s.members().half(x, false)), System(rest, s.members().half(x, true))};
}

std::pair<System, System> coordinate_restrictions(const System& s, const std::string& label) {
  return coordinate_restrictions(s, s.ground().index_of(label));
}

Family co_complement(const Family& f) { return Family(f.ground(), ~f.table().reversed()); }

}  // namespace orient_shatter
