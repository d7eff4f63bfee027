#include "orient_shatter/shattering.hpp"

#include <deque>
#include <map>

#include "orient_shatter/errors.hpp"

namespace orient_shatter {

using simd::Fold;

namespace {

std::uint64_t bit(std::uint32_t i) { return std::uint64_t{1} << i; }

// Position of original coordinate x among the coordinates still in `present`.
std::uint32_t position_in(std::uint64_t present, std::uint32_t x) {
  return static_cast<std::uint32_t>(__builtin_popcountll(present & (bit(x) - 1)));
}

void check_subset(const System& s, std::uint64_t y) {
  if ((y & ~s.ground().full_mask()) != 0) {
    throw InputError("subset is not contained in the ground set");
  }
}

// Projects out every coordinate in `drop` (descending, so lower positions
// stay valid).
BitTable project_all(BitTable t, std::uint64_t drop, std::uint32_t m, Fold fold) {
  for (std::uint32_t i = m; i-- > 0;) {
    if ((drop >> i) & 1u) t = t.project(i, fold);
  }
  return t;
}

void mark_removals(BitTable& out, std::uint64_t base, std::uint64_t removable) {
  // base minus every subset of removable
  std::uint64_t z = removable;
  while (true) {
    out.set(base & ~z);
    if (z == 0) break;
    z = (z - 1) & removable;
  }
}

void mark_additions(BitTable& out, std::uint64_t base, std::uint64_t addable) {
  std::uint64_t z = addable;
  while (true) {
    out.set(base | z);
    if (z == 0) break;
    z = (z - 1) & addable;
  }
}

// `table` is the exists-projection of S onto `present`.
void str_dfs(const BitTable& table, std::uint64_t present, std::uint32_t next, std::uint32_t m,
             BitTable& out) {
  if (table.none()) return;
  const std::uint64_t removable = present & ~(bit(next) - 1);
  if (table.all()) {
    mark_removals(out, present, removable);
    return;
  }
  for (std::uint32_t x = next; x < m; ++x) {
    if (!((present >> x) & 1u)) continue;
    str_dfs(table.project(position_in(present, x), Fold::Or), present & ~bit(x), x + 1, m, out);
  }
}

// `table` is the forall-projection of S over `y`, indexed by the rest.
void sstr_dfs(const BitTable& table, std::uint64_t y, std::uint32_t next, std::uint32_t m,
              BitTable& out) {
  if (table.none()) return;
  const std::uint64_t full = bit(m) - 1;
  const std::uint64_t rest = full & ~y;
  const std::uint64_t addable = rest & ~(bit(next) - 1);
  if (table.all()) {
    mark_additions(out, y, addable);
    return;
  }
  out.set(y);
  for (std::uint32_t x = next; x < m; ++x) {
    if (!((rest >> x) & 1u)) continue;
    sstr_dfs(table.project(position_in(rest, x), Fold::And), y | bit(x), x + 1, m, out);
  }
}

// lo covers subsets without the top coordinate, hi those with it.
BitTable concat_halves(const BitTable& lo, const BitTable& hi) {
  BitTable out(lo.dim() + 1);
  auto dst = out.mutable_words();
  if (lo.dim() >= 6) {
    std::copy(lo.words().begin(), lo.words().end(), dst.begin());
    std::copy(hi.words().begin(), hi.words().end(), dst.begin() + static_cast<std::ptrdiff_t>(lo.words().size()));
  } else {
    dst[0] = lo.words()[0] | (hi.words()[0] << lo.size());
  }
  return out;
}

using Memo = std::map<std::pair<std::uint32_t, std::vector<std::uint64_t>>, BitTable>;

std::pair<std::uint32_t, std::vector<std::uint64_t>> memo_key(const System& s) {
  return {s.dim(), {s.members().words().begin(), s.members().words().end()}};
}

BitTable str_recursive(const System& s, Memo& memo) {
  if (s.dim() == 0) return BitTable::filled(0, s.size() != 0);
  auto key = memo_key(s);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  const auto [lower, upper] = coordinate_restrictions(s, s.dim() - 1);
  const System merged(lower.ground(), lower.members() | upper.members());
  // x not in Y: shattered by S iff shattered by the union of restrictions.
  // x in Y: shattered iff Y - {x} is shattered by both restrictions.
  BitTable lo = str_recursive(merged, memo);
  BitTable hi = str_recursive(lower, memo) & str_recursive(upper, memo);
  BitTable result = concat_halves(lo, hi);
  memo.emplace(std::move(key), result);
  return result;
}

BitTable sstr_recursive(const System& s, Memo& memo) {
  if (s.dim() == 0) return BitTable::filled(0, s.size() != 0);
  auto key = memo_key(s);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  const auto [lower, upper] = coordinate_restrictions(s, s.dim() - 1);
  const System common(lower.ground(), lower.members() & upper.members());
  BitTable lo = sstr_recursive(lower, memo) | sstr_recursive(upper, memo);
  BitTable hi = sstr_recursive(common, memo);
  BitTable result = concat_halves(lo, hi);
  memo.emplace(std::move(key), result);
  return result;
}

std::uint64_t binomial(std::uint32_t n, std::uint32_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint32_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::uint64_t hamming(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::uint64_t>(__builtin_popcountll(a ^ b));
}

}  // namespace

std::uint64_t deposit_bits(std::uint64_t compact, std::uint64_t mask) {
  std::uint64_t out = 0;
  for (std::uint64_t m = mask; m != 0; m &= m - 1) {
    if (compact & 1u) out |= m & (~m + 1);
    compact >>= 1;
  }
  return out;
}

bool shatters(const System& s, std::uint64_t y) {
  check_subset(s, y);
  const std::uint64_t outside = s.ground().full_mask() & ~y;
  return project_all(s.members(), outside, s.dim(), Fold::Or).all();
}

bool strongly_shatters(const System& s, std::uint64_t y) {
  check_subset(s, y);
  return !project_all(s.members(), y, s.dim(), Fold::And).none();
}

Family shattered_family(const System& s) {
  BitTable out(s.dim());
  str_dfs(s.members(), s.ground().full_mask(), 0, s.dim(), out);
  return Family(s.ground(), std::move(out));
}

Family strongly_shattered_family(const System& s) {
  BitTable out(s.dim());
  sstr_dfs(s.members(), 0, 0, s.dim(), out);
  return Family(s.ground(), std::move(out));
}

Family shattered_family_recursive(const System& s) {
  Memo memo;
  return Family(s.ground(), str_recursive(s, memo));
}

Family strongly_shattered_family_recursive(const System& s) {
  Memo memo;
  return Family(s.ground(), sstr_recursive(s, memo));
}

ShatterProfile profile(const System& s) {
  ShatterProfile p;
  p.str = shattered_family(s);
  p.sstr = strongly_shattered_family(s);
  p.vc = p.str.max_cardinality();
  p.dvc = p.sstr.max_cardinality();
  p.size = s.size();
  return p;
}

SandwichTriple sandwich_check(const System& s) {
  const ShatterProfile p = profile(s);
  const SandwichTriple t{p.sstr.size(), p.size, p.str.size()};
  if (!(t.sstr <= t.size && t.size <= t.str)) {
    throw InternalInconsistency("sandwich violated: " + std::to_string(t.sstr) + " <= " +
                                std::to_string(t.size) + " <= " + std::to_string(t.str));
  }
  return t;
}

std::uint64_t sauer_bound(const System& s) {
  const int vc = shattered_family(s).max_cardinality();
  std::uint64_t bound = 0;
  for (int i = 0; i <= vc; ++i) bound += binomial(s.dim(), static_cast<std::uint32_t>(i));
  if (s.size() > bound) {
    throw InternalInconsistency("Sauer-Shelah bound violated: |S| = " + std::to_string(s.size()) +
                                " > " + std::to_string(bound));
  }
  return bound;
}

DualityResult duality_check(const System& s, std::uint32_t max_dim) {
  if (s.dim() > max_dim) throw CapExceeded("duality check dimension", s.dim(), max_dim);
  DualityResult result;
  const System neg = complement(s);
  const std::uint64_t full = s.ground().full_mask();
  for (std::uint64_t part = 0; part <= full; ++part) {
    if (shatters(s, part) == strongly_shatters(neg, full & ~part)) {
      result.ok = false;
      result.violating_partition = part;
      result.failed_identity = "exactly-one";
      return result;
    }
  }
  const ShatterProfile ps = profile(s);
  const ShatterProfile pn = profile(neg);
  if (!(pn.str == co_complement(ps.sstr))) {
    result.ok = false;
    result.failed_identity = "str(~S) = sstr(S)*";
  } else if (!(pn.sstr == co_complement(ps.str))) {
    result.ok = false;
    result.failed_identity = "sstr(~S) = str(S)*";
  }
  return result;
}

bool is_se(const System& s) { return shattered_family(s) == strongly_shattered_family(s); }

SeCriteria se_char_check(const System& s) {
  const ShatterProfile p = profile(s);
  SeCriteria c;
  c.str_equals_sstr = p.str == p.sstr;
  c.sstr_size_equals_size = p.sstr.size() == p.size;
  c.size_equals_str_size = p.size == p.str.size();
  c.complement_se = is_se(complement(s));
  return c;
}

std::optional<Cube> find_symmetric_restriction(const System& s, std::uint32_t max_dim) {
  const std::uint32_t m = s.dim();
  if (m > max_dim) throw CapExceeded("lopsidedness scan dimension", m, max_dim);
  const BitTable& members = s.members();
  const std::uint64_t full = s.ground().full_mask();
  for (std::uint32_t k = 1; k <= m; ++k) {
    std::uint64_t y = bit(k) - 1;
    while ((y & ~full) == 0) {
      BitTable mirrored = members;
      for (std::uint32_t i = 0; i < m; ++i) {
        if ((y >> i) & 1u) mirrored = mirrored.swapped(i);
      }
      BitTable any_asym = members ^ mirrored;
      BitTable any_member = members;
      BitTable all_member = members;
      for (std::uint32_t i = m; i-- > 0;) {
        if (!((y >> i) & 1u)) continue;
        any_asym = any_asym.project(i, Fold::Or);
        any_member = any_member.project(i, Fold::Or);
        all_member = all_member.project(i, Fold::And);
      }
      const BitTable witness = any_member.minus(any_asym).minus(all_member);
      if (auto z = witness.first_set()) return Cube(m, y, deposit_bits(*z, full & ~y));
      const std::uint64_t c = y & (~y + 1);
      const std::uint64_t r = y + c;
      y = (((r ^ y) >> 2) / c) | r;
    }
  }
  return std::nullopt;
}

NoGeodesic::NoGeodesic(std::uint64_t hamming, std::optional<std::uint64_t> path_length)
    : std::runtime_error(path_length ? "in-system distance " + std::to_string(*path_length) +
                                           " exceeds Hamming distance " + std::to_string(hamming)
                                     : "endpoints are disconnected inside the system"),
      hamming_(hamming),
      path_length_(path_length) {}

namespace {

// BFS over members from `source`; dist/parent are indexed by point and must be
// sized 2^m. Returns the visit order so the caller can reset entries.
std::vector<std::uint64_t> bfs_members(const System& s, std::uint64_t source,
                                       std::vector<std::int32_t>& dist,
                                       std::vector<std::uint64_t>* parent,
                                       std::optional<std::uint64_t> stop_at) {
  std::vector<std::uint64_t> order;
  order.push_back(source);
  dist[source] = 0;
  for (std::size_t head = 0; head < order.size(); ++head) {
    const std::uint64_t p = order[head];
    if (stop_at && p == *stop_at) break;
    for (std::uint32_t i = 0; i < s.dim(); ++i) {
      const std::uint64_t q = p ^ bit(i);
      if (!s.contains(q) || dist[q] >= 0) continue;
      dist[q] = dist[p] + 1;
      if (parent) (*parent)[q] = p;
      order.push_back(q);
    }
  }
  return order;
}

}  // namespace

FlipSequence flip_geodesic(const System& s, std::uint64_t f, std::uint64_t g) {
  if (f >= s.members().size() || !s.contains(f)) throw InputError("start point is not a member");
  if (g >= s.members().size() || !s.contains(g)) throw InputError("end point is not a member");
  FlipSequence seq{f, g, {}};
  if (f == g) return seq;
  std::vector<std::int32_t> dist(s.members().size(), -1);
  std::vector<std::uint64_t> parent(s.members().size(), 0);
  bfs_members(s, f, dist, &parent, g);
  const std::uint64_t h = hamming(f, g);
  if (dist[g] < 0) throw NoGeodesic(h, std::nullopt);
  if (static_cast<std::uint64_t>(dist[g]) != h) {
    throw NoGeodesic(h, static_cast<std::uint64_t>(dist[g]));
  }
  std::vector<std::uint32_t> rev;
  for (std::uint64_t p = g; p != f; p = parent[p]) {
    rev.push_back(static_cast<std::uint32_t>(__builtin_ctzll(p ^ parent[p])));
  }
  seq.steps.assign(rev.rbegin(), rev.rend());
  return seq;
}

PartialCubeResult partial_cube_check(const System& s, std::uint64_t max_size) {
  const std::uint64_t n = s.size();
  if (n > max_size) throw CapExceeded("partial-cube check system size", n, max_size);
  PartialCubeResult result;
  const std::vector<std::uint64_t> members = s.members().set_indices();
  std::vector<std::int32_t> dist(s.members().size(), -1);
  for (std::uint64_t f : members) {
    const auto order = bfs_members(s, f, dist, nullptr, std::nullopt);
    std::optional<std::uint64_t> bad;
    if (order.size() != members.size()) {
      for (std::uint64_t g : members) {
        if (dist[g] < 0) {
          bad = g;
          break;
        }
      }
    } else {
      for (std::uint64_t g : order) {
        if (static_cast<std::uint64_t>(dist[g]) != hamming(f, g)) {
          bad = g;
          break;
        }
      }
    }
    for (std::uint64_t p : order) dist[p] = -1;
    if (bad) {
      result.ok = false;
      result.witness = std::make_pair(f, *bad);
      return result;
    }
  }
  return result;
}

bool is_partial_cube(const System& s, std::uint64_t max_size) {
  return partial_cube_check(s, max_size).ok;
}

}  // namespace orient_shatter
