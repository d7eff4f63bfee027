#pragma once

// Brute-force reference implementations used only by the tests. Everything
// here works from first principles (explicit quantifier loops, cut
// enumeration, Floyd-Warshall) and shares no algorithm with the library.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "orient_shatter/graph.hpp"

namespace oracle {

using Points = std::set<std::uint64_t>;

inline std::uint64_t full(std::uint32_t m) { return m == 0 ? 0 : (~std::uint64_t{0} >> (64 - m)); }

// All submasks of `mask`, including 0 and mask.
inline std::vector<std::uint64_t> submasks(std::uint64_t mask) {
  std::vector<std::uint64_t> out;
  std::uint64_t x = mask;
  while (true) {
    out.push_back(x);
    if (x == 0) break;
    x = (x - 1) & mask;
  }
  return out;
}

// forall f on Y, exists member agreeing with f on Y.
inline bool shatters(const Points& s, std::uint32_t m, std::uint64_t y) {
  (void)m;
  for (std::uint64_t f : submasks(y)) {
    bool found = false;
    for (std::uint64_t p : s) {
      if ((p & y) == f) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

// exists g on X - Y such that forall f on Y, f | g is a member.
inline bool strongly_shatters(const Points& s, std::uint32_t m, std::uint64_t y) {
  const std::uint64_t rest = full(m) & ~y;
  for (std::uint64_t g : submasks(rest)) {
    bool all = true;
    for (std::uint64_t f : submasks(y)) {
      if (!s.count(f | g)) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

inline Points random_points(std::mt19937_64& rng, std::uint32_t m, double density) {
  Points s;
  std::bernoulli_distribution keep(density);
  for (std::uint64_t p = 0; p <= full(m); ++p) {
    if (keep(rng)) s.insert(p);
  }
  return s;
}

// ---- graphs ----

using Matrix = std::vector<std::vector<std::int64_t>>;
inline constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

struct DArc {
  std::uint32_t from, to, edge;
};

inline std::vector<DArc> arcs(const orient_shatter::Graph& g, std::uint64_t orientation,
                              std::uint64_t mask) {
  std::vector<DArc> out;
  for (std::uint32_t e = 0; e < g.edge_count(); ++e) {
    if (!((mask >> e) & 1u)) continue;
    const auto& ed = g.edge(e);
    if ((orientation >> e) & 1u) {
      out.push_back({ed.v, ed.u, e});
    } else {
      out.push_back({ed.u, ed.v, e});
    }
  }
  return out;
}

// Both directions of every present edge.
inline std::vector<DArc> undirected_arcs(const orient_shatter::Graph& g, std::uint64_t mask) {
  std::vector<DArc> out;
  for (std::uint32_t e = 0; e < g.edge_count(); ++e) {
    if (!((mask >> e) & 1u)) continue;
    out.push_back({g.edge(e).u, g.edge(e).v, e});
    out.push_back({g.edge(e).v, g.edge(e).u, e});
  }
  return out;
}

inline std::vector<std::vector<bool>> reach(std::uint32_t n, const std::vector<DArc>& as) {
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (std::uint32_t v = 0; v < n; ++v) r[v][v] = true;
  for (const auto& a : as) r[a.from][a.to] = true;
  for (std::uint32_t k = 0; k < n; ++k)
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t j = 0; j < n; ++j)
        if (r[i][k] && r[k][j]) r[i][j] = true;
  return r;
}

inline Matrix distances(std::uint32_t n, const std::vector<DArc>& as,
                        const std::vector<std::int64_t>& lens) {
  Matrix d(n, std::vector<std::int64_t>(n, kInf));
  for (std::uint32_t v = 0; v < n; ++v) d[v][v] = 0;
  for (const auto& a : as) d[a.from][a.to] = std::min(d[a.from][a.to], lens[a.edge]);
  for (std::uint32_t k = 0; k < n; ++k)
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t j = 0; j < n; ++j)
        if (d[i][k] < kInf && d[k][j] < kInf) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

// A simple oriented graph has a directed cycle iff two distinct vertices
// reach each other.
inline bool cyclic(std::uint32_t n, const std::vector<DArc>& as) {
  const auto r = reach(n, as);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = i + 1; j < n; ++j)
      if (r[i][j] && r[j][i]) return true;
  return false;
}

inline std::uint32_t components(std::uint32_t n, const std::vector<DArc>& as) {
  std::vector<DArc> both = as;
  for (const auto& a : as) both.push_back({a.to, a.from, a.edge});
  const auto r = reach(n, both);
  std::uint32_t c = 0;
  std::vector<bool> seen(n, false);
  for (std::uint32_t v = 0; v < n; ++v) {
    if (seen[v]) continue;
    ++c;
    for (std::uint32_t u = 0; u < n; ++u)
      if (r[v][u]) seen[u] = true;
  }
  return c;
}

inline std::uint32_t components(const orient_shatter::Graph& g, std::uint64_t mask) {
  return components(g.vertex_count(), arcs(g, 0, mask));
}

inline bool is_forest(const orient_shatter::Graph& g, std::uint64_t mask) {
  return static_cast<std::uint32_t>(__builtin_popcountll(mask)) ==
         g.vertex_count() - components(g, mask);
}

// Min cut over all vertex sets containing s and not t: sum of capacities of
// arcs leaving the set. Equals the max flow by max-flow/min-cut.
inline std::int64_t min_cut(std::uint32_t n, const std::vector<DArc>& as,
                            const std::vector<std::int64_t>& caps, std::uint32_t s,
                            std::uint32_t t) {
  std::int64_t best = kInf;
  for (std::uint64_t side = 0; side < (std::uint64_t{1} << n); ++side) {
    if (!((side >> s) & 1u) || ((side >> t) & 1u)) continue;
    std::int64_t cut = 0;
    for (const auto& a : as)
      if (((side >> a.from) & 1u) && !((side >> a.to) & 1u)) cut += caps[a.edge];
    best = std::min(best, cut);
  }
  return best;
}

// k-strong by the cut condition: every nonempty proper vertex set has at
// least k arcs leaving it.
inline bool k_strong(std::uint32_t n, const std::vector<DArc>& as, std::uint32_t k) {
  if (n == 1) return true;
  for (std::uint64_t side = 1; side + 1 < (std::uint64_t{1} << n); ++side) {
    std::uint32_t out = 0;
    for (const auto& a : as)
      if (((side >> a.from) & 1u) && !((side >> a.to) & 1u)) ++out;
    if (out < k) return false;
  }
  return true;
}

// k-edge-connected by deletion: connected after removing any k-1 edges.
inline bool k_edge_connected(const orient_shatter::Graph& g, std::uint64_t mask, std::uint32_t k) {
  for (std::uint64_t del : submasks(mask)) {
    if (static_cast<std::uint32_t>(__builtin_popcountll(del)) >= k) continue;
    if (components(g, mask & ~del) != 1) return false;
  }
  return true;
}

// Non-induced copy by trying every injective vertex map.
inline bool contains_copy(std::uint32_t host_n, const std::vector<DArc>& host,
                          std::uint32_t pat_n, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& pat) {
  if (pat_n > host_n) return false;
  std::vector<std::vector<bool>> adj(host_n, std::vector<bool>(host_n, false));
  for (const auto& a : host) adj[a.from][a.to] = true;
  std::vector<std::uint32_t> perm(host_n);
  std::iota(perm.begin(), perm.end(), 0u);
  do {
    bool ok = true;
    for (const auto& [x, y] : pat) {
      if (!adj[perm[x]][perm[y]]) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace oracle
