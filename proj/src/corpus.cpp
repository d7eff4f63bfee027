#include <algorithm>
#include <numeric>
#include <random>

#include "orient_shatter/errors.hpp"
#include "orient_shatter/verify.hpp"

namespace orient_shatter {

namespace {

// Modulo mapping keeps draws identical across standard libraries.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) {
  return lo + rng() % (hi - lo + 1);
}

}  // namespace

Graph complete_graph(std::uint32_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.push_back(Edge{u, v});
  }
  return Graph(n, std::move(edges));
}

Graph path_graph(std::uint32_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u + 1 < n; ++u) edges.push_back(Edge{u, u + 1});
  return Graph(n, std::move(edges));
}

Graph cycle_graph(std::uint32_t n) {
  if (n < 3) throw InputError("a cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) edges.push_back(Edge{u, (u + 1) % n});
  return Graph(n, std::move(edges));
}

Graph star_graph(std::uint32_t leaves) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= leaves; ++v) edges.push_back(Edge{0, v});
  return Graph(leaves + 1, std::move(edges));
}

std::vector<Graph> all_graphs_up_to(std::uint32_t max_n) {
  if (max_n > 6) throw CapExceeded("corpus vertex count", max_n, 6);
  std::vector<Graph> out;
  for (std::uint32_t n = 1; n <= max_n; ++n) {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    std::vector<std::vector<int>> index(n, std::vector<int>(n, -1));
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        index[u][v] = index[v][u] = static_cast<int>(pairs.size());
        pairs.emplace_back(u, v);
      }
    }
    const std::size_t p = pairs.size();
    // Each vertex permutation as a map on pair indices.
    std::vector<std::vector<int>> pair_maps;
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0u);
    do {
      std::vector<int> map(p);
      for (std::size_t i = 0; i < p; ++i) map[i] = index[perm[pairs[i].first]][perm[pairs[i].second]];
      pair_maps.push_back(std::move(map));
    } while (std::next_permutation(perm.begin(), perm.end()));

    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << p); ++mask) {
      bool canonical = true;
      for (const auto& map : pair_maps) {
        std::uint64_t image = 0;
        for (std::size_t i = 0; i < p; ++i) {
          if ((mask >> i) & 1u) image |= std::uint64_t{1} << map[i];
        }
        if (image < mask) {
          canonical = false;
          break;
        }
      }
      if (!canonical) continue;
      std::vector<Edge> edges;
      for (std::size_t i = 0; i < p; ++i) {
        if ((mask >> i) & 1u) edges.push_back(Edge{pairs[i].first, pairs[i].second});
      }
      out.emplace_back(n, std::move(edges));
    }
  }
  return out;
}

std::vector<Graph> random_connected_graphs(std::uint64_t seed, std::uint32_t count,
                                           std::uint32_t min_edges, std::uint32_t max_edges) {
  if (min_edges < 1 || min_edges > max_edges) throw InputError("bad edge-count range");
  if (max_edges > 64) throw CapExceeded("edges", max_edges, 64);
  std::mt19937_64 rng(seed);
  std::vector<Graph> out;
  out.reserve(count);
  for (std::uint32_t i = 0; i < count; ++i) {
    const auto m = static_cast<std::uint32_t>(draw(rng, min_edges, max_edges));
    // Feasible vertex counts: n - 1 <= m <= n(n-1)/2, at most 8 vertices.
    std::uint32_t n_lo = 2;
    while (n_lo * (n_lo - 1) / 2 < m) ++n_lo;
    const std::uint32_t n_hi = std::max(n_lo, std::min<std::uint32_t>(m + 1, 8));
    const auto n = static_cast<std::uint32_t>(draw(rng, n_lo, n_hi));

    std::vector<std::vector<bool>> used(n, std::vector<bool>(n, false));
    std::vector<Edge> edges;
    auto add = [&](Vertex a, Vertex b) {
      used[a][b] = used[b][a] = true;
      edges.push_back(rng() & 1u ? Edge{a, b} : Edge{b, a});
    };
    for (Vertex v = 1; v < n; ++v) add(v, static_cast<Vertex>(draw(rng, 0, v - 1)));
    std::vector<std::pair<Vertex, Vertex>> free;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (!used[u][v]) free.emplace_back(u, v);
      }
    }
    while (edges.size() < m) {
      const auto j = static_cast<std::size_t>(draw(rng, 0, free.size() - 1));
      add(free[j].first, free[j].second);
      free.erase(free.begin() + static_cast<std::ptrdiff_t>(j));
    }
    // Shuffle the canonical edge order (Fisher-Yates with modulo draws).
    for (std::size_t k = edges.size(); k > 1; --k) {
      std::swap(edges[k - 1], edges[static_cast<std::size_t>(draw(rng, 0, k - 1))]);
    }
    out.emplace_back(n, std::move(edges));
  }
  return out;
}

}  // namespace orient_shatter
