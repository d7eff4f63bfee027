#pragma once

// Simple undirected graphs with a canonical orientation (the stored edge
// order and direction), digraph views for an orientation + edge subset, and
// the exact small-graph algorithms the orientation systems are built from.

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "orient_shatter/boolcube.hpp"

namespace orient_shatter {

using Vertex = std::uint32_t;

inline constexpr std::uint32_t kMaxVertices = 64;
inline constexpr std::uint32_t kDefaultMaxEdges = 16;
inline constexpr std::uint32_t kDefaultMaxPatternVertices = 5;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  bool operator==(const Edge&) const = default;
};

class Graph {
 public:
  Graph() = default;
  // Throws InputError on loops, parallel edges, or out-of-range endpoints.
  Graph(std::uint32_t n, std::vector<Edge> edges);

  std::uint32_t vertex_count() const noexcept { return n_; }
  std::uint32_t edge_count() const noexcept { return static_cast<std::uint32_t>(edges_.size()); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(std::uint32_t i) const { return edges_.at(i); }
  std::uint64_t full_mask() const noexcept {
    return edges_.empty() ? 0 : (std::uint64_t{1} << edges_.size()) - 1;
  }

  // Per-edge capacities / lengths; nonnegative, one per edge.
  const std::optional<std::vector<std::int64_t>>& capacities() const noexcept { return caps_; }
  const std::optional<std::vector<std::int64_t>>& lengths() const noexcept { return lens_; }
  void set_capacities(std::vector<std::int64_t> caps);
  void set_lengths(std::vector<std::int64_t> lens);

  // "u-v" for each edge, in edge order.
  std::vector<std::string> edge_labels() const;
  GroundSet ground_set(std::uint32_t max_dim = kDefaultMaxDim) const;

  bool operator==(const Graph&) const = default;

 private:
  std::uint32_t n_ = 1;
  std::vector<Edge> edges_;
  std::optional<std::vector<std::int64_t>> caps_;
  std::optional<std::vector<std::int64_t>> lens_;
};

// Bit e = 0: edge e points from edges[e].u to edges[e].v; 1: reversed.
struct Orientation {
  std::uint64_t bits = 0;
  bool operator==(const Orientation&) const = default;
};

// Bit e = 1: edge e is present in the spanning subgraph.
struct SubgraphMask {
  std::uint64_t bits = 0;
  static SubgraphMask full(const Graph& g) { return SubgraphMask{g.full_mask()}; }
  bool contains(std::uint32_t e) const noexcept { return ((bits >> e) & 1u) != 0; }
  bool operator==(const SubgraphMask&) const = default;
};

struct Arc {
  Vertex from = 0;
  Vertex to = 0;
  std::uint32_t edge = 0;  // originating edge index (or pattern arc index)
};

class Digraph {
 public:
  Digraph() = default;
  Digraph(std::uint32_t n, std::vector<Arc> arcs);

  std::uint32_t vertex_count() const noexcept { return n_; }
  std::span<const Arc> arcs() const noexcept { return arcs_; }
  bool has_arc(Vertex u, Vertex v) const noexcept { return ((out_[u] >> v) & 1u) != 0; }
  std::uint64_t out_neighbors(Vertex u) const noexcept { return out_[u]; }

 private:
  std::uint32_t n_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::uint64_t> out_;
};

// Pattern digraphs for forbidden-copy checks. Must be an oriented graph:
// no loops, no repeated or antiparallel arcs.
Digraph make_pattern(std::uint32_t n, const std::vector<std::pair<Vertex, Vertex>>& arcs);
Graph underlying_graph(const Digraph& pattern);

Digraph digraph_of(const Graph& g, Orientation o, SubgraphMask mask);

bool has_directed_cycle(const Digraph& dg);

struct GraphStats {
  std::uint32_t components = 1;
  std::optional<std::uint32_t> girth;  // nullopt for a forest
  std::uint64_t bridges = 0;           // edge mask
};

GraphStats graph_stats(const Graph& g, SubgraphMask mask);

std::uint32_t component_count(const Graph& g, SubgraphMask mask);
bool has_cycle(const Graph& g, SubgraphMask mask);
// All listed vertices lie in one component of the masked subgraph.
bool vertices_connected(const Graph& g, SubgraphMask mask, std::span<const Vertex> vertices);

// nullopt direction = undirected (each edge usable either way).
using Direction = std::optional<Orientation>;

// Exact integral max-flow value, capped at `limit` (the search stops once the
// flow reaches it).
std::int64_t max_flow(const Graph& g, SubgraphMask mask, Direction direction,
                      std::span<const std::int64_t> caps, Vertex s, Vertex t,
                      std::int64_t limit = std::numeric_limits<std::int64_t>::max());

// Shortest s-t path length, nullopt if t is unreachable.
std::optional<std::int64_t> shortest_dist(const Graph& g, SubgraphMask mask, Direction direction,
                                          std::span<const std::int64_t> lens, Vertex s, Vertex t);

struct PotentialResult {
  std::optional<std::int64_t> difference;  // nullopt: unbounded
  std::vector<std::int64_t> potential;     // a feasible potential attaining it
};

// Max pi(t) - pi(s) over potentials pi >= 0 with pi(v) - pi(u) <= len(u->v)
// for every arc. `lens` is indexed by Arc::edge.
PotentialResult max_potential_difference(const Digraph& dg, std::span<const std::int64_t> lens,
                                         Vertex s, Vertex t);

bool is_k_strong(const Digraph& dg, std::uint32_t k);
bool is_k_edge_connected(const Graph& g, SubgraphMask mask, std::uint32_t k);

// Non-induced copy: an injective vertex map sending every pattern arc to an arc.
bool contains_copy(const Digraph& host, const Digraph& pattern,
                   std::uint32_t max_pattern_vertices = kDefaultMaxPatternVertices);
bool contains_copy(const Graph& host, SubgraphMask mask, const Graph& pattern,
                   std::uint32_t max_pattern_vertices = kDefaultMaxPatternVertices);

namespace objective {
struct MinKConnected {
  std::uint32_t k = 1;
};
struct MinFlow {
  std::vector<std::int64_t> caps;
  Vertex s = 0;
  Vertex t = 0;
  std::int64_t w = 0;
};
struct MinDistance {
  std::vector<std::int64_t> lens;
  Vertex s = 0;
  Vertex t = 0;
  std::int64_t d = 0;
};
struct MinConnecting {
  std::vector<Vertex> vertices;
};
struct MaxFree {
  Graph pattern;
};
}  // namespace objective

using SubgraphObjective = std::variant<objective::MinKConnected, objective::MinFlow,
                                       objective::MinDistance, objective::MinConnecting,
                                       objective::MaxFree>;

inline constexpr std::int64_t kInfeasibleMin = std::numeric_limits<std::int64_t>::max();
inline constexpr std::int64_t kInfeasibleMax = -1;

// Exact optimum edge count by exhaustive scan over edge subsets. Min
// objectives return kInfeasibleMin, max objectives kInfeasibleMax, when no
// subgraph qualifies.
std::int64_t optimize_subgraph(const Graph& g, const SubgraphObjective& obj,
                               std::uint32_t max_edges = kDefaultMaxEdges);

}  // namespace orient_shatter
