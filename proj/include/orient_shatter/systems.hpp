#pragma once

// Orientation systems and subgraph families of a graph, built by full
// enumeration plus predicate evaluation, and the Steiner / A-B network
// transformations.
//
// Flow specs read capacities from the graph (unit capacities if absent);
// distance specs read lengths the same way.

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "orient_shatter/boolcube.hpp"
#include "orient_shatter/graph.hpp"

namespace orient_shatter {

namespace orient {
struct Cyclic {};
struct Acyclic {};
struct KStrong {
  std::uint32_t k = 1;
};
struct Flow {
  Vertex s = 0;
  Vertex t = 0;
  std::int64_t w = 0;
};
struct Distance {
  Vertex s = 0;
  Vertex t = 0;
  std::int64_t d = 0;
};
// Every vertex of `targets` reachable from s.
struct Reach {
  Vertex s = 0;
  std::vector<Vertex> targets;
};
// Some a in A and b in B with dist(a, b) <= d.
struct ABDistance {
  std::vector<Vertex> a;
  std::vector<Vertex> b;
  std::int64_t d = 0;
};
// No (non-induced) copy of the pattern.
struct Forbid {
  Digraph pattern;
};
}  // namespace orient

using OrientationPropertySpec =
    std::variant<orient::Cyclic, orient::Acyclic, orient::KStrong, orient::Flow, orient::Distance,
                 orient::Reach, orient::ABDistance, orient::Forbid>;

namespace subgraph {
struct HasCycle {};
struct IsForest {};
struct KConnected {
  std::uint32_t k = 1;
};
struct Flow {
  Vertex s = 0;
  Vertex t = 0;
  std::int64_t w = 0;
};
struct Distance {
  Vertex s = 0;
  Vertex t = 0;
  std::int64_t d = 0;
};
struct ConnectsSet {
  std::vector<Vertex> vertices;
};
struct FreeOf {
  Graph pattern;
};
}  // namespace subgraph

using SubgraphPropertySpec =
    std::variant<subgraph::HasCycle, subgraph::IsForest, subgraph::KConnected, subgraph::Flow,
                 subgraph::Distance, subgraph::ConnectsSet, subgraph::FreeOf>;

struct EnumOptions {
  std::uint32_t max_edges = kDefaultMaxEdges;
  unsigned threads = 1;
};

// Throw InputError on out-of-range vertices, negative parameters, empty sets.
void validate(const Graph& g, const OrientationPropertySpec& spec);
void validate(const Graph& g, const SubgraphPropertySpec& spec);

std::string describe(const OrientationPropertySpec& spec);
std::string describe(const SubgraphPropertySpec& spec);

// Predicates on the fully oriented graph / on a spanning subgraph.
bool satisfies(const Graph& g, Orientation o, const OrientationPropertySpec& spec);
bool satisfies(const Graph& g, SubgraphMask mask, const SubgraphPropertySpec& spec);

// Ground set = edge labels "u-v". Threads split the table by whole words, so
// the result does not depend on the thread count.
System build_orientation_system(const Graph& g, const OrientationPropertySpec& spec,
                                const EnumOptions& opts = {});

// X in the family <=> G_X satisfies the spec.
Family subgraph_family(const Graph& g, const SubgraphPropertySpec& spec,
                       const EnumOptions& opts = {});
std::uint64_t count_subgraphs(const Graph& g, const SubgraphPropertySpec& spec,
                              const EnumOptions& opts = {});

// Network built from g by appending vertices/edges after the originals.
struct TransformedNetwork {
  Graph graph;
  Vertex s = 0;
  Vertex t = 0;
  std::int64_t target = 0;           // flow target (Steiner) or unused
  std::uint32_t original_edges = 0;  // edges [0, original_edges) come from g
};

// Original capacities become the sentinel |W| + 1 (the sum of the finite
// capacities plus one), a new vertex t = n gets unit edges w->t for w in W,
// and the flow target is |W|.
TransformedNetwork steiner_transform(const Graph& g, Vertex s, const std::vector<Vertex>& targets);

// New vertices s = n and t = n + 1 with zero-length edges s->a and b->t.
TransformedNetwork ab_distance_transform(const Graph& g, const std::vector<std::int64_t>& lens,
                                         const std::vector<Vertex>& a,
                                         const std::vector<Vertex>& b);

// Original edges free, appended edges fixed to their canonical direction.
Cube fixed_direction_cube(const TransformedNetwork& net);

}  // namespace orient_shatter
