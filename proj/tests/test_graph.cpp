#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "orient_shatter/errors.hpp"
#include "orient_shatter/graph.hpp"
#include "orient_shatter/verify.hpp"

using namespace orient_shatter;

namespace {

Graph triangle() { return Graph(3, {{0, 1}, {1, 2}, {2, 0}}); }

std::vector<std::int64_t> random_weights(std::mt19937_64& rng, std::uint32_t m, std::int64_t lo,
                                         std::int64_t hi) {
  std::vector<std::int64_t> w(m);
  for (auto& x : w) x = lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  return w;
}

// Small random graphs (possibly disconnected) for oracle sweeps.
std::vector<Graph> sweep_graphs() {
  std::vector<Graph> out = all_graphs_up_to(5);
  for (const Graph& g : random_connected_graphs(99, 30, 3, 9)) {
    if (g.vertex_count() <= 6) out.push_back(g);
  }
  return out;
}

}  // namespace

TEST_CASE("graph validation") {
  CHECK_THROWS_AS(Graph(3, {{0, 0}}), InputError);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), InputError);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), InputError);
  CHECK_THROWS_AS(Graph(0, {}), InputError);
  Graph g = triangle();
  CHECK_THROWS_AS(g.set_capacities({1, 2}), InputError);
  CHECK_THROWS_AS(g.set_lengths({1, -1, 2}), InputError);
  CHECK(g.edge_labels() == std::vector<std::string>{"0-1", "1-2", "2-0"});
  CHECK_THROWS_AS(make_pattern(2, {{0, 1}, {1, 0}}), InputError);
  CHECK_THROWS_AS(make_pattern(2, {{0, 1}, {0, 1}}), InputError);
}

TEST_CASE("digraph views") {
  const Graph g = triangle();
  const Digraph d = digraph_of(g, Orientation{0}, SubgraphMask::full(g));
  CHECK(d.has_arc(0, 1));
  CHECK(d.has_arc(1, 2));
  CHECK(d.has_arc(2, 0));
  CHECK(has_directed_cycle(d));
  CHECK(digraph_of(g, Orientation{0}, SubgraphMask{0}).arcs().empty());
  const Digraph r = digraph_of(g, Orientation{0b001}, SubgraphMask::full(g));
  CHECK(r.has_arc(1, 0));
  CHECK_FALSE(r.has_arc(0, 1));

  int cyc = 0;
  for (std::uint64_t o = 0; o < 8; ++o) cyc += has_directed_cycle(digraph_of(g, Orientation{o}, SubgraphMask::full(g)));
  CHECK(cyc == 2);

  const Graph tree = path_graph(5);
  for (std::uint64_t o = 0; o < 16; ++o) {
    CHECK_FALSE(has_directed_cycle(digraph_of(tree, Orientation{o}, SubgraphMask::full(tree))));
  }
}

TEST_CASE("directed cycle detection matches the oracle") {
  for (const Graph& g : sweep_graphs()) {
    if (g.edge_count() > 9) continue;
    for (std::uint64_t o = 0; o <= g.full_mask(); ++o) {
      CHECK(has_directed_cycle(digraph_of(g, Orientation{o}, SubgraphMask::full(g))) ==
            oracle::cyclic(g.vertex_count(), oracle::arcs(g, o, g.full_mask())));
    }
  }
}

TEST_CASE("graph stats") {
  const Graph k3 = triangle();
  const GraphStats a = graph_stats(k3, SubgraphMask::full(k3));
  CHECK(a.components == 1);
  CHECK(a.girth == 3u);
  CHECK(a.bridges == 0);
  const Graph p3 = path_graph(3);
  const GraphStats b = graph_stats(p3, SubgraphMask::full(p3));
  CHECK(b.components == 1);
  CHECK_FALSE(b.girth.has_value());
  CHECK(b.bridges == p3.full_mask());
  const Graph k4 = complete_graph(4);
  CHECK(graph_stats(k4, SubgraphMask::full(k4)).girth == 3u);
  CHECK(graph_stats(cycle_graph(5), SubgraphMask::full(cycle_graph(5))).girth == 5u);

  for (const Graph& g : sweep_graphs()) {
    if (g.edge_count() > 8) continue;
    for (std::uint64_t mask = 0; mask <= g.full_mask(); ++mask) {
      const GraphStats st = graph_stats(g, SubgraphMask{mask});
      const std::uint32_t c = oracle::components(g, mask);
      CHECK(st.components == c);
      CHECK(component_count(g, SubgraphMask{mask}) == c);
      CHECK(has_cycle(g, SubgraphMask{mask}) == !oracle::is_forest(g, mask));
      CHECK(st.girth.has_value() == !oracle::is_forest(g, mask));
      for (std::uint32_t e = 0; e < g.edge_count(); ++e) {
        if (!((mask >> e) & 1u)) continue;
        const bool bridge = oracle::components(g, mask & ~(std::uint64_t{1} << e)) > c;
        CHECK((((st.bridges >> e) & 1u) != 0) == bridge);
      }
    }
  }
}

TEST_CASE("max flow examples") {
  const Graph p = path_graph(3);
  const std::vector<std::int64_t> unit{1, 1};
  CHECK(max_flow(p, SubgraphMask::full(p), Orientation{0}, unit, 0, 2) == 1);
  CHECK(max_flow(p, SubgraphMask::full(p), Orientation{0b01}, unit, 0, 2) == 0);
  const Graph k4 = complete_graph(4);
  const std::vector<std::int64_t> u6(6, 1);
  for (Vertex s = 0; s < 4; ++s)
    for (Vertex t = 0; t < 4; ++t)
      if (s != t) CHECK(max_flow(k4, SubgraphMask::full(k4), std::nullopt, u6, s, t) == 3);
  CHECK(max_flow(k4, SubgraphMask::full(k4), std::nullopt, u6, 0, 1, 2) == 2);
}

TEST_CASE("max flow equals the brute-force min cut") {
  std::mt19937_64 rng(12);
  for (const Graph& g : sweep_graphs()) {
    if (g.vertex_count() < 2) continue;
    const auto caps = random_weights(rng, g.edge_count(), 0, 5);
    for (int trial = 0; trial < 6; ++trial) {
      const Vertex s = static_cast<Vertex>(rng() % g.vertex_count());
      Vertex t = static_cast<Vertex>(rng() % g.vertex_count());
      if (t == s) t = (s + 1) % g.vertex_count();
      const std::uint64_t o = rng() & g.full_mask();
      const std::uint64_t mask = rng() & g.full_mask();
      CHECK(max_flow(g, SubgraphMask{mask}, Orientation{o}, caps, s, t) ==
            oracle::min_cut(g.vertex_count(), oracle::arcs(g, o, mask), caps, s, t));
      CHECK(max_flow(g, SubgraphMask{mask}, std::nullopt, caps, s, t) ==
            oracle::min_cut(g.vertex_count(), oracle::undirected_arcs(g, mask), caps, s, t));
    }
  }
}

TEST_CASE("shortest distances") {
  const Graph p = path_graph(3);
  const std::vector<std::int64_t> ones{1, 1};
  CHECK(shortest_dist(p, SubgraphMask::full(p), Orientation{0}, ones, 0, 2) == 2);
  CHECK_FALSE(shortest_dist(p, SubgraphMask::full(p), Orientation{0b01}, ones, 0, 2).has_value());
  // Triangle with the long edge between 0 and 2.
  const Graph t(3, {{0, 1}, {1, 2}, {0, 2}});
  const std::vector<std::int64_t> lens{1, 1, 5};
  CHECK(shortest_dist(t, SubgraphMask::full(t), std::nullopt, lens, 0, 2) == 2);

  std::mt19937_64 rng(13);
  for (const Graph& g : sweep_graphs()) {
    const auto l = random_weights(rng, g.edge_count(), 0, 6);
    for (int trial = 0; trial < 5; ++trial) {
      const Vertex s = static_cast<Vertex>(rng() % g.vertex_count());
      const Vertex u = static_cast<Vertex>(rng() % g.vertex_count());
      const std::uint64_t o = rng() & g.full_mask();
      const std::uint64_t mask = rng() & g.full_mask();
      const auto d1 = oracle::distances(g.vertex_count(), oracle::arcs(g, o, mask), l)[s][u];
      const auto got1 = shortest_dist(g, SubgraphMask{mask}, Orientation{o}, l, s, u);
      CHECK(got1.value_or(oracle::kInf) == d1);
      const auto d2 = oracle::distances(g.vertex_count(), oracle::undirected_arcs(g, mask), l)[s][u];
      CHECK(shortest_dist(g, SubgraphMask{mask}, std::nullopt, l, s, u).value_or(oracle::kInf) == d2);
    }
  }
}

TEST_CASE("potential difference is the shortest distance") {
  const Graph p = path_graph(3);
  const Digraph d = digraph_of(p, Orientation{0}, SubgraphMask::full(p));
  const std::vector<std::int64_t> ones{1, 1};
  const PotentialResult r = max_potential_difference(d, ones, 0, 2);
  CHECK(r.difference == 2);
  CHECK_FALSE(max_potential_difference(digraph_of(p, Orientation{0b01}, SubgraphMask::full(p)), ones, 0, 2)
                  .difference.has_value());
  const std::vector<std::int64_t> zeros{0, 0};
  CHECK(max_potential_difference(d, zeros, 0, 2).difference == 0);

  std::mt19937_64 rng(14);
  for (const Graph& g : sweep_graphs()) {
    const auto l = random_weights(rng, g.edge_count(), 0, 6);
    const std::uint64_t o = rng() & g.full_mask();
    const Digraph dg = digraph_of(g, Orientation{o}, SubgraphMask::full(g));
    const auto dist = oracle::distances(g.vertex_count(), oracle::arcs(g, o, g.full_mask()), l);
    const Vertex s = static_cast<Vertex>(rng() % g.vertex_count());
    const Vertex t = static_cast<Vertex>(rng() % g.vertex_count());
    const PotentialResult pr = max_potential_difference(dg, l, s, t);
    CHECK(pr.difference.value_or(oracle::kInf) == dist[s][t]);
    if (pr.difference) {
      REQUIRE(pr.potential.size() == g.vertex_count());
      for (auto x : pr.potential) CHECK(x >= 0);
      for (const Arc& a : dg.arcs()) CHECK(pr.potential[a.to] - pr.potential[a.from] <= l[a.edge]);
      CHECK(pr.potential[t] - pr.potential[s] == *pr.difference);
    }
  }
}

TEST_CASE("k-strong and k-edge-connected") {
  const Graph k3 = triangle();
  const Digraph c3 = digraph_of(k3, Orientation{0}, SubgraphMask::full(k3));
  CHECK(is_k_strong(c3, 1));
  CHECK_FALSE(is_k_strong(c3, 2));
  const Graph k4 = complete_graph(4);
  CHECK(is_k_edge_connected(k4, SubgraphMask::full(k4), 3));
  CHECK_FALSE(is_k_edge_connected(k4, SubgraphMask::full(k4), 4));
  const Graph p = path_graph(3);
  CHECK_FALSE(is_k_strong(digraph_of(p, Orientation{0}, SubgraphMask::full(p)), 1));

  for (const Graph& g : sweep_graphs()) {
    if (g.edge_count() > 8) continue;
    for (std::uint64_t o = 0; o <= g.full_mask(); ++o) {
      const auto as = oracle::arcs(g, o, g.full_mask());
      for (std::uint32_t k = 1; k <= 2; ++k) {
        CHECK(is_k_strong(digraph_of(g, Orientation{o}, SubgraphMask::full(g)), k) ==
              oracle::k_strong(g.vertex_count(), as, k));
      }
    }
    for (std::uint64_t mask = 0; mask <= g.full_mask(); mask += 3) {
      for (std::uint32_t k = 1; k <= 3; ++k) {
        CHECK(is_k_edge_connected(g, SubgraphMask{mask}, k) == oracle::k_edge_connected(g, mask, k));
      }
    }
  }
}

TEST_CASE("subgraph copies") {
  const Digraph c3 = make_pattern(3, {{0, 1}, {1, 2}, {2, 0}});
  const Digraph t3 = make_pattern(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK_FALSE(contains_copy(t3, c3));
  CHECK(contains_copy(c3, c3));
  CHECK(contains_copy(t3, t3));
  const Graph k4 = complete_graph(4);
  CHECK(contains_copy(k4, SubgraphMask::full(k4), triangle()));
  CHECK_FALSE(contains_copy(cycle_graph(4), SubgraphMask::full(cycle_graph(4)), triangle()));
  CHECK_THROWS_AS(contains_copy(k4, SubgraphMask::full(k4), complete_graph(6)), CapExceeded);

  const Digraph p2 = make_pattern(3, {{0, 1}, {1, 2}});
  const Digraph out2 = make_pattern(3, {{0, 1}, {0, 2}});
  for (const Graph& g : sweep_graphs()) {
    if (g.edge_count() > 7) continue;
    for (std::uint64_t o = 0; o <= g.full_mask(); ++o) {
      const Digraph host = digraph_of(g, Orientation{o}, SubgraphMask::full(g));
      const auto as = oracle::arcs(g, o, g.full_mask());
      CHECK(contains_copy(host, c3) == oracle::contains_copy(g.vertex_count(), as, 3, {{0, 1}, {1, 2}, {2, 0}}));
      CHECK(contains_copy(host, p2) == oracle::contains_copy(g.vertex_count(), as, 3, {{0, 1}, {1, 2}}));
      CHECK(contains_copy(host, out2) == oracle::contains_copy(g.vertex_count(), as, 3, {{0, 1}, {0, 2}}));
    }
  }
}

TEST_CASE("subgraph optimizer examples") {
  const Graph k3 = triangle();
  CHECK(optimize_subgraph(k3, objective::MinKConnected{1}) == 2);
  // Unit capacities, s = 0 and t = 1 adjacent: flow 2 needs all three edges.
  CHECK(optimize_subgraph(k3, objective::MinFlow{{1, 1, 1}, 0, 1, 2}) == 3);
  CHECK(optimize_subgraph(k3, objective::MinFlow{{1, 1, 1}, 0, 1, 3}) == kInfeasibleMin);
  const Graph k4 = complete_graph(4);
  CHECK(optimize_subgraph(k4, objective::MaxFree{triangle()}) == 4);
  CHECK(optimize_subgraph(k4, objective::MinKConnected{2}) == 4);
  CHECK(optimize_subgraph(k4, objective::MinKConnected{4}) == kInfeasibleMin);
  CHECK(optimize_subgraph(k4, objective::MaxFree{Graph(1, {})}) == kInfeasibleMax);
  CHECK(optimize_subgraph(star_graph(3), objective::MinConnecting{{1, 2, 3}}) == 3);
  CHECK(optimize_subgraph(path_graph(4), objective::MinDistance{{2, 2, 2}, 0, 3, 6}) == 3);
  CHECK(optimize_subgraph(path_graph(4), objective::MinDistance{{2, 2, 2}, 0, 3, 5}) == kInfeasibleMin);
  CHECK_THROWS_AS(optimize_subgraph(complete_graph(7), objective::MinKConnected{1}, 16), CapExceeded);
}

TEST_CASE("corpus generators") {
  // Non-isomorphic simple graphs on 1..4 vertices: 1 + 2 + 4 + 11.
  CHECK(all_graphs_up_to(4).size() == 18);
  // On exactly 5 vertices there are 34.
  CHECK(all_graphs_up_to(5).size() == 18 + 34);
  CHECK_THROWS_AS(all_graphs_up_to(7), CapExceeded);
  const auto a = random_connected_graphs(5, 20, 4, 12);
  const auto b = random_connected_graphs(5, 20, 4, 12);
  CHECK(a == b);
  for (const Graph& g : a) {
    CHECK(g.edge_count() >= 4);
    CHECK(g.edge_count() <= 12);
    CHECK(oracle::components(g, g.full_mask()) == 1);
  }
  CHECK(random_connected_graphs(6, 20, 4, 12) != a);
}
