#include "orient_shatter/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

#include "orient_shatter/errors.hpp"

namespace orient_shatter {

namespace {

void check_weights(const std::vector<std::int64_t>& w, std::size_t m, const char* what) {
  if (w.size() != m) {
    throw InputError(std::string(what) + ": expected " + std::to_string(m) + " values, got " +
                     std::to_string(w.size()));
  }
  for (auto x : w) {
    if (x < 0) throw InputError(std::string(what) + " must be nonnegative");
  }
}

void check_vertex(const Graph& g, Vertex v) {
  if (v >= g.vertex_count()) throw InputError("vertex " + std::to_string(v) + " out of range");
}

void check_edge_mask(const Graph& g, SubgraphMask mask) {
  if ((mask.bits & ~g.full_mask()) != 0) throw InputError("subgraph mask has bits beyond m");
}

struct UnionFind {
  explicit UnionFind(std::uint32_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
  std::vector<std::uint32_t> parent;
};

// Dinic on a tiny network. Arc i and i^1 are residual partners.
class FlowNetwork {
 public:
  explicit FlowNetwork(std::uint32_t n) : head_(n, -1), level_(n), iter_(n) {}

  // Directed arc u->v with capacity c; `back` is the partner's capacity
  // (0 for a plain arc, c for an undirected edge).
  void add(Vertex u, Vertex v, std::int64_t c, std::int64_t back) {
    arcs_.push_back({v, c, head_[u]});
    head_[u] = static_cast<int>(arcs_.size()) - 1;
    arcs_.push_back({u, back, head_[v]});
    head_[v] = static_cast<int>(arcs_.size()) - 1;
  }

  std::int64_t run(Vertex s, Vertex t, std::int64_t limit) {
    std::int64_t flow = 0;
    while (flow < limit && bfs(s, t)) {
      iter_ = head_;
      while (flow < limit) {
        const std::int64_t pushed = dfs(s, t, limit - flow);
        if (pushed == 0) break;
        flow += pushed;
      }
    }
    return flow;
  }

 private:
  struct ResArc {
    Vertex to;
    std::int64_t cap;
    int next;
  };

  bool bfs(Vertex s, Vertex t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<Vertex> q;
    level_[s] = 0;
    q.push(s);
    while (!q.empty()) {
      const Vertex u = q.front();
      q.pop();
      for (int a = head_[u]; a != -1; a = arcs_[a].next) {
        if (arcs_[a].cap > 0 && level_[arcs_[a].to] < 0) {
          level_[arcs_[a].to] = level_[u] + 1;
          q.push(arcs_[a].to);
        }
      }
    }
    return level_[t] >= 0;
  }

  std::int64_t dfs(Vertex u, Vertex t, std::int64_t want) {
    if (u == t) return want;
    for (int& a = iter_[u]; a != -1; a = arcs_[a].next) {
      ResArc& arc = arcs_[a];
      if (arc.cap <= 0 || level_[arc.to] != level_[u] + 1) continue;
      const std::int64_t got = dfs(arc.to, t, std::min(want, arc.cap));
      if (got > 0) {
        arc.cap -= got;
        arcs_[a ^ 1].cap += got;
        return got;
      }
    }
    return 0;
  }

  std::vector<int> head_;
  std::vector<ResArc> arcs_;
  std::vector<int> level_;
  std::vector<int> iter_;
};

// Directed arcs of edge e under `direction`; both directions when undirected.
template <typename Fn>
void for_each_usable_arc(const Graph& g, SubgraphMask mask, Direction direction, Fn&& fn) {
  for (std::uint32_t e = 0; e < g.edge_count(); ++e) {
    if (!mask.contains(e)) continue;
    const Edge& ed = g.edge(e);
    if (!direction) {
      fn(ed.u, ed.v, e);
      fn(ed.v, ed.u, e);
    } else if (((direction->bits >> e) & 1u) == 0) {
      fn(ed.u, ed.v, e);
    } else {
      fn(ed.v, ed.u, e);
    }
  }
}

bool embed(const std::vector<std::uint64_t>& host_out, std::uint32_t host_n,
           const std::vector<std::uint64_t>& pat_out, std::uint32_t pat_n,
           std::vector<Vertex>& image, std::uint64_t used, std::uint32_t next) {
  if (next == pat_n) return true;
  for (Vertex h = 0; h < host_n; ++h) {
    if ((used >> h) & 1u) continue;
    bool ok = true;
    for (std::uint32_t q = 0; q < next && ok; ++q) {
      if (((pat_out[next] >> q) & 1u) && !((host_out[h] >> image[q]) & 1u)) ok = false;
      if (((pat_out[q] >> next) & 1u) && !((host_out[image[q]] >> h) & 1u)) ok = false;
    }
    if (!ok) continue;
    image[next] = h;
    if (embed(host_out, host_n, pat_out, pat_n, image, used | (std::uint64_t{1} << h), next + 1)) {
      return true;
    }
  }
  return false;
}

bool embeds(const std::vector<std::uint64_t>& host_out, std::uint32_t host_n,
            const std::vector<std::uint64_t>& pat_out, std::uint32_t pat_n,
            std::uint32_t max_pattern_vertices) {
  if (pat_n > max_pattern_vertices) {
    throw CapExceeded("pattern vertices", pat_n, max_pattern_vertices);
  }
  if (pat_n > host_n) return false;
  std::vector<Vertex> image(pat_n);
  return embed(host_out, host_n, pat_out, pat_n, image, 0, 0);
}

}  // namespace

Graph::Graph(std::uint32_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n_ == 0) throw InputError("graph needs at least one vertex");
  if (n_ > kMaxVertices) throw CapExceeded("vertices", n_, kMaxVertices);
  if (edges_.size() > 64) throw CapExceeded("edges", edges_.size(), 64);
  std::set<std::pair<Vertex, Vertex>> seen;
  for (const Edge& e : edges_) {
    if (e.u >= n_ || e.v >= n_) {
      throw InputError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                       ") has an endpoint out of range");
    }
    if (e.u == e.v) throw InputError("loop at vertex " + std::to_string(e.u));
    if (!seen.insert(std::minmax(e.u, e.v)).second) {
      throw InputError("parallel edge between " + std::to_string(e.u) + " and " +
                       std::to_string(e.v));
    }
  }
}

void Graph::set_capacities(std::vector<std::int64_t> caps) {
  check_weights(caps, edges_.size(), "capacities");
  caps_ = std::move(caps);
}

void Graph::set_lengths(std::vector<std::int64_t> lens) {
  check_weights(lens, edges_.size(), "lengths");
  lens_ = std::move(lens);
}

std::vector<std::string> Graph::edge_labels() const {
  std::vector<std::string> out;
  out.reserve(edges_.size());
  for (const Edge& e : edges_) out.push_back(std::to_string(e.u) + "-" + std::to_string(e.v));
  return out;
}

GroundSet Graph::ground_set(std::uint32_t max_dim) const {
  if (edges_.size() > max_dim) throw CapExceeded("edges", edges_.size(), max_dim);
  return GroundSet(edge_labels(), max_dim);
}

Digraph::Digraph(std::uint32_t n, std::vector<Arc> arcs)
    : n_(n), arcs_(std::move(arcs)), out_(n, 0) {
  if (n_ > kMaxVertices) throw CapExceeded("vertices", n_, kMaxVertices);
  for (const Arc& a : arcs_) {
    if (a.from >= n_ || a.to >= n_) throw InputError("arc endpoint out of range");
    out_[a.from] |= std::uint64_t{1} << a.to;
  }
}

Digraph make_pattern(std::uint32_t n, const std::vector<std::pair<Vertex, Vertex>>& arcs) {
  std::vector<Arc> out;
  std::set<std::pair<Vertex, Vertex>> seen;
  for (std::uint32_t i = 0; i < arcs.size(); ++i) {
    const auto [u, v] = arcs[i];
    if (u >= n || v >= n) throw InputError("pattern arc endpoint out of range");
    if (u == v) throw InputError("pattern has a loop");
    if (!seen.insert(std::minmax(u, v)).second) {
      throw InputError("pattern must be an oriented graph (repeated or antiparallel arc)");
    }
    out.push_back(Arc{u, v, i});
  }
  return Digraph(n, std::move(out));
}

Graph underlying_graph(const Digraph& pattern) {
  std::vector<Edge> edges;
  for (const Arc& a : pattern.arcs()) edges.push_back(Edge{a.from, a.to});
  return Graph(std::max<std::uint32_t>(pattern.vertex_count(), 1), std::move(edges));
}

Digraph digraph_of(const Graph& g, Orientation o, SubgraphMask mask) {
  std::vector<Arc> arcs;
  for_each_usable_arc(g, mask, o, [&](Vertex u, Vertex v, std::uint32_t e) {
    arcs.push_back(Arc{u, v, e});
  });
  return Digraph(g.vertex_count(), std::move(arcs));
}

bool has_directed_cycle(const Digraph& dg) {
  // Kahn: a cycle exists iff some vertex never reaches in-degree zero.
  std::vector<std::uint32_t> indeg(dg.vertex_count(), 0);
  for (const Arc& a : dg.arcs()) ++indeg[a.to];
  std::vector<Vertex> stack;
  for (Vertex v = 0; v < dg.vertex_count(); ++v) {
    if (indeg[v] == 0) stack.push_back(v);
  }
  std::uint32_t removed = 0;
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    ++removed;
    for (const Arc& a : dg.arcs()) {
      if (a.from == u && --indeg[a.to] == 0) stack.push_back(a.to);
    }
  }
  return removed != dg.vertex_count();
}

std::uint32_t component_count(const Graph& g, SubgraphMask mask) {
  UnionFind uf(g.vertex_count());
  std::uint32_t k = g.vertex_count();
  for (std::uint32_t e = 0; e < g.edge_count(); ++e) {
    if (mask.contains(e) && uf.unite(g.edge(e).u, g.edge(e).v)) --k;
  }
  return k;
}

bool has_cycle(const Graph& g, SubgraphMask mask) {
  UnionFind uf(g.vertex_count());
  for (std::uint32_t e = 0; e < g.edge_count(); ++e) {
    if (mask.contains(e) && !uf.unite(g.edge(e).u, g.edge(e).v)) return true;
  }
  return false;
}

bool vertices_connected(const Graph& g, SubgraphMask mask, std::span<const Vertex> vertices) {
  UnionFind uf(g.vertex_count());
  for (std::uint32_t e = 0; e < g.edge_count(); ++e) {
    if (mask.contains(e)) uf.unite(g.edge(e).u, g.edge(e).v);
  }
  for (Vertex v : vertices) check_vertex(g, v);
  for (std::size_t i = 1; i < vertices.size(); ++i) {
    if (uf.find(vertices[i]) != uf.find(vertices[0])) return false;
  }
  return true;
}

GraphStats graph_stats(const Graph& g, SubgraphMask mask) {
  check_edge_mask(g, mask);
  GraphStats st;
  st.components = component_count(g, mask);
  const std::uint32_t n = g.vertex_count();
  for (std::uint32_t e = 0; e < g.edge_count(); ++e) {
    if (!mask.contains(e)) continue;
    const SubgraphMask without{mask.bits & ~(std::uint64_t{1} << e)};
    const Edge& ed = g.edge(e);
    // BFS from u to v avoiding e: the shortest cycle through e has length d + 1.
    std::vector<std::int32_t> dist(n, -1);
    std::queue<Vertex> q;
    dist[ed.u] = 0;
    q.push(ed.u);
    while (!q.empty() && dist[ed.v] < 0) {
      const Vertex x = q.front();
      q.pop();
      for (std::uint32_t f = 0; f < g.edge_count(); ++f) {
        if (!without.contains(f)) continue;
        const Edge& fe = g.edge(f);
        const Vertex y = fe.u == x ? fe.v : (fe.v == x ? fe.u : n);
        if (y < n && dist[y] < 0) {
          dist[y] = dist[x] + 1;
          q.push(y);
        }
      }
    }
    if (dist[ed.v] < 0) {
      st.bridges |= std::uint64_t{1} << e;
    } else {
      const auto len = static_cast<std::uint32_t>(dist[ed.v] + 1);
      if (!st.girth || len < *st.girth) st.girth = len;
    }
  }
  return st;
}

std::int64_t max_flow(const Graph& g, SubgraphMask mask, Direction direction,
                      std::span<const std::int64_t> caps, Vertex s, Vertex t, std::int64_t limit) {
  check_vertex(g, s);
  check_vertex(g, t);
  check_edge_mask(g, mask);
  if (caps.size() != g.edge_count()) throw InputError("capacity count differs from edge count");
  if (s == t) throw InputError("max_flow needs s != t");
  FlowNetwork net(g.vertex_count());
  for (std::uint32_t e = 0; e < g.edge_count(); ++e) {
    if (!mask.contains(e)) continue;
    const Edge& ed = g.edge(e);
    if (caps[e] < 0) throw InputError("capacities must be nonnegative");
    if (!direction) {
      net.add(ed.u, ed.v, caps[e], caps[e]);
    } else if (((direction->bits >> e) & 1u) == 0) {
      net.add(ed.u, ed.v, caps[e], 0);
    } else {
      net.add(ed.v, ed.u, caps[e], 0);
    }
  }
  return net.run(s, t, limit);
}

namespace {

// Dijkstra over explicit arcs; returns distance from s to every vertex.
std::vector<std::optional<std::int64_t>> distances_from(std::uint32_t n, const std::vector<Arc>& arcs,
                                                        std::span<const std::int64_t> lens,
                                                        Vertex s) {
  std::vector<std::optional<std::int64_t>> dist(n);
  std::vector<bool> done(n, false);
  dist[s] = 0;
  for (std::uint32_t round = 0; round < n; ++round) {
    std::optional<Vertex> best;
    for (Vertex v = 0; v < n; ++v) {
      if (!done[v] && dist[v] && (!best || *dist[v] < *dist[*best])) best = v;
    }
    if (!best) break;
    done[*best] = true;
    for (const Arc& a : arcs) {
      if (a.from != *best) continue;
      const std::int64_t cand = *dist[*best] + lens[a.edge];
      if (!dist[a.to] || cand < *dist[a.to]) dist[a.to] = cand;
    }
  }
  return dist;
}

}  // namespace

std::optional<std::int64_t> shortest_dist(const Graph& g, SubgraphMask mask, Direction direction,
                                          std::span<const std::int64_t> lens, Vertex s, Vertex t) {
  check_vertex(g, s);
  check_vertex(g, t);
  check_edge_mask(g, mask);
  if (lens.size() != g.edge_count()) throw InputError("length count differs from edge count");
  for (auto l : lens) {
    if (l < 0) throw InputError("lengths must be nonnegative");
  }
  std::vector<Arc> arcs;
  for_each_usable_arc(g, mask, direction,
                      [&](Vertex u, Vertex v, std::uint32_t e) { arcs.push_back(Arc{u, v, e}); });
  return distances_from(g.vertex_count(), arcs, lens, s)[t];
}

PotentialResult max_potential_difference(const Digraph& dg, std::span<const std::int64_t> lens,
                                         Vertex s, Vertex t) {
  const std::uint32_t n = dg.vertex_count();
  if (s >= n || t >= n) throw InputError("vertex out of range");
  std::vector<Arc> arcs(dg.arcs().begin(), dg.arcs().end());
  for (const Arc& a : arcs) {
    if (a.edge >= lens.size()) throw InputError("arc has no length");
    if (lens[a.edge] < 0) throw InputError("lengths must be nonnegative");
  }
  const auto dist = distances_from(n, arcs, lens, s);
  PotentialResult out;
  out.potential.resize(n);
  if (!dist[t]) {
    // Unbounded: vertices unreachable from s may sit arbitrarily high. Report
    // the witness with every unreachable vertex lifted by one above the rest.
    std::int64_t top = 0;
    for (const auto& d : dist) {
      if (d) top = std::max(top, *d);
    }
    for (Vertex v = 0; v < n; ++v) out.potential[v] = dist[v] ? *dist[v] : top + 1;
    return out;
  }
  // pi = min(dist, dist(t)) is feasible and attains pi(t) - pi(s) = dist(t).
  for (Vertex v = 0; v < n; ++v) {
    out.potential[v] = dist[v] ? std::min(*dist[v], *dist[t]) : *dist[t];
  }
  out.difference = *dist[t];
  return out;
}

bool is_k_strong(const Digraph& dg, std::uint32_t k) {
  const std::uint32_t n = dg.vertex_count();
  if (n <= 1 || k == 0) return true;
  // Min over ordered pairs of lambda(u,v) equals min over v of lambda(r,v)
  // and lambda(v,r) for any fixed root r.
  for (Vertex v = 1; v < n; ++v) {
    for (const auto& [a, b] : {std::pair<Vertex, Vertex>{0, v}, std::pair<Vertex, Vertex>{v, 0}}) {
      FlowNetwork net(n);
      for (const Arc& arc : dg.arcs()) net.add(arc.from, arc.to, 1, 0);
      if (net.run(a, b, k) < static_cast<std::int64_t>(k)) return false;
    }
  }
  return true;
}

bool is_k_edge_connected(const Graph& g, SubgraphMask mask, std::uint32_t k) {
  check_edge_mask(g, mask);
  const std::uint32_t n = g.vertex_count();
  if (n <= 1 || k == 0) return true;
  const std::vector<std::int64_t> unit(g.edge_count(), 1);
  for (Vertex v = 1; v < n; ++v) {
    if (max_flow(g, mask, std::nullopt, unit, 0, v, k) < static_cast<std::int64_t>(k)) {
      return false;
    }
  }
  return true;
}

bool contains_copy(const Digraph& host, const Digraph& pattern,
                   std::uint32_t max_pattern_vertices) {
  std::vector<std::uint64_t> host_out(host.vertex_count());
  for (Vertex v = 0; v < host.vertex_count(); ++v) host_out[v] = host.out_neighbors(v);
  std::vector<std::uint64_t> pat_out(pattern.vertex_count());
  for (Vertex v = 0; v < pattern.vertex_count(); ++v) pat_out[v] = pattern.out_neighbors(v);
  return embeds(host_out, host.vertex_count(), pat_out, pattern.vertex_count(),
                max_pattern_vertices);
}

bool contains_copy(const Graph& host, SubgraphMask mask, const Graph& pattern,
                   std::uint32_t max_pattern_vertices) {
  check_edge_mask(host, mask);
  std::vector<std::uint64_t> host_adj(host.vertex_count(), 0);
  for (std::uint32_t e = 0; e < host.edge_count(); ++e) {
    if (!mask.contains(e)) continue;
    host_adj[host.edge(e).u] |= std::uint64_t{1} << host.edge(e).v;
    host_adj[host.edge(e).v] |= std::uint64_t{1} << host.edge(e).u;
  }
  // Each pattern edge as a single arc: host adjacency is symmetric.
  std::vector<std::uint64_t> pat_out(pattern.vertex_count(), 0);
  for (const Edge& e : pattern.edges()) pat_out[e.u] |= std::uint64_t{1} << e.v;
  return embeds(host_adj, host.vertex_count(), pat_out, pattern.vertex_count(),
                max_pattern_vertices);
}

namespace {

template <typename Pred>
std::int64_t scan_min(std::uint32_t m, Pred&& pred) {
  for (std::uint32_t k = 0; k <= m; ++k) {
    if (k == 0) {
      if (pred(std::uint64_t{0})) return 0;
      continue;
    }
    const std::uint64_t limit = std::uint64_t{1} << m;
    for (std::uint64_t x = (std::uint64_t{1} << k) - 1; x < limit;) {
      if (pred(x)) return k;
      const std::uint64_t c = x & (~x + 1);
      const std::uint64_t r = x + c;
      x = (((r ^ x) >> 2) / c) | r;
    }
  }
  return kInfeasibleMin;
}

template <typename Pred>
std::int64_t scan_max(std::uint32_t m, Pred&& pred) {
  for (std::uint32_t k = m + 1; k-- > 0;) {
    if (k == 0) return pred(std::uint64_t{0}) ? 0 : kInfeasibleMax;
    const std::uint64_t limit = std::uint64_t{1} << m;
    for (std::uint64_t x = (std::uint64_t{1} << k) - 1; x < limit;) {
      if (pred(x)) return k;
      const std::uint64_t c = x & (~x + 1);
      const std::uint64_t r = x + c;
      x = (((r ^ x) >> 2) / c) | r;
    }
  }
  return kInfeasibleMax;
}

}  // namespace

std::int64_t optimize_subgraph(const Graph& g, const SubgraphObjective& obj,
                               std::uint32_t max_edges) {
  const std::uint32_t m = g.edge_count();
  if (m > max_edges) throw CapExceeded("edges", m, max_edges);
  return std::visit(
      [&](const auto& o) -> std::int64_t {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, objective::MinKConnected>) {
          return scan_min(m, [&](std::uint64_t x) {
            return is_k_edge_connected(g, SubgraphMask{x}, o.k);
          });
        } else if constexpr (std::is_same_v<T, objective::MinFlow>) {
          return scan_min(m, [&](std::uint64_t x) {
            return max_flow(g, SubgraphMask{x}, std::nullopt, o.caps, o.s, o.t, o.w) >= o.w;
          });
        } else if constexpr (std::is_same_v<T, objective::MinDistance>) {
          return scan_min(m, [&](std::uint64_t x) {
            const auto d = shortest_dist(g, SubgraphMask{x}, std::nullopt, o.lens, o.s, o.t);
            return d && *d <= o.d;
          });
        } else if constexpr (std::is_same_v<T, objective::MinConnecting>) {
          return scan_min(m, [&](std::uint64_t x) {
            return vertices_connected(g, SubgraphMask{x}, o.vertices);
          });
        } else {
          return scan_max(m, [&](std::uint64_t x) {
            return !contains_copy(g, SubgraphMask{x}, o.pattern);
          });
        }
      },
      obj);
}

}  // namespace orient_shatter
