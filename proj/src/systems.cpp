#include "orient_shatter/systems.hpp"

#include <algorithm>
#include <set>
#include <exception>
#include <mutex>
#include <thread>

#include "orient_shatter/errors.hpp"

namespace orient_shatter {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::vector<std::int64_t> caps_or_unit(const Graph& g) {
  return g.capacities() ? *g.capacities() : std::vector<std::int64_t>(g.edge_count(), 1);
}

std::vector<std::int64_t> lens_or_unit(const Graph& g) {
  return g.lengths() ? *g.lengths() : std::vector<std::int64_t>(g.edge_count(), 1);
}

void require_vertex(const Graph& g, Vertex v, const char* role) {
  if (v >= g.vertex_count()) {
    throw InputError(std::string(role) + " vertex " + std::to_string(v) + " out of range (n = " +
                     std::to_string(g.vertex_count()) + ")");
  }
}

void require_set(const Graph& g, const std::vector<Vertex>& vs, const char* role) {
  if (vs.empty()) throw InputError(std::string(role) + " must be nonempty");
  std::set<Vertex> seen;
  for (Vertex v : vs) {
    require_vertex(g, v, role);
    if (!seen.insert(v).second) throw InputError(std::string(role) + " lists a vertex twice");
  }
}

std::string join(const std::vector<Vertex>& vs) {
  std::string out = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(vs[i]);
  }
  return out + "}";
}

std::uint64_t reachable_from(const Digraph& dg, Vertex s) {
  std::uint64_t seen = std::uint64_t{1} << s;
  std::uint64_t frontier = seen;
  while (frontier != 0) {
    std::uint64_t next = 0;
    for (std::uint64_t f = frontier; f != 0; f &= f - 1) {
      next |= dg.out_neighbors(static_cast<Vertex>(__builtin_ctzll(f)));
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return seen;
}

// Caches the weight vectors so per-orientation evaluation does not rebuild them.
class OrientationEvaluator {
 public:
  OrientationEvaluator(const Graph& g, const OrientationPropertySpec& spec)
      : g_(g), spec_(spec), caps_(caps_or_unit(g)), lens_(lens_or_unit(g)) {
    validate(g, spec);
  }

  bool operator()(Orientation o) const {
    const SubgraphMask all = SubgraphMask::full(g_);
    return std::visit(
        Overloaded{
            [&](const orient::Cyclic&) { return has_directed_cycle(digraph_of(g_, o, all)); },
            [&](const orient::Acyclic&) { return !has_directed_cycle(digraph_of(g_, o, all)); },
            [&](const orient::KStrong& p) { return is_k_strong(digraph_of(g_, o, all), p.k); },
            [&](const orient::Flow& p) {
              return max_flow(g_, all, o, caps_, p.s, p.t, p.w) >= p.w;
            },
            [&](const orient::Distance& p) {
              const auto d = shortest_dist(g_, all, o, lens_, p.s, p.t);
              return d && *d <= p.d;
            },
            [&](const orient::Reach& p) {
              const std::uint64_t seen = reachable_from(digraph_of(g_, o, all), p.s);
              return std::all_of(p.targets.begin(), p.targets.end(),
                                 [&](Vertex w) { return ((seen >> w) & 1u) != 0; });
            },
            [&](const orient::ABDistance& p) {
              for (Vertex a : p.a) {
                for (Vertex b : p.b) {
                  const auto d = shortest_dist(g_, all, o, lens_, a, b);
                  if (d && *d <= p.d) return true;
                }
              }
              return false;
            },
            [&](const orient::Forbid& p) {
              return !contains_copy(digraph_of(g_, o, all), p.pattern);
            },
        },
        spec_);
  }

 private:
  const Graph& g_;
  const OrientationPropertySpec& spec_;
  std::vector<std::int64_t> caps_;
  std::vector<std::int64_t> lens_;
};

class SubgraphEvaluator {
 public:
  SubgraphEvaluator(const Graph& g, const SubgraphPropertySpec& spec)
      : g_(g), spec_(spec), caps_(caps_or_unit(g)), lens_(lens_or_unit(g)) {
    validate(g, spec);
  }

  bool operator()(SubgraphMask x) const {
    return std::visit(
        Overloaded{
            [&](const subgraph::HasCycle&) { return has_cycle(g_, x); },
            [&](const subgraph::IsForest&) { return !has_cycle(g_, x); },
            [&](const subgraph::KConnected& p) { return is_k_edge_connected(g_, x, p.k); },
            [&](const subgraph::Flow& p) {
              return max_flow(g_, x, std::nullopt, caps_, p.s, p.t, p.w) >= p.w;
            },
            [&](const subgraph::Distance& p) {
              const auto d = shortest_dist(g_, x, std::nullopt, lens_, p.s, p.t);
              return d && *d <= p.d;
            },
            [&](const subgraph::ConnectsSet& p) { return vertices_connected(g_, x, p.vertices); },
            [&](const subgraph::FreeOf& p) { return !contains_copy(g_, x, p.pattern); },
        },
        spec_);
  }

 private:
  const Graph& g_;
  const SubgraphPropertySpec& spec_;
  std::vector<std::int64_t> caps_;
  std::vector<std::int64_t> lens_;
};

template <class Pred>
BitTable fill_table(std::uint32_t m, unsigned threads, const Pred& pred) {
  BitTable table(m);
  auto words = table.mutable_words();
  const std::uint64_t points = table.size();
  const std::size_t nwords = words.size();
  auto work = [&](std::size_t w0, std::size_t w1) {
    for (std::size_t w = w0; w < w1; ++w) {
      std::uint64_t bits = 0;
      const std::uint64_t base = static_cast<std::uint64_t>(w) << 6;
      const std::uint64_t end = std::min<std::uint64_t>(base + 64, points);
      for (std::uint64_t x = base; x < end; ++x) {
        if (pred(x)) bits |= std::uint64_t{1} << (x - base);
      }
      words[w] = bits;
    }
  };
  const std::size_t t = std::clamp<std::size_t>(threads, 1, nwords);
  if (t == 1) {
    work(0, nwords);
    return table;
  }
  std::vector<std::thread> pool;
  std::exception_ptr error;
  std::mutex error_mutex;
  for (std::size_t i = 0; i < t; ++i) {
    const std::size_t w0 = nwords * i / t;
    const std::size_t w1 = nwords * (i + 1) / t;
    pool.emplace_back([&, w0, w1] {
      try {
        work(w0, w1);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
  return table;
}

}  // namespace

void validate(const Graph& g, const OrientationPropertySpec& spec) {
  std::visit(Overloaded{
                 [](const orient::Cyclic&) {},
                 [](const orient::Acyclic&) {},
                 [](const orient::KStrong& p) {
                   if (p.k == 0) throw InputError("k must be at least 1");
                 },
                 [&](const orient::Flow& p) {
                   require_vertex(g, p.s, "source");
                   require_vertex(g, p.t, "sink");
                   if (p.s == p.t) throw InputError("flow needs s != t");
                   if (p.w < 0) throw InputError("flow value must be nonnegative");
                 },
                 [&](const orient::Distance& p) {
                   require_vertex(g, p.s, "source");
                   require_vertex(g, p.t, "sink");
                   if (p.d < 0) throw InputError("distance bound must be nonnegative");
                 },
                 [&](const orient::Reach& p) {
                   require_vertex(g, p.s, "source");
                   require_set(g, p.targets, "target set");
                 },
                 [&](const orient::ABDistance& p) {
                   require_set(g, p.a, "set A");
                   require_set(g, p.b, "set B");
                   if (p.d < 0) throw InputError("distance bound must be nonnegative");
                 },
                 [](const orient::Forbid&) {},
             },
             spec);
}

void validate(const Graph& g, const SubgraphPropertySpec& spec) {
  std::visit(Overloaded{
                 [](const subgraph::HasCycle&) {},
                 [](const subgraph::IsForest&) {},
                 [](const subgraph::KConnected& p) {
                   if (p.k == 0) throw InputError("k must be at least 1");
                 },
                 [&](const subgraph::Flow& p) {
                   require_vertex(g, p.s, "source");
                   require_vertex(g, p.t, "sink");
                   if (p.s == p.t) throw InputError("flow needs s != t");
                   if (p.w < 0) throw InputError("flow value must be nonnegative");
                 },
                 [&](const subgraph::Distance& p) {
                   require_vertex(g, p.s, "source");
                   require_vertex(g, p.t, "sink");
                   if (p.d < 0) throw InputError("distance bound must be nonnegative");
                 },
                 [&](const subgraph::ConnectsSet& p) { require_set(g, p.vertices, "vertex set"); },
                 [](const subgraph::FreeOf&) {},
             },
             spec);
}

std::string describe(const OrientationPropertySpec& spec) {
  return std::visit(
      Overloaded{
          [](const orient::Cyclic&) -> std::string { return "cyclic"; },
          [](const orient::Acyclic&) -> std::string { return "acyclic"; },
          [](const orient::KStrong& p) { return "kstrong:k=" + std::to_string(p.k); },
          [](const orient::Flow& p) {
            return "flow:s=" + std::to_string(p.s) + ",t=" + std::to_string(p.t) +
                   ",w=" + std::to_string(p.w);
          },
          [](const orient::Distance& p) {
            return "dist:s=" + std::to_string(p.s) + ",t=" + std::to_string(p.t) +
                   ",d=" + std::to_string(p.d);
          },
          [](const orient::Reach& p) {
            return "reach:s=" + std::to_string(p.s) + ",W=" + join(p.targets);
          },
          [](const orient::ABDistance& p) {
            return "abdist:A=" + join(p.a) + ",B=" + join(p.b) + ",d=" + std::to_string(p.d);
          },
          [](const orient::Forbid& p) {
            std::string out = "forbid:n=" + std::to_string(p.pattern.vertex_count()) + ",arcs=[";
            bool first = true;
            for (const Arc& a : p.pattern.arcs()) {
              if (!first) out += ",";
              first = false;
              out += std::to_string(a.from) + ">" + std::to_string(a.to);
            }
            return out + "]";
          },
      },
      spec);
}

std::string describe(const SubgraphPropertySpec& spec) {
  return std::visit(
      Overloaded{
          [](const subgraph::HasCycle&) -> std::string { return "has_cycle"; },
          [](const subgraph::IsForest&) -> std::string { return "forest"; },
          [](const subgraph::KConnected& p) { return "kconnected:k=" + std::to_string(p.k); },
          [](const subgraph::Flow& p) {
            return "uflow:s=" + std::to_string(p.s) + ",t=" + std::to_string(p.t) +
                   ",w=" + std::to_string(p.w);
          },
          [](const subgraph::Distance& p) {
            return "udist:s=" + std::to_string(p.s) + ",t=" + std::to_string(p.t) +
                   ",d=" + std::to_string(p.d);
          },
          [](const subgraph::ConnectsSet& p) { return "connects:" + join(p.vertices); },
          [](const subgraph::FreeOf& p) {
            std::string out = "free_of:n=" + std::to_string(p.pattern.vertex_count()) + ",edges=[";
            bool first = true;
            for (const Edge& e : p.pattern.edges()) {
              if (!first) out += ",";
              first = false;
              out += std::to_string(e.u) + "-" + std::to_string(e.v);
            }
            return out + "]";
          },
      },
      spec);
}

bool satisfies(const Graph& g, Orientation o, const OrientationPropertySpec& spec) {
  return OrientationEvaluator(g, spec)(o);
}

bool satisfies(const Graph& g, SubgraphMask mask, const SubgraphPropertySpec& spec) {
  return SubgraphEvaluator(g, spec)(mask);
}

System build_orientation_system(const Graph& g, const OrientationPropertySpec& spec,
                                const EnumOptions& opts) {
  GroundSet ground = g.ground_set(opts.max_edges);
  const OrientationEvaluator eval(g, spec);
  BitTable table =
      fill_table(g.edge_count(), opts.threads, [&](std::uint64_t x) { return eval(Orientation{x}); });
  return System(std::move(ground), std::move(table));
}

Family subgraph_family(const Graph& g, const SubgraphPropertySpec& spec, const EnumOptions& opts) {
  GroundSet ground = g.ground_set(opts.max_edges);
  const SubgraphEvaluator eval(g, spec);
  BitTable table = fill_table(g.edge_count(), opts.threads,
                              [&](std::uint64_t x) { return eval(SubgraphMask{x}); });
  return Family(std::move(ground), std::move(table));
}

std::uint64_t count_subgraphs(const Graph& g, const SubgraphPropertySpec& spec,
                              const EnumOptions& opts) {
  return subgraph_family(g, spec, opts).size();
}

TransformedNetwork steiner_transform(const Graph& g, Vertex s, const std::vector<Vertex>& targets) {
  require_vertex(g, s, "source");
  require_set(g, targets, "target set");
  if (std::find(targets.begin(), targets.end(), s) != targets.end()) {
    throw InputError("source must not be in the target set");
  }
  const std::uint32_t n = g.vertex_count();
  const std::uint32_t m = g.edge_count();
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  for (Vertex w : targets) edges.push_back(Edge{w, n});
  TransformedNetwork net;
  net.graph = Graph(n + 1, std::move(edges));
  // The only finite capacities are the |W| unit edges into t.
  const auto sentinel = static_cast<std::int64_t>(targets.size()) + 1;
  std::vector<std::int64_t> caps(m, sentinel);
  caps.resize(m + targets.size(), 1);
  net.graph.set_capacities(std::move(caps));
  net.s = s;
  net.t = n;
  net.target = static_cast<std::int64_t>(targets.size());
  net.original_edges = m;
  return net;
}

TransformedNetwork ab_distance_transform(const Graph& g, const std::vector<std::int64_t>& lens,
                                         const std::vector<Vertex>& a,
                                         const std::vector<Vertex>& b) {
  require_set(g, a, "set A");
  require_set(g, b, "set B");
  if (lens.size() != g.edge_count()) throw InputError("length count differs from edge count");
  const std::uint32_t n = g.vertex_count();
  const std::uint32_t m = g.edge_count();
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  for (Vertex x : a) edges.push_back(Edge{n, x});
  for (Vertex x : b) edges.push_back(Edge{x, n + 1});
  TransformedNetwork net;
  net.graph = Graph(n + 2, std::move(edges));
  std::vector<std::int64_t> all = lens;
  all.resize(m + a.size() + b.size(), 0);
  net.graph.set_lengths(std::move(all));
  net.s = n;
  net.t = n + 1;
  net.original_edges = m;
  return net;
}

Cube fixed_direction_cube(const TransformedNetwork& net) {
  const std::uint32_t m = net.graph.edge_count();
  const std::uint64_t free =
      net.original_edges == 0 ? 0 : (std::uint64_t{1} << net.original_edges) - 1;
  return Cube(m, free, 0);
}

}  // namespace orient_shatter
