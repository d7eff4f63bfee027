#pragma once

// Verifiers: each enumerates the relevant orientation systems and subgraph
// families of a graph, checks one theorem's statements exactly, and returns
// a Report. A failing check always carries a witness (orientation word,
// subset, cube, or the offending counts).

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "orient_shatter/graph.hpp"
#include "orient_shatter/shattering.hpp"
#include "orient_shatter/systems.hpp"

namespace orient_shatter {

enum class Verdict { Pass, Fail, NotApplicable };

std::string to_string(Verdict v);

struct Check {
  std::string name;
  Verdict verdict = Verdict::Pass;
  std::string detail;
  std::optional<std::string> witness;
};

// Side statements checked for information only; reported, never failed.
struct SoftFinding {
  std::string name;
  bool holds = true;
  std::string detail;
};

using Quantity = std::variant<std::int64_t, bool, std::string>;

struct Report {
  std::string claim;
  std::string inputs;
  std::vector<std::pair<std::string, Quantity>> measured;
  std::vector<Check> checks;
  std::vector<SoftFinding> soft;

  // Fail if any check fails; Pass if any passes; otherwise NotApplicable.
  Verdict verdict() const;
  const Check* first_failure() const;

  void measure(std::string name, Quantity value);
  void pass(std::string name, std::string detail = {});
  void not_applicable(std::string name, std::string detail);
  void fail(std::string name, std::string detail, std::string witness);
  // Pass or fail; `witness` is only invoked on failure.
  template <class WitnessFn>
  void expect(std::string name, bool ok, std::string detail, WitnessFn&& witness) {
    if (ok) {
      pass(std::move(name), std::move(detail));
    } else {
      fail(std::move(name), std::move(detail), witness());
    }
  }
};

struct VerifyOptions {
  std::uint32_t max_edges = kDefaultMaxEdges;
  std::uint32_t max_lopsided = kDefaultMaxLopsidedDim;
  std::uint64_t max_partial_cube_size = 4096;
  // Explicit flip sequences reconstructed per SE system.
  std::uint32_t geodesic_samples = 64;
  // Edge count above which verify_general skips its 3^m hypothesis scan.
  std::uint32_t max_hypothesis_edges = 10;
  // Test hook: corrupts the primary system of every verifier.
  bool inject_fault = false;
  unsigned threads = 1;
};

Report verify_cyclic(const Graph& g, const VerifyOptions& opts = {});
Report verify_strong(const Graph& g, std::uint32_t k, const VerifyOptions& opts = {});
Report verify_general(const Graph& g, const OrientationPropertySpec& p,
                      const SubgraphPropertySpec& p_prime, bool monotone_check,
                      const VerifyOptions& opts = {});
Report verify_forbidden(const Graph& g, const Digraph& pattern, const VerifyOptions& opts = {});
Report verify_flow(const Graph& g, const std::vector<std::int64_t>& caps, Vertex s, Vertex t,
                   std::int64_t w, const VerifyOptions& opts = {});
Report verify_distance(const Graph& g, const std::vector<std::int64_t>& lens, Vertex s, Vertex t,
                       std::int64_t d, const VerifyOptions& opts = {});
Report verify_ab_distance(const Graph& g, const std::vector<std::int64_t>& lens,
                          const std::vector<Vertex>& a, const std::vector<Vertex>& b,
                          std::int64_t d, const VerifyOptions& opts = {});
Report verify_steiner(const Graph& g, Vertex s, const std::vector<Vertex>& targets,
                      const VerifyOptions& opts = {});

// Exact test of count <= (m e / r)^r with e replaced by a rational lower
// bound, so a pass is sound. Requires r >= 1.
bool within_exponential_bound(std::uint64_t count, std::uint64_t m, std::uint64_t r);

enum class Suite : unsigned {
  Cyclic = 1u << 0,
  Strong = 1u << 1,
  Flow = 1u << 2,
  Dist = 1u << 3,
  Steiner = 1u << 4,
  Forbidden = 1u << 5,
  General = 1u << 6,
  All = (1u << 7) - 1,
};

// "all", "cyclic", "strong", "flow", "dist", "steiner", "forbidden", "general".
Suite parse_suite(const std::string& name);

struct SuiteResult {
  std::vector<Report> reports;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  std::uint64_t not_applicable = 0;
  // Index into reports of the first failing report.
  std::optional<std::size_t> first_failure;
};

// Runs the selected verifiers over every graph. Missing capacities / lengths
// and all per-graph parameters are drawn from a generator seeded by `seed`
// and the graph's index, so results do not depend on the thread count.
SuiteResult run_suite(const std::vector<Graph>& corpus, Suite suite, std::uint64_t seed,
                      const VerifyOptions& opts = {});

// Corpus generators.
// One representative per isomorphism class of simple graphs on 1..max_n
// vertices (edges listed in lexicographic order).
std::vector<Graph> all_graphs_up_to(std::uint32_t max_n);
// `count` connected graphs with min_edges <= m <= max_edges, seeded.
std::vector<Graph> random_connected_graphs(std::uint64_t seed, std::uint32_t count,
                                           std::uint32_t min_edges, std::uint32_t max_edges);

Graph complete_graph(std::uint32_t n);
Graph path_graph(std::uint32_t n);
Graph cycle_graph(std::uint32_t n);
Graph star_graph(std::uint32_t leaves);

}  // namespace orient_shatter
