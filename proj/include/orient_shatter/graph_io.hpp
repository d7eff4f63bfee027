#pragma once

// JSON graph / pattern files and report serialization.
//
// Graph file:   {"vertices": 3, "edges": [[0,1],[1,2],[2,0]],
//                "capacities": [1,1,1], "lengths": [1,1,5]}   (last two optional)
// Pattern file: {"vertices": 3, "arcs": [[0,1],[1,2],[2,0]]}
// A corpus file is a JSON array of graph objects.

#include <string>
#include <vector>

#include "orient_shatter/graph.hpp"
#include "orient_shatter/systems.hpp"
#include "orient_shatter/verify.hpp"

namespace orient_shatter {

// All parse functions throw InputError with a one-line diagnostic.
Graph parse_graph(const std::string& text);
std::vector<Graph> parse_graphs(const std::string& text);  // object or array
Digraph parse_pattern(const std::string& text);
std::string read_file(const std::string& path);

// cyclic | acyclic | kstrong:K | flow:S,T,W | dist:S,T,D | reach:S,W1+W2+...
// | abdist:A1+A2,B1+B2,D | forbid:<pattern file>
OrientationPropertySpec parse_orientation_spec(const std::string& text);

std::string graph_to_json(const Graph& g);
std::string graphs_to_json(const std::vector<Graph>& graphs);

std::string report_to_json(const Report& r);
std::string suite_to_json(const SuiteResult& result, const std::string& suite, std::uint64_t seed);
// One row per report: claim, inputs, verdict, first failing check, witness.
std::string suite_to_csv(const SuiteResult& result);

}  // namespace orient_shatter
