// Command-line front end. Exit codes: 0 all checks pass, 1 a claim was
// violated, 2 usage / input / cap error.

#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <string>

#include "orient_shatter/errors.hpp"
#include "orient_shatter/graph_io.hpp"
#include "orient_shatter/shattering.hpp"
#include "orient_shatter/systems.hpp"
#include "orient_shatter/verify.hpp"

namespace os = orient_shatter;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInput = 2;

struct CommonFlags {
  std::uint32_t max_edges = os::kDefaultMaxEdges;
  std::uint32_t max_lopsided = os::kDefaultMaxLopsidedDim;
  unsigned parallel = 1;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--max-edges", f.max_edges, "Enumeration cap on m")->capture_default_str();
  cmd->add_option("--max-lopsided", f.max_lopsided, "Cap on m for the 3^m lopsidedness scan")
      ->capture_default_str();
  cmd->add_option("--parallel", f.parallel, "Worker threads (ORIENT_SHATTER_THREADS overrides)")
      ->check(CLI::PositiveNumber);
}

unsigned resolve_threads(unsigned flag) {
  if (const char* env = std::getenv("ORIENT_SHATTER_THREADS")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v <= 256) return static_cast<unsigned>(v);
    throw os::InputError("ORIENT_SHATTER_THREADS must be an integer in [1, 256]");
  }
  return flag;
}

std::vector<os::Graph> corpus_from(const std::string& desc, std::uint64_t seed) {
  if (desc.rfind("n<=", 0) == 0) {
    const std::string k = desc.substr(3);
    if (k.empty() || k.find_first_not_of("0123456789") != std::string::npos) {
      throw os::InputError("bad corpus '" + desc + "'");
    }
    return os::all_graphs_up_to(static_cast<std::uint32_t>(std::stoul(k)));
  }
  if (desc.rfind("random:", 0) == 0) {
    const std::string k = desc.substr(7);
    if (k.empty() || k.size() > 6 || k.find_first_not_of("0123456789") != std::string::npos) {
      throw os::InputError("bad corpus '" + desc + "'");
    }
    return os::random_connected_graphs(seed, static_cast<std::uint32_t>(std::stoul(k)), 4, 12);
  }
  throw os::InputError("corpus must be 'n<=K' or 'random:N', got '" + desc + "'");
}

int cmd_analyze(const std::string& graph_path, const std::string& spec_text,
                const CommonFlags& flags) {
  const os::Graph g = os::parse_graph(os::read_file(graph_path));
  const os::OrientationPropertySpec spec = os::parse_orientation_spec(spec_text);
  const os::System s =
      os::build_orientation_system(g, spec, {flags.max_edges, resolve_threads(flags.parallel)});
  const os::ShatterProfile p = os::profile(s);
  json doc;
  doc["spec"] = os::describe(spec);
  doc["m"] = g.edge_count();
  doc["size"] = p.size;
  doc["vc"] = p.vc;
  doc["dvc"] = p.dvc;
  doc["str_size"] = p.str.size();
  doc["sstr_size"] = p.sstr.size();
  doc["se"] = p.str == p.sstr;
  if (s.dim() <= flags.max_lopsided) {
    const auto cube = os::find_symmetric_restriction(s, flags.max_lopsided);
    doc["se_by_lopsidedness"] = !cube.has_value();
    doc["symmetric_restriction_witness"] = cube ? json(cube->to_string()) : json(nullptr);
  } else {
    doc["se_by_lopsidedness"] = nullptr;
    doc["symmetric_restriction_witness"] = nullptr;
    doc["note"] = "lopsidedness scan skipped: m = " + std::to_string(s.dim()) +
                  " exceeds --max-lopsided " + std::to_string(flags.max_lopsided);
  }
  std::cout << doc.dump(2) << "\n";
  return kExitPass;
}

int cmd_verify(const std::string& graph_path, const std::string& corpus, const std::string& suite,
               std::uint64_t seed, const std::string& format, bool inject_fault,
               const CommonFlags& flags) {
  const os::Suite selector = os::parse_suite(suite);
  std::vector<os::Graph> graphs;
  if (!graph_path.empty()) {
    graphs = os::parse_graphs(os::read_file(graph_path));
  } else {
    graphs = corpus_from(corpus, seed);
  }
  os::VerifyOptions opts;
  opts.max_edges = flags.max_edges;
  opts.max_lopsided = flags.max_lopsided;
  opts.inject_fault = inject_fault;
  opts.threads = resolve_threads(flags.parallel);
  const os::SuiteResult result = os::run_suite(graphs, selector, seed, opts);
  if (format == "csv") {
    std::cout << os::suite_to_csv(result);
  } else {
    std::cout << os::suite_to_json(result, suite, seed) << "\n";
  }
  if (result.first_failure) {
    const os::Report& r = result.reports[*result.first_failure];
    const os::Check* c = r.first_failure();
    std::cerr << "FAIL " << r.claim << " [" << r.inputs << "] " << c->name << ": "
              << c->witness.value_or("") << "\n";
    return kExitViolation;
  }
  return kExitPass;
}

int cmd_geodesic(const std::string& graph_path, const std::string& spec_text,
                 const std::string& from, const std::string& to, const CommonFlags& flags) {
  const os::Graph g = os::parse_graph(os::read_file(graph_path));
  const os::System s = os::build_orientation_system(
      g, os::parse_orientation_spec(spec_text), {flags.max_edges, resolve_threads(flags.parallel)});
  const std::uint64_t f = os::parse_word(from, s.dim());
  const std::uint64_t t = os::parse_word(to, s.dim());
  json doc;
  doc["from"] = from;
  doc["to"] = to;
  doc["hamming"] = __builtin_popcountll(f ^ t);
  try {
    const os::FlipSequence seq = os::flip_geodesic(s, f, t);
    doc["found"] = true;
    json steps = json::array();
    json path = json::array({from});
    std::uint64_t cur = f;
    for (auto c : seq.steps) {
      steps.push_back(s.ground().label(c));
      cur ^= std::uint64_t{1} << c;
      path.push_back(os::format_word(cur, s.dim()));
    }
    doc["flips"] = std::move(steps);
    doc["path"] = std::move(path);
  } catch (const os::NoGeodesic& e) {
    doc["found"] = false;
    doc["path_length"] = e.path_length() ? json(*e.path_length()) : json(nullptr);
  }
  std::cout << doc.dump(2) << "\n";
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact shattering analysis of graph orientation systems"};
  app.require_subcommand(1);

  CommonFlags flags;
  std::string graph_path;
  std::string spec;
  std::string suite = "all";
  std::string corpus;
  std::string format = "report";
  std::uint64_t seed = 42;
  bool inject_fault = false;
  std::string from;
  std::string to;

  auto* analyze = app.add_subcommand("analyze", "Profile one orientation system");
  analyze->add_option("--graph", graph_path, "Graph JSON file")->required();
  analyze->add_option("--spec", spec, "Property spec, e.g. cyclic, flow:0,2,1")->required();
  add_common(analyze, flags);

  auto* verify = app.add_subcommand("verify", "Run theorem verifiers");
  auto* graph_opt = verify->add_option("--graph", graph_path, "Graph (or array of graphs) JSON");
  auto* corpus_opt = verify->add_option("--corpus", corpus, "n<=K or random:N");
  graph_opt->excludes(corpus_opt);
  verify->add_option("--suite", suite, "all|cyclic|strong|flow|dist|steiner|forbidden|general")
      ->capture_default_str();
  verify->add_option("--seed", seed, "Seed for generated weights and parameters")
      ->capture_default_str();
  verify->add_option("--format", format, "report or csv")
      ->check(CLI::IsMember({"report", "csv"}))
      ->capture_default_str();
  verify->add_flag("--inject-fault", inject_fault)->group("");
  add_common(verify, flags);

  auto* geodesic = app.add_subcommand("geodesic", "Shortest in-system flip sequence");
  geodesic->add_option("--graph", graph_path, "Graph JSON file")->required();
  geodesic->add_option("--spec", spec, "Property spec")->required();
  geodesic->add_option("--from", from, "Start orientation, edge 0 leftmost")->required();
  geodesic->add_option("--to", to, "End orientation")->required();
  add_common(geodesic, flags);

  auto* corpus_cmd = app.add_subcommand("corpus", "Print a generated graph corpus as JSON");
  corpus_cmd->add_option("--corpus", corpus, "n<=K or random:N")->required();
  corpus_cmd->add_option("--seed", seed, "Seed for random corpora")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*analyze) return cmd_analyze(graph_path, spec, flags);
    if (*verify) {
      if (graph_path.empty() && corpus.empty()) {
        throw os::InputError("verify needs --graph or --corpus");
      }
      return cmd_verify(graph_path, corpus, suite, seed, format, inject_fault, flags);
    }
    if (*geodesic) return cmd_geodesic(graph_path, spec, from, to, flags);
    if (*corpus_cmd) {
      std::cout << os::graphs_to_json(corpus_from(corpus, seed)) << "\n";
      return kExitPass;
    }
  } catch (const os::InternalInconsistency& e) {
    std::cerr << "claim violated: " << e.what() << "\n";
    return kExitViolation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
