#include "orient_shatter/graph_io.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "orient_shatter/errors.hpp"

namespace orient_shatter {

namespace {

using json = nlohmann::ordered_json;

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

std::uint32_t as_index(const json& v, const char* what) {
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
    throw InputError(std::string(what) + " must be a nonnegative integer");
  }
  const auto x = v.get<std::int64_t>();
  if (x > 1'000'000) throw InputError(std::string(what) + " is implausibly large");
  return static_cast<std::uint32_t>(x);
}

std::vector<std::pair<Vertex, Vertex>> pair_list(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_array()) {
    throw InputError(std::string("missing array '") + key + "'");
  }
  std::vector<std::pair<Vertex, Vertex>> out;
  for (const json& e : doc[key]) {
    if (!e.is_array() || e.size() != 2) {
      throw InputError(std::string("each entry of '") + key + "' must be a pair [u, v]");
    }
    out.emplace_back(as_index(e[0], "vertex"), as_index(e[1], "vertex"));
  }
  return out;
}

std::vector<std::int64_t> weights(const json& doc, const char* key) {
  if (!doc[key].is_array()) throw InputError(std::string("'") + key + "' must be an array");
  std::vector<std::int64_t> out;
  for (const json& x : doc[key]) {
    if (!x.is_number_integer() || x.get<std::int64_t>() < 0) {
      throw InputError(std::string("'") + key + "' entries must be nonnegative integers");
    }
    out.push_back(x.get<std::int64_t>());
  }
  return out;
}

Graph graph_from(const json& doc) {
  if (!doc.is_object()) throw InputError("graph must be a JSON object");
  if (!doc.contains("vertices")) throw InputError("missing 'vertices'");
  const std::uint32_t n = as_index(doc["vertices"], "'vertices'");
  std::vector<Edge> edges;
  for (const auto& [u, v] : pair_list(doc, "edges")) edges.push_back(Edge{u, v});
  Graph g(n, std::move(edges));
  if (doc.contains("capacities")) g.set_capacities(weights(doc, "capacities"));
  if (doc.contains("lengths")) g.set_lengths(weights(doc, "lengths"));
  return g;
}

json graph_doc(const Graph& g) {
  json doc;
  doc["vertices"] = g.vertex_count();
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  doc["edges"] = std::move(edges);
  if (g.capacities()) doc["capacities"] = *g.capacities();
  if (g.lengths()) doc["lengths"] = *g.lengths();
  return doc;
}

json report_doc(const Report& r) {
  json doc;
  doc["claim"] = r.claim;
  doc["inputs"] = r.inputs;
  doc["verdict"] = to_string(r.verdict());
  json measured = json::object();
  for (const auto& [name, value] : r.measured) {
    std::visit([&](const auto& v) { measured[name] = v; }, value);
  }
  doc["measured"] = std::move(measured);
  json checks = json::array();
  for (const Check& c : r.checks) {
    json cd;
    cd["name"] = c.name;
    cd["verdict"] = to_string(c.verdict);
    cd["detail"] = c.detail;
    if (c.witness) cd["witness"] = *c.witness;
    checks.push_back(std::move(cd));
  }
  doc["checks"] = std::move(checks);
  json soft = json::array();
  for (const SoftFinding& f : r.soft) {
    soft.push_back({{"name", f.name}, {"holds", f.holds}, {"detail", f.detail}});
  }
  doc["soft_findings"] = std::move(soft);
  return doc;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

Graph parse_graph(const std::string& text) { return graph_from(parse_json(text)); }

std::vector<Graph> parse_graphs(const std::string& text) {
  const json doc = parse_json(text);
  std::vector<Graph> out;
  if (doc.is_array()) {
    for (const json& g : doc) out.push_back(graph_from(g));
  } else {
    out.push_back(graph_from(doc));
  }
  return out;
}

Digraph parse_pattern(const std::string& text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw InputError("pattern must be a JSON object");
  if (!doc.contains("vertices")) throw InputError("missing 'vertices'");
  return make_pattern(as_index(doc["vertices"], "'vertices'"), pair_list(doc, "arcs"));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

namespace {

std::int64_t parse_int(const std::string& text, const std::string& spec) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size() || v < 0) {
    throw InputError("bad number '" + text + "' in spec '" + spec + "'");
  }
  return v;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<Vertex> vertex_list(const std::string& text, const std::string& spec) {
  std::vector<Vertex> out;
  for (const auto& part : split(text, '+')) {
    out.push_back(static_cast<Vertex>(parse_int(part, spec)));
  }
  return out;
}

}  // namespace

OrientationPropertySpec parse_orientation_spec(const std::string& text) {
  const auto colon = text.find(':');
  const std::string head = text.substr(0, colon);
  const std::string tail = colon == std::string::npos ? "" : text.substr(colon + 1);
  auto args = [&](std::size_t count) {
    auto parts = split(tail, ',');
    if (colon == std::string::npos || parts.size() != count) {
      throw InputError("spec '" + text + "' expects " + std::to_string(count) + " arguments");
    }
    return parts;
  };
  if (head == "cyclic" && colon == std::string::npos) return orient::Cyclic{};
  if (head == "acyclic" && colon == std::string::npos) return orient::Acyclic{};
  if (head == "kstrong") {
    const auto k = parse_int(args(1)[0], text);
    if (k < 1) throw InputError("kstrong needs k >= 1");
    return orient::KStrong{static_cast<std::uint32_t>(k)};
  }
  if (head == "flow") {
    const auto a = args(3);
    return orient::Flow{static_cast<Vertex>(parse_int(a[0], text)),
                        static_cast<Vertex>(parse_int(a[1], text)), parse_int(a[2], text)};
  }
  if (head == "dist") {
    const auto a = args(3);
    return orient::Distance{static_cast<Vertex>(parse_int(a[0], text)),
                            static_cast<Vertex>(parse_int(a[1], text)), parse_int(a[2], text)};
  }
  if (head == "reach") {
    const auto a = args(2);
    return orient::Reach{static_cast<Vertex>(parse_int(a[0], text)), vertex_list(a[1], text)};
  }
  if (head == "abdist") {
    const auto a = args(3);
    return orient::ABDistance{vertex_list(a[0], text), vertex_list(a[1], text),
                              parse_int(a[2], text)};
  }
  if (head == "forbid" && !tail.empty()) return orient::Forbid{parse_pattern(read_file(tail))};
  throw InputError("unknown spec '" + text + "'");
}

std::string graph_to_json(const Graph& g) { return graph_doc(g).dump(); }

std::string graphs_to_json(const std::vector<Graph>& graphs) {
  json arr = json::array();
  for (const Graph& g : graphs) arr.push_back(graph_doc(g));
  return arr.dump(2);
}

std::string report_to_json(const Report& r) { return report_doc(r).dump(2); }

std::string suite_to_json(const SuiteResult& result, const std::string& suite, std::uint64_t seed) {
  json doc;
  doc["suite"] = suite;
  doc["seed"] = seed;
  doc["summary"] = {{"reports", result.reports.size()},
                    {"passed", result.passed},
                    {"failed", result.failed},
                    {"not_applicable", result.not_applicable}};
  if (result.first_failure) {
    const Report& r = result.reports[*result.first_failure];
    const Check* c = r.first_failure();
    doc["first_failure"] = {{"claim", r.claim},
                            {"inputs", r.inputs},
                            {"check", c ? c->name : ""},
                            {"witness", c && c->witness ? *c->witness : ""}};
  } else {
    doc["first_failure"] = nullptr;
  }
  json reports = json::array();
  for (const Report& r : result.reports) reports.push_back(report_doc(r));
  doc["reports"] = std::move(reports);
  return doc.dump(2);
}

std::string suite_to_csv(const SuiteResult& result) {
  std::string out = "claim,inputs,verdict,failed_check,witness\n";
  for (const Report& r : result.reports) {
    const Check* c = r.first_failure();
    out += csv_field(r.claim) + "," + csv_field(r.inputs) + "," + to_string(r.verdict()) + "," +
           csv_field(c ? c->name : "") + "," + csv_field(c && c->witness ? *c->witness : "") + "\n";
  }
  return out;
}

}  // namespace orient_shatter
