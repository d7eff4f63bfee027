#include "orient_shatter/verify.hpp"

#include <algorithm>
#include <atomic>
#include <boost/multiprecision/cpp_int.hpp>
#include <exception>
#include <functional>
#include <random>
#include <thread>

#include "orient_shatter/errors.hpp"

namespace orient_shatter {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return "pass";
    case Verdict::Fail:
      return "fail";
    case Verdict::NotApplicable:
      return "not-applicable";
  }
  return "unknown";
}

Verdict Report::verdict() const {
  bool any_pass = false;
  for (const Check& c : checks) {
    if (c.verdict == Verdict::Fail) return Verdict::Fail;
    any_pass = any_pass || c.verdict == Verdict::Pass;
  }
  return any_pass ? Verdict::Pass : Verdict::NotApplicable;
}

const Check* Report::first_failure() const {
  for (const Check& c : checks) {
    if (c.verdict == Verdict::Fail) return &c;
  }
  return nullptr;
}

void Report::measure(std::string name, Quantity value) {
  measured.emplace_back(std::move(name), std::move(value));
}

void Report::pass(std::string name, std::string detail) {
  checks.push_back(Check{std::move(name), Verdict::Pass, std::move(detail), std::nullopt});
}

void Report::not_applicable(std::string name, std::string detail) {
  checks.push_back(Check{std::move(name), Verdict::NotApplicable, std::move(detail), std::nullopt});
}

void Report::fail(std::string name, std::string detail, std::string witness) {
  if (witness.empty()) witness = "(inputs as reported)";
  checks.push_back(Check{std::move(name), Verdict::Fail, std::move(detail), std::move(witness)});
}

bool within_exponential_bound(std::uint64_t count, std::uint64_t m, std::uint64_t r) {
  using boost::multiprecision::cpp_int;
  using boost::multiprecision::pow;
  if (r == 0) throw InputError("exponential bound needs a positive exponent");
  // e > 2718281828459045 / 10^15, so count * (r * 10^15)^r <= (m * e_lo)^r
  // implies count <= (m e / r)^r.
  const cpp_int e_num("2718281828459045");
  const cpp_int e_den("1000000000000000");
  const auto ri = static_cast<unsigned>(r);
  const cpp_int lhs = cpp_int(count) * pow(cpp_int(r) * e_den, ri);
  const cpp_int rhs = pow(cpp_int(m) * e_num, ri);
  return lhs <= rhs;
}

namespace {

std::string subset_str(const GroundSet& ground, std::uint64_t x) {
  std::string out = "{";
  bool first = true;
  for (std::uint32_t i = 0; i < ground.size(); ++i) {
    if (!((x >> i) & 1u)) continue;
    if (!first) out += ",";
    first = false;
    out += ground.label(i);
  }
  return out + "}";
}

std::string orientation_str(std::uint64_t o, std::uint32_t m) {
  return "orientation " + format_word(o, m);
}

std::string vec_str(const std::vector<std::int64_t>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out + "]";
}

std::string vertices_str(const std::vector<Vertex>& v) {
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out + "}";
}

std::string graph_str(const Graph& g) {
  std::string out = "n=" + std::to_string(g.vertex_count()) + " edges=[";
  const auto labels = g.edge_labels();
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out += ",";
    out += labels[i];
  }
  return out + "]";
}

std::string counts(std::uint64_t a, const char* op, std::uint64_t b) {
  return std::to_string(a) + " " + op + " " + std::to_string(b);
}

EnumOptions enum_opts(const VerifyOptions& opts) { return EnumOptions{opts.max_edges, opts.threads}; }

System maybe_corrupt(System s, const VerifyOptions& opts) {
  if (!opts.inject_fault) return s;
  BitTable t = s.members();
  t.set(0, !t.test(0));
  return System(s.ground(), std::move(t));
}

// {X : G_{E-X} has the property} from {X : G_X has it}.
Family complement_indexed(const Family& f) { return Family(f.ground(), f.table().reversed()); }

void expect_family_equal(Report& r, const std::string& name, const Family& got,
                         const Family& want, const std::string& got_name,
                         const std::string& want_name) {
  const auto diff = (got.table() ^ want.table()).first_set();
  r.expect(name, !diff, got_name + " = " + want_name, [&] {
    return "subset " + subset_str(got.ground(), *diff) + " in " +
           (got.contains(*diff) ? got_name : want_name) + " only";
  });
}

void expect_family_subset(Report& r, const std::string& name, const Family& small,
                          const Family& big, const std::string& small_name,
                          const std::string& big_name) {
  const auto extra = small.table().minus(big.table()).first_set();
  r.expect(name, !extra, small_name + " subset of " + big_name, [&] {
    return "subset " + subset_str(small.ground(), *extra) + " in " + small_name + " but not " +
           big_name;
  });
}

void expect_sandwich(Report& r, const std::string& name, const ShatterProfile& p) {
  const bool ok = p.sstr.size() <= p.size && p.size <= p.str.size();
  r.expect(name, ok,
           std::to_string(p.sstr.size()) + " <= " + std::to_string(p.size) + " <= " +
               std::to_string(p.str.size()),
           [&] { return "triple (" + std::to_string(p.sstr.size()) + "," + std::to_string(p.size) +
                        "," + std::to_string(p.str.size()) + ")"; });
}

void check_geodesics(Report& r, const std::string& name, const System& s,
                     const VerifyOptions& opts) {
  const auto members = s.members().set_indices();
  if (members.size() < 2 || opts.geodesic_samples == 0) {
    r.not_applicable(name, "fewer than two members");
    return;
  }
  const std::size_t n = members.size();
  const std::size_t samples = std::min<std::size_t>(opts.geodesic_samples, n * (n - 1) / 2);
  for (std::size_t i = 0; i < samples; ++i) {
    const std::uint64_t f = members[(i * 7919) % n];
    std::uint64_t g = members[(i * 104729 + n / 2 + 1) % n];
    if (g == f) g = members[(i * 7919 + 1) % n];
    std::string problem;
    try {
      const FlipSequence seq = flip_geodesic(s, f, g);
      std::uint64_t cur = f;
      std::uint64_t touched = 0;
      for (auto c : seq.steps) {
        if ((touched >> c) & 1u) problem = "coordinate flipped twice";
        touched |= std::uint64_t{1} << c;
        cur ^= std::uint64_t{1} << c;
        if (!s.contains(cur)) problem = "left the system at " + format_word(cur, s.dim());
      }
      if (cur != g) problem = "sequence does not end at the target";
      if (seq.steps.size() != static_cast<std::size_t>(__builtin_popcountll(f ^ g))) {
        problem = "length differs from Hamming distance";
      }
    } catch (const NoGeodesic& e) {
      problem = std::string("no geodesic: ") + e.what();
    }
    if (!problem.empty()) {
      r.fail(name, "explicit flip sequences of Hamming length",
             "members " + format_word(f, s.dim()) + " and " + format_word(g, s.dim()) + ": " +
                 problem);
      return;
    }
  }
  r.pass(name, std::to_string(samples) + " sampled pairs");
}

// SE by definition, by the three equivalent criteria, by the lopsidedness
// scan, and the partial-cube / flip-sequence property.
void check_se(Report& r, const std::string& prefix, const System& s, const ShatterProfile& p,
              const VerifyOptions& opts) {
  const auto extra = p.str.table().minus(p.sstr.table()).first_set();
  r.expect(prefix + "se_by_definition", !extra, "str = sstr", [&] {
    return "subset " + subset_str(s.ground(), *extra) + " shattered but not strongly shattered";
  });
  const SeCriteria crit = se_char_check(s);
  r.expect(prefix + "se_criteria_agree", crit.consistent() && crit.str_equals_sstr,
           "str = sstr, |sstr| = |S|, |S| = |str|, complement SE", [&] {
             return std::string("criteria (") + (crit.str_equals_sstr ? "1" : "0") +
                    (crit.sstr_size_equals_size ? "1" : "0") +
                    (crit.size_equals_str_size ? "1" : "0") + (crit.complement_se ? "1" : "0") +
                    ")";
           });
  if (s.dim() <= opts.max_lopsided) {
    const auto cube = find_symmetric_restriction(s, opts.max_lopsided);
    r.expect(prefix + "se_by_lopsidedness", !cube, "no non-trivial symmetric restriction",
             [&] { return "cube " + cube->to_string(); });
  } else {
    r.not_applicable(prefix + "se_by_lopsidedness",
                     "m = " + std::to_string(s.dim()) + " above lopsidedness cap " +
                         std::to_string(opts.max_lopsided));
  }
  if (s.size() <= opts.max_partial_cube_size) {
    const PartialCubeResult pc = partial_cube_check(s, opts.max_partial_cube_size);
    r.expect(prefix + "partial_cube", pc.ok, "in-system distance = Hamming distance", [&] {
      return "members " + format_word(pc.witness->first, s.dim()) + " and " +
             format_word(pc.witness->second, s.dim());
    });
    check_geodesics(r, prefix + "flip_geodesics", s, opts);
  } else {
    r.not_applicable(prefix + "partial_cube", "|S| above partial-cube budget");
    r.not_applicable(prefix + "flip_geodesics", "|S| above partial-cube budget");
  }
}

// vc = dvc = m - opt, or the empty-system convention when opt is infeasible.
void check_vc_formula(Report& r, const ShatterProfile& p, std::uint32_t m, std::int64_t opt,
                      const std::string& opt_name) {
  if (opt == kInfeasibleMin) {
    r.measure(opt_name, std::int64_t{-1});
    r.expect("infeasible_means_empty", p.size == 0 && p.vc == -1 && p.dvc == -1,
             "no feasible subgraph: system empty, vc = dvc = -1",
             [&] { return "size " + std::to_string(p.size) + ", vc " + std::to_string(p.vc); });
    r.not_applicable("vc_formula", opt_name + " infeasible; m - " + opt_name + " not applied");
    return;
  }
  r.measure(opt_name, opt);
  const std::int64_t want = static_cast<std::int64_t>(m) - opt;
  r.expect("vc_formula", p.vc == want && p.dvc == want,
           "vc = dvc = m - " + opt_name + " = " + std::to_string(want), [&] {
             return "vc " + std::to_string(p.vc) + ", dvc " + std::to_string(p.dvc) + ", m - " +
                    opt_name + " " + std::to_string(want);
           });
}

Graph with_caps(const Graph& g, const std::vector<std::int64_t>& caps) {
  Graph out = g;
  out.set_capacities(caps);
  return out;
}

Graph with_lens(const Graph& g, const std::vector<std::int64_t>& lens) {
  Graph out = g;
  out.set_lengths(lens);
  return out;
}

void check_transform_restriction(Report& r, const TransformedNetwork& net,
                                 const OrientationPropertySpec& spec, const System& original,
                                 const VerifyOptions& opts) {
  if (net.graph.edge_count() > opts.max_edges) {
    r.not_applicable("transform_restriction", "transformed graph has " +
                                                  std::to_string(net.graph.edge_count()) +
                                                  " edges, above the enumeration cap");
    return;
  }
  const System big = build_orientation_system(net.graph, spec, enum_opts(opts));
  const System restricted = restrict(big, fixed_direction_cube(net));
  const auto diff = (restricted.members() ^ original.members()).first_set();
  r.expect("transform_restriction", !diff, "fixed-direction restriction equals the system",
           [&] { return orientation_str(*diff, original.dim()); });
}

}  // namespace

Report verify_cyclic(const Graph& g, const VerifyOptions& opts) {
  Report r;
  r.claim = "cyclic";
  r.inputs = graph_str(g);
  const EnumOptions eo = enum_opts(opts);
  const System cyc = maybe_corrupt(build_orientation_system(g, orient::Cyclic{}, eo), opts);
  const System acyc = build_orientation_system(g, orient::Acyclic{}, eo);
  const Family cycle_sub = subgraph_family(g, subgraph::HasCycle{}, eo);
  const Family forests = subgraph_family(g, subgraph::IsForest{}, eo);
  const std::uint32_t m = g.edge_count();
  const std::uint32_t n = g.vertex_count();
  const GraphStats st = graph_stats(g, SubgraphMask::full(g));
  const std::uint32_t c = st.girth.value_or(m + 1);

  r.measure("n", std::int64_t{n});
  r.measure("m", std::int64_t{m});
  r.measure("components", std::int64_t{st.components});
  r.measure("girth", st.girth ? Quantity{std::int64_t{*st.girth}} : Quantity{std::string("inf")});
  r.measure("cyclic_orientations", static_cast<std::int64_t>(cyc.size()));
  r.measure("acyclic_orientations", static_cast<std::int64_t>(acyc.size()));
  r.measure("cycle_subgraphs", static_cast<std::int64_t>(cycle_sub.size()));
  r.measure("forests", static_cast<std::int64_t>(forests.size()));

  const auto diff = (acyc.members() ^ (~cyc.members())).first_set();
  r.expect("acyclic_is_complement", !diff, "acyclic system = complement of cyclic system",
           [&] { return orientation_str(*diff, m); });

  r.expect("cyclic_ge_cycle_subgraphs", cyc.size() >= cycle_sub.size(),
           counts(cyc.size(), ">=", cycle_sub.size()),
           [&] { return counts(cyc.size(), "<", cycle_sub.size()); });
  r.expect("acyclic_le_forests", acyc.size() <= forests.size(),
           counts(acyc.size(), "<=", forests.size()),
           [&] { return counts(acyc.size(), ">", forests.size()); });

  const System not_cyc = complement(cyc);
  const ShatterProfile p = profile(cyc);
  const ShatterProfile np = profile(not_cyc);
  expect_sandwich(r, "sandwich", p);
  expect_sandwich(r, "complement_sandwich", np);
  expect_family_equal(r, "str_complement_is_forests", np.str, forests, "str(not S_cyc)",
                      "forest family");
  expect_family_equal(r, "sstr_is_cycle_family", p.sstr, complement_indexed(cycle_sub),
                      "sstr(S_cyc)", "{X : G_(E-X) has a cycle}");

  BitTable only_bridges(m);
  BitTable meets_cycle(m);
  const std::uint64_t non_bridges = g.full_mask() & ~st.bridges;
  for (std::uint64_t x = 0; x < only_bridges.size(); ++x) {
    only_bridges.set(x, (x & non_bridges) == 0);
    meets_cycle.set(x, ((g.full_mask() & ~x) & non_bridges) != 0);
  }
  expect_family_subset(r, "bridges_in_sstr_complement", Family(cyc.ground(), only_bridges),
                       np.sstr, "{X : X only bridges}", "sstr(not S_cyc)");
  expect_family_subset(r, "str_within_cycle_meeting", p.str, Family(cyc.ground(), meets_cycle),
                       "str(S_cyc)", "{X : E-X meets a cycle}");

  r.measure("vc_complement", std::int64_t{np.vc});
  r.measure("dvc_cyclic", std::int64_t{p.dvc});
  const std::int64_t want_vc = static_cast<std::int64_t>(n) - st.components;
  r.expect("vc_complement_formula", np.vc == want_vc, "vc(not S_cyc) = n - k = " +
                                                          std::to_string(want_vc),
           [&] { return "vc(not S_cyc) = " + std::to_string(np.vc); });
  const std::int64_t want_dvc = static_cast<std::int64_t>(m) - c;
  r.expect("dvc_formula", p.dvc == want_dvc, "dvc(S_cyc) = m - c = " + std::to_string(want_dvc),
           [&] { return "dvc(S_cyc) = " + std::to_string(p.dvc); });

  const std::uint64_t exponent = n - st.components;
  if (exponent == 0) {
    r.not_applicable("acyclic_bound", "n - k = 0, bound base undefined");
  } else {
    r.expect("acyclic_bound", within_exponential_bound(acyc.size(), m, exponent),
             std::to_string(acyc.size()) + " <= (me/" + std::to_string(exponent) + ")^" +
                 std::to_string(exponent),
             [&] { return "acyclic count " + std::to_string(acyc.size()); });
  }

  const bool strict = cyc.size() > cycle_sub.size() && acyc.size() < forests.size();
  const bool has_cyc = st.girth.has_value();
  r.soft.push_back(SoftFinding{"strict_iff_cycle", strict == has_cyc,
                               std::string("inequalities ") + (strict ? "strict" : "not strict") +
                                   ", graph " + (has_cyc ? "has" : "has no") + " cycle"});
  return r;
}

Report verify_strong(const Graph& g, std::uint32_t k, const VerifyOptions& opts) {
  if (k == 0) throw InputError("k must be at least 1");
  Report r;
  r.claim = "strong";
  r.inputs = graph_str(g) + " k=" + std::to_string(k);
  const EnumOptions eo = enum_opts(opts);
  const std::uint32_t m = g.edge_count();
  const System sk = maybe_corrupt(build_orientation_system(g, orient::KStrong{k}, eo), opts);
  const Family f2k = subgraph_family(g, subgraph::KConnected{2 * k}, eo);
  const Family fk = subgraph_family(g, subgraph::KConnected{k}, eo);
  const ShatterProfile p = profile(sk);

  r.measure("m", std::int64_t{m});
  r.measure("k", std::int64_t{k});
  r.measure("connected_2k_subgraphs", static_cast<std::int64_t>(f2k.size()));
  r.measure("strong_orientations", static_cast<std::int64_t>(sk.size()));
  r.measure("connected_k_subgraphs", static_cast<std::int64_t>(fk.size()));
  r.measure("vc", std::int64_t{p.vc});
  r.measure("dvc", std::int64_t{p.dvc});

  expect_sandwich(r, "sandwich", p);
  r.expect("lower_inequality", f2k.size() <= sk.size(), counts(f2k.size(), "<=", sk.size()),
           [&] { return counts(f2k.size(), ">", sk.size()); });
  r.expect("upper_inequality", sk.size() <= fk.size(), counts(sk.size(), "<=", fk.size()),
           [&] { return counts(sk.size(), ">", fk.size()); });
  expect_family_subset(r, "sstr_contains_2k_connected", complement_indexed(f2k), p.sstr,
                       "{X : G_(E-X) 2k-connected}", "sstr(S_k)");
  expect_family_subset(r, "str_within_k_connected", p.str, complement_indexed(fk), "str(S_k)",
                       "{X : G_(E-X) k-connected}");

  const std::int64_t ck = optimize_subgraph(g, objective::MinKConnected{k}, opts.max_edges);
  const std::int64_t c2k = optimize_subgraph(g, objective::MinKConnected{2 * k}, opts.max_edges);
  r.measure("c_k", ck == kInfeasibleMin ? Quantity{std::string("infeasible")} : Quantity{ck});
  r.measure("c_2k", c2k == kInfeasibleMin ? Quantity{std::string("infeasible")} : Quantity{c2k});

  if (c2k == kInfeasibleMin) {
    r.not_applicable("dvc_lower_bound", "no 2k-connected subgraph");
  } else {
    const std::int64_t lo = static_cast<std::int64_t>(m) - c2k;
    r.expect("dvc_lower_bound", lo <= p.dvc, "m - c_2k = " + std::to_string(lo) + " <= dvc",
             [&] { return "dvc " + std::to_string(p.dvc) + " < " + std::to_string(lo); });
  }
  r.expect("dvc_le_vc", p.dvc <= p.vc, "dvc <= vc",
           [&] { return "dvc " + std::to_string(p.dvc) + " > vc " + std::to_string(p.vc); });
  if (ck == kInfeasibleMin) {
    r.not_applicable("vc_upper_bound", "no k-connected subgraph");
    r.not_applicable("strong_bound", "c_k infeasible");
  } else {
    const std::int64_t hi = static_cast<std::int64_t>(m) - ck;
    r.expect("vc_upper_bound", p.vc <= hi, "vc <= m - c_k = " + std::to_string(hi),
             [&] { return "vc " + std::to_string(p.vc) + " > " + std::to_string(hi); });
    if (hi == 0) {
      r.not_applicable("strong_bound", "m - c_k = 0, bound base undefined");
    } else {
      r.expect("strong_bound", within_exponential_bound(sk.size(), m, static_cast<std::uint64_t>(hi)),
               std::to_string(sk.size()) + " <= (me/" + std::to_string(hi) + ")^" +
                   std::to_string(hi),
               [&] { return "k-strong count " + std::to_string(sk.size()); });
    }
  }

  const bool conn2k = is_k_edge_connected(g, SubgraphMask::full(g), 2 * k);
  r.measure("graph_2k_connected", conn2k);
  r.expect("nash_williams", (sk.size() > 0) == conn2k,
           "k-strong orientation exists iff 2k-connected", [&] {
             return std::string("S_k ") + (sk.size() > 0 ? "nonempty" : "empty") + ", graph " +
                    (conn2k ? "" : "not ") + "2k-connected";
           });

  const bool strict = f2k.size() < sk.size() && sk.size() < fk.size();
  r.soft.push_back(SoftFinding{"strict_iff_2k_connected", strict == conn2k,
                               std::string("inequalities ") + (strict ? "strict" : "not strict") +
                                   ", graph " + (conn2k ? "" : "not ") + "2k-connected"});
  return r;
}

namespace {

// P evaluated on the partial orientation (edges of `mask`, directions `bits`).
bool eval_partial(const Graph& g, std::uint64_t mask, std::uint64_t bits,
                  const OrientationPropertySpec& p) {
  std::vector<Edge> edges;
  std::vector<std::int64_t> caps;
  std::vector<std::int64_t> lens;
  std::uint64_t compact = 0;
  std::uint32_t j = 0;
  for (std::uint32_t e = 0; e < g.edge_count(); ++e) {
    if (!((mask >> e) & 1u)) continue;
    edges.push_back(g.edge(e));
    if (g.capacities()) caps.push_back((*g.capacities())[e]);
    if (g.lengths()) lens.push_back((*g.lengths())[e]);
    if ((bits >> e) & 1u) compact |= std::uint64_t{1} << j;
    ++j;
  }
  Graph sub(g.vertex_count(), std::move(edges));
  if (g.capacities()) sub.set_capacities(std::move(caps));
  if (g.lengths()) sub.set_lengths(std::move(lens));
  return satisfies(sub, Orientation{compact}, p);
}

std::string partial_str(std::uint64_t mask, std::uint64_t bits, std::uint32_t m) {
  std::string out(m, '.');
  for (std::uint32_t e = 0; e < m; ++e) {
    if ((mask >> e) & 1u) out[e] = ((bits >> e) & 1u) ? '1' : '0';
  }
  return out;
}

}  // namespace

Report verify_general(const Graph& g, const OrientationPropertySpec& p,
                      const SubgraphPropertySpec& p_prime, bool monotone_check,
                      const VerifyOptions& opts) {
  Report r;
  r.claim = "general";
  r.inputs = graph_str(g) + " P=" + describe(p) + " P'=" + describe(p_prime);
  const EnumOptions eo = enum_opts(opts);
  const std::uint32_t m = g.edge_count();
  const System sp = maybe_corrupt(build_orientation_system(g, p, eo), opts);
  const Family fp = subgraph_family(g, p_prime, eo);

  bool hypotheses_ok = true;
  if (monotone_check && m <= opts.max_hypothesis_edges) {
    // Table of P over all partial orientations, grouped by edge mask.
    std::vector<std::vector<bool>> table(std::size_t{1} << m);
    for (std::uint64_t mask = 0; mask < table.size(); ++mask) {
      table[mask].resize(std::size_t{1} << __builtin_popcountll(mask));
      std::uint64_t sub = 0;
      std::size_t idx = 0;
      do {
        table[mask][idx++] = eval_partial(g, mask, sub, p);
        sub = (sub - mask) & mask;
      } while (sub != 0);
    }
    // Submasks were stored in increasing order, which is the order of their
    // compressed (pext) values.
    auto lookup = [&](std::uint64_t mask, std::uint64_t bits) {
      std::size_t idx = 0;
      std::uint32_t j = 0;
      for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1, ++j) {
        if (bits & rest & (~rest + 1)) idx |= std::size_t{1} << j;
      }
      return static_cast<bool>(table[mask][idx]);
    };
    std::optional<std::string> mono_witness;
    for (std::uint64_t mask = 0; mask < table.size() && !mono_witness; ++mask) {
      std::uint64_t sub = 0;
      std::size_t idx = 0;
      do {
        if (table[mask][idx]) {
          for (std::uint32_t e = 0; e < m && !mono_witness; ++e) {
            if ((mask >> e) & 1u) continue;
            const std::uint64_t bigger = mask | (std::uint64_t{1} << e);
            for (std::uint64_t dir = 0; dir < 2; ++dir) {
              const std::uint64_t bits = sub | (dir << e);
              if (!lookup(bigger, bits)) {
                mono_witness = "partial orientation " + partial_str(mask, sub, m) +
                               " satisfies P, " + partial_str(bigger, bits, m) + " does not";
                break;
              }
            }
          }
        }
        ++idx;
        sub = (sub - mask) & mask;
      } while (sub != 0 && !mono_witness);
    }
    std::optional<std::string> orient_witness;
    for (std::uint64_t mask = 0; mask < table.size() && !orient_witness; ++mask) {
      if (!fp.contains(mask)) continue;
      if (std::none_of(table[mask].begin(), table[mask].end(), [](bool b) { return b; })) {
        orient_witness = "subgraph " + subset_str(sp.ground(), mask) +
                         " satisfies P' but no orientation of it satisfies P";
      }
    }
    hypotheses_ok = !mono_witness && !orient_witness;
    // With either hypothesis unmet the whole report is out of scope, so a
    // hypothesis that does hold is not recorded as a pass.
    auto record = [&](const char* name, const std::optional<std::string>& witness,
                      const char* holds) {
      if (witness) {
        r.not_applicable(name, "hypothesis unmet: " + *witness);
      } else if (hypotheses_ok) {
        r.pass(name, holds);
      } else {
        r.not_applicable(name, std::string("holds (") + holds + ")");
      }
    };
    record("hypothesis_monotone", mono_witness,
           "P preserved under adding an arc (all partial orientations)");
    record("hypothesis_orientable", orient_witness, "every P' subgraph has a P orientation");
  } else if (monotone_check) {
    r.not_applicable("hypothesis_monotone", "m above hypothesis-scan cap");
    r.not_applicable("hypothesis_orientable", "m above hypothesis-scan cap");
  }

  r.measure("m", std::int64_t{m});
  r.measure("subgraphs_p_prime", static_cast<std::int64_t>(fp.size()));
  r.measure("orientations_p", static_cast<std::int64_t>(sp.size()));
  r.measure("hypotheses_hold", hypotheses_ok);

  if (!hypotheses_ok) {
    r.not_applicable("general_inequality", "hypothesis unmet");
    r.not_applicable("sstr_contains_p_prime", "hypothesis unmet");
    return r;
  }
  const ShatterProfile prof = profile(sp);
  expect_sandwich(r, "sandwich", prof);
  expect_family_subset(r, "sstr_contains_p_prime", complement_indexed(fp), prof.sstr,
                       "{X : P'(G_(E-X))}", "sstr(S_P)");
  r.expect("general_inequality", fp.size() <= sp.size(), counts(fp.size(), "<=", sp.size()),
           [&] { return counts(fp.size(), ">", sp.size()); });
  return r;
}

Report verify_forbidden(const Graph& g, const Digraph& pattern, const VerifyOptions& opts) {
  Report r;
  r.claim = "forbidden";
  const Graph h = underlying_graph(pattern);
  r.inputs = graph_str(g) + " pattern=" + describe(OrientationPropertySpec{orient::Forbid{pattern}});
  const EnumOptions eo = enum_opts(opts);
  const std::uint32_t m = g.edge_count();
  const System s = maybe_corrupt(build_orientation_system(g, orient::Forbid{pattern}, eo), opts);
  const Family free = subgraph_family(g, subgraph::FreeOf{h}, eo);
  const ShatterProfile p = profile(s);
  const ShatterProfile np = profile(complement(s));
  const std::int64_t ex = optimize_subgraph(g, objective::MaxFree{h}, opts.max_edges);

  r.measure("m", std::int64_t{m});
  r.measure("D", static_cast<std::int64_t>(s.size()));
  r.measure("D_prime", static_cast<std::int64_t>(free.size()));
  r.measure("vc", std::int64_t{p.vc});
  r.measure("ex", ex);

  expect_sandwich(r, "sandwich", p);
  r.expect("D_le_D_prime", s.size() <= free.size(), counts(s.size(), "<=", free.size()),
           [&] { return counts(s.size(), ">", free.size()); });
  expect_family_subset(r, "sstr_complement_contains_copies",
                       Family(s.ground(), ~free.table().reversed()), np.sstr,
                       "{X : G_(E-X) contains H}", "sstr(not S)");
  expect_family_subset(r, "str_within_free", p.str, free, "str(S)", "{X : G_X H-free}");
  r.expect("vc_le_ex", p.vc <= ex, "vc = " + std::to_string(p.vc) + " <= ex = " + std::to_string(ex),
           [&] { return "vc " + std::to_string(p.vc) + " > ex " + std::to_string(ex); });
  return r;
}

Report verify_flow(const Graph& g, const std::vector<std::int64_t>& caps, Vertex s, Vertex t,
                   std::int64_t w, const VerifyOptions& opts) {
  Report r;
  r.claim = "flow";
  r.inputs = graph_str(g) + " caps=" + vec_str(caps) + " s=" + std::to_string(s) +
             " t=" + std::to_string(t) + " w=" + std::to_string(w);
  const Graph gc = with_caps(g, caps);
  const EnumOptions eo = enum_opts(opts);
  const std::uint32_t m = g.edge_count();
  const System sw = maybe_corrupt(build_orientation_system(gc, orient::Flow{s, t, w}, eo), opts);
  const Family fw = subgraph_family(gc, subgraph::Flow{s, t, w}, eo);
  const ShatterProfile p = profile(sw);

  r.measure("m", std::int64_t{m});
  r.measure("orientations", static_cast<std::int64_t>(sw.size()));
  r.measure("subgraphs", static_cast<std::int64_t>(fw.size()));
  r.measure("vc", std::int64_t{p.vc});
  r.measure("dvc", std::int64_t{p.dvc});

  expect_sandwich(r, "sandwich", p);
  r.expect("count_equality", sw.size() == fw.size(), counts(sw.size(), "=", fw.size()),
           [&] { return counts(sw.size(), "!=", fw.size()); });
  expect_family_equal(r, "str_characterization", p.str, complement_indexed(fw), "str(S_w)",
                      "{X : flow w in G_(E-X)}");
  expect_family_equal(r, "sstr_characterization", p.sstr, complement_indexed(fw), "sstr(S_w)",
                      "{X : flow w in G_(E-X)}");
  check_se(r, "", sw, p, opts);
  const System ns = complement(sw);
  check_se(r, "complement_", ns, profile(ns), opts);
  check_vc_formula(r, p, m, optimize_subgraph(g, objective::MinFlow{caps, s, t, w}, opts.max_edges),
                   "e_w");
  return r;
}

Report verify_distance(const Graph& g, const std::vector<std::int64_t>& lens, Vertex s, Vertex t,
                       std::int64_t d, const VerifyOptions& opts) {
  Report r;
  r.claim = "distance";
  r.inputs = graph_str(g) + " lens=" + vec_str(lens) + " s=" + std::to_string(s) +
             " t=" + std::to_string(t) + " d=" + std::to_string(d);
  const Graph gl = with_lens(g, lens);
  const EnumOptions eo = enum_opts(opts);
  const std::uint32_t m = g.edge_count();
  const System sd =
      maybe_corrupt(build_orientation_system(gl, orient::Distance{s, t, d}, eo), opts);
  const Family fd = subgraph_family(gl, subgraph::Distance{s, t, d}, eo);
  const ShatterProfile p = profile(sd);

  r.measure("m", std::int64_t{m});
  r.measure("orientations", static_cast<std::int64_t>(sd.size()));
  r.measure("subgraphs", static_cast<std::int64_t>(fd.size()));
  r.measure("vc", std::int64_t{p.vc});
  r.measure("dvc", std::int64_t{p.dvc});

  expect_sandwich(r, "sandwich", p);
  r.expect("count_equality", sd.size() == fd.size(), counts(sd.size(), "=", fd.size()),
           [&] { return counts(sd.size(), "!=", fd.size()); });
  expect_family_equal(r, "str_characterization", p.str, complement_indexed(fd), "str(S_d)",
                      "{X : dist <= d in G_(E-X)}");
  expect_family_equal(r, "sstr_characterization", p.sstr, complement_indexed(fd), "sstr(S_d)",
                      "{X : dist <= d in G_(E-X)}");
  check_se(r, "", sd, p, opts);
  const System ns = complement(sd);
  check_se(r, "complement_", ns, profile(ns), opts);
  check_vc_formula(r, p, m,
                   optimize_subgraph(g, objective::MinDistance{lens, s, t, d}, opts.max_edges),
                   "p_d");
  return r;
}

Report verify_ab_distance(const Graph& g, const std::vector<std::int64_t>& lens,
                          const std::vector<Vertex>& a, const std::vector<Vertex>& b,
                          std::int64_t d, const VerifyOptions& opts) {
  Report r;
  r.claim = "ab_distance";
  r.inputs = graph_str(g) + " lens=" + vec_str(lens) + " A=" + vertices_str(a) +
             " B=" + vertices_str(b) + " d=" + std::to_string(d);
  const Graph gl = with_lens(g, lens);
  const EnumOptions eo = enum_opts(opts);
  const std::uint32_t m = g.edge_count();
  const orient::ABDistance spec{a, b, d};
  const System sab = maybe_corrupt(build_orientation_system(gl, spec, eo), opts);
  const ShatterProfile p = profile(sab);

  // Subgraph side, evaluated directly: some a, b within distance d in G_X.
  BitTable close(m);
  std::int64_t fewest = kInfeasibleMin;
  for (std::uint64_t x = 0; x < close.size(); ++x) {
    bool ok = false;
    for (Vertex u : a) {
      for (Vertex v : b) {
        const auto dist = shortest_dist(g, SubgraphMask{x}, std::nullopt, lens, u, v);
        ok = ok || (dist && *dist <= d);
      }
    }
    close.set(x, ok);
    if (ok) fewest = std::min<std::int64_t>(fewest, __builtin_popcountll(x));
  }
  const Family fab(sab.ground(), close);

  r.measure("m", std::int64_t{m});
  r.measure("orientations", static_cast<std::int64_t>(sab.size()));
  r.measure("subgraphs", static_cast<std::int64_t>(fab.size()));
  r.measure("vc", std::int64_t{p.vc});
  r.measure("dvc", std::int64_t{p.dvc});

  expect_sandwich(r, "sandwich", p);
  r.expect("count_equality", sab.size() == fab.size(), counts(sab.size(), "=", fab.size()),
           [&] { return counts(sab.size(), "!=", fab.size()); });
  expect_family_equal(r, "str_characterization", p.str, complement_indexed(fab), "str(S_ABd)",
                      "{X : A-B dist <= d in G_(E-X)}");
  check_se(r, "", sab, p, opts);
  check_vc_formula(r, p, m, fewest, "p_d");
  const TransformedNetwork net = ab_distance_transform(g, lens, a, b);
  check_transform_restriction(r, net, orient::Distance{net.s, net.t, d}, sab, opts);
  return r;
}

Report verify_steiner(const Graph& g, Vertex s, const std::vector<Vertex>& targets,
                      const VerifyOptions& opts) {
  Report r;
  r.claim = "steiner";
  r.inputs = graph_str(g) + " s=" + std::to_string(s) + " W=" + vertices_str(targets);
  const EnumOptions eo = enum_opts(opts);
  const std::uint32_t m = g.edge_count();
  std::vector<Vertex> terminals = targets;
  terminals.push_back(s);
  const System sw = maybe_corrupt(build_orientation_system(g, orient::Reach{s, targets}, eo), opts);
  const Family conn = subgraph_family(g, subgraph::ConnectsSet{terminals}, eo);
  const ShatterProfile p = profile(sw);

  r.measure("m", std::int64_t{m});
  r.measure("orientations", static_cast<std::int64_t>(sw.size()));
  r.measure("subgraphs", static_cast<std::int64_t>(conn.size()));
  r.measure("vc", std::int64_t{p.vc});
  r.measure("dvc", std::int64_t{p.dvc});

  expect_sandwich(r, "sandwich", p);
  r.expect("count_equality", sw.size() == conn.size(), counts(sw.size(), "=", conn.size()),
           [&] { return counts(sw.size(), "!=", conn.size()); });
  expect_family_equal(r, "str_characterization", p.str, complement_indexed(conn), "str(S_sW)",
                      "{X : W+s connected in G_(E-X)}");
  check_se(r, "", sw, p, opts);
  check_vc_formula(r, p, m,
                   optimize_subgraph(g, objective::MinConnecting{terminals}, opts.max_edges),
                   "steiner_size");
  const TransformedNetwork net = steiner_transform(g, s, targets);
  check_transform_restriction(r, net, orient::Flow{net.s, net.t, net.target}, sw, opts);
  return r;
}

Suite parse_suite(const std::string& name) {
  if (name == "all") return Suite::All;
  if (name == "cyclic") return Suite::Cyclic;
  if (name == "strong") return Suite::Strong;
  if (name == "flow") return Suite::Flow;
  if (name == "dist") return Suite::Dist;
  if (name == "steiner") return Suite::Steiner;
  if (name == "forbidden") return Suite::Forbidden;
  if (name == "general") return Suite::General;
  throw InputError("unknown suite '" + name + "'");
}

namespace {

bool selected(Suite set, Suite one) {
  return (static_cast<unsigned>(set) & static_cast<unsigned>(one)) != 0;
}

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) {
  return lo + rng() % (hi - lo + 1);
}

std::vector<Vertex> random_subset(std::mt19937_64& rng, std::vector<Vertex> pool,
                                  std::size_t max_size) {
  const auto size = static_cast<std::size_t>(draw(rng, 1, std::min(max_size, pool.size())));
  for (std::size_t i = 0; i < size; ++i) {
    std::swap(pool[i], pool[static_cast<std::size_t>(draw(rng, i, pool.size() - 1))]);
  }
  pool.resize(size);
  std::sort(pool.begin(), pool.end());
  return pool;
}

using Task = std::function<Report()>;

// Per-graph tasks. Every parameter is drawn whether or not its suite is
// selected, so a suite's parameters do not depend on the selection.
void plan_graph(const Graph& g, std::size_t index, Suite suite, std::uint64_t seed,
                const VerifyOptions& opts, std::vector<Task>& tasks) {
  std::mt19937_64 rng(seed ^ (0x9E3779B97F4A7C15ULL * (index + 1)));
  const std::uint32_t n = g.vertex_count();
  const std::uint32_t m = g.edge_count();
  std::vector<std::int64_t> caps(m);
  std::vector<std::int64_t> lens(m);
  for (std::uint32_t e = 0; e < m; ++e) caps[e] = static_cast<std::int64_t>(draw(rng, 1, 4));
  for (std::uint32_t e = 0; e < m; ++e) lens[e] = static_cast<std::int64_t>(draw(rng, 1, 8));
  if (g.capacities()) caps = *g.capacities();
  if (g.lengths()) lens = *g.lengths();
  Graph weighted = g;
  weighted.set_capacities(caps);
  weighted.set_lengths(lens);
  std::vector<Vertex> all(n);
  for (Vertex v = 0; v < n; ++v) all[v] = v;

  struct Triple {
    Vertex s, t;
    std::int64_t x;
  };
  std::vector<Triple> flows;
  std::vector<Triple> dists;
  std::vector<Vertex> ab_a, ab_b;
  std::int64_t ab_d = 0;
  Vertex st_s = 0;
  std::vector<Vertex> st_w;
  if (n >= 2) {
    const auto nflow = draw(rng, 1, 3);
    for (std::uint64_t i = 0; i < nflow; ++i) {
      const auto s = static_cast<Vertex>(draw(rng, 0, n - 1));
      auto t = static_cast<Vertex>(draw(rng, 0, n - 2));
      if (t >= s) ++t;
      const std::int64_t best = max_flow(g, SubgraphMask::full(g), std::nullopt, caps, s, t);
      flows.push_back({s, t, static_cast<std::int64_t>(draw(rng, 0, best + 1))});
    }
    const auto ndist = draw(rng, 1, 3);
    for (std::uint64_t i = 0; i < ndist; ++i) {
      const auto s = static_cast<Vertex>(draw(rng, 0, n - 1));
      auto t = static_cast<Vertex>(draw(rng, 0, n - 2));
      if (t >= s) ++t;
      const auto best = shortest_dist(g, SubgraphMask::full(g), std::nullopt, lens, s, t);
      const std::int64_t top = best ? *best + 4 : 8;
      dists.push_back({s, t, static_cast<std::int64_t>(draw(rng, 0, top))});
    }
    ab_a = random_subset(rng, all, 2);
    ab_b = random_subset(rng, all, 2);
    ab_d = static_cast<std::int64_t>(draw(rng, 0, 8));
    st_s = static_cast<Vertex>(draw(rng, 0, n - 1));
    std::vector<Vertex> others;
    for (Vertex v = 0; v < n; ++v) {
      if (v != st_s) others.push_back(v);
    }
    st_w = random_subset(rng, others, 3);
  }

  if (selected(suite, Suite::Cyclic)) {
    tasks.push_back([g, opts] { return verify_cyclic(g, opts); });
  }
  if (selected(suite, Suite::Strong)) {
    for (std::uint32_t k = 1; k <= 2; ++k) {
      tasks.push_back([g, k, opts] { return verify_strong(g, k, opts); });
    }
  }
  if (selected(suite, Suite::Flow)) {
    for (const Triple& f : flows) {
      tasks.push_back([g, caps, f, opts] { return verify_flow(g, caps, f.s, f.t, f.x, opts); });
    }
  }
  if (selected(suite, Suite::Dist)) {
    for (const Triple& d : dists) {
      tasks.push_back([g, lens, d, opts] { return verify_distance(g, lens, d.s, d.t, d.x, opts); });
    }
    if (n >= 2) {
      tasks.push_back([g, lens, ab_a, ab_b, ab_d, opts] {
        return verify_ab_distance(g, lens, ab_a, ab_b, ab_d, opts);
      });
    }
  }
  if (selected(suite, Suite::Steiner) && n >= 2) {
    tasks.push_back([g, st_s, st_w, opts] { return verify_steiner(g, st_s, st_w, opts); });
  }
  if (selected(suite, Suite::Forbidden)) {
    const std::vector<Digraph> patterns = {
        make_pattern(3, {{0, 1}, {1, 2}, {2, 0}}),
        make_pattern(3, {{0, 1}, {1, 2}, {0, 2}}),
        make_pattern(3, {{0, 1}, {1, 2}}),
    };
    for (const Digraph& h : patterns) {
      tasks.push_back([g, h, opts] { return verify_forbidden(g, h, opts); });
    }
  }
  if (selected(suite, Suite::General)) {
    std::vector<std::pair<OrientationPropertySpec, SubgraphPropertySpec>> pairs = {
        {orient::Cyclic{}, subgraph::HasCycle{}},
        {orient::KStrong{1}, subgraph::KConnected{2}},
    };
    if (n >= 2) {
      const Triple& f = flows.front();
      const Triple& d = dists.front();
      pairs.push_back({orient::Reach{f.s, {f.t}}, subgraph::ConnectsSet{{f.s, f.t}}});
      std::vector<Vertex> rest;
      for (Vertex v = 1; v < n; ++v) rest.push_back(v);
      pairs.push_back({orient::Reach{0, rest}, subgraph::ConnectsSet{all}});
      pairs.push_back({orient::Flow{f.s, f.t, f.x}, subgraph::Flow{f.s, f.t, f.x}});
      pairs.push_back({orient::Distance{d.s, d.t, d.x}, subgraph::Distance{d.s, d.t, d.x}});
    }
    for (const auto& [p, q] : pairs) {
      tasks.push_back([weighted, p, q, opts] { return verify_general(weighted, p, q, true, opts); });
    }
  }
}

}  // namespace

SuiteResult run_suite(const std::vector<Graph>& corpus, Suite suite, std::uint64_t seed,
                      const VerifyOptions& opts) {
  VerifyOptions inner = opts;
  const unsigned workers = std::max(1u, opts.threads);
  if (workers > 1) inner.threads = 1;
  std::vector<Task> tasks;
  for (std::size_t i = 0; i < corpus.size(); ++i) plan_graph(corpus[i], i, suite, seed, inner, tasks);

  SuiteResult out;
  out.reports.resize(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        out.reports[i] = tasks[i]();
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  for (std::size_t i = 0; i < out.reports.size(); ++i) {
    switch (out.reports[i].verdict()) {
      case Verdict::Pass:
        ++out.passed;
        break;
      case Verdict::Fail:
        ++out.failed;
        if (!out.first_failure) out.first_failure = i;
        break;
      case Verdict::NotApplicable:
        ++out.not_applicable;
        break;
    }
  }
  return out;
}

}  // namespace orient_shatter
