// srg12: construct, verify and census graphs with lambda = 1, mu = 2.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "srg12/census.hpp"
#include "srg12/conditions.hpp"
#include "srg12/constructions.hpp"
#include "srg12/errors.hpp"
#include "srg12/graph6.hpp"
#include "srg12/identities.hpp"
#include "srg12/spectral.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace srg12;

constexpr int kExitOk = 0;
constexpr int kExitIdentity = 1;
constexpr int kExitUsage = 2;

/// Failures the user can fix: bad flags, unreadable files, infeasible input.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string graph;
  std::string out;
  std::string json_path;
  std::string params;
  std::string method = "closed";
  std::string what = "all";
  std::int64_t max_k = 1000;
  bool include_degenerate = false;
  bool exhaustive = false;
  unsigned workers = 0;
  std::size_t exhaustive_limit = kDefaultExhaustiveLimit;
  bool quiet = false;
};

json integer(const BigInt& x) {
  if (const auto v = to_int64(x)) return *v;
  return x.str();
}

std::string grouped(const BigInt& x) {
  std::string digits = (x < 0 ? BigInt(-x) : x).str();
  std::string out;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i != 0 && (digits.size() - i) % 3 == 0) out += ',';
    out += digits[i];
  }
  return (x < 0 ? "-" : "") + out;
}

Exec make_exec(const Options& o) {
  Exec exec;
  exec.workers = o.workers != 0 ? o.workers : default_worker_count();
  if (!o.quiet) {
    exec.progress = [](std::string_view stage, double fraction) {
      std::cerr << "[" << stage << "] " << std::fixed << std::setprecision(1) << 100.0 * fraction << "%\n";
    };
  }
  return exec;
}

struct LoadedGraph {
  Graph graph;
  std::string source;
};

LoadedGraph load(const Options& o) {
  if (o.graph.empty()) throw UsageError("--graph is required");
  if (const auto known = parse_known_graph(o.graph)) {
    if (*known == KnownGraph::none_known) throw UsageError("no construction is known for that graph");
    return {build_known(*known), o.graph};
  }
  try {
    return {load_graph6(o.graph), o.graph};
  } catch (const Graph6Error& e) {
    throw UsageError(o.graph + ": malformed graph6: " + e.what());
  } catch (const std::runtime_error& e) {
    throw UsageError(e.what());
  }
}

std::pair<std::int64_t, std::int64_t> parse_params(const std::string& text) {
  std::int64_t n = 0;
  std::int64_t k = 0;
  char comma = 0;
  std::istringstream in(text);
  if (!(in >> n >> comma >> k) || comma != ',' || !(in >> std::ws).eof()) {
    throw UsageError("--params expects n,k, got '" + text + "'");
  }
  return {n, k};
}

void emit_json(const Options& o, const std::string& body) {
  if (o.json_path.empty()) return;
  if (o.json_path == "-") {
    std::cout << body << '\n';
    return;
  }
  std::ofstream out(o.json_path);
  if (!out || !(out << body << '\n')) throw UsageError("cannot write " + o.json_path);
}

/// The human-readable table goes to stdout unless stdout carries JSON.
bool table_wanted(const Options& o) { return o.json_path != "-"; }

json meta_json(const Graph& g, const std::string& source) {
  json m{{"n", g.order()}, {"edges", g.edge_count()}, {"source", source}};
  bool regular = g.order() > 0;
  for (Vertex v = 1; v < g.order() && regular; ++v) regular = g.degree(v) == g.degree(0);
  m["k"] = regular ? json(g.degree(0)) : json(nullptr);
  return m;
}

void print_entries(const std::vector<const IdentityEntry*>& entries) {
  std::size_t width = 4;
  for (const auto* e : entries) width = std::max(width, e->name.size());
  for (const auto* e : entries) {
    std::cout << std::left << std::setw(8) << to_string(e->status) << std::setw(static_cast<int>(width) + 2)
              << e->name;
    if (e->expected && e->actual) {
      std::cout << "expected " << e->expected->str() << ", actual " << e->actual->str();
    }
    if (!e->note.empty()) std::cout << (e->expected ? "  (" : "(") << e->note << ")";
    std::cout << '\n';
  }
}

// ---------------------------------------------------------------------------

int cmd_construct(const Options& o) {
  const auto known = parse_known_graph(o.graph);
  if (!known || *known == KnownGraph::none_known) {
    throw UsageError("construct: --graph must be one of k3, paley9, bvls243");
  }
  const Graph g = build_known(*known);
  const std::string g6 = to_graph6(g);
  if (!o.out.empty()) {
    try {
      save_graph6(o.out, g);
    } catch (const std::runtime_error& e) {
      throw UsageError(e.what());
    }
  }
  emit_json(o, json{{"graph_meta", meta_json(g, o.graph)}, {"graph6", g6}}.dump(2));
  if (table_wanted(o)) {
    if (o.out.empty()) {
      std::cout << g6 << '\n';
    } else {
      std::cout << o.graph << ": n = " << g.order() << ", |E| = " << g.edge_count() << ", written to " << o.out
                << '\n';
    }
  }
  return kExitOk;
}

int cmd_verify(const Options& o) {
  const auto [g, source] = load(o);
  SrgParams expected{static_cast<std::int64_t>(g.order()), g.order() > 0 ? static_cast<std::int64_t>(g.degree(0)) : 0, 1, 2};
  if (!o.params.empty()) {
    const auto [n, k] = parse_params(o.params);
    expected = {n, k, 1, 2};
  }
  const SrgReport r = verify_srg(g, expected);
  const ConditionResult one = check_condition_one(g);
  const ConditionResult two = check_condition_two(g);

  auto pair_json = [](const std::optional<PairCount>& p) -> json {
    if (!p) return nullptr;
    return json{{"u", p->u}, {"v", p->v}, {"common", p->common}};
  };
  auto condition_json = [&](const ConditionResult& c) {
    return json{{"holds", c.holds},
                {"pairs_checked", c.pairs_checked},
                {"violations", c.violations.size()},
                {"first_violation", pair_json(c.first_violation())}};
  };
  json j{{"graph_meta", meta_json(g, source)},
         {"expected", {{"n", expected.n}, {"k", expected.k}, {"lambda", expected.lambda}, {"mu", expected.mu}}},
         {"regular", r.regular},
         {"lambda", r.lambda ? json(*r.lambda) : json(nullptr)},
         {"mu", r.mu ? json(*r.mu) : json(nullptr)},
         {"lambda_witness", pair_json(r.lambda_witness)},
         {"mu_witness", pair_json(r.mu_witness)},
         {"order_relation", r.order_relation},
         {"condition_one", condition_json(one)},
         {"condition_two", condition_json(two)},
         {"mismatches", r.mismatches},
         {"ok", r.ok()}};
  emit_json(o, j.dump(2));
  if (table_wanted(o)) {
    std::cout << source << ": n = " << g.order() << ", |E| = " << g.edge_count() << '\n';
    std::cout << "regular            " << (r.regular ? "yes" : "no") << '\n';
    std::cout << "condition I        " << (one.holds ? "holds" : "fails") << " (" << one.violations.size()
              << " of " << one.pairs_checked << " edges violate)\n";
    std::cout << "condition II       " << (two.holds ? "holds" : "fails") << " (" << two.violations.size()
              << " of " << two.pairs_checked << " non-edges violate)\n";
    std::cout << "order relation     " << (r.order_relation ? "holds" : "fails") << '\n';
    for (const auto& m : r.mismatches) std::cout << "mismatch: " << m << '\n';
    std::cout << (r.ok() ? "srg(" : "not srg(") << expected.n << "," << expected.k << ",1,2)\n";
  }
  return r.ok() ? kExitOk : kExitIdentity;
}

int cmd_census(const Options& o) {
  const auto [g, source] = load(o);
  const Exec exec = make_exec(o);
  const bool family = is_family_graph(g);
  const std::string& what = o.what;
  const bool all = what == "all";
  json counts;
  std::vector<std::pair<std::string, std::string>> rows;
  auto row = [&](const std::string& k, const auto& v) {
    std::ostringstream s;
    s << v;
    rows.emplace_back(k, s.str());
  };

  try {
    if (all || what == "cycles") {
      const CycleCensus c{count_triangles(g), count_quadrilaterals(g, family || g.order() > 64),
                          count_pentagons(g, exec), count_hexagons(g, exec)};
      counts["cycles"] = {{"p3", c.p3}, {"p4", c.p4}, {"p5", c.p5}, {"p6", c.p6}};
      row("p3", c.p3);
      row("p4", c.p4);
      row("p5", c.p5);
      row("p6", c.p6);
      if (family) {
        const auto w = coded_walk_census(g, exec);
        counts["coded_walks"] = {{"total", w.total}, {"p5", w.p5}, {"t1", w.t1}, {"t2", w.t2}};
        row("coded walks", w.total);
        row("t1", w.t1);
        row("t2", w.t2);
      }
    }
    if (all || what == "triples") {
      const auto t = edge_triple_census(g, exec);
      counts["triples"] = {{"e4", t.e4}, {"e5", t.e5}, {"e6", t.e6}, {"total", t.total()}};
      row("e4", t.e4);
      row("e5", t.e5);
      row("e6", t.e6);
    }
    if (all || what == "types") {
      if (!family && !o.exhaustive) {
        throw UsageError("census --what types needs a lambda = 1, mu = 2 graph (or --exhaustive)");
      }
      if (family) {
        const TypeCensus t = family_census(g, exec).types();
        json types;
        for (SixType s : kNamedSixTypes) {
          types[std::string(to_string(s))] = {{"label", type_label(s)}, {"count", t[s]}};
          row(std::string(type_label(s)) + " " + std::string(to_string(s)), t[s]);
        }
        types["aggregate_n6_7_10_11"] = t.aggregate();
        counts["types"] = types;
      }
    }
    if (o.exhaustive) {
      const auto classes = exhaustive_six_census(g, o.exhaustive_limit);
      json arr = json::array();
      for (const auto& c : classes) {
        arr.push_back({{"certificate", c.info->cls.certificate},
                       {"edges", c.info->cls.edge_count},
                       {"type", to_string(c.info->type)},
                       {"det", c.info->det},
                       {"cover", c.info->cover},
                       {"count", c.count}});
      }
      counts["exhaustive"] = arr;
      row("exhaustive classes", classes.size());
    }
  } catch (const PreconditionError& e) {
    throw UsageError(e.what());
  }

  json residuals = json::array();
  bool failed = false;
  if (family) {
    const IdentityReport report = run_all_checks(g, source, exec, o.exhaustive ? o.exhaustive_limit : 0);
    std::vector<std::string> groups;
    if (all || what == "cycles") groups.insert(groups.end(), {"cycles", "walks", "hexagon"});
    if (all || what == "triples") groups.emplace_back("triples");
    if (all || what == "types") groups.insert(groups.end(), {"types", "hexagon"});
    if (o.exhaustive) groups.emplace_back("exhaustive");
    std::vector<const IdentityEntry*> picked;
    for (const auto& e : report.entries) {
      if (std::find(groups.begin(), groups.end(), e.group) == groups.end()) continue;
      if (std::find(picked.begin(), picked.end(), &e) != picked.end()) continue;
      picked.push_back(&e);
      failed = failed || e.status == EntryStatus::fail;
      residuals.push_back({{"name", e.name},
                           {"formula", e.formula},
                           {"expected", e.expected ? integer(*e.expected) : json(nullptr)},
                           {"actual", e.actual ? integer(*e.actual) : json(nullptr)},
                           {"residual", e.expected && e.actual ? integer(*e.actual - *e.expected) : json(nullptr)},
                           {"status", to_string(e.status)}});
    }
    if (table_wanted(o)) {
      for (const auto& [k, v] : rows) std::cout << std::left << std::setw(40) << k << v << '\n';
      std::cout << '\n';
      print_entries(picked);
    }
  } else if (table_wanted(o)) {
    for (const auto& [k, v] : rows) std::cout << std::left << std::setw(40) << k << v << '\n';
    std::cout << "(not a lambda = 1, mu = 2 graph: no identities apply)\n";
  }

  emit_json(o, json{{"graph_meta", meta_json(g, source)}, {"counts", counts}, {"identities", residuals}}.dump(2));
  return failed ? kExitIdentity : kExitOk;
}

int cmd_spectral(const Options& o) {
  if (o.params.empty()) throw UsageError("spectral: --params n,k is required");
  const auto [n, k] = parse_params(o.params);
  if (n < 0 || k < 0) throw UsageError("spectral: n and k must be non-negative");
  Spectrum s;
  try {
    s = srg_spectrum({n, k, 1, 2});
  } catch (const InfeasibleParams& e) {
    throw UsageError(std::string("infeasible parameters: ") + e.what());
  }

  BigInt c6;
  std::vector<BigInt> traces;
  try {
    if (o.method == "closed") {
      c6 = c6_closed_form(n, k);
    } else if (o.method == "sum") {
      c6 = c6_binomial_sum(s);
    } else if (o.method == "trace") {
      if (!o.graph.empty()) {
        const auto [g, source] = load(o);
        if (static_cast<std::int64_t>(g.order()) != n) {
          throw UsageError("spectral: graph has " + std::to_string(g.order()) + " vertices, --params says " +
                           std::to_string(n));
        }
        const auto prefix = charpoly_prefix(g, 6, make_exec(o));
        c6 = prefix[6];
        traces = prefix.traces;
      } else {
        traces = srg_traces({n, k, 1, 2}, 6);
        c6 = newton_coefficients(traces, 6)[6];
      }
    } else {
      throw UsageError("spectral: --method must be closed, sum or trace");
    }
  } catch (const InfeasibleParams& e) {
    throw UsageError(std::string("infeasible parameters: ") + e.what());
  }

  json trace_json = json::array();
  for (const auto& t : traces) trace_json.push_back(integer(t));
  json j{{"method", o.method},
         {"params", {{"n", n}, {"k", k}, {"lambda", 1}, {"mu", 2}}},
         {"c6", integer(c6)},
         {"intermediate",
          {{"lambda1", s.lambda1}, {"lambda2", s.lambda2}, {"r1", s.r1}, {"r2", s.r2}, {"traces", trace_json}}}};
  emit_json(o, j.dump(2));
  if (table_wanted(o)) {
    std::cout << "srg(" << n << "," << k << ",1,2): eigenvalues " << k << "^1 " << s.lambda1 << "^" << s.r1 << " "
              << s.lambda2 << "^" << s.r2 << '\n';
    std::cout << "c6 = " << c6.str() << " (" << grouped(c6) << ", " << o.method << ")\n";
  }
  return kExitOk;
}

int cmd_check(const Options& o) {
  const auto [g, source] = load(o);
  const IdentityReport report = run_all_checks(g, source, make_exec(o), o.exhaustive_limit);
  emit_json(o, report.to_json());
  if (table_wanted(o)) {
    std::vector<const IdentityEntry*> all;
    for (const auto& e : report.entries) all.push_back(&e);
    std::cout << source << ": n = " << report.meta.n << ", |E| = " << report.meta.edges << '\n';
    print_entries(all);
    std::cout << report.count(EntryStatus::pass) << " pass, " << report.count(EntryStatus::fail) << " fail, "
              << report.count(EntryStatus::skipped) << " skipped, " << report.count(EntryStatus::info)
              << " informational\n";
  }
  return report.all_pass() ? kExitOk : kExitIdentity;
}

int cmd_params(const Options& o) {
  const auto rows = feasible_parameters(o.max_k, o.include_degenerate);
  json arr = json::array();
  for (const auto& p : rows) {
    json c6 = nullptr;
    try {
      c6 = integer(c6_closed_form(p.n, p.k));
    } catch (const InfeasibleParams&) {
    }
    arr.push_back({{"n", p.n},
                   {"k", p.k},
                   {"lambda1", p.lambda1},
                   {"lambda2", p.lambda2},
                   {"r1", p.r1},
                   {"r2", p.r2},
                   {"c6", c6},
                   {"known_graph", to_string(p.known_graph)}});
  }
  emit_json(o, json{{"max_k", o.max_k}, {"rows", arr}}.dump(2));
  if (table_wanted(o)) {
    std::cout << std::right << std::setw(8) << "n" << std::setw(6) << "k" << std::setw(6) << "l1" << std::setw(6)
              << "l2" << std::setw(9) << "r1" << std::setw(9) << "r2" << std::setw(36) << "c6"
              << "  known\n";
    for (const auto& p : rows) {
      std::string c6 = "-";
      try {
        c6 = grouped(c6_closed_form(p.n, p.k));
      } catch (const InfeasibleParams&) {
      }
      std::cout << std::setw(8) << p.n << std::setw(6) << p.k << std::setw(6) << p.lambda1 << std::setw(6)
                << p.lambda2 << std::setw(9) << p.r1 << std::setw(9) << p.r2 << std::setw(36) << c6 << "  "
                << to_string(p.known_graph) << '\n';
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Strongly regular graphs with lambda = 1, mu = 2: constructions, censuses and identity checks"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--json", o.json_path, "Write JSON to PATH ('-' for stdout)");
    sub->add_option("--workers", o.workers, "Worker threads (default: SRG12_WORKERS or all cores)")
        ->check(CLI::PositiveNumber);
    sub->add_flag("--quiet", o.quiet, "No progress on stderr");
  };
  const std::string graph_help = "Builtin (k3, paley9, bvls243) or graph6 file";

  auto* construct = app.add_subcommand("construct", "Build a known graph and export graph6");
  construct->add_option("--graph", o.graph, "k3, paley9 or bvls243")->required();
  construct->add_option("--out", o.out, "graph6 output file (default: stdout)");
  add_common(construct);

  auto* verify = app.add_subcommand("verify", "Check strong regularity with lambda = 1, mu = 2");
  verify->add_option("--graph", o.graph, graph_help)->required();
  verify->add_option("--params", o.params, "Expected n,k");
  add_common(verify);

  auto* census = app.add_subcommand("census", "Count cycles, edge triples and six-vertex types");
  census->add_option("--graph", o.graph, graph_help)->required();
  census->add_option("--what", o.what, "cycles, triples, types or all")
      ->check(CLI::IsMember({"cycles", "triples", "types", "all"}));
  census->add_flag("--exhaustive", o.exhaustive, "Also classify every 6-vertex subset");
  census->add_option("--exhaustive-limit", o.exhaustive_limit, "Largest order for --exhaustive");
  add_common(census);

  auto* spectral = app.add_subcommand("spectral", "c6 of srg(n,k,1,2)");
  spectral->add_option("--params", o.params, "n,k")->required();
  spectral->add_option("--method", o.method, "closed, sum or trace")
      ->check(CLI::IsMember({"closed", "sum", "trace"}));
  spectral->add_option("--graph", o.graph, "graph6 file for --method trace");
  add_common(spectral);

  auto* check = app.add_subcommand("check", "Evaluate every identity and report pass/fail");
  check->add_option("--graph", o.graph, graph_help)->required();
  check->add_option("--exhaustive-limit", o.exhaustive_limit, "Largest order for the exhaustive cross-check");
  add_common(check);

  auto* params = app.add_subcommand("params", "Feasible parameters up to a degree");
  params->add_option("--max-k", o.max_k, "Largest degree")->check(CLI::NonNegativeNumber);
  params->add_flag("--include-degenerate", o.include_degenerate, "Include k = 2 (the triangle)");
  add_common(params);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*construct) return cmd_construct(o);
    if (*verify) return cmd_verify(o);
    if (*census) return cmd_census(o);
    if (*spectral) return cmd_spectral(o);
    if (*check) return cmd_check(o);
    if (*params) return cmd_params(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InconsistencyError& e) {
    std::cerr << "inconsistent: " << e.what() << '\n';
    return kExitIdentity;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
