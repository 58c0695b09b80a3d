#include "srg12/identities.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

#include "srg12/conditions.hpp"
#include "srg12/errors.hpp"
#include "srg12/spectral.hpp"

namespace srg12 {
namespace {

using Rational = boost::multiprecision::cpp_rational;

/// Closed forms in (n, k) for the lambda = 1, mu = 2 family, as exact
/// rationals so that non-integral points are visible rather than truncated.
struct FamilyForms {
  Rational n, k;

  Rational nk() const { return n * k; }
  Rational edges() const { return nk() / 2; }
  Rational p3() const { return nk() / 6; }
  Rational p4() const { return nk() * (k - 2) / 8; }
  Rational p5() const { return nk() * (k - 2) * (k - 4) / 5; }
  Rational edge_pentagons() const { return 2 * (k - 2) * (k - 4); }
  Rational coded_walks() const { return 2 * nk() * (k - 2) * (k - 2); }

  Rational e4() const { return nk() * (4 * k * k - 9 * k + 3) / 6; }
  // Triangles, 3-stars and paths on three edges.
  Rational e4_counted() const {
    return nk() / 6 + n * k * (k - 1) * (k - 2) / 6 + edges() * ((k - 1) * (k - 1) - 1);
  }
  Rational e5() const { return nk() * (k - 2) * (k * k * k + k * k - 8 * k + 2) / 8; }
  // A cherry or a 2-path on one side plus a disjoint edge, by centre vertex.
  Rational e5_counted() const {
    const Rational cherries_in_triangles = k / 2;
    const Rational open_cherries = k * (k - 1) / 2 - k / 2;
    return n * (cherries_in_triangles * (edges() - 3 * (k - 2) - 3) +
                open_cherries * (edges() - (k - 2) - 2 * (k - 1) - 2));
  }
  Rational e5_counted_alt() const {
    return nk() * (k - 1) * (edges() - 3 * k + 2) / 2 + edges();
  }

  Rational rhs3() const { return nk() * (k - 2) / 2; }
  Rational rhs4() const { return nk() * (k - 2) * (k - 4); }
  Rational rhs5() const { return nk() * (k - 2) / 2; }
  Rational rhs6() const { return nk() * (k - 2) / 4; }
  Rational rhs7() const { return nk() * (k - 2) * (k - 3) / 4; }
  Rational rhs8() const {
    const Rational half = k / 2;
    return p3() * (p3() - 1) / 2 - n * half * (half - 1) / 2;
  }
  Rational rhs9() const { return p4() * (edges() - 4 * (k - 2) - 4); }

  Rational c6() const {
    return -nk() * (k - 2) *
           (3 * k * k * k * k * k + 6 * k * k * k * k - 84 * k * k * k + 116 * k * k + 124 * k - 240) / 576;
  }

  Rational bound(const ChainCoefficients& c) const {
    return nk() * (k - 2) * (c.bound_k2 * k * k + c.bound_k1 * k + c.bound_k0) / 12;
  }

  // n12 - n3 assembled from the expansion of c6 + C(|E|,3): halve it, take out
  // twice the disjoint-triangle relation and the quadrilateral-plus-edge
  // relation, then substitute the remaining relations and n4 = 2 n3.
  Rational hexagons_minus_n3(const Rational& c6_value) const {
    const Rational e = edges();
    const Rational triples = e * (e - 1) * (e - 2) / 6;
    const Rational minus_f =
        (c6_value + triples - e4() - e5()) / 2 - 2 * rhs8() - rhs9() + rhs3() + rhs4() + rhs7();
    return -minus_f;
  }
};

FamilyForms forms(std::int64_t n, std::int64_t k) { return {Rational(n), Rational(k)}; }

std::optional<BigInt> as_integer(const Rational& r) {
  if (boost::multiprecision::denominator(r) != 1) return std::nullopt;
  return BigInt(boost::multiprecision::numerator(r));
}

BigInt big(std::uint64_t x) { return BigInt(x); }

class Ledger {
 public:
  explicit Ledger(std::vector<IdentityEntry>& out) : out_(out) {}

  void skip_all(std::string reason) { skip_reason_ = std::move(reason); }
  void group(std::string name) { group_ = std::move(name); }
  bool skipping() const { return !skip_reason_.empty(); }

  void compare(std::string name, std::string formula, const std::function<BigInt()>& expected,
               const std::function<BigInt()>& actual, std::string note = {}) {
    IdentityEntry e{std::move(name), std::move(formula), {}, {}, EntryStatus::skipped, std::move(note), {}};
    if (skipping()) {
      e.note = "skipped: " + skip_reason_;
      push(std::move(e));
      return;
    }
    try {
      e.expected = expected();
      e.actual = actual();
      e.status = *e.expected == *e.actual ? EntryStatus::pass : EntryStatus::fail;
    } catch (const std::exception& ex) {
      e.status = EntryStatus::fail;
      e.note = ex.what();
    }
    push(std::move(e));
  }

  void compare_form(std::string name, std::string formula, const std::function<Rational()>& expected,
               const std::function<BigInt()>& actual, std::string note = {}) {
    compare(
        std::move(name), std::move(formula),
        [&]() -> BigInt {
          const Rational r = expected();
          const auto v = as_integer(r);
          if (!v) throw InconsistencyError("closed form is not an integer here: " + r.str());
          return *v;
        },
        actual, std::move(note));
  }

  void skip(std::string name, std::string formula, std::string reason) {
    push({std::move(name), std::move(formula), {}, {}, EntryStatus::skipped,
                    "skipped: " + (skipping() ? skip_reason_ : std::move(reason)), {}});
  }

  void info(std::string name, std::string formula, std::optional<BigInt> expected,
            std::optional<BigInt> actual, std::string note) {
    if (skipping()) {
      skip(std::move(name), std::move(formula), {});
      return;
    }
    push({std::move(name), std::move(formula), std::move(expected), std::move(actual),
          EntryStatus::info, std::move(note), {}});
  }

 private:
  void push(IdentityEntry e) {
    e.group = group_;
    out_.push_back(std::move(e));
  }

  std::vector<IdentityEntry>& out_;
  std::string skip_reason_;
  std::string group_;
};

std::string describe(const PairCount& p) {
  return "{" + std::to_string(p.u) + "," + std::to_string(p.v) + "} has " + std::to_string(p.common) +
         " common neighbors";
}

void condition_entries(const Graph& g, std::vector<IdentityEntry>& out) {
  const ConditionResult one = check_condition_one(g);
  const ConditionResult two = check_condition_two(g);
  auto add = [&](std::string name, std::string formula, const ConditionResult& r) {
    IdentityEntry e{std::move(name), std::move(formula), big(0), big(r.violations.size()),
                    r.holds ? EntryStatus::pass : EntryStatus::fail,
                    std::to_string(r.pairs_checked) + " pairs checked", {}};
    if (const auto w = r.first_violation()) e.note += "; first violation: " + describe(*w);
    e.group = "conditions";
    out.push_back(std::move(e));
  };
  add("condition I", "every edge lies in exactly one triangle (violations = 0)", one);
  add("condition II", "every non-adjacent pair has exactly two common neighbors (violations = 0)", two);

  const auto n = g.order();
  IdentityEntry reg{"regularity", "every vertex has the degree of vertex 0 (irregular vertices = 0)",
                    big(0), big(0), EntryStatus::pass, {}, {}};
  if (n == 0) {
    reg.status = EntryStatus::skipped;
    reg.note = "skipped: empty graph";
    reg.expected.reset();
    reg.actual.reset();
  } else {
    std::uint64_t irregular = 0;
    std::optional<Vertex> first;
    for (Vertex v = 0; v < n; ++v) {
      if (g.degree(v) != g.degree(0)) {
        ++irregular;
        if (!first) first = v;
      }
    }
    reg.actual = big(irregular);
    if (irregular != 0) {
      reg.status = EntryStatus::fail;
      reg.note = "vertex " + std::to_string(*first) + " has degree " + std::to_string(g.degree(*first)) +
                 ", vertex 0 has " + std::to_string(g.degree(0));
    }
  }
  reg.group = "conditions";
  out.push_back(std::move(reg));
}

/// Targeted censuses in counting scope; the report, not the kernels, decides
/// whether the identities hold.
struct Counts {
  CycleCensus cycles;
  CodedWalkCensus walks;
  EdgeTripleCensus triples;
  TrianglePairCensus triangle_pairs;
  QuadPairCensus quad_pairs;
  PentagonTriangleCensus pentagon_triangles;
  QuadPlusEdgeCensus quad_plus_edge;
  TriangleCompletionCensus completions;
  std::uint64_t n2 = 0;
  CharPolyPrefix charpoly;

  std::uint64_t type(SixType t) const {
    switch (t) {
      case SixType::prism: return triangle_pairs.prism;
      case SixType::c4_adjacent_triangles: return n2;
      case SixType::triangles_two_edges: return triangle_pairs.two_edges;
      case SixType::pentagon_apex_opposite: return quad_pairs.pentagon_apex_opposite;
      case SixType::triangles_one_edge: return triangle_pairs.one_edge;
      case SixType::pentagon_apex: return pentagon_triangles.pentagon_apex;
      case SixType::domino: return quad_pairs.domino;
      case SixType::hexagon: return cycles.p6;
      case SixType::two_triangles: return triangle_pairs.none;
      default: return quad_plus_edge.count(t);
    }
  }
};

Counts gather(const Graph& g, const Exec& exec) {
  Counts c;
  c.cycles = cycle_census(g, exec);
  c.walks = coded_walk_census(g, exec);
  c.triples = edge_triple_census(g, exec);
  c.triangle_pairs = disjoint_triangle_pair_census(g, exec);
  c.quad_pairs = quad_pair_census(g, Scope::any_graph);
  c.pentagon_triangles = pentagon_triangle_census(g, Scope::any_graph, exec);
  c.quad_plus_edge = quad_plus_edge_census(g, Scope::any_graph, exec);
  c.completions = triangle_edge_completion_census(g, Scope::any_graph);
  c.n2 = count_n2(g, Scope::any_graph);
  c.charpoly = charpoly_prefix(g, 6, exec);
  return c;
}

std::string label(SixType t) { return std::string(type_label(t)) + " (" + std::string(to_string(t)) + ")"; }

void family_entries(const Graph& g, Ledger& L, const Exec& exec, std::size_t exhaustive_limit) {
  const auto n = static_cast<std::int64_t>(g.order());
  const auto k = static_cast<std::int64_t>(g.order() > 0 ? g.degree(0) : 0);
  const FamilyForms F = forms(n, k);
  const std::uint64_t m = g.edge_count();

  Counts c;
  if (!L.skipping()) {
    try {
      c = gather(g, exec);
    } catch (const std::exception& ex) {
      L.group("conditions");
      L.compare("census consistency", "every census kernel completes", [] { return BigInt(0); },
                [] { return BigInt(1); }, ex.what());
      L.skip_all(std::string("census failed: ") + ex.what());
    }
  }
  auto t = [&](SixType s) { return BigInt(c.type(s)); };

  L.group("conditions");
  L.compare("order relation", "k(k-2) = 2(n-k-1)", [&] { return BigInt(k * (k - 2)); },
            [&] { return BigInt(2 * (n - k - 1)); });
  L.compare_form("order formula", "n = (k^2+2)/2", [&] { return Rational(k * k + 2) / 2; },
            [&] { return BigInt(n); });

  L.group("cycles");
  L.compare_form("triangles", "p3 = nk/6", [&] { return F.p3(); }, [&] { return big(c.cycles.p3); });
  L.compare_form("quadrilaterals", "p4 = nk(k-2)/8", [&] { return F.p4(); }, [&] { return big(c.cycles.p4); });
  L.compare_form("pentagons", "p5 = nk(k-2)(k-4)/5", [&] { return F.p5(); }, [&] { return big(c.cycles.p5); });

  {
    std::string note;
    L.compare_form(
        "pentagons through each edge", "every edge lies on 2(k-2)(k-4) pentagons",
        [&] { return F.edge_pentagons(); },
        [&]() -> BigInt {
          const auto want = as_integer(F.edge_pentagons()).value_or(-1);
          std::optional<BigInt> first_off;
          std::uint64_t off = 0;
          std::optional<std::uint64_t> common;
          for (const Edge& e : g.edges()) {
            const auto here = pentagons_through_edge(g, e);
            if (!common) common = here;
            if (BigInt(here) != want) {
              ++off;
              if (!first_off) first_off = BigInt(here);
              note = std::to_string(off) + " edges off, first {" + std::to_string(e.u) + "," +
                     std::to_string(e.v) + "}";
            }
          }
          if (first_off) throw InconsistencyError(note + " lies on " + first_off->str() + " pentagons");
          return BigInt(common.value_or(0));
        },
        "all " + std::to_string(m) + " edges checked");
  }

  L.group("walks");
  L.compare_form("coded walk total", "closed 5-walks with distances 0,1,2,2,1 = 2nk(k-2)^2",
            [&] { return F.coded_walks(); }, [&] { return big(c.walks.total); });
  L.compare("coded walk decomposition", "walks = 10 p5 + 6 t1 + 2 t2", [&] { return big(c.walks.total); },
            [&] { return big(10 * c.cycles.p5 + 6 * c.walks.t1 + 2 * c.walks.t2); },
            "p5 from the pentagon census");
  L.compare("houses", "t1 = 4 p4", [&] { return big(4 * c.cycles.p4); }, [&] { return big(c.walks.t1); });
  L.compare("triangles with a pendant", "t2 = 3(k-2) p3",
            [&] { return BigInt(3 * (k - 2)) * c.cycles.p3; }, [&] { return big(c.walks.t2); });

  L.group("triples");
  L.compare_form("edge triples on at most four vertices", "e4 = nk(4k^2-9k+3)/6", [&] { return F.e4(); },
            [&] { return big(c.triples.e4); });
  L.compare_form("edge triples on five vertices", "e5 = nk(k-2)(k^3+k^2-8k+2)/8", [&] { return F.e5(); },
            [&] { return big(c.triples.e5); });
  L.compare("edge triples total", "e4 + e5 + e6 = C(|E|,3)",
            [&] { return binomial(static_cast<std::int64_t>(m), 3); },
            [&] { return BigInt(c.triples.e4) + c.triples.e5 + c.triples.e6; });

  L.group("types");
  L.compare_form("relation n2", "n2 = 4 p4 = nk(k-2)/2", [&] { return F.rhs3(); },
            [&] { return t(SixType::c4_adjacent_triangles); });
  L.compare_form("relation n4 + n8", "n4 + n8 = 5 p5 = nk(k-2)(k-4)", [&] { return F.rhs4(); },
            [&] { return t(SixType::pentagon_apex_opposite) + t(SixType::pentagon_apex); });
  L.compare_form("relation 6n1 + n4", "6 n1 + n4 = 3(k-2) p3 = nk(k-2)/2", [&] { return F.rhs5(); },
            [&] { return 6 * t(SixType::prism) + t(SixType::pentagon_apex_opposite); });
  L.compare_form("relation 3n1 + n3", "3 n1 + n3 = nk(k-2)/4", [&] { return F.rhs6(); },
            [&] { return 3 * t(SixType::prism) + t(SixType::triangles_two_edges); });
  L.compare_form("relation 3n1 + n4 + n9", "3 n1 + n4 + n9 = |E| C(k-2,2) = nk(k-2)(k-3)/4",
            [&] { return F.rhs7(); },
            [&] { return 3 * t(SixType::prism) + t(SixType::pentagon_apex_opposite) + t(SixType::domino); });
  L.compare_form("relation disjoint triangles", "n1 + n3 + n5 + n14 = C(p3,2) - n C(k/2,2)",
            [&] { return F.rhs8(); },
            [&] {
              return t(SixType::prism) + t(SixType::triangles_two_edges) + t(SixType::triangles_one_edge) +
                     t(SixType::two_triangles);
            });
  L.compare_form("relation quadrilateral plus edge",
            "3 n1 + 2 n4 + n6_7_10_11 + 2 n9 + n13 = p4 (|E| - 4(k-2) - 4)", [&] { return F.rhs9(); },
            [&] {
              BigInt agg = 0;
              for (SixType a : kAggregateTypes) agg += t(a);
              return 3 * t(SixType::prism) + 2 * t(SixType::pentagon_apex_opposite) + agg +
                     2 * t(SixType::domino) + t(SixType::c4_plus_edge);
            },
            "n6_7_10_11 sums the four quadrilateral-plus-edge types; which of them carries which "
            "conventional number is not determined");

  L.compare("n1 from quadrilateral pairs", "prisms: quadrilateral pairs / 3 = disjoint triangle pairs",
            [&] { return t(SixType::prism); }, [&] { return big(c.quad_pairs.prism()); });
  L.compare("n1 from triangle completions", "prisms: triangle completions / 6 = disjoint triangle pairs",
            [&] { return t(SixType::prism); }, [&] { return big(c.completions.prism()); });
  L.compare("n1 from quadrilateral plus edge", "prisms: quadrilateral-edge splits / 3 = disjoint triangle pairs",
            [&] { return t(SixType::prism); }, [&] { return big(c.quad_plus_edge.count(SixType::prism)); });
  L.compare("n4 from pentagon completions", "n4 from pentagon sides = n4 from quadrilateral pairs",
            [&] { return t(SixType::pentagon_apex_opposite); },
            [&] { return big(c.pentagon_triangles.pentagon_apex_opposite); });
  L.compare("n4 from triangle completions", "n4 from triangle completions = n4 from quadrilateral pairs",
            [&] { return t(SixType::pentagon_apex_opposite); },
            [&] { return big(c.completions.pentagon_apex_opposite); });
  L.compare("n9 from quadrilateral plus edge", "dominoes: quadrilateral-edge splits / 2 = quadrilateral pairs",
            [&] { return t(SixType::domino); }, [&] { return big(c.quad_plus_edge.count(SixType::domino)); });
  L.compare("n4 = 2 n3", "n4 = 2 n3 (from 6n1 + n4 and 3n1 + n3)",
            [&] { return 2 * t(SixType::triangles_two_edges); },
            [&] { return t(SixType::pentagon_apex_opposite); });

  L.group("spectral");
  L.compare("c2", "c2 = -|E|", [&] { return -BigInt(m); }, [&] { return c.charpoly[2]; });
  L.compare("c3", "c3 = -2 p3", [&] { return -2 * big(c.cycles.p3); }, [&] { return c.charpoly[3]; });

  L.group("types");
  L.compare("master identity", "c6 + C(|E|,3) = sum over types of (det + cover) n_t + e4 + e5",
            [&] { return c.charpoly[6] + binomial(static_cast<std::int64_t>(m), 3); },
            [&] {
              BigInt s = BigInt(c.triples.e4) + c.triples.e5;
              for (SixType ty : kNamedSixTypes) s += BigInt(six_type_info(ty).weight()) * t(ty);
              return s;
            },
            "left side from traces, right side from the type censuses");

  L.group("spectral");
  L.compare_form("c6 closed form", "c6 closed form = c6 from traces", [&] { return F.c6(); },
            [&] { return c.charpoly[6]; });
  L.compare("c6 eigenvalue sum", "c6 = k e5 + e6 of the restricted eigenvalues = c6 from traces",
            [&] { return c6_binomial_sum(srg_spectrum({n, k, 1, 2})); }, [&] { return c.charpoly[6]; });
  if (n <= 10) {
    L.compare("c6 determinant sum", "c6 = sum of det over 6-vertex induced subgraphs = c6 from traces",
              [&] { return ci_detsum(g, 6); }, [&] { return c.charpoly[6]; });
  } else {
    L.skip("c6 determinant sum", "c6 = sum of det over 6-vertex induced subgraphs = c6 from traces",
           "brute force limited to 10 vertices");
  }

  L.group("hexagon");
  L.compare("hexagon identity", "n12 - n3 = nk(k-2)(2k^2-21k+53)/12", [&] { return hexagon_bound(n, k); },
            [&] { return t(SixType::hexagon) - t(SixType::triangles_two_edges); });

  if (!L.skipping()) {
    const BigInt bound = hexagon_bound(n, k);
    const BigInt p6 = big(c.cycles.p6);
    L.info("hexagon lower bound", "p6 >= nk(k-2)(2k^2-21k+53)/12", bound, p6,
           p6 >= bound ? "holds" : "violated");
    const auto n3 = c.triangle_pairs.two_edges;
    std::string note = n3 == 0 ? "n3 = 0: no two triangles are joined by exactly two edges"
                               : "n3 = " + std::to_string(n3);
    if (c.triangle_pairs.two_edge_witness) {
      const auto& w = *c.triangle_pairs.two_edge_witness;
      note += "; witness triangles {" + std::to_string(w.first[0]) + "," + std::to_string(w.first[1]) + "," +
              std::to_string(w.first[2]) + "} and {" + std::to_string(w.second[0]) + "," +
              std::to_string(w.second[1]) + "," + std::to_string(w.second[2]) + "}";
    }
    note += "; no srg(99,14,1,2) satisfies n3 = 0, so this condition would rule that case out";
    L.info("triangles joined by two edges", "n3 = 0", big(0), big(n3), note);
    L.info("hexagon count equals the bound", "p6 = nk(k-2)(2k^2-21k+53)/12 (conjectured)", bound, p6,
           p6 == bound ? "equal" : "differs by " + BigInt(p6 - bound).str());
  } else {
    L.skip("hexagon lower bound", "p6 >= nk(k-2)(2k^2-21k+53)/12", {});
    L.skip("triangles joined by two edges", "n3 = 0", {});
    L.skip("hexagon count equals the bound", "p6 = nk(k-2)(2k^2-21k+53)/12 (conjectured)", {});
  }

  L.group("exhaustive");
  const bool exhaustive = static_cast<std::size_t>(n) <= exhaustive_limit;
  std::optional<TypeCensus> oracle;
  if (exhaustive && !L.skipping()) {
    const auto classes = exhaustive_six_census(g, exhaustive_limit);
    oracle = type_census_from_exhaustive(classes, c.triples);
  }
  for (SixType ty : kNamedSixTypes) {
    const std::string name = "exhaustive " + label(ty);
    const std::string formula = "targeted count = count over all 6-subsets";
    if (!exhaustive) {
      L.skip(name, formula, "order " + std::to_string(n) + " above exhaustive limit " +
                                std::to_string(exhaustive_limit));
      continue;
    }
    L.compare(name, formula, [&] { return big(oracle ? (*oracle)[ty] : 0); }, [&] { return t(ty); });
  }
}

// Newton's identities over the rationals: at parameter points no graph
// realizes, the intermediate coefficients need not be integers.
std::vector<Rational> rational_newton(const std::vector<BigInt>& traces, std::size_t m) {
  std::vector<Rational> c(m + 1);
  c[0] = 1;
  for (std::size_t i = 1; i <= m; ++i) {
    Rational sum = 0;
    for (std::size_t j = 1; j <= i; ++j) sum += c[i - j] * Rational(traces[j]);
    c[i] = -sum / static_cast<long long>(i);
  }
  return c;
}

nlohmann::ordered_json json_integer(const std::optional<BigInt>& x) {
  if (!x) return nullptr;
  if (const auto v = to_int64(*x)) return *v;
  return x->str();
}

}  // namespace

std::string_view to_string(EntryStatus s) {
  switch (s) {
    case EntryStatus::pass: return "pass";
    case EntryStatus::fail: return "fail";
    case EntryStatus::skipped: return "skipped";
    case EntryStatus::info: return "info";
  }
  return "unknown";
}

bool IdentityReport::all_pass() const { return count(EntryStatus::fail) == 0; }

std::size_t IdentityReport::count(EntryStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [&](const IdentityEntry& e) { return e.status == s; }));
}

std::vector<const IdentityEntry*> IdentityReport::group(std::string_view name) const {
  std::vector<const IdentityEntry*> out;
  for (const auto& e : entries) {
    if (e.group == name) out.push_back(&e);
  }
  return out;
}

const IdentityEntry* IdentityReport::find(std::string_view name) const {
  for (const auto& e : entries) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

std::string IdentityReport::to_json(int indent) const {
  nlohmann::ordered_json j;
  j["graph_meta"] = {{"n", meta.n},
                     {"k", meta.k ? nlohmann::ordered_json(*meta.k) : nlohmann::ordered_json(nullptr)},
                     {"edges", meta.edges},
                     {"source", meta.source}};
  auto& arr = j["entries"] = nlohmann::ordered_json::array();
  for (const auto& e : entries) {
    nlohmann::ordered_json row;
    row["name"] = e.name;
    row["formula"] = e.formula;
    row["expected"] = json_integer(e.expected);
    row["actual"] = json_integer(e.actual);
    row["pass"] = e.counts() ? nlohmann::ordered_json(e.status == EntryStatus::pass) : nullptr;
    row["residual"] = e.expected && e.actual ? json_integer(BigInt(*e.actual - *e.expected)) : nullptr;
    row["status"] = std::string(to_string(e.status));
    row["group"] = e.group;
    if (!e.note.empty()) row["note"] = e.note;
    arr.push_back(std::move(row));
  }
  j["summary"] = {{"pass", count(EntryStatus::pass)},
                  {"fail", count(EntryStatus::fail)},
                  {"skipped", count(EntryStatus::skipped)},
                  {"info", count(EntryStatus::info)},
                  {"all_pass", all_pass()}};
  return j.dump(indent);
}

IdentityReport run_all_checks(const Graph& g, std::string source, const Exec& exec,
                              std::size_t exhaustive_limit) {
  IdentityReport report;
  report.meta.n = static_cast<std::int64_t>(g.order());
  report.meta.edges = g.edge_count();
  report.meta.source = std::move(source);
  bool regular = g.order() > 0;
  for (Vertex v = 1; v < g.order() && regular; ++v) regular = g.degree(v) == g.degree(0);
  if (regular) report.meta.k = static_cast<std::int64_t>(g.degree(0));

  condition_entries(g, report.entries);
  Ledger ledger(report.entries);
  if (!is_family_graph(g)) ledger.skip_all("not a regular graph with lambda = 1 and mu = 2");
  family_entries(g, ledger, exec, exhaustive_limit);
  return report;
}

BigInt hexagon_bound(std::int64_t n, std::int64_t k) {
  if (k < 0 || 2 * n != k * k + 2) {
    throw InfeasibleParams("hexagon_bound: n = (k^2+2)/2 fails for (n,k) = (" + std::to_string(n) + "," +
                           std::to_string(k) + ")");
  }
  const BigInt num = BigInt(n) * k * (k - 2) * (2 * k * k - 21 * k + 53);
  if (num % 12 != 0) throw InconsistencyError("hexagon_bound: numerator " + num.str() + " not divisible by 12");
  return num / 12;
}

MakhnevResult makhnev_condition(const Graph& g, const Exec& exec) {
  const auto pairs = disjoint_triangle_pair_census(g, exec);
  MakhnevResult r;
  r.n3 = pairs.two_edges;
  r.holds = pairs.two_edges == 0;
  r.witness = pairs.two_edge_witness;
  return r;
}

bool ChainReport::ok() const { return failures() == 0 && !points.empty(); }

std::size_t ChainReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(points.begin(), points.end(), [](const ChainPoint& p) { return !p.ok(); }));
}

ChainReport verify_polynomial_chain(const std::vector<std::int64_t>& ks, const ChainCoefficients& coefficients) {
  const std::set<std::int64_t> distinct(ks.begin(), ks.end());
  if (distinct.size() < 13) {
    throw PreconditionError("verify_polynomial_chain: need at least 13 distinct sample points, got " +
                            std::to_string(distinct.size()));
  }
  for (std::int64_t k : distinct) {
    if (k < 4 || k % 2 != 0) {
      throw PreconditionError("verify_polynomial_chain: sample k = " + std::to_string(k) +
                              " is not an even integer >= 4");
    }
  }

  ChainReport report;
  for (std::int64_t k : distinct) {
    ChainPoint p;
    p.k = k;
    p.n = (k * k + 2) / 2;
    const FamilyForms F = forms(p.n, k);
    auto fail = [&](std::string what) {
      if (p.first_failure.empty()) p.first_failure = std::move(what);
    };

    p.e4_ok = F.e4() == F.e4_counted();
    if (!p.e4_ok) fail("e4: collapsed " + F.e4().str() + " vs counted " + F.e4_counted().str());
    p.e5_ok = F.e5() == F.e5_counted() && F.e5() == F.e5_counted_alt();
    if (!p.e5_ok) fail("e5: collapsed " + F.e5().str() + " vs counted " + F.e5_counted().str());

    const Rational from_traces = rational_newton(srg_traces({p.n, k, 1, 2}, 6), 6)[6];
    p.c6_ok = F.c6() == from_traces;
    if (!p.c6_ok) fail("c6: closed form " + F.c6().str() + " vs traces " + from_traces.str());

    const Rational assembled = F.hexagons_minus_n3(F.c6());
    const Rational bound = F.bound(coefficients);
    p.hexagon_ok = assembled == bound;
    if (!p.hexagon_ok) fail("hexagon chain: assembled " + assembled.str() + " vs bound " + bound.str());
    report.points.push_back(std::move(p));
  }
  return report;
}

}  // namespace srg12
