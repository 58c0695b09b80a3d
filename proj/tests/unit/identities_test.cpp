#include <doctest.h>

#include <json.hpp>
#include <numeric>

#include "graphs.hpp"
#include "srg12/constructions.hpp"
#include "srg12/errors.hpp"
#include "srg12/graph6.hpp"
#include "srg12/identities.hpp"

using namespace srg12;

namespace {

std::vector<std::int64_t> chain_points(std::int64_t first, std::size_t count) {
  std::vector<std::int64_t> ks(count);
  for (std::size_t i = 0; i < count; ++i) ks[i] = first + 2 * static_cast<std::int64_t>(i);
  return ks;
}

}  // namespace

TEST_CASE("hexagon bound") {
  CHECK(hexagon_bound(9, 4) == 6);
  CHECK(hexagon_bound(99, 14) == 209286);
  CHECK(hexagon_bound(243, 22) == 4980690);
  CHECK_THROWS_AS(hexagon_bound(100, 14), InfeasibleParams);
}

TEST_CASE("every identity holds on the 9-vertex graph") {
  const IdentityReport r = run_all_checks(build_paley9(), "paley9");
  for (const auto& e : r.entries) {
    INFO(e.name << ": " << e.note);
    CHECK(e.status != EntryStatus::fail);
  }
  CHECK(r.all_pass());
  CHECK(r.meta.n == 9);
  CHECK(r.meta.k == 4);
  CHECK(r.meta.edges == 18);
  CHECK(r.meta.source == "paley9");
  for (const auto* e : r.group("exhaustive")) CHECK(e->status == EntryStatus::pass);
  CHECK(r.group("exhaustive").size() == kNamedSixTypes.size());
  REQUIRE(r.find("master identity"));
  CHECK(*r.find("master identity")->actual == 648);
  CHECK(*r.find("c6 determinant sum")->actual == -168);
  CHECK(r.find("c6 determinant sum")->status == EntryStatus::pass);
  CHECK(r.find("hexagon count equals the bound")->note == "equal");
  CHECK(r.find("no such entry") == nullptr);
}

TEST_CASE("every identity holds on the 243-vertex graph") {
  const IdentityReport r = run_all_checks(build_bvls243(), "bvls243", {default_worker_count(), {}});
  for (const auto& e : r.entries) {
    INFO(e.name << ": " << e.note);
    CHECK(e.status != EntryStatus::fail);
  }
  CHECK(r.all_pass());
  CHECK(*r.find("master identity")->actual == 203808231);
  CHECK(*r.find("hexagon identity")->actual == 4980690);
  CHECK(r.find("c6 closed form")->status == EntryStatus::pass);
  CHECK(*r.find("c6 closed form")->actual == BigInt("-2975686065"));
  CHECK(r.find("c6 determinant sum")->status == EntryStatus::skipped);
  CHECK(*r.find("triangles joined by two edges")->actual == 0);
  for (const auto* e : r.group("exhaustive")) CHECK(e->status == EntryStatus::skipped);
}

TEST_CASE("graphs outside the family fail the conditions and skip the rest") {
  for (const Graph& g : {fixtures::cycle(4), fixtures::petersen()}) {
    const IdentityReport r = run_all_checks(g);
    CHECK_FALSE(r.all_pass());
    CHECK(r.count(EntryStatus::pass) + r.count(EntryStatus::fail) > 0);
    for (const auto& e : r.entries) {
      if (e.group != "conditions") CHECK(e.status == EntryStatus::skipped);
      if (e.status == EntryStatus::skipped) CHECK_FALSE(e.note.empty());
    }
  }
  const IdentityReport irregular = run_all_checks(Graph(3, std::vector<Edge>{{0, 1}}));
  CHECK_FALSE(irregular.meta.k);
}

TEST_CASE("two triangles joined by two edges") {
  const Graph g = fixtures::triangles_joined_by_two_edges();
  const MakhnevResult m = makhnev_condition(g);
  CHECK_FALSE(m.holds);
  CHECK(m.n3 == 1);
  REQUIRE(m.witness);
  CHECK(m.witness->first == Triangle{0, 1, 2});
  CHECK(m.witness->second == Triangle{3, 4, 5});
  CHECK(m.witness->connecting[0] == Edge{0, 3});
  CHECK(m.witness->connecting[1] == Edge{1, 4});

  const MakhnevResult p = makhnev_condition(build_paley9());
  CHECK(p.holds);
  CHECK(p.n3 == 0);
  CHECK_FALSE(p.witness);
}

TEST_CASE("the polynomial chain holds at 13 and more points") {
  const ChainReport r = verify_polynomial_chain(chain_points(4, 13));
  CHECK(r.points.size() == 13);
  CHECK(r.ok());
  CHECK(r.failures() == 0);
  CHECK(verify_polynomial_chain({4, 14, 22, 112, 994, 6, 8, 10, 12, 16, 18, 20, 24, 300}).ok());
}

TEST_CASE("a perturbed bound fails the chain everywhere") {
  ChainCoefficients wrong;
  wrong.bound_k0 = 54;
  const ChainReport r = verify_polynomial_chain(chain_points(4, 13), wrong);
  CHECK(r.failures() == 13);
  for (const auto& p : r.points) {
    CHECK_FALSE(p.hexagon_ok);
    CHECK(p.e4_ok);
    CHECK(p.c6_ok);
    CHECK_FALSE(p.first_failure.empty());
  }
}

TEST_CASE("the chain needs enough distinct even points") {
  CHECK_THROWS_AS(verify_polynomial_chain(chain_points(4, 12)), PreconditionError);
  auto ks = chain_points(4, 12);
  ks.push_back(4);
  CHECK_THROWS_AS(verify_polynomial_chain(ks), PreconditionError);
  ks.back() = 7;
  CHECK_THROWS_AS(verify_polynomial_chain(ks), PreconditionError);
}

TEST_CASE("JSON report") {
  const Graph g = build_paley9();
  const IdentityReport r = run_all_checks(g, "paley9");
  const auto j = nlohmann::json::parse(r.to_json());
  CHECK(j["graph_meta"]["n"] == 9);
  CHECK(j["graph_meta"]["k"] == 4);
  CHECK(j["graph_meta"]["edges"] == 18);
  CHECK(j["entries"].size() == r.entries.size());
  for (const auto& e : j["entries"]) {
    for (const char* key : {"name", "formula", "expected", "actual", "pass", "residual", "status", "group"})
      CHECK(e.contains(key));
    if (e["status"] == "pass") {
      CHECK(e["pass"] == true);
      CHECK(e["residual"] == 0);
    }
  }
  CHECK(j["summary"]["fail"] == 0);

  const IdentityReport again = run_all_checks(from_graph6(to_graph6(g)), "paley9");
  CHECK(again.to_json() == r.to_json());
  CHECK(nlohmann::json::parse(r.to_json(-1)) == j);
}
