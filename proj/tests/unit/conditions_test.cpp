#include <doctest.h>

#include <random>

#include "graphs.hpp"
#include "oracles.hpp"
#include "srg12/conditions.hpp"
#include "srg12/constructions.hpp"

using namespace srg12;

TEST_CASE("conditions on the family graphs") {
  for (auto kg : {KnownGraph::k3, KnownGraph::paley9}) {
    const Graph g = build_known(kg);
    CHECK(check_condition_one(g).holds);
    CHECK(check_condition_two(g).holds);
    CHECK(is_family_graph(g));
  }
}

TEST_CASE("condition one reports edges outside triangles in order") {
  const Graph c4 = fixtures::cycle(4);
  const auto r = check_condition_one(c4);
  CHECK_FALSE(r.holds);
  CHECK(r.pairs_checked == 4);
  REQUIRE(r.violations.size() == 4);
  CHECK(r.first_violation() == PairCount{0, 1, 0});
}

TEST_CASE("condition two witness on K4 minus an edge") {
  const std::vector<Edge> e{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}};
  const Graph g(4, e);
  const auto two = check_condition_two(g);
  CHECK(two.holds);
  const auto one = check_condition_one(g);
  CHECK_FALSE(one.holds);
  CHECK(one.first_violation() == PairCount{0, 1, 2});
}

TEST_CASE("verify_srg on the Petersen graph") {
  const Graph p = fixtures::petersen();
  const auto r = verify_srg(p, {10, 3, 0, 1});
  CHECK(r.is_srg());
  CHECK(r.ok());
  CHECK(r.lambda == 0);
  CHECK(r.mu == 1);

  const auto wrong = verify_srg(p, {10, 3, 1, 2});
  CHECK(wrong.is_srg());
  CHECK_FALSE(wrong.ok());
  CHECK_FALSE(wrong.mismatches.empty());
  CHECK_FALSE(wrong.in_family);
}

TEST_CASE("verify_srg names the first irregularity") {
  const std::vector<Edge> e{{0, 1}, {1, 2}};
  const auto r = verify_srg(Graph(3, e), {3, 1, 1, 2});
  CHECK_FALSE(r.regular);
  CHECK(r.irregular_vertex == Vertex{1});
}

TEST_CASE("degenerate inputs") {
  CHECK(verify_srg(Graph(0), {0, 0, 1, 2}).degenerate);
  CHECK(verify_srg(Graph(1), {1, 0, 1, 2}).degenerate);
  CHECK_FALSE(is_family_graph(Graph(2)));
  CHECK_FALSE(is_family_graph(fixtures::complete(2)));
}

TEST_CASE("property: verify_srg agrees with the matrix equation") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = oracle::random_graph(4 + rng() % 8, 0.5, rng);
    const auto r = verify_srg(g, {static_cast<std::int64_t>(g.order()), static_cast<std::int64_t>(g.degree(0)), 1, 2});
    const bool by_matrix = oracle::satisfies_srg_equation(oracle::adjacency(g), static_cast<int>(g.degree(0)), 1, 2);
    CHECK((r.is_srg() && r.matches_expected) == by_matrix);
  }
  // Complete graphs are vacuous in mu; triangle-free cycles fail lambda.
  CHECK(verify_srg(fixtures::complete(3), {3, 2, 1, 2}).ok());
  CHECK_FALSE(verify_srg(fixtures::cycle(5), {5, 2, 1, 2}).ok());
}
