#include <doctest.h>

#include <random>
#include <stdexcept>

#include "graphs.hpp"
#include "oracles.hpp"
#include "srg12/graph.hpp"

using namespace srg12;

TEST_CASE("edge list construction") {
  const std::vector<Edge> e{{0, 1}, {1, 0}, {2, 1}, {0, 1}};
  const Graph g(4, e);
  CHECK(g.order() == 4);
  CHECK(g.edge_count() == 2);
  CHECK(g.adjacent(0, 1));
  CHECK(g.adjacent(1, 0));
  CHECK(g.adjacent(1, 2));
  CHECK_FALSE(g.adjacent(0, 2));
  CHECK(g.degree(1) == 2);
  CHECK(g.degree(3) == 0);
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
  CHECK(g.neighbors(1) == std::vector<Vertex>{0, 2});
}

TEST_CASE("invalid edges are rejected") {
  const std::vector<Edge> loop{{2, 2}};
  CHECK_THROWS_AS(Graph(3, loop), std::invalid_argument);
  const std::vector<Edge> out{{0, 3}};
  CHECK_THROWS_AS(Graph(3, out), std::invalid_argument);
}

TEST_CASE("empty and single-vertex graphs") {
  const Graph empty;
  CHECK(empty.order() == 0);
  CHECK(empty.edges().empty());
  const Graph one(1);
  CHECK(one.edge_count() == 0);
  CHECK(one.complement().edge_count() == 0);
}

TEST_CASE("rows span several words") {
  std::vector<Edge> e{{0, 64}, {63, 64}, {64, 129}};
  const Graph g(130, e);
  CHECK(g.words_per_row() == 3);
  CHECK(g.degree(64) == 3);
  CHECK(g.common_neighbor_count(0, 63) == 1);
  CHECK(g.neighbors(64) == std::vector<Vertex>{0, 63, 129});
}

TEST_CASE("common neighbors match the matrix oracle") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = oracle::random_graph(70, 0.2, rng);
    const auto a = oracle::adjacency(g);
    for (Vertex u = 0; u < g.order(); u += 7)
      for (Vertex v = 0; v < g.order(); v += 5) {
        int c = 0;
        for (std::size_t w = 0; w < a.size(); ++w) c += a[u][w] * a[v][w];
        CHECK(g.common_neighbor_count(u, v) == static_cast<std::size_t>(c));
      }
  }
}

TEST_CASE("induced subgraph and relabeling") {
  const Graph c6 = fixtures::cycle(6);
  const std::vector<Vertex> path{0, 1, 2, 3};
  const Graph p = c6.induced_subgraph(path);
  CHECK(p.edge_count() == 3);
  CHECK(p.adjacent(2, 3));
  CHECK_FALSE(p.adjacent(0, 3));

  const std::vector<Vertex> label{5, 4, 3, 2, 1, 0};
  const Graph r = c6.relabeled(label);
  CHECK(r.edge_count() == 6);
  CHECK(r.adjacent(5, 4));
  CHECK(r.adjacent(0, 5));
}

TEST_CASE("property: complement is an involution and partitions the pairs") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + rng() % 40;
    const Graph g = oracle::random_graph(n, 0.4, rng);
    const Graph c = g.complement();
    CHECK(c.complement() == g);
    CHECK(g.edge_count() + c.edge_count() == n * (n - 1) / 2);
  }
}

TEST_CASE("property: relabeling preserves degrees and inverse relabeling restores") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + rng() % 30;
    const Graph g = oracle::random_graph(n, 0.3, rng);
    const auto p = fixtures::random_permutation(n, rng);
    const Graph h = g.relabeled(p);
    std::vector<Vertex> inverse(n);
    for (Vertex v = 0; v < n; ++v) inverse[p[v]] = v;
    CHECK(h.relabeled(inverse) == g);
    for (Vertex v = 0; v < n; ++v) CHECK(h.degree(p[v]) == g.degree(v));
  }
}
