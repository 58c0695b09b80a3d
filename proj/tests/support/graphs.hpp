#pragma once

#include <numeric>
#include <random>
#include <vector>

#include "srg12/graph.hpp"

namespace fixtures {

using srg12::Edge;
using srg12::Graph;
using srg12::Vertex;

inline Graph cycle(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i) e.push_back({i, static_cast<Vertex>((i + 1) % n)});
  return Graph(n, e);
}

inline Graph complete(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) e.push_back({i, j});
  return Graph(n, e);
}

inline Graph petersen() {
  std::vector<Edge> e;
  for (Vertex i = 0; i < 5; ++i) {
    e.push_back({i, static_cast<Vertex>((i + 1) % 5)});
    e.push_back({i, static_cast<Vertex>(i + 5)});
    e.push_back({static_cast<Vertex>(i + 5), static_cast<Vertex>((i + 2) % 5 + 5)});
  }
  return Graph(10, e);
}

/// 3x3 rook's graph: (r, c) adjacent when they share a row or a column.
inline Graph rook3() {
  std::vector<Edge> e;
  for (Vertex a = 0; a < 9; ++a)
    for (Vertex b = a + 1; b < 9; ++b)
      if (a / 3 == b / 3 || a % 3 == b % 3) e.push_back({a, b});
  return Graph(9, e);
}

/// Two disjoint triangles joined by two disjoint edges.
inline Graph triangles_joined_by_two_edges() {
  const std::vector<Edge> e{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}};
  return Graph(6, e);
}

inline std::vector<Vertex> random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), Vertex{0});
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace fixtures
