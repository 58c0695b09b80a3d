#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "srg12/bits.hpp"

namespace srg12 {

using Vertex = std::uint32_t;

/// Undirected edge, always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Parameters (n, k, lambda, mu) of a strongly regular graph.
struct SrgParams {
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::int64_t lambda = 1;
  std::int64_t mu = 2;

  friend bool operator==(const SrgParams&, const SrgParams&) = default;
};

/// Simple undirected graph on vertices 0..n-1 with one adjacency bit row per
/// vertex. Immutable once constructed; rows are symmetric and irreflexive.
class Graph {
 public:
  Graph() = default;

  /// Edgeless graph of the given order.
  explicit Graph(std::size_t order);

  /// Builds from an edge list. Self-loops and out-of-range endpoints throw
  /// std::invalid_argument; repeated edges collapse.
  Graph(std::size_t order, std::span<const Edge> edges);

  std::size_t order() const noexcept { return order_; }
  std::size_t edge_count() const noexcept { return edge_count_; }
  std::size_t words_per_row() const noexcept { return words_; }

  std::span<const Word> row(Vertex v) const noexcept {
    return {rows_.data() + static_cast<std::size_t>(v) * words_, words_};
  }

  bool adjacent(Vertex u, Vertex v) const noexcept { return bits::test(row(u), v); }
  std::size_t degree(Vertex v) const noexcept { return bits::count(row(v)); }
  std::size_t common_neighbor_count(Vertex u, Vertex v) const noexcept {
    return bits::count_and(row(u), row(v));
  }

  std::vector<Vertex> neighbors(Vertex v) const;

  /// All edges in lexicographic (u, v) order.
  std::vector<Edge> edges() const;

  /// Subgraph induced on `vertices`; vertex i of the result is vertices[i].
  Graph induced_subgraph(std::span<const Vertex> vertices) const;

  /// Vertex v of this graph becomes vertex new_label[v]; new_label must be a
  /// permutation of 0..n-1.
  Graph relabeled(std::span<const Vertex> new_label) const;

  Graph complement() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::size_t order_ = 0;
  std::size_t words_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<Word> rows_;
};

}  // namespace srg12
