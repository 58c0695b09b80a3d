#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "srg12/graph.hpp"

namespace srg12 {

inline constexpr std::size_t kMaxSmallOrder = 8;

/// Number of vertex pairs of a graph on n vertices.
constexpr std::size_t pair_count(std::size_t n) noexcept { return n * (n - (n > 0 ? 1 : 0)) / 2; }

/// Position of the pair (i, j), i < j, in column order (0,1),(0,2),(1,2),(0,3)...
constexpr std::size_t pair_index(std::size_t i, std::size_t j) noexcept { return j * (j - 1) / 2 + i; }

/// Adjacency bit-string of a labeled graph on <= 11 vertices: pair p sits at
/// bit (pairs - 1 - p), so integer order is lexicographic order of the string.
std::uint64_t adjacency_code(const Graph& g);

/// Inverse of adjacency_code.
Graph graph_from_code(std::uint64_t code, std::size_t order);

/// Isomorphism-class certificate of a graph on at most eight vertices.
struct CanonicalClass {
  std::uint64_t certificate = 0;  // minimal adjacency_code over all relabelings
  std::uint32_t vertex_count = 0;
  std::uint32_t edge_count = 0;

  friend auto operator<=>(const CanonicalClass&, const CanonicalClass&) = default;
};

/// Exhaustive minimisation over all n! relabelings. Throws PreconditionError
/// above kMaxSmallOrder vertices.
CanonicalClass canonical_class(const Graph& g);

/// Exact fraction-free (Bareiss) determinant of a square row-major matrix.
std::int64_t integer_determinant(std::vector<std::int64_t> m, std::size_t n);

/// Determinant of the 0/1 adjacency matrix; at most kMaxSmallOrder vertices.
std::int64_t adjacency_determinant(const Graph& g);

/// Perfect matchings (three disjoint edges) of a graph on exactly six vertices.
std::uint64_t three_edge_cover_count(const Graph& g);

}  // namespace srg12
