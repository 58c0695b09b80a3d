#include "srg12/small_graph.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>

#include "srg12/errors.hpp"

namespace srg12 {
namespace {

void require_small(const Graph& g, std::size_t limit, const char* what) {
  if (g.order() > limit) {
    throw PreconditionError(std::string(what) + ": order " + std::to_string(g.order()) +
                            " exceeds limit " + std::to_string(limit));
  }
}

std::uint64_t perfect_matchings(const Graph& g, std::uint32_t remaining) {
  if (remaining == 0) return 1;
  const auto first = static_cast<Vertex>(std::countr_zero(remaining));
  const std::uint32_t rest = remaining & ~(1U << first);
  std::uint64_t total = 0;
  for (std::uint32_t w = rest; w != 0; w &= w - 1) {
    const auto v = static_cast<Vertex>(std::countr_zero(w));
    if (g.adjacent(first, v)) total += perfect_matchings(g, rest & ~(1U << v));
  }
  return total;
}

}  // namespace

std::uint64_t adjacency_code(const Graph& g) {
  const std::size_t n = g.order();
  require_small(g, 11, "adjacency_code");
  const std::size_t pairs = pair_count(n);
  std::uint64_t code = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (g.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j))) {
        code |= std::uint64_t{1} << (pairs - 1 - pair_index(i, j));
      }
    }
  }
  return code;
}

Graph graph_from_code(std::uint64_t code, std::size_t order) {
  const std::size_t pairs = pair_count(order);
  std::vector<Edge> es;
  for (std::size_t j = 1; j < order; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if ((code >> (pairs - 1 - pair_index(i, j))) & 1U) {
        es.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
      }
    }
  }
  return Graph(order, es);
}

CanonicalClass canonical_class(const Graph& g) {
  require_small(g, kMaxSmallOrder, "canonical_class");
  const std::size_t n = g.order();
  const std::size_t pairs = pair_count(n);

  std::array<std::array<bool, kMaxSmallOrder>, kMaxSmallOrder> adj{};
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) adj[u][v] = g.adjacent(u, v);
  }

  std::array<Vertex, kMaxSmallOrder> perm{};
  std::iota(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(n), Vertex{0});
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t code = 0;
    for (std::size_t j = 1; j < n; ++j) {
      for (std::size_t i = 0; i < j; ++i) {
        if (adj[perm[i]][perm[j]]) code |= std::uint64_t{1} << (pairs - 1 - pair_index(i, j));
      }
    }
    best = std::min(best, code);
  } while (std::next_permutation(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(n)));

  return {n == 0 ? 0 : best, static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(g.edge_count())};
}

std::int64_t integer_determinant(std::vector<std::int64_t> m, std::size_t n) {
  if (n == 0) return 1;
  std::int64_t sign = 1;
  std::int64_t prev = 1;
  auto at = [&](std::size_t r, std::size_t c) -> std::int64_t& { return m[r * n + c]; };
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && at(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(at(k, c), at(swap, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // Division is exact by Sylvester's identity.
        at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
      }
    }
    prev = at(k, k);
  }
  return sign * at(n - 1, n - 1);
}

std::int64_t adjacency_determinant(const Graph& g) {
  require_small(g, kMaxSmallOrder, "adjacency_determinant");
  const std::size_t n = g.order();
  std::vector<std::int64_t> m(n * n, 0);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) m[u * n + v] = g.adjacent(u, v) ? 1 : 0;
  }
  return integer_determinant(std::move(m), n);
}

std::uint64_t three_edge_cover_count(const Graph& g) {
  if (g.order() != 6) {
    throw PreconditionError("three_edge_cover_count needs exactly 6 vertices, got " +
                            std::to_string(g.order()));
  }
  return perfect_matchings(g, 0x3FU);
}

}  // namespace srg12
