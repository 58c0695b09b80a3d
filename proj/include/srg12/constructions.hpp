#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "srg12/graph.hpp"

namespace srg12 {

enum class KnownGraph { k3, paley9, bvls243, none_known };

std::string_view to_string(KnownGraph g);

/// Parses "k3", "paley9" or "bvls243".
std::optional<KnownGraph> parse_known_graph(std::string_view name);

Graph build_k3();

/// Paley graph on GF(9) = GF(3)[x]/(x^2+1). Element a + b*x has index a + 3b;
/// u ~ v iff u - v is a nonzero square.
Graph build_paley9();

/// Coset graph of the ternary Golay [11,6,5] code: the 243 syndromes in
/// GF(3)^5 (coefficients of remainders mod the generator polynomial, index
/// sum c_i 3^i), adjacent iff they differ by the syndrome of a weight-one
/// word. Throws InconsistencyError if the result is not srg(243,22,1,2).
Graph build_bvls243();

Graph build_known(KnownGraph which);

struct FeasibleParams {
  std::int64_t k = 0;
  std::int64_t n = 0;
  std::int64_t lambda1 = 0;
  std::int64_t lambda2 = 0;
  std::int64_t r1 = 0;
  std::int64_t r2 = 0;
  KnownGraph known_graph = KnownGraph::none_known;

  friend bool operator==(const FeasibleParams&, const FeasibleParams&) = default;
};

/// Even k <= k_max with n = (k^2+2)/2, 4k-7 a perfect square and integral
/// non-negative multiplicities. k = 2 (K3) only with include_degenerate.
std::vector<FeasibleParams> feasible_parameters(std::int64_t k_max, bool include_degenerate = false);

}  // namespace srg12
