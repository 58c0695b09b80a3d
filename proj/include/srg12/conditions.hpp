#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "srg12/graph.hpp"

namespace srg12 {

/// A vertex pair together with its common-neighbor count.
struct PairCount {
  Vertex u = 0;
  Vertex v = 0;
  std::size_t common = 0;

  friend bool operator==(const PairCount&, const PairCount&) = default;
};

struct ConditionResult {
  bool holds = true;
  std::size_t pairs_checked = 0;
  std::vector<PairCount> violations;  // in (u, v) lexicographic order

  std::optional<PairCount> first_violation() const {
    if (violations.empty()) return std::nullopt;
    return violations.front();
  }
};

/// Every edge lies in exactly one triangle.
ConditionResult check_condition_one(const Graph& g);

/// Every non-adjacent pair has exactly two common neighbors.
ConditionResult check_condition_two(const Graph& g);

struct SrgReport {
  bool degenerate = false;  // fewer than two vertices

  bool regular = false;
  std::optional<std::int64_t> degree;           // common degree when regular
  std::optional<Vertex> irregular_vertex;       // first vertex whose degree differs from vertex 0

  bool lambda_uniform = false;
  std::optional<std::int64_t> lambda;           // uniform value; empty when there are no edges
  std::optional<PairCount> lambda_witness;      // first edge breaking uniformity

  bool mu_uniform = false;
  std::optional<std::int64_t> mu;               // empty when there are no non-edges
  std::optional<PairCount> mu_witness;

  SrgParams expected;
  bool matches_expected = false;
  std::vector<std::string> mismatches;

  /// Observed lambda = 1 and mu = 2 (vacuous mu allowed).
  bool in_family = false;
  /// k(k-2) = 2(n-k-1), i.e. n = (k^2+2)/2; only meaningful when in_family.
  bool order_relation = false;

  bool is_srg() const { return !degenerate && regular && lambda_uniform && mu_uniform; }

  /// Strongly regular with exactly the expected parameters, plus the order
  /// relation when the expected parameters are the lambda=1, mu=2 family.
  bool ok() const {
    if (!is_srg() || !matches_expected) return false;
    if (expected.lambda == 1 && expected.mu == 2) return order_relation;
    return true;
  }
};

SrgReport verify_srg(const Graph& g, const SrgParams& expected);

/// Regular with lambda = 1 and mu = 2 on at least three vertices.
bool is_family_graph(const Graph& g);

}  // namespace srg12
