#include "srg12/conditions.hpp"

namespace srg12 {

ConditionResult check_condition_one(const Graph& g) {
  ConditionResult r;
  for (const Edge& e : g.edges()) {
    ++r.pairs_checked;
    const std::size_t c = g.common_neighbor_count(e.u, e.v);
    if (c != 1) r.violations.push_back({e.u, e.v, c});
  }
  r.holds = r.violations.empty();
  return r;
}

ConditionResult check_condition_two(const Graph& g) {
  ConditionResult r;
  const auto n = static_cast<Vertex>(g.order());
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (g.adjacent(u, v)) continue;
      ++r.pairs_checked;
      const std::size_t c = g.common_neighbor_count(u, v);
      if (c != 2) r.violations.push_back({u, v, c});
    }
  }
  r.holds = r.violations.empty();
  return r;
}

SrgReport verify_srg(const Graph& g, const SrgParams& expected) {
  SrgReport r;
  r.expected = expected;
  const auto n = static_cast<Vertex>(g.order());
  if (n < 2) {
    r.degenerate = true;
    r.mismatches.push_back("degenerate: fewer than two vertices");
    return r;
  }

  r.regular = true;
  const auto d0 = static_cast<std::int64_t>(g.degree(0));
  for (Vertex v = 1; v < n; ++v) {
    if (static_cast<std::int64_t>(g.degree(v)) != d0) {
      r.regular = false;
      r.irregular_vertex = v;
      break;
    }
  }
  if (r.regular) r.degree = d0;

  r.lambda_uniform = true;
  r.mu_uniform = true;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const auto c = static_cast<std::int64_t>(g.common_neighbor_count(u, v));
      auto& uniform = g.adjacent(u, v) ? r.lambda_uniform : r.mu_uniform;
      auto& value = g.adjacent(u, v) ? r.lambda : r.mu;
      auto& witness = g.adjacent(u, v) ? r.lambda_witness : r.mu_witness;
      if (!value) {
        value = c;
      } else if (*value != c && uniform) {
        uniform = false;
        witness = PairCount{u, v, static_cast<std::size_t>(c)};
      }
    }
  }
  if (!r.lambda_uniform) r.lambda.reset();
  if (!r.mu_uniform) r.mu.reset();

  auto mismatch = [&](const std::string& what, std::int64_t want, std::int64_t got) {
    r.mismatches.push_back(what + ": expected " + std::to_string(want) + ", observed " +
                           std::to_string(got));
  };
  if (expected.n != n) mismatch("n", expected.n, n);
  if (!r.regular) {
    r.mismatches.push_back("not regular: vertex " + std::to_string(*r.irregular_vertex) +
                           " has degree " + std::to_string(g.degree(*r.irregular_vertex)) +
                           ", vertex 0 has " + std::to_string(d0));
  } else if (expected.k != *r.degree) {
    mismatch("k", expected.k, *r.degree);
  }
  if (!r.lambda_uniform) {
    r.mismatches.push_back("lambda not uniform at edge {" + std::to_string(r.lambda_witness->u) +
                           "," + std::to_string(r.lambda_witness->v) + "}");
  } else if (r.lambda && *r.lambda != expected.lambda) {
    mismatch("lambda", expected.lambda, *r.lambda);
  }
  if (!r.mu_uniform) {
    r.mismatches.push_back("mu not uniform at non-edge {" + std::to_string(r.mu_witness->u) + "," +
                           std::to_string(r.mu_witness->v) + "}");
  } else if (r.mu && *r.mu != expected.mu) {
    mismatch("mu", expected.mu, *r.mu);
  }
  r.matches_expected = r.mismatches.empty();

  const bool lambda_one = r.lambda_uniform && (!r.lambda || *r.lambda == 1);
  const bool mu_two = r.mu_uniform && (!r.mu || *r.mu == 2);
  r.in_family = r.regular && r.lambda.has_value() && lambda_one && mu_two;
  if (r.in_family) {
    const std::int64_t k = *r.degree;
    r.order_relation = k * (k - 2) == 2 * (static_cast<std::int64_t>(n) - k - 1);
    if (!r.order_relation && expected.lambda == 1 && expected.mu == 2) {
      r.mismatches.push_back("order relation k(k-2) = 2(n-k-1) fails");
    }
  }
  return r;
}

bool is_family_graph(const Graph& g) {
  if (g.order() < 3) return false;
  const auto r = verify_srg(g, SrgParams{static_cast<std::int64_t>(g.order()),
                                         static_cast<std::int64_t>(g.degree(0)), 1, 2});
  return r.ok();
}

}  // namespace srg12
