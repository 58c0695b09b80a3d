#include <doctest.h>

#include <random>
#include <string>

#include "graphs.hpp"
#include "oracles.hpp"
#include "srg12/constructions.hpp"
#include "srg12/errors.hpp"
#include "srg12/spectral.hpp"

using namespace srg12;

namespace {

std::vector<BigInt> spectrum_coefficients(const Spectrum& s, std::size_t m) {
  return oracle::coefficients_from_spectrum({{s.k, 1}, {s.lambda1, s.r1}, {s.lambda2, s.r2}}, m);
}

std::string failure_of(const SrgParams& p) {
  try {
    (void)srg_spectrum(p);
  } catch (const InfeasibleParams& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("spectrum of the Petersen graph") {
  const Spectrum s = srg_spectrum({10, 3, 0, 1});
  CHECK(s == Spectrum{10, 3, 1, -2, 5, 4});
}

TEST_CASE("property: srg_spectrum agrees with the floating-point oracle") {
  std::size_t feasible = 0;
  for (std::int64_t n = 2; n <= 60; ++n)
    for (std::int64_t k = 1; k < n; ++k)
      for (std::int64_t lambda = 0; lambda < k; ++lambda)
        for (std::int64_t mu = 1; mu <= k; ++mu) {
          if (k * (k - lambda - 1) != mu * (n - k - 1)) continue;
          const auto want = oracle::srg_spectrum(n, k, lambda, mu);
          std::optional<Spectrum> got;
          try {
            got = srg_spectrum({n, k, lambda, mu});
          } catch (const InfeasibleParams&) {
          }
          REQUIRE(got.has_value() == want.has_value());
          if (got) {
            ++feasible;
            CHECK(got->lambda1 == want->theta);
            CHECK(got->lambda2 == want->tau);
            CHECK(got->r1 == want->f);
            CHECK(got->r2 == want->g);
          }
        }
  CHECK(feasible > 20);
}

TEST_CASE("infeasible parameters name the failed relation") {
  CHECK(failure_of({100, 14, 1, 2}).find("k(k-lambda-1) = mu(n-k-1)") != std::string::npos);
  CHECK(failure_of({19, 6, 1, 2}).find("discriminant") != std::string::npos);
  CHECK(failure_of({513, 32, 1, 2}).find("multiplicity") != std::string::npos);
  CHECK(failure_of({5, 7, 1, 2}).find("0 <= k < n") != std::string::npos);
  // Conference graph on 5 vertices: irrational eigenvalues.
  CHECK(failure_of({5, 2, 0, 1}).find("discriminant") != std::string::npos);
}

TEST_CASE("c6 routes agree with the eigenvalue product at every feasible k") {
  for (const auto& p : feasible_parameters(1000, true)) {
    const Spectrum s = srg_spectrum({p.n, p.k, 1, 2});
    const BigInt want = spectrum_coefficients(s, 6)[6];
    CHECK(c6_binomial_sum(s) == want);
    CHECK(c6_closed_form(p.n, p.k) == want);
    CHECK(newton_coefficients(srg_traces({p.n, p.k, 1, 2}, 6), 6)[6] == want);
  }
}

TEST_CASE("c6 golden values") {
  CHECK(c6_closed_form(9, 4) == -168);
  CHECK(c6_closed_form(99, 14) == -47288703);
  CHECK(c6_closed_form(243, 22) == BigInt("-2975686065"));
  CHECK(c6_closed_form(6273, 112) == BigInt("-7204770339625320"));
  CHECK(c6_closed_form(494019, 994) == BigInt("-2466795174682153663896408"));
  CHECK_THROWS_AS(c6_closed_form(100, 14), InfeasibleParams);
}

TEST_CASE("property: charpoly prefix matches the interpolated characteristic polynomial") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 25; ++trial) {
    const Graph g = oracle::random_graph(3 + rng() % 10, 0.5, rng);
    const auto want = oracle::characteristic_polynomial(oracle::adjacency(g));
    const std::size_t m = std::min<std::size_t>(6, g.order());
    const auto got = charpoly_prefix(g, m);
    for (std::size_t i = 0; i <= m; ++i) CHECK(got[i] == want[i]);
    if (g.order() <= 10)
      for (std::size_t i = 0; i <= m; ++i) CHECK(ci_detsum(g, i) == want[i]);
    CHECK(got[2] == -BigInt(g.edge_count()));
  }
}

TEST_CASE("srg traces match walk counts on real graphs") {
  const Graph petersen = fixtures::petersen();
  CHECK(srg_traces({10, 3, 0, 1}, 8) == adjacency_traces(petersen, 8));
  const Graph p9 = build_paley9();
  CHECK(srg_traces({9, 4, 1, 2}, 6) == adjacency_traces(p9, 6));
  const Graph b = build_bvls243();
  CHECK(srg_traces({243, 22, 1, 2}, 6) == adjacency_traces(b, 6));
  CHECK(adjacency_traces(b, 0) == std::vector<BigInt>{243});
}

TEST_CASE("property: traces do not depend on the worker count") {
  std::mt19937_64 rng(31);
  const Graph g = oracle::random_graph(120, 0.3, rng);
  const auto one = adjacency_traces(g, 7, {1, {}});
  CHECK(adjacency_traces(g, 7, {4, {}}) == one);
  CHECK(adjacency_traces(g, 7, {13, {}}) == one);
}

TEST_CASE("newton_coefficients rejects inconsistent traces") {
  CHECK_THROWS_AS(newton_coefficients({3, 0, 1}, 2), InconsistencyError);
  CHECK_THROWS_AS(newton_coefficients({3, 0}, 2), std::invalid_argument);
}

TEST_CASE("determinant sum guards") {
  CHECK(ci_detsum(build_paley9(), 6) == -168);
  CHECK_THROWS_AS(ci_detsum(fixtures::cycle(11), 3), PreconditionError);
  CHECK_THROWS_AS(ci_detsum(fixtures::cycle(8), 7), PreconditionError);
}
