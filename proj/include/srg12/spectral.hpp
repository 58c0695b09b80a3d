#pragma once

#include <cstdint>
#include <vector>

#include "srg12/bigint.hpp"
#include "srg12/graph.hpp"
#include "srg12/parallel.hpp"

namespace srg12 {

/// Adjacency spectrum of a strongly regular graph with integral eigenvalues:
/// k once, lambda1 with multiplicity r1, lambda2 with multiplicity r2.
struct Spectrum {
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::int64_t lambda1 = 0;  // larger restricted eigenvalue
  std::int64_t lambda2 = 0;
  std::int64_t r1 = 0;
  std::int64_t r2 = 0;

  friend bool operator==(const Spectrum&, const Spectrum&) = default;
};

/// Solves for the restricted eigenvalues (roots of x^2 - (lambda-mu)x - (k-mu))
/// and their multiplicities. Throws InfeasibleParams naming the relation that
/// has no integral solution.
Spectrum srg_spectrum(const SrgParams& params);

/// -nk(k-2)(3k^5+6k^4-84k^3+116k^2+124k-240)/576. Requires n = (k^2+2)/2 and
/// an exact division, otherwise InfeasibleParams.
BigInt c6_closed_form(std::int64_t n, std::int64_t k);

/// c6 as k*e5 + e6 of the restricted eigenvalue multiset, expanded into
/// binomial sums over the multiplicities.
BigInt c6_binomial_sum(const Spectrum& spectrum);

/// Leading characteristic polynomial coefficients c_0..c_m (c_i multiplies
/// x^(n-i)) with the power-sum traces t_1..t_m they were derived from.
struct CharPolyPrefix {
  std::vector<BigInt> coefficients;  // c_0..c_m
  std::vector<BigInt> traces;        // traces[i] = trace(A^i); traces[0] = n

  const BigInt& operator[](std::size_t i) const { return coefficients.at(i); }
};

/// c_i from power sums via Newton's identities: i*c_i = -sum_{j=1..i} c_{i-j} t_j.
/// `traces[0]` is ignored. Throws InconsistencyError on a non-exact division.
std::vector<BigInt> newton_coefficients(const std::vector<BigInt>& traces, std::size_t m);

/// trace(A^i) for i = 0..m, counting closed walks by repeated application of
/// the adjacency rows to each basis vector.
std::vector<BigInt> adjacency_traces(const Graph& g, std::size_t m, const Exec& exec = {});

CharPolyPrefix charpoly_prefix(const Graph& g, std::size_t m, const Exec& exec = {});

/// trace(A^i), i = 0..m, for any graph with parameters (n,k,lambda,mu), from
/// A^2 = (k-mu)I + (lambda-mu)A + mu J. Needs no graph and no integrality of
/// the spectrum, so it evaluates at any parameter point.
std::vector<BigInt> srg_traces(const SrgParams& params, std::size_t m);

/// (-1)^i times the sum of adjacency determinants of all i-vertex induced
/// subgraphs. Brute force; order <= 10 and i <= 6.
BigInt ci_detsum(const Graph& g, std::size_t i);

}  // namespace srg12
