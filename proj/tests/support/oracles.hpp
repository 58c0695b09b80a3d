#pragma once

// Slow, direct reference implementations used only by the tests. They work
// on a plain adjacency matrix and share no counting code with the library.

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "srg12/bigint.hpp"
#include "srg12/graph.hpp"
#include "srg12/six_types.hpp"

namespace oracle {

using srg12::BigInt;
using srg12::Graph;

using Matrix = std::vector<std::vector<int>>;

Matrix adjacency(const Graph& g);

/// G(n, p) with a fixed generator.
Graph random_graph(std::size_t n, double p, std::mt19937_64& rng);

/// A random graph in which every edge lies in at most one triangle and every
/// non-adjacent pair has at most two common neighbors, grown by rejection.
Graph random_locally_sparse_graph(std::size_t n, std::size_t attempts, std::mt19937_64& rng);

/// Induced cycles of the given length, by testing every vertex subset.
std::uint64_t induced_cycles(const Matrix& a, std::size_t length);

/// Induced cycles of the given length through the edge {u, v}.
std::uint64_t induced_cycles_through(const Matrix& a, std::size_t length, int u, int v);

struct Triples {
  std::uint64_t e4 = 0, e5 = 0, e6 = 0;
};

/// Triple loop over the edge list.
Triples edge_triples(const Matrix& a);

/// Leibniz expansion; only for tiny matrices.
std::int64_t leibniz_determinant(const Matrix& m);

/// Sets of three disjoint edges covering all six vertices, by trying every
/// 3-subset of the edges.
std::uint64_t three_edge_covers(const Matrix& a6);

/// The named type whose representative is isomorphic to a6, found by trying
/// all 720 relabelings; SixType::other when none matches.
srg12::SixType type_by_isomorphism(const Matrix& a6);

/// Count of every six-vertex type over all 6-subsets.
std::map<srg12::SixType, std::uint64_t> six_type_counts(const Matrix& a);

/// Sum of det and of 3-edge covers over all 6-subsets.
struct SixSums {
  BigInt det = 0;
  std::uint64_t covers = 0;
};
SixSums six_subset_sums(const Matrix& a);

/// Coefficients c_0..c_n of det(xI - A) by exact determinants at x = 0..n
/// and Lagrange interpolation.
std::vector<BigInt> characteristic_polynomial(const Matrix& a);

/// c_0..c_m from prod (1 - theta x)^mult over the eigenvalue multiset,
/// truncated at degree m.
std::vector<BigInt> coefficients_from_spectrum(const std::vector<std::pair<std::int64_t, std::int64_t>>& spectrum,
                                               std::size_t m);

/// Eigenvalues and multiplicities of srg(n,k,lambda,mu) from floating-point
/// roots, rounded and then checked exactly. Empty when not integral.
struct SrgSpectrum {
  std::int64_t theta = 0, tau = 0, f = 0, g = 0;
};
std::optional<SrgSpectrum> srg_spectrum(std::int64_t n, std::int64_t k, std::int64_t lambda, std::int64_t mu);

/// A^2 compared entrywise with k I + lambda A + mu (J - I - A).
bool satisfies_srg_equation(const Matrix& a, int k, int lambda, int mu);

/// Closed 5-walks v0..v4 v0 with BFS distances 0,1,2,2,1 from v0, split by
/// the shape of the walk (pentagon, house, triangle with pendant).
struct CodedWalks {
  std::uint64_t total = 0, pentagon = 0, house = 0, pendant = 0;
};
CodedWalks coded_walks(const Matrix& a);

/// Isomorphism by brute force over all relabelings (n <= 10).
bool isomorphic(const Matrix& a, const Matrix& b);

/// Disjoint triangle pairs joined by exactly two edges.
std::uint64_t triangles_joined_by_two_edges(const Matrix& a);

}  // namespace oracle
