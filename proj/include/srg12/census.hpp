#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "srg12/graph.hpp"
#include "srg12/parallel.hpp"
#include "srg12/six_types.hpp"

namespace srg12 {

/// `family` censuses first require a regular graph with lambda = 1, mu = 2
/// and assert their counting identity; `any_graph` only counts, which is how
/// the exhaustive oracle cross-checks them on arbitrary graphs.
enum class Scope { family, any_graph };

/// Throws PreconditionError unless g is regular with lambda = 1 and mu = 2.
void require_family(const Graph& g, std::string_view operation);

// ---------------------------------------------------------------------------
// Cycles

/// Counts of induced cycles C3..C6.
struct CycleCensus {
  std::uint64_t p3 = 0;
  std::uint64_t p4 = 0;
  std::uint64_t p5 = 0;
  std::uint64_t p6 = 0;

  friend bool operator==(const CycleCensus&, const CycleCensus&) = default;
};

/// Enumerates each induced cycle of a fixed length exactly once: the smallest
/// vertex first, then the direction whose second vertex is smaller than its
/// last. Not thread-safe; use one walker per worker.
class ChordlessCycleWalker {
 public:
  ChordlessCycleWalker(const Graph& g, std::size_t length);

  /// Calls visit(cycle) for every cycle whose smallest vertex is `start`.
  template <class Visit>
  void from(Vertex start, Visit&& visit) {
    path_[0] = start;
    auto cand = slot(cand_, 1);
    copy_row(cand, g_.row(start));
    bits::clear_through(cand, start);
    auto reach = slot(reach_, 2);
    std::fill(reach.begin(), reach.end(), Word{0});
    bits::for_each(std::span<const Word>(cand), [&](Vertex v) {
      path_[1] = v;
      extend(2, visit);
    });
  }

 private:
  template <class Visit>
  void extend(std::size_t depth, Visit& visit);

  std::span<Word> slot(std::vector<Word>& buf, std::size_t depth) {
    return {buf.data() + depth * words_, words_};
  }
  static void copy_row(std::span<Word> dst, std::span<const Word> src) {
    std::copy(src.begin(), src.end(), dst.begin());
  }

  const Graph& g_;
  std::size_t length_;
  std::size_t words_;
  std::vector<Vertex> path_;
  std::vector<Word> cand_;   // candidates per depth
  std::vector<Word> reach_;  // union of closed neighborhoods of path[1..depth-2]
};

template <class Visit>
void ChordlessCycleWalker::extend(std::size_t depth, Visit& visit) {
  const Vertex start = path_[0];
  const Vertex prev = path_[depth - 1];
  const auto reach = slot(reach_, depth);
  const auto cand = slot(cand_, depth);
  const auto s_row = g_.row(start);
  const auto p_row = g_.row(prev);
  const bool last = depth + 1 == length_;
  for (std::size_t w = 0; w < words_; ++w) {
    Word c = p_row[w] & ~reach[w];
    // Interior vertices avoid N[start]; the closing vertex must touch start.
    c = last ? (c & s_row[w]) : (c & ~s_row[w]);
    cand[w] = c;
  }
  bits::clear_through(cand, last ? path_[1] : start);

  if (last) {
    bits::for_each(std::span<const Word>(cand), [&](Vertex v) {
      path_[depth] = v;
      visit(std::span<const Vertex>(path_.data(), length_));
    });
    return;
  }
  bits::for_each(std::span<const Word>(cand), [&](Vertex v) {
    path_[depth] = v;
    auto next = slot(reach_, depth + 1);
    const auto closed = g_.row(path_[depth - 1]);
    for (std::size_t w = 0; w < words_; ++w) next[w] = reach[w] | closed[w];
    bits::set(next, path_[depth - 1]);
    extend(depth + 1, visit);
  });
}

std::uint64_t count_triangles(const Graph& g);

/// Induced C4s. With assume_family the count runs over ordered non-adjacent
/// pairs (u, v) and the non-adjacent pairs among their common neighbors,
/// divided by four; otherwise every 4-subset is tested (order <= 64).
std::uint64_t count_quadrilaterals(const Graph& g, bool assume_family);

std::uint64_t count_pentagons(const Graph& g, const Exec& exec = {});
std::uint64_t count_hexagons(const Graph& g, const Exec& exec = {});

/// Induced C5s through the given edge. Throws std::invalid_argument for a
/// non-edge.
std::uint64_t pentagons_through_edge(const Graph& g, Edge e);

CycleCensus cycle_census(const Graph& g, const Exec& exec = {});

/// Closed 5-walks v0..v4 v0 whose distances from v0 read 0,1,2,2,1.
struct CodedWalkCensus {
  std::uint64_t total = 0;
  std::uint64_t pentagon_walks = 0;  // all five vertices distinct, no chord
  std::uint64_t t1_walks = 0;        // distinct vertices, one chord: C4 with a side triangle
  std::uint64_t t2_walks = 0;        // v4 = v1: triangle with a pendant vertex
  std::uint64_t p5 = 0;              // pentagon_walks / 10
  std::uint64_t t1 = 0;              // t1_walks / 6
  std::uint64_t t2 = 0;              // t2_walks / 2
};

/// Family graphs only. Throws InconsistencyError if a walk fits none of the
/// three shapes or a walk total is not divisible by its symmetry factor.
CodedWalkCensus coded_walk_census(const Graph& g, const Exec& exec = {});

// ---------------------------------------------------------------------------
// Edge triples

/// Unordered edge triples by the number of vertices they span.
struct EdgeTripleCensus {
  std::uint64_t e4 = 0;  // at most four
  std::uint64_t e5 = 0;
  std::uint64_t e6 = 0;

  std::uint64_t total() const { return e4 + e5 + e6; }
  friend bool operator==(const EdgeTripleCensus&, const EdgeTripleCensus&) = default;
};

/// Enumerates every pair of edges and counts the later third edges by how
/// many endpoints they share with the pair. Asserts e4 + e5 + e6 = C(|E|,3).
EdgeTripleCensus edge_triple_census(const Graph& g, const Exec& exec = {});

// ---------------------------------------------------------------------------
// Six-vertex types

using Triangle = std::array<Vertex, 3>;

struct TrianglePairWitness {
  Triangle first;
  Triangle second;
  std::array<Edge, 2> connecting;
};

/// Vertex-disjoint triangle pairs whose union induces one of the four
/// two-triangle types; `other` counts pairs inducing anything else.
struct TrianglePairCensus {
  std::uint64_t prism = 0;
  std::uint64_t two_edges = 0;
  std::uint64_t one_edge = 0;
  std::uint64_t none = 0;
  std::uint64_t other = 0;
  std::optional<TrianglePairWitness> two_edge_witness;
};

TrianglePairCensus disjoint_triangle_pair_census(const Graph& g, const Exec& exec = {});

/// Pairs of induced C4s sharing exactly one edge, classified by their union.
struct QuadPairCensus {
  std::uint64_t prism_incidences = 0;   // 3 per prism
  std::uint64_t pentagon_apex_opposite = 0;
  std::uint64_t domino = 0;
  std::uint64_t other = 0;              // pairs whose union is another class
  std::uint64_t overlapping = 0;        // pairs sharing more than the edge

  std::uint64_t prism() const { return prism_incidences / 3; }
};

/// In family scope also throws PreconditionError when an edge is not on
/// exactly k-2 quadrilaterals and asserts 3n1 + n4 + n9 = |E| C(k-2,2).
QuadPairCensus quad_pair_census(const Graph& g, Scope scope = Scope::family);

/// (pentagon, side, apex) completions classified by the six-vertex union.
struct PentagonTriangleCensus {
  std::uint64_t pentagons = 0;
  std::uint64_t pentagon_apex_opposite = 0;
  std::uint64_t pentagon_apex = 0;
  std::uint64_t other = 0;
};

/// Family scope asserts one apex per side, always outside the pentagon, and
/// n4 + n8 = 5 p5.
PentagonTriangleCensus pentagon_triangle_census(const Graph& g, Scope scope = Scope::family,
                                                const Exec& exec = {});

/// (induced C4, edge avoiding its vertices) pairs by the class of their union.
/// incidences[t] counts pairs; a class with s such splits contributes s per copy.
struct QuadPlusEdgeCensus {
  std::uint64_t quadrilaterals = 0;
  std::uint64_t total = 0;
  std::array<std::uint64_t, kSixTypeCount> incidences{};

  std::uint64_t incidences_of(SixType t) const { return incidences[static_cast<std::size_t>(t)]; }
  /// incidences divided by the class's split count.
  std::uint64_t count(SixType t) const;
  std::uint64_t aggregate() const;
};

/// Family scope asserts total = p4 (|E| - 4(k-2) - 4) and no other classes.
QuadPlusEdgeCensus quad_plus_edge_census(const Graph& g, Scope scope = Scope::family,
                                         const Exec& exec = {});

/// Induced C4s with triangle apexes on two adjacent sides. Family scope
/// asserts the count equals 4 p4.
std::uint64_t count_n2(const Graph& g, Scope scope = Scope::family);

/// Triangle, a pendant d on one triangle vertex x, and the second common
/// neighbors of d with the other two triangle vertices.
struct TriangleCompletionCensus {
  std::uint64_t prism_incidences = 0;  // 6 per prism
  std::uint64_t pentagon_apex_opposite = 0;
  std::uint64_t other = 0;

  std::uint64_t prism() const { return prism_incidences / 6; }
};

/// Family scope asserts 6 n1 + n4 = 3(k-2) p3.
TriangleCompletionCensus triangle_edge_completion_census(const Graph& g, Scope scope = Scope::family);

struct SixClassCount {
  const SixClassInfo* info = nullptr;
  std::uint64_t count = 0;
};

inline constexpr std::size_t kDefaultExhaustiveLimit = 16;

/// Every six-vertex subset classified; only classes that occur are returned,
/// ordered by certificate. Throws PreconditionError above max_order vertices.
std::vector<SixClassCount> exhaustive_six_census(const Graph& g,
                                                 std::size_t max_order = kDefaultExhaustiveLimit);

/// Counts of the named six-vertex types plus the edge-triple spans.
struct TypeCensus {
  std::array<std::uint64_t, kSixTypeCount> counts{};
  EdgeTripleCensus triples;

  std::uint64_t operator[](SixType t) const { return counts[static_cast<std::size_t>(t)]; }
  std::uint64_t& operator[](SixType t) { return counts[static_cast<std::size_t>(t)]; }
  std::uint64_t aggregate() const;

  friend bool operator==(const TypeCensus&, const TypeCensus&) = default;
};

TypeCensus type_census_from_exhaustive(std::span<const SixClassCount> classes,
                                       const EdgeTripleCensus& triples);

/// Every targeted census on one family graph.
struct FamilyCensus {
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::uint64_t edges = 0;
  CycleCensus cycles;
  CodedWalkCensus walks;
  EdgeTripleCensus triples;
  TrianglePairCensus triangle_pairs;
  QuadPairCensus quad_pairs;
  PentagonTriangleCensus pentagon_triangles;
  QuadPlusEdgeCensus quad_plus_edge;
  TriangleCompletionCensus completions;
  std::uint64_t n2 = 0;

  /// Type counts, each from its primary census.
  TypeCensus types() const;
};

FamilyCensus family_census(const Graph& g, const Exec& exec = {});

}  // namespace srg12
