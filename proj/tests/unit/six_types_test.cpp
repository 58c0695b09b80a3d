#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "graphs.hpp"
#include "oracles.hpp"
#include "srg12/six_types.hpp"
#include "srg12/small_graph.hpp"

using namespace srg12;

namespace {

// Every edge in at most one triangle, every non-adjacent pair with at most
// two common neighbors.
bool locally_compatible(const oracle::Matrix& a) {
  for (std::size_t x = 0; x < 6; ++x)
    for (std::size_t y = x + 1; y < 6; ++y) {
      int c = 0;
      for (std::size_t z = 0; z < 6; ++z) c += a[x][z] * a[y][z];
      if (a[x][y] ? c > 1 : c > 2) return false;
    }
  return true;
}

// Induced C4s whose two remaining vertices are adjacent.
std::uint64_t c4_edge_splits(const oracle::Matrix& a) {
  std::uint64_t count = 0;
  for (int mask = 0; mask < 64; ++mask) {
    if (__builtin_popcount(mask) != 4) continue;
    std::vector<int> in, out;
    for (int v = 0; v < 6; ++v) ((mask >> v) & 1 ? in : out).push_back(v);
    oracle::Matrix sub(4, std::vector<int>(4));
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) sub[i][j] = a[in[i]][in[j]];
    if (oracle::induced_cycles(sub, 4) == 1 && a[out[0]][out[1]]) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("156 classes, agreeing with a brute-force certificate count") {
  const auto classes = six_vertex_classes();
  CHECK(classes.size() == 156);
  CHECK(std::is_sorted(classes.begin(), classes.end(),
                       [](const SixClassInfo& a, const SixClassInfo& b) { return a.cls < b.cls; }));

  // Independent: minimal code over the 720 relabelings for all 2^15 graphs.
  std::vector<std::array<int, 6>> perms;
  std::array<int, 6> p{0, 1, 2, 3, 4, 5};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::set<std::uint32_t> certificates;
  for (std::uint32_t code = 0; code < (1U << 15); ++code) {
    std::uint32_t best = ~0U;
    for (const auto& q : perms) {
      std::uint32_t c = 0;
      for (int j = 1; j < 6; ++j)
        for (int i = 0; i < j; ++i) {
          const int a = std::min(q[i], q[j]);
          const int b = std::max(q[i], q[j]);
          const int bit_in = 14 - (j * (j - 1) / 2 + i);
          const int bit_out = 14 - (b * (b - 1) / 2 + a);
          if ((code >> bit_in) & 1U) c |= 1U << bit_out;
        }
      best = std::min(best, c);
    }
    certificates.insert(best);
  }
  CHECK(certificates.size() == 156);
  for (const auto& c : classes) CHECK(certificates.count(static_cast<std::uint32_t>(c.cls.certificate)) == 1);
}

TEST_CASE("class invariants match the matrix oracles") {
  for (const auto& info : six_vertex_classes()) {
    const Graph g = graph_from_code(info.cls.certificate, 6);
    const auto a = oracle::adjacency(g);
    CHECK(info.det == oracle::leibniz_determinant(a));
    CHECK(info.cover == oracle::three_edge_covers(a));
    CHECK(info.triangles == oracle::induced_cycles(a, 3));
    CHECK(info.quadrilaterals == oracle::induced_cycles(a, 4));
    CHECK(info.pentagons == oracle::induced_cycles(a, 5));
    CHECK(info.locally_compatible == locally_compatible(a));
    CHECK(info.c4_edge_splits == c4_edge_splits(a));
    CHECK(info.cls.edge_count == g.edge_count());
  }
}

TEST_CASE("the named types are exactly the compatible classes of nonzero weight") {
  std::set<SixType> seen;
  for (const auto& info : six_vertex_classes()) {
    const auto a = oracle::adjacency(graph_from_code(info.cls.certificate, 6));
    const bool named = info.locally_compatible && info.weight() != 0;
    CHECK((info.type != SixType::other) == named);
    CHECK(oracle::type_by_isomorphism(a) == info.type);
    if (named) seen.insert(info.type);
  }
  CHECK(seen.size() == kNamedSixTypes.size());
}

TEST_CASE("determinant plus cover of each type") {
  const std::map<SixType, std::pair<int, int>> table{
      {SixType::prism, {0, 4}},
      {SixType::c4_adjacent_triangles, {-4, 2}},
      {SixType::triangles_two_edges, {0, 2}},
      {SixType::pentagon_apex_opposite, {-1, 3}},
      {SixType::triangles_one_edge, {3, 1}},
      {SixType::c4_edge_pendant_path, {0, 2}},
      {SixType::c4_edge_side_triangle, {0, 2}},
      {SixType::c4_edge_vertex_triangle, {0, 2}},
      {SixType::c4_edge_opposite_bridge, {0, 2}},
      {SixType::pentagon_apex, {-4, 2}},
      {SixType::domino, {-1, 3}},
      {SixType::hexagon, {-4, 2}},
      {SixType::c4_plus_edge, {0, 2}},
      {SixType::two_triangles, {4, 0}},
  };
  for (SixType t : kNamedSixTypes) {
    const auto& info = six_type_info(t);
    CHECK(info.type == t);
    CHECK(info.det == table.at(t).first);
    CHECK(info.cover == static_cast<std::uint64_t>(table.at(t).second));
  }
}

TEST_CASE("representatives and labels") {
  for (SixType t : kNamedSixTypes) {
    const Graph g = six_type_graph(t);
    const std::array<Vertex, 6> vs{0, 1, 2, 3, 4, 5};
    CHECK(classify_six(g, vs) == t);
    CHECK(is_aggregate(t) == (type_label(t) == "n6_7_10_11"));
  }
  CHECK(type_label(SixType::prism) == "n1");
  CHECK(type_label(SixType::hexagon) == "n12");
  CHECK(type_label(SixType::two_triangles) == "n14");
  CHECK(to_string(SixType::domino) == "domino");
}

TEST_CASE("property: classification ignores vertex order") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = oracle::random_graph(6, 0.5, rng);
    std::array<Vertex, 6> vs{0, 1, 2, 3, 4, 5};
    const std::uint8_t index = six_class_index(six_mask(g, vs));
    std::shuffle(vs.begin(), vs.end(), rng);
    CHECK(six_class_index(six_mask(g, vs)) == index);
    CHECK(six_vertex_classes()[index].cls == canonical_class(g));
  }
}
