#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "srg12/graph.hpp"
#include "srg12/small_graph.hpp"

namespace srg12 {

/// adjacency_code of a labeled six-vertex graph (15 bits).
using SixMask = std::uint16_t;

/// The six-vertex induced subgraph classes that survive in the expansion of
/// c6 + C(|E|,3) for graphs where every edge is in one triangle. The four
/// c4_edge_* classes are the quadrilateral-plus-edge shapes that only ever
/// enter the identities together; they are reported individually and as one
/// aggregate.
enum class SixType : std::uint8_t {
  other = 0,
  prism,                   // n1: two triangles joined by a perfect matching
  c4_adjacent_triangles,   // n2: C4 with triangles on two adjacent sides
  triangles_two_edges,     // n3: two triangles joined by two disjoint edges
  pentagon_apex_opposite,  // n4: C5 plus a side apex also adjacent to the opposite vertex
  triangles_one_edge,      // n5: two triangles joined by one edge
  c4_edge_pendant_path,    // C4 plus an edge hanging off one C4 vertex
  c4_edge_side_triangle,   // C4 plus an edge whose end closes a triangle on a C4 side
  c4_edge_vertex_triangle, // C4 plus an edge forming a triangle with one C4 vertex
  c4_edge_opposite_bridge, // C4 plus an edge joined to two opposite C4 vertices
  pentagon_apex,           // n8: C5 plus a triangle apex on one side
  domino,                  // n9: two C4s sharing an edge, no further edges
  hexagon,                 // n12: induced C6
  c4_plus_edge,            // n13: C4 plus a disjoint edge
  two_triangles,           // n14: two disjoint triangles
};

inline constexpr std::size_t kSixTypeCount = 15;

inline constexpr std::array<SixType, 4> kAggregateTypes{
    SixType::c4_edge_pendant_path, SixType::c4_edge_side_triangle,
    SixType::c4_edge_vertex_triangle, SixType::c4_edge_opposite_bridge};

inline constexpr std::array<SixType, 14> kNamedSixTypes{
    SixType::prism,
    SixType::c4_adjacent_triangles,
    SixType::triangles_two_edges,
    SixType::pentagon_apex_opposite,
    SixType::triangles_one_edge,
    SixType::c4_edge_pendant_path,
    SixType::c4_edge_side_triangle,
    SixType::c4_edge_vertex_triangle,
    SixType::c4_edge_opposite_bridge,
    SixType::pentagon_apex,
    SixType::domino,
    SixType::hexagon,
    SixType::c4_plus_edge,
    SixType::two_triangles,
};

std::string_view to_string(SixType t);

/// Conventional label: "n1".."n14", or "n6_7_10_11" for the aggregate members.
std::string_view type_label(SixType t);

bool is_aggregate(SixType t);

/// A representative labeled graph of a named type.
Graph six_type_graph(SixType t);

struct SixClassInfo {
  CanonicalClass cls;
  SixType type = SixType::other;
  std::int64_t det = 0;
  std::uint64_t cover = 0;             // perfect matchings
  std::uint8_t triangles = 0;          // induced C3
  std::uint8_t quadrilaterals = 0;     // induced C4
  std::uint8_t pentagons = 0;          // induced C5
  std::uint8_t c4_edge_splits = 0;     // (induced C4, edge on the other two vertices)
  /// No edge in two triangles and no non-adjacent pair with three common
  /// neighbors, i.e. could be induced in a lambda=1, mu=2 graph.
  bool locally_compatible = false;

  /// det + cover: the weight of this class in c6 + C(|E|,3) - e4 - e5.
  std::int64_t weight() const { return det + static_cast<std::int64_t>(cover); }
};

/// All 156 isomorphism classes of six-vertex graphs, sorted by certificate.
std::span<const SixClassInfo> six_vertex_classes();

/// Index into six_vertex_classes() for a labeled mask.
std::uint8_t six_class_index(SixMask mask);

inline const SixClassInfo& six_class(SixMask mask) {
  return six_vertex_classes()[six_class_index(mask)];
}

/// Mask of the subgraph induced on vs, vertex i of the mask being vs[i].
SixMask six_mask(const Graph& g, std::span<const Vertex, 6> vs);

/// Class information of a named type's representative.
const SixClassInfo& six_type_info(SixType t);

inline SixType classify_six(const Graph& g, std::span<const Vertex, 6> vs) {
  return six_class(six_mask(g, vs)).type;
}

}  // namespace srg12
