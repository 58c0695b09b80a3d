#include "srg12/six_types.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace srg12 {
namespace {

constexpr std::size_t kPairs = 15;
constexpr std::size_t kMasks = std::size_t{1} << kPairs;

Graph from_edge_list(std::initializer_list<std::pair<int, int>> es) {
  std::vector<Edge> out;
  for (auto [a, b] : es) out.push_back({static_cast<Vertex>(std::min(a, b)), static_cast<Vertex>(std::max(a, b))});
  return Graph(6, out);
}

bool is_induced_cycle(const Graph& g, std::uint32_t subset) {
  const auto size = static_cast<std::size_t>(std::popcount(subset));
  std::size_t edges = 0;
  for (std::uint32_t w = subset; w != 0; w &= w - 1) {
    const auto v = static_cast<Vertex>(std::countr_zero(w));
    std::size_t d = 0;
    for (std::uint32_t x = subset; x != 0; x &= x - 1) {
      if (g.adjacent(v, static_cast<Vertex>(std::countr_zero(x)))) ++d;
    }
    if (d != 2) return false;
    edges += d;
  }
  if (edges / 2 != size) return false;
  // 2-regular on `size` vertices; connected iff a walk from one vertex covers all.
  std::uint32_t seen = subset & (~subset + 1);
  for (std::size_t step = 0; step < size; ++step) {
    for (std::uint32_t w = seen; w != 0; w &= w - 1) {
      const auto v = static_cast<Vertex>(std::countr_zero(w));
      for (std::uint32_t x = subset; x != 0; x &= x - 1) {
        const auto u = static_cast<Vertex>(std::countr_zero(x));
        if (g.adjacent(v, u)) seen |= 1U << u;
      }
    }
  }
  return seen == subset;
}

SixClassInfo describe(std::uint64_t canonical) {
  const Graph g = graph_from_code(canonical, 6);
  SixClassInfo info;
  info.cls = CanonicalClass{canonical, 6, static_cast<std::uint32_t>(g.edge_count())};
  info.det = adjacency_determinant(g);
  info.cover = three_edge_cover_count(g);
  for (std::uint32_t s = 0; s < 64; ++s) {
    const int size = std::popcount(s);
    if (size < 3 || size > 5 || !is_induced_cycle(g, s)) continue;
    if (size == 3) ++info.triangles;
    if (size == 4) {
      ++info.quadrilaterals;
      const std::uint32_t rest = 0x3FU & ~s;
      const auto a = static_cast<Vertex>(std::countr_zero(rest));
      const auto b = static_cast<Vertex>(31 - std::countl_zero(rest));
      if (g.adjacent(a, b)) ++info.c4_edge_splits;
    }
    if (size == 5) ++info.pentagons;
  }
  bool compatible = true;
  for (Vertex u = 0; u < 6; ++u) {
    for (Vertex v = u + 1; v < 6; ++v) {
      const std::size_t c = g.common_neighbor_count(u, v);
      if (g.adjacent(u, v) ? c > 1 : c > 2) compatible = false;
    }
  }
  info.locally_compatible = compatible;
  return info;
}

struct Table {
  std::vector<SixClassInfo> classes;
  std::vector<std::uint8_t> index;  // kMasks entries
};

Table build_table() {
  // Precompute, for each permutation, where every pair bit moves.
  std::array<Vertex, 6> perm{};
  std::iota(perm.begin(), perm.end(), Vertex{0});
  std::vector<std::array<std::uint8_t, kPairs>> moves;
  do {
    std::array<std::uint8_t, kPairs> mv{};
    for (std::size_t j = 1; j < 6; ++j) {
      for (std::size_t i = 0; i < j; ++i) {
        const std::size_t a = std::min(perm[i], perm[j]);
        const std::size_t b = std::max(perm[i], perm[j]);
        mv[kPairs - 1 - pair_index(i, j)] = static_cast<std::uint8_t>(kPairs - 1 - pair_index(a, b));
      }
    }
    moves.push_back(mv);
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<std::uint16_t> canonical(kMasks, 0xFFFF);
  std::vector<std::uint16_t> reps;
  std::vector<std::uint16_t> orbit;
  for (std::size_t mask = 0; mask < kMasks; ++mask) {
    if (canonical[mask] != 0xFFFF) continue;
    orbit.clear();
    std::uint16_t best = 0xFFFF;
    for (const auto& mv : moves) {
      std::uint16_t image = 0;
      for (std::size_t bit = 0; bit < kPairs; ++bit) {
        if ((mask >> bit) & 1U) image = static_cast<std::uint16_t>(image | (1U << mv[bit]));
      }
      orbit.push_back(image);
      best = std::min(best, image);
    }
    for (auto m : orbit) canonical[m] = best;
    reps.push_back(best);
  }
  std::sort(reps.begin(), reps.end());

  Table t;
  t.index.resize(kMasks);
  for (std::uint16_t rep : reps) t.classes.push_back(describe(rep));
  for (std::size_t mask = 0; mask < kMasks; ++mask) {
    const auto it = std::lower_bound(reps.begin(), reps.end(), canonical[mask]);
    t.index[mask] = static_cast<std::uint8_t>(it - reps.begin());
  }
  for (SixType type : kNamedSixTypes) {
    const auto code = canonical[adjacency_code(six_type_graph(type))];
    const auto it = std::lower_bound(reps.begin(), reps.end(), code);
    t.classes[static_cast<std::size_t>(it - reps.begin())].type = type;
  }
  return t;
}

const Table& table() {
  static const Table t = build_table();
  return t;
}

}  // namespace

std::string_view to_string(SixType t) {
  switch (t) {
    case SixType::other: return "other";
    case SixType::prism: return "prism";
    case SixType::c4_adjacent_triangles: return "c4_adjacent_triangles";
    case SixType::triangles_two_edges: return "triangles_two_edges";
    case SixType::pentagon_apex_opposite: return "pentagon_apex_opposite";
    case SixType::triangles_one_edge: return "triangles_one_edge";
    case SixType::c4_edge_pendant_path: return "c4_edge_pendant_path";
    case SixType::c4_edge_side_triangle: return "c4_edge_side_triangle";
    case SixType::c4_edge_vertex_triangle: return "c4_edge_vertex_triangle";
    case SixType::c4_edge_opposite_bridge: return "c4_edge_opposite_bridge";
    case SixType::pentagon_apex: return "pentagon_apex";
    case SixType::domino: return "domino";
    case SixType::hexagon: return "hexagon";
    case SixType::c4_plus_edge: return "c4_plus_edge";
    case SixType::two_triangles: return "two_triangles";
  }
  return "other";
}

std::string_view type_label(SixType t) {
  switch (t) {
    case SixType::prism: return "n1";
    case SixType::c4_adjacent_triangles: return "n2";
    case SixType::triangles_two_edges: return "n3";
    case SixType::pentagon_apex_opposite: return "n4";
    case SixType::triangles_one_edge: return "n5";
    case SixType::pentagon_apex: return "n8";
    case SixType::domino: return "n9";
    case SixType::hexagon: return "n12";
    case SixType::c4_plus_edge: return "n13";
    case SixType::two_triangles: return "n14";
    case SixType::other: return "other";
    default: return "n6_7_10_11";
  }
}

bool is_aggregate(SixType t) {
  return std::find(kAggregateTypes.begin(), kAggregateTypes.end(), t) != kAggregateTypes.end();
}

Graph six_type_graph(SixType t) {
  switch (t) {
    case SixType::prism:
      return from_edge_list({{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
    case SixType::c4_adjacent_triangles:
      return from_edge_list({{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 0}, {4, 1}, {5, 1}, {5, 2}});
    case SixType::triangles_two_edges:
      return from_edge_list({{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}});
    case SixType::pentagon_apex_opposite:
      return from_edge_list({{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {5, 0}, {5, 1}, {5, 3}});
    case SixType::triangles_one_edge:
      return from_edge_list({{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}});
    case SixType::c4_edge_pendant_path:
      return from_edge_list({{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {4, 0}});
    case SixType::c4_edge_side_triangle:
      return from_edge_list({{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {4, 0}, {4, 1}});
    case SixType::c4_edge_vertex_triangle:
      return from_edge_list({{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {4, 0}, {5, 0}});
    case SixType::c4_edge_opposite_bridge:
      return from_edge_list({{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {4, 0}, {5, 2}});
    case SixType::pentagon_apex:
      return from_edge_list({{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {5, 0}, {5, 1}});
    case SixType::domino:
      return from_edge_list({{0, 1}, {1, 2}, {3, 4}, {4, 5}, {0, 3}, {1, 4}, {2, 5}});
    case SixType::hexagon:
      return from_edge_list({{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
    case SixType::c4_plus_edge:
      return from_edge_list({{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}});
    case SixType::two_triangles:
      return from_edge_list({{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    case SixType::other:
      break;
  }
  throw std::invalid_argument("six_type_graph: no representative for 'other'");
}

std::span<const SixClassInfo> six_vertex_classes() { return table().classes; }

const SixClassInfo& six_type_info(SixType t) {
  static const auto infos = [] {
    std::array<const SixClassInfo*, kSixTypeCount> out{};
    for (const auto& c : table().classes) {
      if (c.type != SixType::other) out[static_cast<std::size_t>(c.type)] = &c;
    }
    return out;
  }();
  const auto* info = infos[static_cast<std::size_t>(t)];
  if (info == nullptr) throw std::invalid_argument("six_type_info: 'other' has no single class");
  return *info;
}

std::uint8_t six_class_index(SixMask mask) { return table().index[mask & 0x7FFFU]; }

SixMask six_mask(const Graph& g, std::span<const Vertex, 6> vs) {
  unsigned code = 0;
  for (std::size_t j = 1; j < 6; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (g.adjacent(vs[i], vs[j])) code |= 1U << (kPairs - 1 - pair_index(i, j));
    }
  }
  return static_cast<SixMask>(code);
}

}  // namespace srg12
