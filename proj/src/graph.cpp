#include "srg12/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace srg12 {

Graph::Graph(std::size_t order)
    : order_(order), words_(words_for(order)), rows_(order * words_for(order), 0) {}

Graph::Graph(std::size_t order, std::span<const Edge> edges) : Graph(order) {
  for (const Edge& e : edges) {
    if (e.u >= order || e.v >= order) {
      throw std::invalid_argument("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                  "} out of range for order " + std::to_string(order));
    }
    if (e.u == e.v) throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
    std::span<Word> ru{rows_.data() + static_cast<std::size_t>(e.u) * words_, words_};
    std::span<Word> rv{rows_.data() + static_cast<std::size_t>(e.v) * words_, words_};
    if (!bits::test(ru, e.v)) {
      bits::set(ru, e.v);
      bits::set(rv, e.u);
      ++edge_count_;
    }
  }
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  out.reserve(degree(v));
  bits::for_each(row(v), [&](Vertex w) { out.push_back(w); });
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order_; ++u) {
    bits::for_each(row(u), [&](Vertex w) {
      if (u < w) out.push_back({u, w});
    });
  }
  return out;
}

Graph Graph::induced_subgraph(std::span<const Vertex> vertices) const {
  std::vector<Edge> es;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (vertices[i] == vertices[j]) throw std::invalid_argument("repeated vertex in induced_subgraph");
      if (adjacent(vertices[i], vertices[j])) {
        es.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
      }
    }
  }
  return Graph(vertices.size(), es);
}

Graph Graph::relabeled(std::span<const Vertex> new_label) const {
  if (new_label.size() != order_) throw std::invalid_argument("relabeling has wrong length");
  std::vector<bool> seen(order_, false);
  for (Vertex x : new_label) {
    if (x >= order_ || seen[x]) throw std::invalid_argument("relabeling is not a permutation");
    seen[x] = true;
  }
  std::vector<Edge> es;
  es.reserve(edge_count_);
  for (const Edge& e : edges()) {
    const Vertex a = new_label[e.u];
    const Vertex b = new_label[e.v];
    es.push_back({std::min(a, b), std::max(a, b)});
  }
  return Graph(order_, es);
}

Graph Graph::complement() const {
  std::vector<Edge> es;
  for (Vertex u = 0; u < order_; ++u) {
    for (Vertex v = u + 1; v < order_; ++v) {
      if (!adjacent(u, v)) es.push_back({u, v});
    }
  }
  return Graph(order_, es);
}

}  // namespace srg12
