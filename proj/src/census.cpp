#include "srg12/census.hpp"

#include <algorithm>
#include <string>

#include "srg12/bigint.hpp"
#include "srg12/conditions.hpp"
#include "srg12/errors.hpp"

namespace srg12 {
namespace {

std::string str(std::uint64_t x) { return std::to_string(x); }

void expect_equal(std::string_view what, std::uint64_t got, std::uint64_t want) {
  if (got != want) {
    throw InconsistencyError(std::string(what) + ": counted " + str(got) + ", identity requires " +
                             str(want) + " (residual " +
                             std::to_string(static_cast<long long>(got - want)) + ")");
  }
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("count overflow");
  return out;
}

std::vector<Word> closed_row(const Graph& g, Vertex v) {
  const auto r = g.row(v);
  std::vector<Word> out(r.begin(), r.end());
  bits::set(out, v);
  return out;
}

std::vector<Triangle> list_triangles(const Graph& g) {
  std::vector<Triangle> out;
  std::vector<Word> common(g.words_per_row());
  for (const Edge& e : g.edges()) {
    const auto ru = g.row(e.u);
    const auto rv = g.row(e.v);
    for (std::size_t w = 0; w < common.size(); ++w) common[w] = ru[w] & rv[w];
    bits::clear_through(common, e.v);
    bits::for_each(std::span<const Word>(common), [&](Vertex c) { out.push_back({e.u, e.v, c}); });
  }
  return out;
}

std::vector<std::array<Vertex, 4>> list_quadrilaterals(const Graph& g) {
  std::vector<std::array<Vertex, 4>> out;
  ChordlessCycleWalker walker(g, 4);
  for (Vertex s = 0; s < g.order(); ++s) {
    walker.from(s, [&](std::span<const Vertex> c) { out.push_back({c[0], c[1], c[2], c[3]}); });
  }
  return out;
}

std::uint64_t count_cycles(const Graph& g, std::size_t length, const Exec& exec, std::string_view stage) {
  return parallel_reduce(g.order(), exec, stage, std::uint64_t{0},
                         [&](std::size_t s, std::uint64_t& acc) {
                           ChordlessCycleWalker walker(g, length);
                           walker.from(static_cast<Vertex>(s), [&](std::span<const Vertex>) { ++acc; });
                         });
}

std::int64_t family_degree(const Graph& g) { return static_cast<std::int64_t>(g.degree(0)); }

bool contains(std::span<const Vertex> vs, Vertex x) {
  return std::find(vs.begin(), vs.end(), x) != vs.end();
}

}  // namespace

void require_family(const Graph& g, std::string_view operation) {
  if (!is_family_graph(g)) {
    throw PreconditionError(std::string(operation) +
                            " requires a regular graph with lambda = 1 and mu = 2");
  }
}

ChordlessCycleWalker::ChordlessCycleWalker(const Graph& g, std::size_t length)
    : g_(g),
      length_(length),
      words_(g.words_per_row()),
      path_(length, 0),
      cand_((length + 1) * g.words_per_row(), 0),
      reach_((length + 1) * g.words_per_row(), 0) {
  if (length < 3) throw std::invalid_argument("cycle length must be at least 3");
}

std::uint64_t count_triangles(const Graph& g) {
  std::uint64_t total = 0;
  std::vector<Word> common(g.words_per_row());
  for (const Edge& e : g.edges()) {
    const auto ru = g.row(e.u);
    const auto rv = g.row(e.v);
    for (std::size_t w = 0; w < common.size(); ++w) common[w] = ru[w] & rv[w];
    bits::clear_through(common, e.v);
    total += bits::count(common);
  }
  return total;
}

std::uint64_t count_quadrilaterals(const Graph& g, bool assume_family) {
  const auto n = static_cast<Vertex>(g.order());
  if (assume_family) {
    // Each induced C4 has two non-adjacent diagonals, each seen from both ends.
    std::uint64_t incidences = 0;
    std::vector<Vertex> common;
    std::vector<Word> both(g.words_per_row());
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = 0; v < n; ++v) {
        if (u == v || g.adjacent(u, v)) continue;
        const auto ru = g.row(u);
        const auto rv = g.row(v);
        for (std::size_t w = 0; w < both.size(); ++w) both[w] = ru[w] & rv[w];
        common.clear();
        bits::for_each(std::span<const Word>(both), [&](Vertex c) { common.push_back(c); });
        for (std::size_t i = 0; i < common.size(); ++i) {
          for (std::size_t j = i + 1; j < common.size(); ++j) {
            if (!g.adjacent(common[i], common[j])) ++incidences;
          }
        }
      }
    }
    if (incidences % 4 != 0) {
      throw InconsistencyError("quadrilateral incidences " + str(incidences) + " not divisible by 4");
    }
    return incidences / 4;
  }

  if (n > 64) {
    throw PreconditionError("count_quadrilaterals: 4-subset scan limited to 64 vertices, got " +
                            std::to_string(n));
  }
  std::uint64_t total = 0;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      for (Vertex c = b + 1; c < n; ++c) {
        for (Vertex d = c + 1; d < n; ++d) {
          const std::array<Vertex, 4> q{a, b, c, d};
          std::size_t edges = 0;
          bool two_regular = true;
          for (Vertex x : q) {
            std::size_t deg = 0;
            for (Vertex y : q) deg += g.adjacent(x, y) ? 1 : 0;
            two_regular = two_regular && deg == 2;
            edges += deg;
          }
          if (two_regular && edges == 8) ++total;
        }
      }
    }
  }
  return total;
}

std::uint64_t count_pentagons(const Graph& g, const Exec& exec) {
  return count_cycles(g, 5, exec, "pentagons");
}

std::uint64_t count_hexagons(const Graph& g, const Exec& exec) {
  return count_cycles(g, 6, exec, "hexagons");
}

std::uint64_t pentagons_through_edge(const Graph& g, Edge e) {
  if (e.u >= g.order() || e.v >= g.order() || !g.adjacent(e.u, e.v)) {
    throw std::invalid_argument("pentagons_through_edge: {" + std::to_string(e.u) + "," +
                                std::to_string(e.v) + "} is not an edge");
  }
  const Vertex a = e.u;
  const Vertex b = e.v;
  const auto na = closed_row(g, a);
  const auto nb = closed_row(g, b);
  const std::size_t words = g.words_per_row();
  std::vector<Word> xs(words), ys(words), zs(words);

  // Cycle a - b - x - y - z - a.
  std::uint64_t total = 0;
  const auto rb = g.row(b);
  for (std::size_t w = 0; w < words; ++w) xs[w] = rb[w] & ~na[w];
  bits::for_each(std::span<const Word>(xs), [&](Vertex x) {
    const auto rx = g.row(x);
    for (std::size_t w = 0; w < words; ++w) ys[w] = rx[w] & ~na[w] & ~nb[w];
    bits::for_each(std::span<const Word>(ys), [&](Vertex y) {
      const auto ry = g.row(y);
      const auto ra = g.row(a);
      for (std::size_t w = 0; w < words; ++w) zs[w] = ry[w] & ra[w] & ~nb[w] & ~rx[w];
      bits::reset(zs, x);
      total += bits::count(zs);
    });
  });
  return total;
}

CycleCensus cycle_census(const Graph& g, const Exec& exec) {
  CycleCensus c;
  c.p3 = count_triangles(g);
  c.p4 = count_quadrilaterals(g, true);
  c.p5 = count_pentagons(g, exec);
  c.p6 = count_hexagons(g, exec);
  return c;
}

CodedWalkCensus coded_walk_census(const Graph& g, const Exec& exec) {
  require_family(g, "coded_walk_census");
  struct Acc {
    std::uint64_t pentagon = 0, t1 = 0, t2 = 0, other = 0;
    Acc& operator+=(const Acc& o) {
      pentagon += o.pentagon;
      t1 += o.t1;
      t2 += o.t2;
      other += o.other;
      return *this;
    }
  };
  const std::size_t words = g.words_per_row();
  const Acc acc = parallel_reduce(g.order(), exec, "coded walks", Acc{}, [&](std::size_t start, Acc& out) {
    const auto v0 = static_cast<Vertex>(start);
    const auto r0 = g.row(v0);
    std::vector<Word> dist2(words, 0), step(words);
    bits::for_each(r0, [&](Vertex w) {
      const auto rw = g.row(w);
      for (std::size_t i = 0; i < words; ++i) dist2[i] |= rw[i];
    });
    for (std::size_t i = 0; i < words; ++i) dist2[i] &= ~r0[i];
    bits::reset(dist2, v0);

    bits::for_each(r0, [&](Vertex v1) {
      const auto r1 = g.row(v1);
      for (std::size_t i = 0; i < words; ++i) step[i] = r1[i] & dist2[i];
      const std::vector<Word> second(step);
      bits::for_each(std::span<const Word>(second), [&](Vertex v2) {
        const auto r2 = g.row(v2);
        std::vector<Word> third(words);
        for (std::size_t i = 0; i < words; ++i) third[i] = r2[i] & dist2[i];
        bits::for_each(std::span<const Word>(third), [&](Vertex v3) {
          const auto r3 = g.row(v3);
          std::vector<Word> fourth(words);
          for (std::size_t i = 0; i < words; ++i) fourth[i] = r3[i] & r0[i];
          bits::for_each(std::span<const Word>(fourth), [&](Vertex v4) {
            if (v4 == v1) {
              ++out.t2;
              return;
            }
            const int chords = (g.adjacent(v1, v3) ? 1 : 0) + (g.adjacent(v2, v4) ? 1 : 0) +
                               (g.adjacent(v1, v4) ? 1 : 0);
            if (chords == 0) {
              ++out.pentagon;
            } else if (chords == 1) {
              ++out.t1;
            } else {
              ++out.other;
            }
          });
        });
      });
    });
  });

  if (acc.other != 0) {
    throw InconsistencyError("coded walks: " + str(acc.other) + " walks fit no known configuration");
  }
  CodedWalkCensus c;
  c.pentagon_walks = acc.pentagon;
  c.t1_walks = acc.t1;
  c.t2_walks = acc.t2;
  c.total = acc.pentagon + acc.t1 + acc.t2;
  if (acc.pentagon % 10 != 0 || acc.t1 % 6 != 0 || acc.t2 % 2 != 0) {
    throw InconsistencyError("coded walks: symmetry factors do not divide (" + str(acc.pentagon) +
                             ", " + str(acc.t1) + ", " + str(acc.t2) + ")");
  }
  c.p5 = acc.pentagon / 10;
  c.t1 = acc.t1 / 6;
  c.t2 = acc.t2 / 2;
  expect_equal("coded walks: total vs 10 p5 + 6 t1 + 2 t2", c.total, 10 * c.p5 + 6 * c.t1 + 2 * c.t2);
  return c;
}

EdgeTripleCensus edge_triple_census(const Graph& g, const Exec& exec) {
  const std::vector<Edge> edges = g.edges();
  const std::size_t m = edges.size();
  const std::size_t n = g.order();

  // Incident edge indices per vertex, ascending; neighbor lists sorted.
  std::vector<std::vector<std::uint32_t>> incident(n);
  std::vector<std::vector<Vertex>> nbr(n);
  std::vector<std::vector<std::uint32_t>> nbr_edge(n);
  for (std::uint32_t i = 0; i < m; ++i) {
    incident[edges[i].u].push_back(i);
    incident[edges[i].v].push_back(i);
  }
  for (Vertex v = 0; v < n; ++v) {
    for (std::uint32_t i : incident[v]) {
      nbr[v].push_back(edges[i].u == v ? edges[i].v : edges[i].u);
    }
    std::vector<std::size_t> order(nbr[v].size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return nbr[v][a] < nbr[v][b]; });
    std::vector<Vertex> sorted_nbr;
    for (std::size_t i : order) {
      sorted_nbr.push_back(nbr[v][i]);
      nbr_edge[v].push_back(incident[v][i]);
    }
    nbr[v] = std::move(sorted_nbr);
  }
  auto edge_index = [&](Vertex x, Vertex y) -> std::uint32_t {
    const auto it = std::lower_bound(nbr[x].begin(), nbr[x].end(), y);
    return nbr_edge[x][static_cast<std::size_t>(it - nbr[x].begin())];
  };
  auto incident_after = [&](Vertex x, std::uint32_t j) -> std::uint64_t {
    const auto& inc = incident[x];
    return static_cast<std::uint64_t>(inc.end() - std::upper_bound(inc.begin(), inc.end(), j));
  };

  struct Acc {
    EdgeTripleCensus c;
    Acc& operator+=(const Acc& o) {
      c.e4 += o.c.e4;
      c.e5 += o.c.e5;
      c.e6 += o.c.e6;
      return *this;
    }
  };
  const Acc acc = parallel_reduce(m, exec, "edge triples", Acc{}, [&](std::size_t i, Acc& out) {
    const Edge a = edges[i];
    for (std::uint32_t j = static_cast<std::uint32_t>(i) + 1; j < m; ++j) {
      const Edge b = edges[j];
      std::array<Vertex, 4> span{a.u, a.v, b.u, b.v};
      std::size_t size = 2;
      for (Vertex x : {b.u, b.v}) {
        if (x != a.u && x != a.v) span[size++] = x;
      }
      // Third edges after j: inside the span, touching it once, or disjoint.
      std::uint64_t inside = 0;
      std::uint64_t touching = 0;
      for (std::size_t p = 0; p < size; ++p) {
        touching += incident_after(span[p], j);
        for (std::size_t q = p + 1; q < size; ++q) {
          if (g.adjacent(span[p], span[q]) && edge_index(span[p], span[q]) > j) ++inside;
        }
      }
      const std::uint64_t once = touching - 2 * inside;
      const std::uint64_t disjoint = (m - 1 - j) - inside - once;
      if (size == 3) {
        out.c.e4 += inside + once;
        out.c.e5 += disjoint;
      } else {
        out.c.e4 += inside;
        out.c.e5 += once;
        out.c.e6 += disjoint;
      }
    }
  });

  const BigInt all = binomial(static_cast<std::int64_t>(m), 3);
  if (BigInt(acc.c.e4) + acc.c.e5 + acc.c.e6 != all) {
    throw InconsistencyError("edge triples: e4 + e5 + e6 != C(|E|,3) = " + all.str());
  }
  return acc.c;
}

TrianglePairCensus disjoint_triangle_pair_census(const Graph& g, const Exec& exec) {
  const std::vector<Triangle> tris = list_triangles(g);
  struct Acc {
    TrianglePairCensus c;
    std::size_t witness_key = SIZE_MAX;
    Acc& operator+=(const Acc& o) {
      c.prism += o.c.prism;
      c.two_edges += o.c.two_edges;
      c.one_edge += o.c.one_edge;
      c.none += o.c.none;
      c.other += o.c.other;
      if (o.witness_key < witness_key) {
        witness_key = o.witness_key;
        c.two_edge_witness = o.c.two_edge_witness;
      }
      return *this;
    }
  };
  const std::size_t count = tris.size();
  const Acc acc = parallel_reduce(count, exec, "triangle pairs", Acc{}, [&](std::size_t i, Acc& out) {
    const Triangle& s = tris[i];
    for (std::size_t j = i + 1; j < count; ++j) {
      const Triangle& t = tris[j];
      bool shared = false;
      for (Vertex x : s) shared = shared || contains(t, x);
      if (shared) continue;
      const std::array<Vertex, 6> vs{s[0], s[1], s[2], t[0], t[1], t[2]};
      switch (classify_six(g, vs)) {
        case SixType::prism: ++out.c.prism; break;
        case SixType::triangles_one_edge: ++out.c.one_edge; break;
        case SixType::two_triangles: ++out.c.none; break;
        case SixType::triangles_two_edges: {
          ++out.c.two_edges;
          const std::size_t key = i * count + j;
          if (key < out.witness_key) {
            out.witness_key = key;
            TrianglePairWitness w{s, t, {}};
            std::size_t e = 0;
            for (Vertex x : s) {
              for (Vertex y : t) {
                if (g.adjacent(x, y) && e < 2) w.connecting[e++] = Edge{std::min(x, y), std::max(x, y)};
              }
            }
            out.c.two_edge_witness = w;
          }
          break;
        }
        default: ++out.c.other; break;
      }
    }
  });
  return acc.c;
}

QuadPairCensus quad_pair_census(const Graph& g, Scope scope) {
  std::int64_t k = 0;
  if (scope == Scope::family) {
    require_family(g, "quad_pair_census");
    k = family_degree(g);
  }
  QuadPairCensus c;
  const std::size_t words = g.words_per_row();
  std::vector<Word> as(words), bs(words);
  std::vector<std::pair<Vertex, Vertex>> quads;
  for (const Edge& e : g.edges()) {
    const Vertex u = e.u;
    const Vertex v = e.v;
    const auto nu = closed_row(g, u);
    const auto nv = closed_row(g, v);
    // Quadrilaterals u - v - a - b - u.
    quads.clear();
    const auto rv = g.row(v);
    for (std::size_t w = 0; w < words; ++w) as[w] = rv[w] & ~nu[w];
    bits::for_each(std::span<const Word>(as), [&](Vertex a) {
      const auto ra = g.row(a);
      const auto ru = g.row(u);
      for (std::size_t w = 0; w < words; ++w) bs[w] = ra[w] & ru[w] & ~nv[w];
      bits::for_each(std::span<const Word>(bs), [&](Vertex b) { quads.emplace_back(a, b); });
    });
    if (scope == Scope::family && static_cast<std::int64_t>(quads.size()) != k - 2) {
      throw PreconditionError("quad_pair_census: edge {" + std::to_string(u) + "," + std::to_string(v) +
                              "} lies on " + std::to_string(quads.size()) +
                              " quadrilaterals, family requires k-2 = " + std::to_string(k - 2));
    }
    for (std::size_t i = 0; i < quads.size(); ++i) {
      for (std::size_t j = i + 1; j < quads.size(); ++j) {
        const auto [a1, b1] = quads[i];
        const auto [a2, b2] = quads[j];
        if (a1 == a2 || a1 == b2 || b1 == a2 || b1 == b2) {
          ++c.overlapping;
          continue;
        }
        const std::array<Vertex, 6> vs{u, v, a1, b1, a2, b2};
        switch (classify_six(g, vs)) {
          case SixType::prism: ++c.prism_incidences; break;
          case SixType::pentagon_apex_opposite: ++c.pentagon_apex_opposite; break;
          case SixType::domino: ++c.domino; break;
          default: ++c.other; break;
        }
      }
    }
  }
  if (scope == Scope::family) {
    if (c.other != 0 || c.overlapping != 0) {
      throw InconsistencyError("quad_pair_census: " + str(c.other) + " unexpected and " +
                               str(c.overlapping) + " overlapping quadrilateral pairs");
    }
    if (c.prism_incidences % 3 != 0) {
      throw InconsistencyError("quad_pair_census: prism incidences " + str(c.prism_incidences) +
                               " not divisible by 3");
    }
    const auto pairs_per_edge = static_cast<std::uint64_t>((k - 2) * (k - 3) / 2);
    expect_equal("quad_pair_census: 3 n1 + n4 + n9 vs |E| C(k-2,2)",
                 c.prism_incidences + c.pentagon_apex_opposite + c.domino,
                 checked_mul(g.edge_count(), pairs_per_edge));
  }
  return c;
}

PentagonTriangleCensus pentagon_triangle_census(const Graph& g, Scope scope, const Exec& exec) {
  const bool family = scope == Scope::family;
  if (family) require_family(g, "pentagon_triangle_census");
  struct Acc {
    PentagonTriangleCensus c;
    std::uint64_t bad_sides = 0;
    Acc& operator+=(const Acc& o) {
      c.pentagons += o.c.pentagons;
      c.pentagon_apex_opposite += o.c.pentagon_apex_opposite;
      c.pentagon_apex += o.c.pentagon_apex;
      c.other += o.c.other;
      bad_sides += o.bad_sides;
      return *this;
    }
  };
  const std::size_t words = g.words_per_row();
  const Acc acc = parallel_reduce(g.order(), exec, "pentagon completions", Acc{}, [&](std::size_t s, Acc& out) {
    ChordlessCycleWalker walker(g, 5);
    std::vector<Word> apex(words);
    walker.from(static_cast<Vertex>(s), [&](std::span<const Vertex> cyc) {
      ++out.c.pentagons;
      for (std::size_t i = 0; i < 5; ++i) {
        const Vertex x = cyc[i];
        const Vertex y = cyc[(i + 1) % 5];
        const auto rx = g.row(x);
        const auto ry = g.row(y);
        for (std::size_t w = 0; w < words; ++w) apex[w] = rx[w] & ry[w];
        std::size_t apexes = 0;
        bits::for_each(std::span<const Word>(apex), [&](Vertex z) {
          ++apexes;
          if (contains(cyc, z)) {
            ++out.c.other;
            return;
          }
          const std::array<Vertex, 6> vs{cyc[0], cyc[1], cyc[2], cyc[3], cyc[4], z};
          switch (classify_six(g, vs)) {
            case SixType::pentagon_apex_opposite: ++out.c.pentagon_apex_opposite; break;
            case SixType::pentagon_apex: ++out.c.pentagon_apex; break;
            default: ++out.c.other; break;
          }
        });
        if (apexes != 1) ++out.bad_sides;
      }
    });
  });
  if (family) {
    if (acc.bad_sides != 0 || acc.c.other != 0) {
      throw InconsistencyError("pentagon_triangle_census: " + str(acc.bad_sides) +
                               " sides without a unique apex, " + str(acc.c.other) +
                               " completions of unexpected type or with the apex on the pentagon");
    }
    expect_equal("pentagon_triangle_census: n4 + n8 vs 5 p5",
                 acc.c.pentagon_apex_opposite + acc.c.pentagon_apex, 5 * acc.c.pentagons);
  }
  return acc.c;
}

std::uint64_t QuadPlusEdgeCensus::count(SixType t) const {
  const auto splits = six_type_info(t).c4_edge_splits;
  if (splits == 0) return 0;
  return incidences_of(t) / splits;
}

std::uint64_t QuadPlusEdgeCensus::aggregate() const {
  std::uint64_t s = 0;
  for (SixType t : kAggregateTypes) s += count(t);
  return s;
}

QuadPlusEdgeCensus quad_plus_edge_census(const Graph& g, Scope scope, const Exec& exec) {
  const bool family = scope == Scope::family;
  if (family) require_family(g, "quad_plus_edge_census");
  const auto quads = list_quadrilaterals(g);
  const auto edges = g.edges();

  struct Acc {
    QuadPlusEdgeCensus c;
    Acc& operator+=(const Acc& o) {
      c.total += o.c.total;
      for (std::size_t i = 0; i < kSixTypeCount; ++i) c.incidences[i] += o.c.incidences[i];
      return *this;
    }
  };
  const Acc acc = parallel_reduce(quads.size(), exec, "quadrilateral plus edge", Acc{}, [&](std::size_t qi, Acc& out) {
    const auto& q = quads[qi];
    for (const Edge& e : edges) {
      if (contains(q, e.u) || contains(q, e.v)) continue;
      const std::array<Vertex, 6> vs{q[0], q[1], q[2], q[3], e.u, e.v};
      ++out.c.total;
      ++out.c.incidences[static_cast<std::size_t>(classify_six(g, vs))];
    }
  });

  QuadPlusEdgeCensus c = acc.c;
  c.quadrilaterals = quads.size();
  if (family) {
    if (c.incidences_of(SixType::other) != 0) {
      throw InconsistencyError("quad_plus_edge_census: " + str(c.incidences_of(SixType::other)) +
                               " pairs induce an unexpected class");
    }
    for (SixType t : kNamedSixTypes) {
      const auto splits = six_type_info(t).c4_edge_splits;
      if (splits != 0 && c.incidences_of(t) % splits != 0) {
        throw InconsistencyError("quad_plus_edge_census: incidences of " + std::string(to_string(t)) +
                                 " not divisible by " + std::to_string(splits));
      }
    }
    const std::int64_t k = family_degree(g);
    const auto avoiding = static_cast<std::uint64_t>(static_cast<std::int64_t>(g.edge_count()) - 4 * (k - 2) - 4);
    expect_equal("quad_plus_edge_census: total vs p4 (|E| - 4(k-2) - 4)", c.total,
                 checked_mul(c.quadrilaterals, avoiding));
  }
  return c;
}

std::uint64_t count_n2(const Graph& g, Scope scope) {
  const bool family = scope == Scope::family;
  if (family) require_family(g, "count_n2");
  const auto quads = list_quadrilaterals(g);
  const std::size_t words = g.words_per_row();
  std::vector<Word> xs(words), ys(words);
  std::uint64_t total = 0;
  for (const auto& q : quads) {
    for (std::size_t i = 0; i < 4; ++i) {
      const Vertex a = q[(i + 3) % 4];
      const Vertex b = q[i];
      const Vertex c = q[(i + 1) % 4];
      const auto ra = g.row(a);
      const auto rb = g.row(b);
      const auto rc = g.row(c);
      for (std::size_t w = 0; w < words; ++w) {
        xs[w] = ra[w] & rb[w];
        ys[w] = rb[w] & rc[w];
      }
      for (Vertex v : q) {
        bits::reset(xs, v);
        bits::reset(ys, v);
      }
      bits::for_each(std::span<const Word>(xs), [&](Vertex x) {
        bits::for_each(std::span<const Word>(ys), [&](Vertex y) {
          if (x == y) return;
          const std::array<Vertex, 6> vs{q[0], q[1], q[2], q[3], x, y};
          if (classify_six(g, vs) == SixType::c4_adjacent_triangles) ++total;
        });
      });
    }
  }
  if (family) expect_equal("count_n2: n2 vs 4 p4", total, 4 * static_cast<std::uint64_t>(quads.size()));
  return total;
}

TriangleCompletionCensus triangle_edge_completion_census(const Graph& g, Scope scope) {
  const bool family = scope == Scope::family;
  if (family) require_family(g, "triangle_edge_completion_census");
  const auto tris = list_triangles(g);
  const std::size_t words = g.words_per_row();
  std::vector<Word> ds(words), es(words), fs(words);
  TriangleCompletionCensus c;
  std::uint64_t irregular = 0;
  for (const Triangle& t : tris) {
    for (std::size_t i = 0; i < 3; ++i) {
      const Vertex x = t[i];
      const Vertex y = t[(i + 1) % 3];
      const Vertex z = t[(i + 2) % 3];
      const auto rx = g.row(x);
      const auto ry = g.row(y);
      const auto rz = g.row(z);
      // Pendant d: adjacent to x only among the triangle.
      for (std::size_t w = 0; w < words; ++w) ds[w] = rx[w] & ~ry[w] & ~rz[w];
      bits::reset(ds, y);
      bits::reset(ds, z);
      bits::for_each(std::span<const Word>(ds), [&](Vertex d) {
        const auto rd = g.row(d);
        for (std::size_t w = 0; w < words; ++w) {
          es[w] = rd[w] & ry[w];
          fs[w] = rd[w] & rz[w];
        }
        bits::reset(es, x);
        bits::reset(fs, x);
        if (bits::count(es) != 1 || bits::count(fs) != 1) ++irregular;
        bits::for_each(std::span<const Word>(es), [&](Vertex e) {
          bits::for_each(std::span<const Word>(fs), [&](Vertex f) {
            if (e == f) {
              ++c.other;
              return;
            }
            const std::array<Vertex, 6> vs{x, y, z, d, e, f};
            switch (classify_six(g, vs)) {
              case SixType::prism: ++c.prism_incidences; break;
              case SixType::pentagon_apex_opposite: ++c.pentagon_apex_opposite; break;
              default: ++c.other; break;
            }
          });
        });
      });
    }
  }
  if (family) {
    if (c.other != 0 || irregular != 0) {
      throw InconsistencyError("triangle_edge_completion_census: " + str(c.other) +
                               " unexpected completions, " + str(irregular) + " non-unique");
    }
    if (c.prism_incidences % 6 != 0) {
      throw InconsistencyError("triangle_edge_completion_census: prism incidences not divisible by 6");
    }
    const auto k = static_cast<std::uint64_t>(family_degree(g));
    expect_equal("triangle_edge_completion_census: 6 n1 + n4 vs 3(k-2) p3",
                 c.prism_incidences + c.pentagon_apex_opposite,
                 checked_mul(3 * (k - 2), tris.size()));
  }
  return c;
}

std::vector<SixClassCount> exhaustive_six_census(const Graph& g, std::size_t max_order) {
  const std::size_t n = g.order();
  if (n > max_order) {
    throw PreconditionError("exhaustive_six_census: order " + std::to_string(n) + " exceeds limit " +
                            std::to_string(max_order));
  }
  const auto classes = six_vertex_classes();
  std::vector<std::uint64_t> counts(classes.size(), 0);
  std::array<Vertex, 6> vs{};
  const auto m = static_cast<Vertex>(n);
  for (vs[0] = 0; vs[0] < m; ++vs[0])
    for (vs[1] = vs[0] + 1; vs[1] < m; ++vs[1])
      for (vs[2] = vs[1] + 1; vs[2] < m; ++vs[2])
        for (vs[3] = vs[2] + 1; vs[3] < m; ++vs[3])
          for (vs[4] = vs[3] + 1; vs[4] < m; ++vs[4])
            for (vs[5] = vs[4] + 1; vs[5] < m; ++vs[5]) ++counts[six_class_index(six_mask(g, vs))];

  std::vector<SixClassCount> out;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (counts[i] != 0) out.push_back({&classes[i], counts[i]});
  }
  return out;
}

std::uint64_t TypeCensus::aggregate() const {
  std::uint64_t s = 0;
  for (SixType t : kAggregateTypes) s += (*this)[t];
  return s;
}

TypeCensus type_census_from_exhaustive(std::span<const SixClassCount> classes,
                                       const EdgeTripleCensus& triples) {
  TypeCensus t;
  for (const auto& c : classes) t[c.info->type] += c.count;
  t.triples = triples;
  return t;
}

TypeCensus FamilyCensus::types() const {
  TypeCensus t;
  t[SixType::prism] = triangle_pairs.prism;
  t[SixType::c4_adjacent_triangles] = n2;
  t[SixType::triangles_two_edges] = triangle_pairs.two_edges;
  t[SixType::pentagon_apex_opposite] = quad_pairs.pentagon_apex_opposite;
  t[SixType::triangles_one_edge] = triangle_pairs.one_edge;
  for (SixType a : kAggregateTypes) t[a] = quad_plus_edge.count(a);
  t[SixType::pentagon_apex] = pentagon_triangles.pentagon_apex;
  t[SixType::domino] = quad_pairs.domino;
  t[SixType::hexagon] = cycles.p6;
  t[SixType::c4_plus_edge] = quad_plus_edge.count(SixType::c4_plus_edge);
  t[SixType::two_triangles] = triangle_pairs.none;
  t.triples = triples;
  return t;
}

FamilyCensus family_census(const Graph& g, const Exec& exec) {
  require_family(g, "family_census");
  FamilyCensus f;
  f.n = static_cast<std::int64_t>(g.order());
  f.k = family_degree(g);
  f.edges = g.edge_count();
  f.cycles = cycle_census(g, exec);
  f.walks = coded_walk_census(g, exec);
  f.triples = edge_triple_census(g, exec);
  f.triangle_pairs = disjoint_triangle_pair_census(g, exec);
  f.quad_pairs = quad_pair_census(g, Scope::family);
  f.pentagon_triangles = pentagon_triangle_census(g, Scope::family, exec);
  f.quad_plus_edge = quad_plus_edge_census(g, Scope::family, exec);
  f.completions = triangle_edge_completion_census(g, Scope::family);
  f.n2 = count_n2(g, Scope::family);
  return f;
}

}  // namespace srg12
