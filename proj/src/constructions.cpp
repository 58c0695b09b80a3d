#include "srg12/constructions.hpp"

#include <array>
#include <stdexcept>

#include "srg12/conditions.hpp"
#include "srg12/errors.hpp"
#include "srg12/spectral.hpp"

namespace srg12 {
namespace {

struct Gf9 {
  int a = 0;  // constant term
  int b = 0;  // coefficient of x, x^2 = -1

  static Gf9 from_index(int i) { return {i % 3, i / 3}; }
  int index() const { return a + 3 * b; }
  bool is_zero() const { return a == 0 && b == 0; }

  friend Gf9 operator-(Gf9 p, Gf9 q) { return {(p.a - q.a + 3) % 3, (p.b - q.b + 3) % 3}; }
  friend Gf9 operator*(Gf9 p, Gf9 q) {
    return {((p.a * q.a - p.b * q.b) % 3 + 3) % 3, (p.a * q.b + p.b * q.a) % 3};
  }
};

constexpr int kGolayLength = 11;
constexpr int kGolayRedundancy = 5;
// x^5 + x^4 - x^3 + x^2 - 1, low-order coefficient first.
constexpr std::array<int, kGolayRedundancy + 1> kGolayGenerator{2, 0, 1, 2, 1, 1};

using Syndrome = std::array<int, kGolayRedundancy>;

int syndrome_index(const Syndrome& s) {
  int idx = 0;
  for (int i = kGolayRedundancy - 1; i >= 0; --i) idx = idx * 3 + s[static_cast<std::size_t>(i)];
  return idx;
}

Syndrome syndrome_from_index(int idx) {
  Syndrome s{};
  for (int i = 0; i < kGolayRedundancy; ++i) {
    s[static_cast<std::size_t>(i)] = idx % 3;
    idx /= 3;
  }
  return s;
}

// x^j reduced modulo the generator polynomial.
Syndrome monomial_syndrome(int j) {
  Syndrome r{};
  r[0] = 1;
  for (int step = 0; step < j; ++step) {
    const int carry = r[kGolayRedundancy - 1];
    for (int i = kGolayRedundancy - 1; i > 0; --i) r[static_cast<std::size_t>(i)] = r[static_cast<std::size_t>(i - 1)];
    r[0] = 0;
    // x^5 = -(g0 + g1 x + ... + g4 x^4)
    for (int i = 0; i < kGolayRedundancy; ++i) {
      auto& c = r[static_cast<std::size_t>(i)];
      c = ((c - carry * kGolayGenerator[static_cast<std::size_t>(i)]) % 3 + 3) % 3;
    }
  }
  return r;
}

}  // namespace

std::string_view to_string(KnownGraph g) {
  switch (g) {
    case KnownGraph::k3: return "k3";
    case KnownGraph::paley9: return "paley9";
    case KnownGraph::bvls243: return "bvls243";
    case KnownGraph::none_known: return "none-known";
  }
  return "none-known";
}

std::optional<KnownGraph> parse_known_graph(std::string_view name) {
  if (name == "k3") return KnownGraph::k3;
  if (name == "paley9") return KnownGraph::paley9;
  if (name == "bvls243") return KnownGraph::bvls243;
  return std::nullopt;
}

Graph build_k3() {
  const std::array<Edge, 3> es{{{0, 1}, {0, 2}, {1, 2}}};
  return Graph(3, es);
}

Graph build_paley9() {
  std::array<bool, 9> square{};
  for (int i = 1; i < 9; ++i) {
    const Gf9 x = Gf9::from_index(i);
    square[static_cast<std::size_t>((x * x).index())] = true;
  }
  std::vector<Edge> es;
  for (int u = 0; u < 9; ++u) {
    for (int v = u + 1; v < 9; ++v) {
      const Gf9 d = Gf9::from_index(u) - Gf9::from_index(v);
      if (square[static_cast<std::size_t>(d.index())]) {
        es.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
      }
    }
  }
  return Graph(9, es);
}

Graph build_bvls243() {
  constexpr int kCosets = 243;
  std::array<bool, kCosets> connection{};
  for (int j = 0; j < kGolayLength; ++j) {
    Syndrome s = monomial_syndrome(j);
    connection[static_cast<std::size_t>(syndrome_index(s))] = true;
    for (auto& c : s) c = (3 - c) % 3;
    connection[static_cast<std::size_t>(syndrome_index(s))] = true;
  }

  std::vector<Edge> es;
  for (int u = 0; u < kCosets; ++u) {
    const Syndrome su = syndrome_from_index(u);
    for (int v = u + 1; v < kCosets; ++v) {
      const Syndrome sv = syndrome_from_index(v);
      Syndrome d{};
      for (std::size_t i = 0; i < d.size(); ++i) d[i] = (su[i] - sv[i] + 3) % 3;
      if (connection[static_cast<std::size_t>(syndrome_index(d))]) {
        es.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
      }
    }
  }
  Graph g(kCosets, es);

  const auto report = verify_srg(g, SrgParams{243, 22, 1, 2});
  if (!report.ok()) {
    std::string why = "Golay coset graph failed srg(243,22,1,2) verification";
    for (const auto& m : report.mismatches) why += "; " + m;
    throw InconsistencyError(why);
  }
  return g;
}

Graph build_known(KnownGraph which) {
  switch (which) {
    case KnownGraph::k3: return build_k3();
    case KnownGraph::paley9: return build_paley9();
    case KnownGraph::bvls243: return build_bvls243();
    case KnownGraph::none_known: break;
  }
  throw std::invalid_argument("no construction for an unknown graph");
}

std::vector<FeasibleParams> feasible_parameters(std::int64_t k_max, bool include_degenerate) {
  if (k_max < 2) throw std::invalid_argument("feasible_parameters: k_max must be >= 2");
  std::vector<FeasibleParams> out;
  for (std::int64_t k = include_degenerate ? 2 : 4; k <= k_max; k += 2) {
    const std::int64_t n = (k * k + 2) / 2;
    Spectrum s;
    try {
      s = srg_spectrum(SrgParams{n, k, 1, 2});
    } catch (const InfeasibleParams&) {
      continue;
    }
    FeasibleParams p{k, n, s.lambda1, s.lambda2, s.r1, s.r2, KnownGraph::none_known};
    if (k == 2) p.known_graph = KnownGraph::k3;
    if (k == 4) p.known_graph = KnownGraph::paley9;
    if (k == 22) p.known_graph = KnownGraph::bvls243;
    out.push_back(p);
  }
  return out;
}

}  // namespace srg12
