#include "srg12/spectral.hpp"

#include <cmath>
#include <string>

#include "srg12/errors.hpp"
#include "srg12/small_graph.hpp"

namespace srg12 {
namespace {

std::int64_t isqrt_exact(std::int64_t x, bool& exact) {
  if (x < 0) {
    exact = false;
    return 0;
  }
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(x)));
  while (r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  exact = r * r == x;
  return r;
}

// e_j of the multiset {l1^r1, l2^r2}.
BigInt restricted_elementary(const Spectrum& s, int j) {
  BigInt sum = 0;
  for (int i = 0; i <= j; ++i) {
    sum += binomial(s.r1, j - i) * binomial(s.r2, i) * boost::multiprecision::pow(BigInt(s.lambda1), static_cast<unsigned>(j - i)) *
           boost::multiprecision::pow(BigInt(s.lambda2), static_cast<unsigned>(i));
  }
  return sum;
}

}  // namespace

Spectrum srg_spectrum(const SrgParams& p) {
  const std::string tag = "(" + std::to_string(p.n) + "," + std::to_string(p.k) + "," +
                          std::to_string(p.lambda) + "," + std::to_string(p.mu) + ")";
  if (p.n < 1 || p.k < 0 || p.k >= p.n) {
    throw InfeasibleParams("srg" + tag + ": requires n >= 1 and 0 <= k < n");
  }
  if (p.k * (p.k - p.lambda - 1) != p.mu * (p.n - p.k - 1)) {
    throw InfeasibleParams("srg" + tag + ": k(k-lambda-1) = mu(n-k-1) fails");
  }
  const std::int64_t b = p.lambda - p.mu;
  const std::int64_t disc = b * b + 4 * (p.k - p.mu);
  bool exact = false;
  const std::int64_t root = isqrt_exact(disc, exact);
  if (!exact) {
    throw InfeasibleParams("srg" + tag + ": discriminant " + std::to_string(disc) +
                           " of x^2 - (lambda-mu)x - (k-mu) is not a perfect square");
  }
  if (root == 0) {
    throw InfeasibleParams("srg" + tag + ": restricted eigenvalues coincide");
  }
  Spectrum s;
  s.n = p.n;
  s.k = p.k;
  s.lambda1 = (b + root) / 2;
  s.lambda2 = (b - root) / 2;
  // r1 + r2 = n - 1 and k + r1*lambda1 + r2*lambda2 = 0.
  const std::int64_t numer = -p.k - (p.n - 1) * s.lambda2;
  if (numer % root != 0) {
    throw InfeasibleParams("srg" + tag + ": multiplicity r1 = " + std::to_string(numer) + "/" +
                           std::to_string(root) + " is not an integer");
  }
  s.r1 = numer / root;
  s.r2 = p.n - 1 - s.r1;
  if (s.r1 < 0 || s.r2 < 0) {
    throw InfeasibleParams("srg" + tag + ": negative multiplicity (r1=" + std::to_string(s.r1) +
                           ", r2=" + std::to_string(s.r2) + ")");
  }
  return s;
}

BigInt c6_closed_form(std::int64_t n, std::int64_t k) {
  if (2 * n != k * k + 2) {
    throw InfeasibleParams("c6 closed form needs n = (k^2+2)/2, got n=" + std::to_string(n) +
                           ", k=" + std::to_string(k));
  }
  const BigInt kk = k;
  const BigInt poly = 3 * pow(kk, 5) + 6 * pow(kk, 4) - 84 * pow(kk, 3) + 116 * kk * kk + 124 * kk - 240;
  const BigInt numer = BigInt(n) * kk * (kk - 2) * poly;
  if (numer % 576 != 0) {
    throw InfeasibleParams("c6 closed form: division by 576 is not exact at n=" + std::to_string(n) +
                           ", k=" + std::to_string(k));
  }
  return -numer / 576;
}

BigInt c6_binomial_sum(const Spectrum& s) {
  return BigInt(s.k) * restricted_elementary(s, 5) + restricted_elementary(s, 6);
}

std::vector<BigInt> newton_coefficients(const std::vector<BigInt>& traces, std::size_t m) {
  if (traces.size() <= m) throw std::invalid_argument("newton_coefficients: not enough traces");
  std::vector<BigInt> c(m + 1);
  c[0] = 1;
  for (std::size_t i = 1; i <= m; ++i) {
    BigInt s = 0;
    for (std::size_t j = 1; j <= i; ++j) s += c[i - j] * traces[j];
    if (s % i != 0) {
      throw InconsistencyError("Newton identity: sum " + s.str() + " not divisible by " +
                               std::to_string(i));
    }
    c[i] = -s / i;
  }
  return c;
}

std::vector<BigInt> adjacency_traces(const Graph& g, std::size_t m, const Exec& exec) {
  const std::size_t n = g.order();
  std::vector<std::vector<Vertex>> adj(n);
  for (Vertex v = 0; v < n; ++v) adj[v] = g.neighbors(v);

  struct Acc {
    std::vector<BigInt> t;
    Acc& operator+=(const Acc& o) {
      for (std::size_t i = 0; i < t.size(); ++i) t[i] += o.t[i];
      return *this;
    }
  };
  const Acc zero{std::vector<BigInt>(m + 1, 0)};

  Acc total = parallel_reduce(n, exec, "traces", zero, [&](std::size_t start, Acc& acc) {
    // walks[u] = number of walks of the current length from start to u
    std::vector<std::int64_t> walks(n, 0), next(n, 0);
    walks[start] = 1;
    for (std::size_t len = 1; len <= m; ++len) {
      for (Vertex u = 0; u < n; ++u) {
        std::int64_t s = 0;
        for (Vertex w : adj[u]) {
          if (__builtin_add_overflow(s, walks[w], &s)) {
            throw InconsistencyError("walk count overflow at length " + std::to_string(len));
          }
        }
        next[u] = s;
      }
      walks.swap(next);
      acc.t[len] += walks[start];
    }
  });
  total.t[0] = static_cast<std::int64_t>(n);
  return total.t;
}

CharPolyPrefix charpoly_prefix(const Graph& g, std::size_t m, const Exec& exec) {
  CharPolyPrefix out;
  out.traces = adjacency_traces(g, m, exec);
  out.coefficients = newton_coefficients(out.traces, m);
  return out;
}

std::vector<BigInt> srg_traces(const SrgParams& p, std::size_t m) {
  // A^j = alpha I + beta A + gamma J, with AJ = kJ; trace = n(alpha + gamma).
  BigInt alpha = 1, beta = 0, gamma = 0;
  std::vector<BigInt> t(m + 1);
  t[0] = p.n;
  for (std::size_t j = 1; j <= m; ++j) {
    const BigInt a = beta * (p.k - p.mu);
    const BigInt b = alpha + beta * (p.lambda - p.mu);
    const BigInt c = beta * p.mu + gamma * p.k;
    alpha = a;
    beta = b;
    gamma = c;
    t[j] = BigInt(p.n) * (alpha + gamma);
  }
  return t;
}

BigInt ci_detsum(const Graph& g, std::size_t i) {
  const std::size_t n = g.order();
  if (n > 10) throw PreconditionError("ci_detsum: order " + std::to_string(n) + " exceeds 10");
  if (i > 6) throw PreconditionError("ci_detsum: index " + std::to_string(i) + " exceeds 6");
  if (i > n) return 0;

  BigInt sum = 0;
  std::vector<Vertex> subset(i);
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) != i) continue;
    std::size_t idx = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (mask >> v & 1U) subset[idx++] = v;
    }
    std::vector<std::int64_t> m(i * i, 0);
    for (std::size_t r = 0; r < i; ++r) {
      for (std::size_t c = 0; c < i; ++c) m[r * i + c] = g.adjacent(subset[r], subset[c]) ? 1 : 0;
    }
    sum += integer_determinant(std::move(m), i);
  }
  return (i % 2 == 0) ? sum : BigInt(-sum);
}

}  // namespace srg12
