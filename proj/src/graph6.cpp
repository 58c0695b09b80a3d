#include "srg12/graph6.hpp"

#include <fstream>
#include <istream>
#include <stdexcept>

#include "srg12/errors.hpp"

namespace srg12 {
namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr std::uint64_t kShortMax = 62;
constexpr std::uint64_t kMediumMax = 258047;
constexpr std::uint64_t kLongMax = 68719476735ULL;

void put_sextets(std::string& out, std::uint64_t value, int count) {
  for (int i = count - 1; i >= 0; --i) {
    out.push_back(static_cast<char>(((value >> (6 * i)) & 0x3F) + 63));
  }
}

}  // namespace

std::string to_graph6(const Graph& g) {
  const std::uint64_t n = g.order();
  std::string out;
  if (n <= kShortMax) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= kMediumMax) {
    out.push_back(126);
    put_sextets(out, n, 3);
  } else if (n <= kLongMax) {
    out.push_back(126);
    out.push_back(126);
    put_sextets(out, n, 6);
  } else {
    throw std::invalid_argument("graph too large for graph6");
  }

  // Upper triangle, column by column: (0,1), (0,2), (1,2), (0,3), ...
  int filled = 0;
  unsigned sextet = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      sextet = (sextet << 1) | (g.adjacent(i, j) ? 1U : 0U);
      if (++filled == 6) {
        out.push_back(static_cast<char>(sextet + 63));
        filled = 0;
        sextet = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((sextet << (6 - filled)) + 63));
  return out;
}

Graph from_graph6(std::string_view text, std::size_t line) {
  std::size_t pos = 0;
  if (text.starts_with(kHeader)) pos = kHeader.size();
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);

  auto sextet_at = [&](std::size_t p) -> unsigned {
    if (p >= text.size()) throw Graph6Error("graph6 string truncated", line, p);
    const auto c = static_cast<unsigned char>(text[p]);
    if (c < 63 || c > 126) {
      throw Graph6Error("invalid graph6 byte " + std::to_string(c), line, p);
    }
    return c - 63U;
  };

  std::uint64_t n = 0;
  if (pos >= text.size()) throw Graph6Error("empty graph6 string", line, pos);
  if (sextet_at(pos) < 63) {
    n = sextet_at(pos);
    pos += 1;
  } else if (pos + 1 < text.size() && static_cast<unsigned char>(text[pos + 1]) == 126) {
    for (std::size_t i = 0; i < 6; ++i) n = (n << 6) | sextet_at(pos + 2 + i);
    pos += 8;
    if (n <= kMediumMax) throw Graph6Error("non-canonical 8-byte order prefix", line, pos - 8);
  } else {
    for (std::size_t i = 0; i < 3; ++i) n = (n << 6) | sextet_at(pos + 1 + i);
    pos += 4;
    if (n <= kShortMax) throw Graph6Error("non-canonical 4-byte order prefix", line, pos - 4);
  }

  const std::uint64_t pair_count = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t body_len = (pair_count + 5) / 6;
  if (text.size() - pos != body_len) {
    throw Graph6Error("expected " + std::to_string(body_len) + " adjacency bytes for order " +
                          std::to_string(n) + ", found " + std::to_string(text.size() - pos),
                      line, text.size() < pos + body_len ? text.size() : pos + body_len);
  }

  std::vector<Edge> es;
  std::uint64_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const unsigned s = sextet_at(pos + k / 6);
      if ((s >> (5 - k % 6)) & 1U) es.push_back({i, j});
    }
  }
  if (pair_count % 6 != 0) {
    const unsigned last = sextet_at(pos + body_len - 1);
    const unsigned pad_mask = (1U << (6 - pair_count % 6)) - 1U;
    if (last & pad_mask) throw Graph6Error("nonzero padding bits", line, pos + body_len - 1);
  }
  return Graph(static_cast<std::size_t>(n), es);
}

std::vector<Graph> read_graph6(std::istream& in) {
  std::vector<Graph> out;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    if (text.empty()) continue;
    out.push_back(from_graph6(text, line));
  }
  return out;
}

Graph load_graph6(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  auto graphs = read_graph6(in);
  if (graphs.empty()) throw Graph6Error("no graph in " + path.string(), 1, 0);
  return std::move(graphs.front());
}

void save_graph6(const std::filesystem::path& path, const Graph& g) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << to_graph6(g) << '\n';
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace srg12
