#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "srg12/graph.hpp"

namespace srg12 {

/// Encodes `g` as one graph6 line (no header, no trailing newline). Orders
/// above 62 use the 4-byte form, above 258047 the 8-byte form.
std::string to_graph6(const Graph& g);

/// Decodes a single graph6 string. An optional ">>graph6<<" prefix is
/// accepted. Errors carry the byte offset within `text` and the given line.
Graph from_graph6(std::string_view text, std::size_t line = 1);

/// Reads every graph in a graph6 stream, one per line; blank lines skipped.
std::vector<Graph> read_graph6(std::istream& in);

/// First graph in a graph6 file. Throws Graph6Error when the file is empty
/// and std::runtime_error when it cannot be opened.
Graph load_graph6(const std::filesystem::path& path);

void save_graph6(const std::filesystem::path& path, const Graph& g);

}  // namespace srg12
