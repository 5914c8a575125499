#pragma once

#include <coldsp/graph.hpp>

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

namespace coldsp {

struct ParseOptions {
  /// 0: canonical format, fields split on runs of spaces/tabs and colors comma-separated.
  /// Any other character: exactly three fields `u<sep>v<sep>color` with one color per line
  /// (one line per layer, as most multilayer datasets are distributed).
  char field_separator = 0;
};

/// Reads the edge-list format: `<u> <v> <c1>[,<c2>,...]` per line, `#` comments, blank lines
/// ignored. Throws ParseError on malformed lines, self-loops, or input without edges.
EdgeColoredGraph parse_edge_list(std::istream& in, const ParseOptions& options = {});
EdgeColoredGraph parse_edge_list(std::string_view text, const ParseOptions& options = {});
EdgeColoredGraph load_edge_list(const std::filesystem::path& path, const ParseOptions& options = {});

/// One line per edge in edge order, original labels, colors sorted by token.
std::string serialize_edge_list(const EdgeColoredGraph& g);

}  // namespace coldsp
