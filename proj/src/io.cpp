#include <coldsp/errors.hpp>
#include <coldsp/io.hpp>

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>
#include <vector>

namespace coldsp {

namespace {

bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\r'; }

std::vector<std::string_view> split_fields(std::string_view line, char separator) {
  std::vector<std::string_view> fields;
  if (separator == 0) {
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && is_blank(line[i])) ++i;
      const std::size_t start = i;
      while (i < line.size() && !is_blank(line[i])) ++i;
      if (i > start) fields.push_back(line.substr(start, i - start));
    }
    return fields;
  }
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(separator, start);
    auto field = line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start);
    while (!field.empty() && is_blank(field.front())) field.remove_prefix(1);
    while (!field.empty() && is_blank(field.back())) field.remove_suffix(1);
    fields.push_back(field);
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return fields;
}

}  // namespace

EdgeColoredGraph parse_edge_list(std::istream& in, const ParseOptions& options) {
  GraphBuilder builder;
  std::string line;
  std::size_t line_no = 0;
  std::size_t edges = 0;
  std::vector<ColorIndex> colors;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view(line);
    auto first = view.find_first_not_of(" \t\r");
    if (first == std::string_view::npos || view[first] == '#') continue;

    const auto fields = split_fields(view, options.field_separator);
    if (fields.size() != 3 || fields[0].empty() || fields[1].empty() || fields[2].empty()) {
      throw ParseError("expected '<u> <v> <colors>', got '" + line + "'", line_no);
    }
    if (fields[0] == fields[1]) {
      throw ParseError("self-loop on node '" + std::string(fields[0]) + "'", line_no);
    }
    colors.clear();
    if (options.field_separator == 0) {
      std::size_t start = 0;
      const auto list = fields[2];
      while (start <= list.size()) {
        auto comma = list.find(',', start);
        if (comma == std::string_view::npos) comma = list.size();
        if (comma == start) throw ParseError("empty color token in '" + std::string(list) + "'", line_no);
        colors.push_back(builder.add_color(list.substr(start, comma - start)));
        start = comma + 1;
      }
    } else {
      colors.push_back(builder.add_color(fields[2]));
    }
    const NodeIndex u = builder.add_node(fields[0]);
    const NodeIndex v = builder.add_node(fields[1]);
    builder.add_edge(u, v, colors);
    ++edges;
  }
  if (edges == 0) throw ParseError("empty input: no edges");
  return std::move(builder).build();
}

EdgeColoredGraph parse_edge_list(std::string_view text, const ParseOptions& options) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in, options);
}

EdgeColoredGraph load_edge_list(const std::filesystem::path& path, const ParseOptions& options) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  return parse_edge_list(in, options);
}

std::string serialize_edge_list(const EdgeColoredGraph& g) {
  std::string out;
  std::vector<std::string_view> tokens;
  for (EdgeIndex e = 0; e < g.num_edges(); ++e) {
    const auto [u, v] = g.endpoints(e);
    tokens.clear();
    for (ColorIndex c : g.edge_colors(e)) tokens.push_back(g.color_label(c));
    std::sort(tokens.begin(), tokens.end());
    out += g.node_label(u);
    out += ' ';
    out += g.node_label(v);
    out += ' ';
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      if (i) out += ',';
      out += tokens[i];
    }
    out += '\n';
  }
  return out;
}

}  // namespace coldsp
