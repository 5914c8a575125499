#pragma once

// Test-only reference implementations. They recount everything from the edge list and
// share no code with the library's solvers.

#include <coldsp/graph.hpp>
#include <coldsp/random.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace naive {

using coldsp::ColorIndex;
using coldsp::Density;
using coldsp::EdgeColoredGraph;
using coldsp::NodeIndex;

struct Stats {
  std::int64_t simple_edges = 0;
  std::int64_t multi_edges = 0;
  std::vector<std::int64_t> colors;
};

inline Stats stats(const EdgeColoredGraph& g, const std::vector<char>& in) {
  Stats s;
  s.colors.assign(g.num_colors(), 0);
  for (coldsp::EdgeIndex e = 0; e < g.num_edges(); ++e) {
    const auto [u, v] = g.endpoints(e);
    if (!in[u] || !in[v]) continue;
    ++s.simple_edges;
    for (ColorIndex c : g.edge_colors(e)) {
      ++s.multi_edges;
      ++s.colors[c];
    }
  }
  return s;
}

struct Best {
  std::vector<NodeIndex> nodes;
  Density density;
};

/// Maximum density over subsets accepted by `accept`, by recursive inclusion/exclusion.
/// Ties: fewer nodes, then lexicographically smaller node list.
inline std::optional<Best> best_subset(const EdgeColoredGraph& g, bool multigraph, bool allow_empty,
                                       const std::function<bool(const Stats&, std::size_t)>& accept) {
  const std::size_t n = g.num_nodes();
  std::vector<char> in(n, 0);
  std::optional<Best> best;
  std::function<void(std::size_t)> rec = [&](std::size_t v) {
    if (v == n) {
      std::vector<NodeIndex> nodes;
      for (std::size_t u = 0; u < n; ++u) {
        if (in[u]) nodes.push_back(static_cast<NodeIndex>(u));
      }
      if (nodes.empty() && !allow_empty) return;
      const auto s = stats(g, in);
      if (!accept(s, nodes.size())) return;
      const auto d = Density::of(multigraph ? s.multi_edges : s.simple_edges, static_cast<std::int64_t>(nodes.size()));
      const bool better = !best || d > best->density ||
                          (d == best->density && (nodes.size() < best->nodes.size() ||
                                                  (nodes.size() == best->nodes.size() && nodes < best->nodes)));
      if (better) best = Best{nodes, d};
      return;
    }
    in[v] = 1;
    rec(v + 1);
    in[v] = 0;
    rec(v + 1);
  };
  rec(0);
  return best;
}

/// Seeded random simple graph with node labels "v0".. and color labels "c0"..; every color
/// is used at least once when m >= colors.
inline EdgeColoredGraph random_graph(std::uint64_t seed, std::size_t n, std::size_t m, std::size_t colors,
                                     std::size_t max_colors_per_edge = 1) {
  coldsp::Rng rng(seed);
  coldsp::GraphBuilder b;
  for (std::size_t v = 0; v < n; ++v) b.add_node("v" + std::to_string(v));
  for (std::size_t c = 0; c < colors; ++c) b.add_color("c" + std::to_string(c));
  std::vector<std::pair<NodeIndex, NodeIndex>> pairs;
  for (NodeIndex u = 0; u < n; ++u) {
    for (NodeIndex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  if (m > pairs.size()) m = pairs.size();
  for (std::size_t i = 0; i < m; ++i) {
    std::swap(pairs[i], pairs[i + rng.below(pairs.size() - i)]);
    const auto k = rng.uniform(1, static_cast<std::int64_t>(max_colors_per_edge));
    std::vector<ColorIndex> cs;
    if (i < colors) cs.push_back(static_cast<ColorIndex>(i));
    while (static_cast<std::int64_t>(cs.size()) < k) cs.push_back(static_cast<ColorIndex>(rng.below(colors)));
    b.add_edge(pairs[i].first, pairs[i].second, cs);
  }
  return std::move(b).build();
}

}  // namespace naive
