#pragma once

#include <coldsp/density.hpp>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace coldsp {

using NodeIndex = std::uint32_t;
using ColorIndex = std::uint32_t;
/// Index of an edge of a simple graph, or of a node pair (parallel-edge group) of a multigraph.
using EdgeIndex = std::uint32_t;

struct Incidence {
  NodeIndex neighbor;
  EdgeIndex link;
};

struct Endpoints {
  NodeIndex u;
  NodeIndex v;
};

class ColoredMultigraph;

namespace detail {

// Immutable storage shared by a simple graph and the multigraph derived from it.
// Edges are sorted by (u, v) with u < v; colors of an edge are sorted and distinct.
struct GraphStore {
  std::vector<std::string> node_labels;
  std::vector<std::string> color_labels;
  std::unordered_map<std::string, NodeIndex> node_ids;
  std::unordered_map<std::string, ColorIndex> color_ids;

  std::vector<Endpoints> edges;
  std::vector<std::size_t> color_offsets;  // size m + 1
  std::vector<ColorIndex> colors;          // edge memberships, CSR by edge
  std::vector<EdgeIndex> membership_edge;  // owning edge of each membership

  std::vector<std::size_t> adj_offsets;  // size n + 1
  std::vector<Incidence> adj;            // sorted by neighbor per node

  std::vector<std::int64_t> color_totals;
  std::size_t max_colors_per_edge = 0;
};

}  // namespace detail

/// Simple undirected graph whose edges carry non-empty sets of colors.
///
/// Values are immutable; copies share storage and are safe to read from many threads.
class EdgeColoredGraph {
 public:
  EdgeColoredGraph();

  std::size_t num_nodes() const { return store_->node_labels.size(); }
  std::size_t num_edges() const { return store_->edges.size(); }
  std::size_t num_colors() const { return store_->color_labels.size(); }
  /// Sum over edges of the number of colors on the edge.
  std::size_t num_memberships() const { return store_->colors.size(); }
  std::size_t max_colors_per_edge() const { return store_->max_colors_per_edge; }
  bool single_colored() const { return store_->max_colors_per_edge <= 1; }

  const std::string& node_label(NodeIndex v) const { return store_->node_labels[v]; }
  const std::string& color_label(ColorIndex c) const { return store_->color_labels[c]; }
  std::optional<NodeIndex> find_node(std::string_view label) const;
  std::optional<ColorIndex> find_color(std::string_view label) const;

  Endpoints endpoints(EdgeIndex e) const { return store_->edges[e]; }
  std::span<const ColorIndex> edge_colors(EdgeIndex e) const {
    const auto& s = *store_;
    return {s.colors.data() + s.color_offsets[e], s.color_offsets[e + 1] - s.color_offsets[e]};
  }
  std::span<const Incidence> incident(NodeIndex v) const {
    const auto& s = *store_;
    return {s.adj.data() + s.adj_offsets[v], s.adj_offsets[v + 1] - s.adj_offsets[v]};
  }
  std::size_t degree(NodeIndex v) const {
    return store_->adj_offsets[v + 1] - store_->adj_offsets[v];
  }
  /// Per-color edge counts of the whole graph.
  std::span<const std::int64_t> color_totals() const { return store_->color_totals; }

  // Link interface shared with ColoredMultigraph; a link is one edge of weight 1.
  std::size_t num_links() const { return num_edges(); }
  std::int64_t link_weight(EdgeIndex) const { return 1; }
  std::int64_t total_weight() const { return static_cast<std::int64_t>(num_edges()); }
  Endpoints link_endpoints(EdgeIndex e) const { return endpoints(e); }
  std::span<const ColorIndex> link_colors(EdgeIndex e) const { return edge_colors(e); }

 private:
  explicit EdgeColoredGraph(std::shared_ptr<const detail::GraphStore> store)
      : store_(std::move(store)) {}

  std::shared_ptr<const detail::GraphStore> store_;

  friend class GraphBuilder;
  friend class ColoredMultigraph;
  friend ColoredMultigraph to_multigraph(const EdgeColoredGraph& g);
};

struct MultiEdge {
  NodeIndex u;
  NodeIndex v;
  ColorIndex color;
  EdgeIndex pair;
};

/// Multigraph where every edge has exactly one color. Parallel edges between a
/// node pair are grouped; within a group all colors are distinct, so the
/// multiplicity of any pair is at most the color count.
///
/// Links of the multigraph are node pairs; a pair's weight is its multiplicity.
class ColoredMultigraph {
 public:
  std::size_t num_nodes() const { return store_->node_labels.size(); }
  /// |E_M|: parallel edges counted separately.
  std::size_t num_edges() const { return store_->colors.size(); }
  std::size_t num_pairs() const { return store_->edges.size(); }
  std::size_t num_colors() const { return store_->color_labels.size(); }
  /// Largest number of parallel edges between any pair.
  std::size_t max_multiplicity() const { return store_->max_colors_per_edge; }

  const std::string& node_label(NodeIndex v) const { return store_->node_labels[v]; }
  const std::string& color_label(ColorIndex c) const { return store_->color_labels[c]; }

  MultiEdge edge(std::size_t i) const {
    const auto& s = *store_;
    const EdgeIndex p = s.membership_edge[i];
    return {s.edges[p].u, s.edges[p].v, s.colors[i], p};
  }
  Endpoints pair_endpoints(EdgeIndex p) const { return store_->edges[p]; }
  std::span<const ColorIndex> pair_colors(EdgeIndex p) const {
    const auto& s = *store_;
    return {s.colors.data() + s.color_offsets[p], s.color_offsets[p + 1] - s.color_offsets[p]};
  }
  std::span<const Incidence> incident(NodeIndex v) const {
    const auto& s = *store_;
    return {s.adj.data() + s.adj_offsets[v], s.adj_offsets[v + 1] - s.adj_offsets[v]};
  }
  std::int64_t weighted_degree(NodeIndex v) const;
  std::span<const std::int64_t> color_totals() const { return store_->color_totals; }

  /// The simple graph this multigraph was derived from.
  EdgeColoredGraph simple_graph() const { return EdgeColoredGraph(store_); }

  std::size_t num_links() const { return num_pairs(); }
  std::int64_t link_weight(EdgeIndex p) const {
    return static_cast<std::int64_t>(store_->color_offsets[p + 1] - store_->color_offsets[p]);
  }
  std::int64_t total_weight() const { return static_cast<std::int64_t>(num_edges()); }
  Endpoints link_endpoints(EdgeIndex p) const { return pair_endpoints(p); }
  std::span<const ColorIndex> link_colors(EdgeIndex p) const { return pair_colors(p); }

 private:
  explicit ColoredMultigraph(std::shared_ptr<const detail::GraphStore> store)
      : store_(std::move(store)) {}

  std::shared_ptr<const detail::GraphStore> store_;

  friend ColoredMultigraph to_multigraph(const EdgeColoredGraph& g);
};

/// Interns labels to dense ids (first-appearance order) and collects edges.
/// Duplicate node pairs are merged by color-set union.
class GraphBuilder {
 public:
  GraphBuilder();

  NodeIndex add_node(std::string_view label);
  ColorIndex add_color(std::string_view label);

  /// Throws std::invalid_argument on self-loops, unknown ids, or an empty color set.
  void add_edge(NodeIndex u, NodeIndex v, std::span<const ColorIndex> colors);
  void add_edge(NodeIndex u, NodeIndex v, ColorIndex color) {
    add_edge(u, v, std::span<const ColorIndex>(&color, 1));
  }
  void add_edge(std::string_view u, std::string_view v,
                std::initializer_list<std::string_view> colors);

  std::size_t num_nodes() const;
  std::size_t num_colors() const;

  EdgeColoredGraph build() &&;

 private:
  struct Membership {
    NodeIndex u;
    NodeIndex v;
    ColorIndex color;
  };

  std::shared_ptr<detail::GraphStore> store_;
  std::vector<Membership> memberships_;
};

enum class RequirementMode { AtLeast, AtMost, Exactly };

/// Per-color edge-count requirement h. Zero entries leave a color unconstrained.
struct ColorRequirement {
  std::vector<std::int64_t> h;
  RequirementMode mode = RequirementMode::AtLeast;

  std::int64_t total() const;
  /// Componentwise >=, <= or == depending on mode. Sizes must match.
  bool satisfied_by(std::span<const std::int64_t> counts) const;
};

/// Parses "c1=5,c2=3" (by color label, unlisted colors get 0) or a positional "5,3".
ColorRequirement parse_requirement(std::string_view text, const EdgeColoredGraph& g,
                                   RequirementMode mode = RequirementMode::AtLeast);
/// "label=h" for every color, in color index order.
std::string format_requirement(const ColorRequirement& req, const EdgeColoredGraph& g);

struct Feasibility {
  bool feasible = false;
  /// count - h per color for AtLeast/Exactly; h per color for AtMost (slack of the empty set).
  std::vector<std::int64_t> slack;
};

Feasibility check_feasibility(const EdgeColoredGraph& g, const ColorRequirement& req);
Feasibility check_feasibility(const ColoredMultigraph& g, const ColorRequirement& req);

/// A node subset together with its recomputable statistics.
struct SubgraphResult {
  std::vector<NodeIndex> nodes;  // ascending
  std::int64_t edge_count = 0;   // |E(S)|, or |E_M(S)| for multigraph results
  Density density;
  std::vector<std::int64_t> color_counts;
  /// Simple-graph density of the same node set; only set for multigraph results.
  std::optional<Density> simple_density;
};

EdgeColoredGraph induced_subgraph(const EdgeColoredGraph& g, std::span<const NodeIndex> nodes);

Density density(const EdgeColoredGraph& g, std::span<const NodeIndex> nodes);
Density density(const ColoredMultigraph& g, std::span<const NodeIndex> nodes);

std::vector<std::int64_t> color_counts(const EdgeColoredGraph& g, std::span<const NodeIndex> nodes);
std::vector<std::int64_t> color_counts(const ColoredMultigraph& g, std::span<const NodeIndex> nodes);

SubgraphResult make_result(const EdgeColoredGraph& g, std::vector<NodeIndex> nodes);
SubgraphResult make_result(const ColoredMultigraph& g, std::vector<NodeIndex> nodes);

/// One single-colored parallel edge per (edge, color) membership.
ColoredMultigraph to_multigraph(const EdgeColoredGraph& g);

/// Sorted, duplicate-free copy of `nodes`; throws std::out_of_range for ids >= n.
std::vector<NodeIndex> normalize_nodes(std::span<const NodeIndex> nodes, std::size_t n);

}  // namespace coldsp
