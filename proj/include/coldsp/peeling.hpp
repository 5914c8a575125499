#pragma once

#include <coldsp/graph.hpp>

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace coldsp {

struct LowerBoundParams {
  std::int64_t h = 1;  // required edges, >= 1
  std::int64_t p = 1;  // parallel-edge bound, >= 1
};

/// Smallest k with p * k(k-1)/2 >= h: the fewest nodes any graph with h edges and at
/// most p parallel edges per pair can have. Computed with integers only.
/// Throws std::invalid_argument when h or p is not positive.
std::int64_t lower_bound_nodes(std::int64_t h, std::int64_t p = 1);
inline std::int64_t lower_bound_nodes(const LowerBoundParams& params) {
  return lower_bound_nodes(params.h, params.p);
}

/// Record of a min-degree peel. Step s (0-based) describes the graph after s removals,
/// so step 0 is the input graph and removal_order[s] is the node removed by step s+1.
struct PeelingTrace {
  std::vector<NodeIndex> removal_order;
  std::vector<std::int64_t> remaining_nodes;  // size steps()+1
  std::vector<std::int64_t> remaining_edges;  // size steps()+1, weighted for multigraphs
  std::vector<std::int64_t> initial_color_counts;
  /// Colors of edges removed at each step (one entry per removed membership), CSR over
  /// steps: the entries of step s+1 are [color_offsets[s], color_offsets[s+1]).
  std::vector<std::size_t> color_offsets;
  std::vector<ColorIndex> removed_colors;
  /// Deficit nodes in insertion order; B at step s is the first deficit_offsets[s] entries.
  std::vector<NodeIndex> deficit_nodes;
  std::vector<std::size_t> deficit_offsets;  // size steps()+1
  /// Edge threshold the peel ran with; 0 for a full degeneracy peel.
  std::int64_t threshold = 0;
  /// Last step whose remaining edge count is >= threshold.
  std::size_t i_max = 0;
  /// Incidence-list entries scanned.
  std::uint64_t edge_visits = 0;
  /// Bucket-queue pushes and pops, including stale entries.
  std::uint64_t queue_ops = 0;

  std::size_t steps() const { return removal_order.size(); }
  Density prefix_density(std::size_t step) const {
    return Density::of(remaining_edges[step], remaining_nodes[step]);
  }
  std::vector<std::int64_t> remaining_colors_at(std::size_t step) const;
  std::span<const NodeIndex> deficit_set_at(std::size_t step) const {
    return {deficit_nodes.data(), deficit_offsets[step]};
  }
  /// Nodes still present after `step` removals, ascending.
  std::vector<NodeIndex> prefix_nodes(std::size_t step, std::size_t num_nodes) const;
  /// Densest non-empty prefix among steps [0, i_max]; ties go to the later (smaller) prefix.
  std::size_t best_prefix() const;
};

/// Removes a minimum-degree node (smallest index on ties) until the graph is empty.
/// Multigraph degrees count parallel edges separately.
PeelingTrace degeneracy_peel(const EdgeColoredGraph& g);
PeelingTrace degeneracy_peel(const ColoredMultigraph& g);

/// Densest prefix of the degeneracy peel (2-approximation). Throws std::invalid_argument
/// on a graph without nodes.
SubgraphResult greedy_peel_unconstrained(const EdgeColoredGraph& g);
SubgraphResult greedy_peel_unconstrained(const ColoredMultigraph& g);

/// Peels while at least h edges remain and returns the densest prefix with >= h edges.
/// Throws InfeasibleError when the graph has fewer than h edges, std::invalid_argument
/// for h < 1.
SubgraphResult at_least_h_edges_peel(const EdgeColoredGraph& g, std::int64_t h);
SubgraphResult at_least_h_edges_peel(const ColoredMultigraph& g, std::int64_t h);

/// The same peel returning its trace (for inspection and JSON dumps).
PeelingTrace at_least_h_edges_trace(const EdgeColoredGraph& g, std::int64_t h);
PeelingTrace at_least_h_edges_trace(const ColoredMultigraph& g, std::int64_t h);

struct TrackedPeel {
  SubgraphResult result;             // the chosen prefix G_i
  std::vector<NodeIndex> deficit;    // B_i at the chosen prefix, insertion order
  std::size_t step = 0;              // i
  PeelingTrace trace;
};

/// At-least-(sum h_c)-edges peel that also records deficit endpoints: whenever removing
/// an edge leaves fewer than h_c edges of one of its colors, both endpoints join B.
/// Requires an AtLeast requirement the graph satisfies (InfeasibleError otherwise).
TrackedPeel at_least_h_edges_peel_tracked(const EdgeColoredGraph& g, const ColorRequirement& req);
TrackedPeel at_least_h_edges_peel_tracked(const ColoredMultigraph& g, const ColorRequirement& req);

}  // namespace coldsp
