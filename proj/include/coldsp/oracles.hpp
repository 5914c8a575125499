#pragma once

#include <coldsp/flow.hpp>
#include <coldsp/graph.hpp>

#include <cstddef>
#include <cstdint>

namespace coldsp {

using FlowCapacity = __int128;

/// Network deciding whether some subgraph is denser than guess = guess_num / guess_den,
/// with capacities scaled by guess_den. Node 0 is the source, 1 the sink, 2 + v graph node v.
/// Arcs: source->v (m), v->sink (m + 2 guess - deg v), both directions of every link (weight).
/// The minimum cut is below m * n * guess_den iff a subgraph of density > guess exists.
FlowNetwork<FlowCapacity> goldberg_network(const EdgeColoredGraph& g, FlowCapacity guess_num,
                                           FlowCapacity guess_den);
FlowNetwork<FlowCapacity> goldberg_network(const ColoredMultigraph& g, FlowCapacity guess_num,
                                           FlowCapacity guess_den);

struct FlowSearchStats {
  int iterations = 0;
};

/// Exact maximum-density subgraph by bisection over the density with min-cut tests.
/// The search stops once the interval is narrower than 1/(n(n-1)), which isolates the
/// optimum among achievable densities. Throws std::invalid_argument on an edgeless graph.
SubgraphResult exact_dsp_flow(const EdgeColoredGraph& g, FlowSearchStats* stats = nullptr);
SubgraphResult exact_dsp_flow(const ColoredMultigraph& g, FlowSearchStats* stats = nullptr);

struct BruteForceOptions {
  /// Largest node count enumerated (2^n subsets); at most 30.
  std::size_t cap = 20;
};

// Exhaustive solvers. Ties: higher density, then fewer nodes, then the lexicographically
// smaller sorted node list. Throw CapExceededError above the cap and InfeasibleError when
// no subset qualifies.

/// Densest non-empty subset.
SubgraphResult brute_force_densest(const EdgeColoredGraph& g, const BruteForceOptions& options = {});
SubgraphResult brute_force_densest(const ColoredMultigraph& g, const BruteForceOptions& options = {});

/// Densest non-empty subset with at least h (weighted) edges.
SubgraphResult brute_force_at_least_h_edges(const EdgeColoredGraph& g, std::int64_t h,
                                            const BruteForceOptions& options = {});
SubgraphResult brute_force_at_least_h_edges(const ColoredMultigraph& g, std::int64_t h,
                                            const BruteForceOptions& options = {});

/// Densest subset whose color counts satisfy `req` in its mode. For AtMost and Exactly the
/// empty set (density 0) is a candidate and wins over other zero-density subsets.
SubgraphResult brute_force_colored(const EdgeColoredGraph& g, const ColorRequirement& req,
                                   const BruteForceOptions& options = {});
SubgraphResult brute_force_colored(const ColoredMultigraph& g, const ColorRequirement& req,
                                   const BruteForceOptions& options = {});

}  // namespace coldsp
