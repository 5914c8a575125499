#pragma once

#include <coldsp/graph.hpp>

namespace coldsp {

/// How missing colored edges are restored after the at-least-(sum h)-edges peel.
enum class PatchMode {
  /// Add the endpoints of every edge whose removal created a color deficit (B-set).
  DeficitSet,
  /// Peel without tracking, then add edges of each deficient color one at a time,
  /// preferring edges with an endpoint already selected, then the smallest edge index.
  AddEdges,
};

struct ColApproxOptions {
  PatchMode patch = PatchMode::DeficitSet;
};

/// Constant-factor approximation of the densest subgraph with at least h_c edges of every
/// color c, for graphs whose edges carry one color each.
///
/// Throws std::invalid_argument if an edge has several colors (use col_approx_multi),
/// the requirement length differs from the color count, or the mode is not AtLeast;
/// InfeasibleError if the whole graph misses the requirement.
SubgraphResult col_approx(const EdgeColoredGraph& g, const ColorRequirement& req,
                          const ColApproxOptions& options = {});

/// Multi-colored variant: peels the multigraph with one parallel edge per edge color and
/// reports the multigraph density (simple density of the same nodes in simple_density).
SubgraphResult col_approx_multi(const EdgeColoredGraph& g, const ColorRequirement& req,
                                const ColApproxOptions& options = {});
SubgraphResult col_approx_multi(const ColoredMultigraph& g, const ColorRequirement& req,
                                const ColApproxOptions& options = {});

/// Baseline: peel minimum-degree nodes while every color requirement still holds, stop at
/// the first removal that would break one, return the densest prefix seen.
SubgraphResult heuristic_peel(const EdgeColoredGraph& g, const ColorRequirement& req);
SubgraphResult heuristic_peel(const ColoredMultigraph& g, const ColorRequirement& req);

}  // namespace coldsp
