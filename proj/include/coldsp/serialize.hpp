#pragma once

#include <coldsp/bench.hpp>
#include <coldsp/graph.hpp>
#include <coldsp/peeling.hpp>

#include <json.hpp>

namespace coldsp {

/// {"nodes": [labels], "edges", "density": "e/n", "density_value", "color_counts": {label: count}}
/// plus "simple_density" for multigraph results.
nlohmann::json to_json(const SubgraphResult& result, const EdgeColoredGraph& g);

/// {"threshold", "i_max", "best_prefix", "steps": [{"step", "removed", "remaining_nodes",
/// "remaining_edges", "remaining_colors", "deficit_size"}]}; step 0 has no "removed".
nlohmann::json to_json(const PeelingTrace& trace, const EdgeColoredGraph& g);

nlohmann::json to_json(const RunRecord& record);
nlohmann::json to_json(const ErrorSummary& summary);

}  // namespace coldsp
