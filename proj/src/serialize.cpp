#include <coldsp/serialize.hpp>

namespace coldsp {

namespace {

nlohmann::json color_map(const std::vector<std::int64_t>& counts, const EdgeColoredGraph& g) {
  auto out = nlohmann::json::object();
  for (std::size_t c = 0; c < counts.size() && c < g.num_colors(); ++c) {
    out[g.color_label(static_cast<ColorIndex>(c))] = counts[c];
  }
  return out;
}

}  // namespace

nlohmann::json to_json(const SubgraphResult& result, const EdgeColoredGraph& g) {
  nlohmann::json out;
  auto labels = nlohmann::json::array();
  for (NodeIndex v : result.nodes) labels.push_back(g.node_label(v));
  out["nodes"] = std::move(labels);
  out["edges"] = result.edge_count;
  out["density"] = result.density.fraction();
  out["density_value"] = result.density.value();
  out["color_counts"] = color_map(result.color_counts, g);
  if (result.simple_density) out["simple_density"] = result.simple_density->fraction();
  return out;
}

nlohmann::json to_json(const PeelingTrace& trace, const EdgeColoredGraph& g) {
  nlohmann::json out;
  out["threshold"] = trace.threshold;
  out["i_max"] = trace.i_max;
  out["best_prefix"] = trace.best_prefix();
  auto steps = nlohmann::json::array();
  std::vector<std::int64_t> colors = trace.initial_color_counts;
  for (std::size_t s = 0; s <= trace.steps(); ++s) {
    if (s > 0) {
      for (std::size_t i = trace.color_offsets[s - 1]; i < trace.color_offsets[s]; ++i) --colors[trace.removed_colors[i]];
    }
    nlohmann::json step;
    step["step"] = s;
    if (s > 0) step["removed"] = g.node_label(trace.removal_order[s - 1]);
    step["remaining_nodes"] = trace.remaining_nodes[s];
    step["remaining_edges"] = trace.remaining_edges[s];
    step["remaining_colors"] = color_map(colors, g);
    if (!trace.deficit_offsets.empty()) step["deficit_size"] = trace.deficit_offsets[s];
    steps.push_back(std::move(step));
  }
  out["steps"] = std::move(steps);
  return out;
}

nlohmann::json to_json(const RunRecord& r) {
  nlohmann::json out;
  out["instance"] = r.instance;
  out["algorithm"] = r.algorithm;
  out["kind"] = kind_name(r.kind);
  out["n"] = r.n;
  out["m"] = r.m;
  out["colors"] = r.colors;
  out["requirement"] = r.requirement;
  if (r.lambda) out["lambda"] = *r.lambda;
  out["status"] = r.ok ? "ok" : r.error;
  if (r.ok) {
    out["feasible"] = r.feasible;
    out["nodes"] = r.nodes;
    out["edges"] = r.edges;
    out["density"] = r.density.fraction();
    out["density_value"] = r.density.value();
  }
  if (r.oracle) {
    out["oracle"] = r.oracle->fraction();
    out["oracle_value"] = r.oracle->value();
  }
  if (r.rel_error_pct) out["rel_error_pct"] = *r.rel_error_pct;
  if (r.peel_steps) out["peel_steps"] = *r.peel_steps;
  if (r.time_mean_ms) {
    out["time_mean_ms"] = *r.time_mean_ms;
    out["time_sd_ms"] = r.time_sd_ms.value_or(0.0);
    out["repeats"] = r.repeats;
  }
  return out;
}

nlohmann::json to_json(const ErrorSummary& s) {
  return {{"algorithm", s.algorithm}, {"runs", s.runs},          {"compared", s.compared},
          {"optimal_pct", s.optimal_pct}, {"within1_pct", s.within1_pct}, {"err_mean", s.mean},
          {"err_sd", s.sd},             {"err_median", s.median},  {"err_max", s.max},
          {"err_mean_all", s.mean_all}};
}

}  // namespace coldsp
