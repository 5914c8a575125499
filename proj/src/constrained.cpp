#include <coldsp/constrained.hpp>
#include <coldsp/errors.hpp>
#include <coldsp/peeling.hpp>

#include "min_degree_queue.hpp"

#include <optional>
#include <stdexcept>

namespace coldsp {

namespace {

template <class Graph>
void validate(const Graph& g, const ColorRequirement& req) {
  if (req.mode != RequirementMode::AtLeast) throw std::invalid_argument("only AtLeast requirements are supported");
  for (auto h : req.h) {
    if (h < 0) throw std::invalid_argument("negative requirement entry");
  }
  if (!check_feasibility(g, req).feasible) {
    throw InfeasibleError("color requirement exceeds the graph's color counts");
  }
}

// Grows a node set until every color requirement holds.
template <class Graph>
class DeficitPatcher {
 public:
  DeficitPatcher(const Graph& g, const std::vector<NodeIndex>& nodes) : g_(g), mask_(g.num_nodes(), 0) {
    for (NodeIndex v : nodes) mask_[v] = 1;
    nodes_ = nodes;
    counts_ = color_counts(g, nodes);
  }

  void add_node(NodeIndex x) {
    if (mask_[x]) return;
    mask_[x] = 1;
    nodes_.push_back(x);
    for (const auto& inc : g_.incident(x)) {
      if (!mask_[inc.neighbor]) continue;
      for (ColorIndex c : g_.link_colors(inc.link)) ++counts_[c];
    }
  }

  // Lowest deficient color first; for each missing edge prefer a link with one endpoint
  // already selected (smallest link index), otherwise the smallest link index.
  void patch(const ColorRequirement& req) {
    for (std::size_t c = 0; c < req.h.size(); ++c) {
      if (counts_[c] >= req.h[c]) continue;
      const auto& candidates = links_of(static_cast<ColorIndex>(c));
      while (counts_[c] < req.h[c]) {
        std::optional<EdgeIndex> one_inside, any;
        for (EdgeIndex l : candidates) {
          const auto [u, v] = g_.link_endpoints(l);
          const int inside = mask_[u] + mask_[v];
          if (inside == 2) continue;
          if (!any) any = l;
          if (inside == 1) {
            one_inside = l;
            break;
          }
        }
        const auto pick = one_inside ? one_inside : any;
        if (!pick) throw InfeasibleError("no edge left to restore a color deficit");
        const auto [u, v] = g_.link_endpoints(*pick);
        add_node(u);
        add_node(v);
      }
    }
  }

  std::vector<NodeIndex> take_nodes() { return std::move(nodes_); }

 private:
  const std::vector<EdgeIndex>& links_of(ColorIndex c) {
    if (by_color_.empty()) {
      by_color_.resize(g_.num_colors());
      for (EdgeIndex l = 0; l < g_.num_links(); ++l) {
        for (ColorIndex col : g_.link_colors(l)) by_color_[col].push_back(l);
      }
    }
    return by_color_[c];
  }

  const Graph& g_;
  std::vector<char> mask_;
  std::vector<NodeIndex> nodes_;
  std::vector<std::int64_t> counts_;
  std::vector<std::vector<EdgeIndex>> by_color_;
};

template <class Graph>
SubgraphResult col_approx_impl(const Graph& g, const ColorRequirement& req, const ColApproxOptions& options) {
  validate(g, req);
  const std::int64_t h = req.total();
  std::vector<NodeIndex> nodes;
  if (options.patch == PatchMode::DeficitSet) {
    auto tracked = at_least_h_edges_peel_tracked(g, req);
    nodes = std::move(tracked.result.nodes);
    nodes.insert(nodes.end(), tracked.deficit.begin(), tracked.deficit.end());
    nodes = normalize_nodes(nodes, g.num_nodes());
  } else {
    nodes = (h == 0 ? greedy_peel_unconstrained(g) : at_least_h_edges_peel(g, h)).nodes;
  }
  DeficitPatcher<Graph> patcher(g, nodes);
  patcher.patch(req);
  return make_result(g, patcher.take_nodes());
}

template <class Graph>
SubgraphResult heuristic_impl(const Graph& g, const ColorRequirement& req) {
  validate(g, req);
  const std::size_t n = g.num_nodes();
  if (n == 0) throw std::invalid_argument("heuristic needs a non-empty graph");

  detail::MinDegreeQueue queue(detail::weighted_degrees(g));
  std::vector<std::int64_t> colors_left(g.color_totals().begin(), g.color_totals().end());
  std::vector<std::int64_t> loss(g.num_colors(), 0);
  std::vector<ColorIndex> touched;
  std::vector<NodeIndex> removed;
  std::int64_t edges_left = g.total_weight();

  std::size_t best_step = 0;
  Density best = Density::of(edges_left, static_cast<std::int64_t>(n));
  while (!queue.empty()) {
    const NodeIndex v = queue.top();
    touched.clear();
    for (const auto& inc : g.incident(v)) {
      if (queue.removed(inc.neighbor)) continue;
      for (ColorIndex c : g.link_colors(inc.link)) {
        if (loss[c]++ == 0) touched.push_back(c);
      }
    }
    bool keeps_requirement = true;
    for (ColorIndex c : touched) {
      if (colors_left[c] - loss[c] < req.h[c]) keeps_requirement = false;
    }
    if (!keeps_requirement) break;
    for (ColorIndex c : touched) {
      colors_left[c] -= loss[c];
      loss[c] = 0;
    }

    queue.pop();
    for (const auto& inc : g.incident(v)) {
      if (queue.removed(inc.neighbor)) continue;
      const auto w = g.link_weight(inc.link);
      edges_left -= w;
      queue.decrease(inc.neighbor, w);
    }
    removed.push_back(v);
    if (queue.alive() == 0) break;
    const auto d = Density::of(edges_left, static_cast<std::int64_t>(queue.alive()));
    if (d >= best) {
      best = d;
      best_step = removed.size();
    }
  }

  std::vector<char> gone(n, 0);
  for (std::size_t i = 0; i < best_step; ++i) gone[removed[i]] = 1;
  std::vector<NodeIndex> nodes;
  for (std::size_t v = 0; v < n; ++v) {
    if (!gone[v]) nodes.push_back(static_cast<NodeIndex>(v));
  }
  return make_result(g, std::move(nodes));
}

}  // namespace

SubgraphResult col_approx(const EdgeColoredGraph& g, const ColorRequirement& req, const ColApproxOptions& options) {
  if (!g.single_colored()) {
    throw std::invalid_argument("col_approx needs single-colored edges; use col_approx_multi");
  }
  return col_approx_impl(g, req, options);
}

SubgraphResult col_approx_multi(const EdgeColoredGraph& g, const ColorRequirement& req,
                                const ColApproxOptions& options) {
  return col_approx_impl(to_multigraph(g), req, options);
}

SubgraphResult col_approx_multi(const ColoredMultigraph& g, const ColorRequirement& req,
                                const ColApproxOptions& options) {
  return col_approx_impl(g, req, options);
}

SubgraphResult heuristic_peel(const EdgeColoredGraph& g, const ColorRequirement& req) {
  return heuristic_impl(g, req);
}

SubgraphResult heuristic_peel(const ColoredMultigraph& g, const ColorRequirement& req) {
  return heuristic_impl(g, req);
}

}  // namespace coldsp
