#include <coldsp/errors.hpp>
#include <coldsp/peeling.hpp>

#include "min_degree_queue.hpp"

#include <stdexcept>

namespace coldsp {

std::int64_t lower_bound_nodes(std::int64_t h, std::int64_t p) {
  if (h < 1 || p < 1) throw std::invalid_argument("lower_bound_nodes needs h >= 1 and p >= 1");
  // Capacity p*k(k-1)/2 grows quadratically; double the bracket, then bisect on integers.
  auto holds = [&](std::int64_t k) {
    const __int128 cap = static_cast<__int128>(p) * k * (k - 1) / 2;
    return cap >= h;
  };
  std::int64_t hi = 2;
  while (!holds(hi)) hi *= 2;
  std::int64_t lo = 1;  // holds(1) is false since capacity is 0 < h
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    (holds(mid) ? hi : lo) = mid;
  }
  return hi;
}

std::vector<std::int64_t> PeelingTrace::remaining_colors_at(std::size_t step) const {
  std::vector<std::int64_t> counts = initial_color_counts;
  for (std::size_t i = 0; i < color_offsets[step]; ++i) --counts[removed_colors[i]];
  return counts;
}

std::vector<NodeIndex> PeelingTrace::prefix_nodes(std::size_t step, std::size_t num_nodes) const {
  std::vector<char> gone(num_nodes, 0);
  for (std::size_t i = 0; i < step; ++i) gone[removal_order[i]] = 1;
  std::vector<NodeIndex> nodes;
  nodes.reserve(num_nodes - step);
  for (std::size_t v = 0; v < num_nodes; ++v) {
    if (!gone[v]) nodes.push_back(static_cast<NodeIndex>(v));
  }
  return nodes;
}

std::size_t PeelingTrace::best_prefix() const {
  std::size_t best = 0;
  bool found = false;
  for (std::size_t s = 0; s <= i_max && s < remaining_nodes.size(); ++s) {
    if (remaining_nodes[s] == 0) continue;
    if (!found || prefix_density(s) >= prefix_density(best)) {
      best = s;
      found = true;
    }
  }
  return best;
}

namespace {

// Min-degree peel that stops as soon as fewer than `threshold` edges remain
// (threshold <= 0: peel to the empty graph). With `track`, deficit endpoints are recorded.
template <class Graph>
PeelingTrace run_peel(const Graph& g, std::int64_t threshold, const ColorRequirement* track) {
  const std::size_t n = g.num_nodes();
  PeelingTrace t;
  t.threshold = std::max<std::int64_t>(threshold, 0);
  t.initial_color_counts.assign(g.color_totals().begin(), g.color_totals().end());

  detail::MinDegreeQueue queue(detail::weighted_degrees(g, &t.edge_visits));
  std::vector<std::int64_t> colors_left = t.initial_color_counts;
  std::vector<char> in_deficit(track ? n : 0, 0);
  std::int64_t edges_left = g.total_weight();

  t.removal_order.reserve(n);
  t.remaining_nodes.reserve(n + 1);
  t.remaining_edges.reserve(n + 1);
  t.remaining_nodes.push_back(static_cast<std::int64_t>(n));
  t.remaining_edges.push_back(edges_left);
  t.color_offsets.push_back(0);
  t.deficit_offsets.push_back(0);

  auto add_deficit = [&](NodeIndex x) {
    if (!in_deficit[x]) {
      in_deficit[x] = 1;
      t.deficit_nodes.push_back(x);
    }
  };

  while (!queue.empty() && edges_left >= t.threshold) {
    const NodeIndex v = queue.pop();
    for (const auto& inc : g.incident(v)) {
      ++t.edge_visits;
      if (queue.removed(inc.neighbor)) continue;
      const std::int64_t w = g.link_weight(inc.link);
      edges_left -= w;
      queue.decrease(inc.neighbor, w);
      for (ColorIndex c : g.link_colors(inc.link)) {
        --colors_left[c];
        t.removed_colors.push_back(c);
        if (track && colors_left[c] < track->h[c]) {
          add_deficit(v);
          add_deficit(inc.neighbor);
        }
      }
    }
    t.removal_order.push_back(v);
    t.remaining_nodes.push_back(static_cast<std::int64_t>(queue.alive()));
    t.remaining_edges.push_back(edges_left);
    t.color_offsets.push_back(t.removed_colors.size());
    t.deficit_offsets.push_back(t.deficit_nodes.size());
  }
  t.queue_ops = queue.ops();
  t.i_max = t.remaining_edges.back() >= t.threshold ? t.steps() : t.steps() - 1;
  return t;
}

template <class Graph>
SubgraphResult prefix_result(const Graph& g, const PeelingTrace& t, std::size_t step) {
  return make_result(g, t.prefix_nodes(step, g.num_nodes()));
}

template <class Graph>
SubgraphResult greedy_impl(const Graph& g) {
  if (g.num_nodes() == 0) throw std::invalid_argument("greedy peel needs a non-empty graph");
  const auto t = run_peel(g, 0, nullptr);
  return prefix_result(g, t, t.best_prefix());
}

template <class Graph>
PeelingTrace at_least_trace_impl(const Graph& g, std::int64_t h) {
  if (h < 1) throw std::invalid_argument("h must be at least 1");
  if (g.total_weight() < h) {
    throw InfeasibleError("graph has " + std::to_string(g.total_weight()) + " edges, fewer than h = " +
                          std::to_string(h));
  }
  return run_peel(g, h, nullptr);
}

template <class Graph>
TrackedPeel tracked_impl(const Graph& g, const ColorRequirement& req) {
  if (req.mode != RequirementMode::AtLeast) throw std::invalid_argument("tracked peel needs an AtLeast requirement");
  const auto feas = check_feasibility(g, req);
  if (!feas.feasible) throw InfeasibleError("color requirement exceeds the graph's color counts");
  for (auto h : req.h) {
    if (h < 0) throw std::invalid_argument("negative requirement entry");
  }
  TrackedPeel out;
  out.trace = run_peel(g, req.total(), &req);
  out.step = out.trace.best_prefix();
  out.result = prefix_result(g, out.trace, out.step);
  const auto b = out.trace.deficit_set_at(out.step);
  out.deficit.assign(b.begin(), b.end());
  return out;
}

}  // namespace

PeelingTrace degeneracy_peel(const EdgeColoredGraph& g) { return run_peel(g, 0, nullptr); }
PeelingTrace degeneracy_peel(const ColoredMultigraph& g) { return run_peel(g, 0, nullptr); }

SubgraphResult greedy_peel_unconstrained(const EdgeColoredGraph& g) { return greedy_impl(g); }
SubgraphResult greedy_peel_unconstrained(const ColoredMultigraph& g) { return greedy_impl(g); }

PeelingTrace at_least_h_edges_trace(const EdgeColoredGraph& g, std::int64_t h) {
  return at_least_trace_impl(g, h);
}
PeelingTrace at_least_h_edges_trace(const ColoredMultigraph& g, std::int64_t h) {
  return at_least_trace_impl(g, h);
}

SubgraphResult at_least_h_edges_peel(const EdgeColoredGraph& g, std::int64_t h) {
  const auto t = at_least_trace_impl(g, h);
  return prefix_result(g, t, t.best_prefix());
}
SubgraphResult at_least_h_edges_peel(const ColoredMultigraph& g, std::int64_t h) {
  const auto t = at_least_trace_impl(g, h);
  return prefix_result(g, t, t.best_prefix());
}

TrackedPeel at_least_h_edges_peel_tracked(const EdgeColoredGraph& g, const ColorRequirement& req) {
  return tracked_impl(g, req);
}
TrackedPeel at_least_h_edges_peel_tracked(const ColoredMultigraph& g, const ColorRequirement& req) {
  return tracked_impl(g, req);
}

}  // namespace coldsp
