#include <coldsp/errors.hpp>
#include <coldsp/oracles.hpp>

#include "min_degree_queue.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <type_traits>

namespace coldsp {

namespace {

template <class Graph>
FlowNetwork<FlowCapacity> goldberg_impl(const Graph& g, const std::vector<std::int64_t>& deg,
                                        FlowCapacity guess_num, FlowCapacity guess_den) {
  const std::size_t n = g.num_nodes();
  const FlowCapacity m = g.total_weight();
  FlowNetwork<FlowCapacity> net(n + 2);
  for (std::size_t v = 0; v < n; ++v) {
    net.add_arc(0, 2 + v, m * guess_den);
    net.add_arc(2 + v, 1, m * guess_den + 2 * guess_num - FlowCapacity{deg[v]} * guess_den);
  }
  for (EdgeIndex l = 0; l < g.num_links(); ++l) {
    const auto [u, v] = g.link_endpoints(l);
    const FlowCapacity w = FlowCapacity{g.link_weight(l)} * guess_den;
    net.add_arc(2 + u, 2 + v, w);
    net.add_arc(2 + v, 2 + u, w);
  }
  return net;
}

template <class Graph>
SubgraphResult exact_dsp_impl(const Graph& g, FlowSearchStats* stats) {
  const std::int64_t m = g.total_weight();
  if (m == 0) throw std::invalid_argument("exact densest subgraph needs at least one edge");
  const std::size_t n = g.num_nodes();
  const auto deg = detail::weighted_degrees(g);
  const FlowCapacity separation = static_cast<FlowCapacity>(n) * static_cast<FlowCapacity>(n - 1);
  const FlowCapacity no_subgraph_cut = static_cast<FlowCapacity>(m) * static_cast<FlowCapacity>(n);

  // Density interval (lo/den, hi/den]; d* lies inside, and every witness found is denser than lo.
  FlowCapacity lo = 0, hi = m, den = 1;
  std::vector<NodeIndex> witness;
  int iterations = 0;
  while ((hi - lo) * separation >= den) {
    lo *= 2;
    hi *= 2;
    den *= 2;
    const FlowCapacity mid = (lo + hi) / 2;
    ++iterations;
    auto net = goldberg_impl(g, deg, mid, den);
    const FlowCapacity cut = net.max_flow(0, 1);
    if (cut < no_subgraph_cut * den) {
      const auto side = net.source_side(0);
      witness.clear();
      for (std::size_t v = 0; v < n; ++v) {
        if (side[2 + v]) witness.push_back(static_cast<NodeIndex>(v));
      }
      lo = mid;
    } else {
      hi = mid;
    }
  }
  if (stats) stats->iterations = iterations;
  if (witness.empty()) throw std::logic_error("density search ended without a witness subgraph");
  return make_result(g, std::move(witness));
}

// Subset enumeration with incremental counts: the statistics of S are those of S minus its
// lowest node plus that node's links into the rest.
template <class Graph>
class SubsetTable {
 public:
  SubsetTable(const Graph& g, bool with_colors) : n_(g.num_nodes()), colors_(g.num_colors()) {
    simple_adj_.assign(n_, 0);
    color_adj_.assign(colors_ * n_, 0);
    for (EdgeIndex l = 0; l < g.num_links(); ++l) {
      const auto [u, v] = g.link_endpoints(l);
      simple_adj_[u] |= 1u << v;
      simple_adj_[v] |= 1u << u;
      for (ColorIndex c : g.link_colors(l)) {
        color_adj_[c * n_ + u] |= 1u << v;
        color_adj_[c * n_ + v] |= 1u << u;
      }
    }
    multigraph_ = std::is_same_v<Graph, ColoredMultigraph>;
    const std::size_t subsets = std::size_t{1} << n_;
    weight_.assign(subsets, 0);
    if (with_colors) counts_.assign(subsets * colors_, 0);
    for (std::uint32_t s = 1; s < subsets; ++s) {
      const unsigned v = static_cast<unsigned>(std::countr_zero(s));
      const std::uint32_t rest = s & (s - 1);
      std::int32_t added = 0;
      if (multigraph_ || with_colors) {
        for (std::size_t c = 0; c < colors_; ++c) {
          const auto k = std::popcount(color_adj_[c * n_ + v] & rest);
          if (with_colors) counts_[s * colors_ + c] = static_cast<std::uint16_t>(counts_[rest * colors_ + c] + k);
          added += k;
        }
      }
      if (!multigraph_) added = std::popcount(simple_adj_[v] & rest);
      weight_[s] = weight_[rest] + added;
    }
  }

  std::int64_t weight(std::uint32_t s) const { return weight_[s]; }
  std::int64_t count(std::uint32_t s, std::size_t c) const { return counts_[s * colors_ + c]; }
  std::size_t subsets() const { return std::size_t{1} << n_; }

 private:
  std::size_t n_;
  std::size_t colors_;
  bool multigraph_ = false;
  std::vector<std::uint32_t> simple_adj_;
  std::vector<std::uint32_t> color_adj_;
  std::vector<std::int32_t> weight_;
  std::vector<std::uint16_t> counts_;
};

constexpr std::size_t kHardCap = 30;

// True if subset a beats b under (density desc, size asc, lexicographic asc).
bool better(std::int64_t wa, std::uint32_t a, std::int64_t wb, std::uint32_t b) {
  const int na = std::popcount(a), nb = std::popcount(b);
  const auto da = Density::of(wa, na), db = Density::of(wb, nb);
  if (da != db) return da > db;
  if (na != nb) return na < nb;
  const std::uint32_t diff = a ^ b;
  if (diff == 0) return false;
  return (a & (diff & (~diff + 1))) != 0;
}

template <class Graph, class Accept>
SubgraphResult enumerate_best(const Graph& g, const BruteForceOptions& options, bool with_colors,
                              bool allow_empty, Accept accept) {
  const std::size_t cap = std::min(options.cap, kHardCap);
  if (g.num_nodes() > cap) throw CapExceededError(g.num_nodes(), cap);
  SubsetTable<Graph> table(g, with_colors);
  bool found = false;
  std::uint32_t best = 0;
  for (std::uint32_t s = allow_empty ? 0 : 1; s < table.subsets(); ++s) {
    if (!accept(table, s)) continue;
    if (!found || better(table.weight(s), s, table.weight(best), best)) {
      best = s;
      found = true;
    }
  }
  if (!found) throw InfeasibleError("no subset satisfies the constraint");
  std::vector<NodeIndex> nodes;
  for (std::uint32_t rest = best; rest; rest &= rest - 1) {
    nodes.push_back(static_cast<NodeIndex>(std::countr_zero(rest)));
  }
  return make_result(g, std::move(nodes));
}

template <class Graph>
SubgraphResult at_least_impl(const Graph& g, std::int64_t h, const BruteForceOptions& options) {
  if (g.total_weight() < h) throw InfeasibleError("graph has fewer than h edges");
  return enumerate_best(g, options, false, false,
                        [h](const SubsetTable<Graph>& t, std::uint32_t s) { return t.weight(s) >= h; });
}

template <class Graph>
SubgraphResult colored_impl(const Graph& g, const ColorRequirement& req, const BruteForceOptions& options) {
  const auto feas = check_feasibility(g, req);
  if (!feas.feasible) throw InfeasibleError("color requirement exceeds the graph's color counts");
  const std::size_t colors = g.num_colors();
  const bool allow_empty = req.mode != RequirementMode::AtLeast;
  return enumerate_best(g, options, true, allow_empty, [&](const SubsetTable<Graph>& t, std::uint32_t s) {
    for (std::size_t c = 0; c < colors; ++c) {
      const auto k = t.count(s, c);
      switch (req.mode) {
        case RequirementMode::AtLeast:
          if (k < req.h[c]) return false;
          break;
        case RequirementMode::AtMost:
          if (k > req.h[c]) return false;
          break;
        case RequirementMode::Exactly:
          if (k != req.h[c]) return false;
          break;
      }
    }
    return true;
  });
}

}  // namespace

FlowNetwork<FlowCapacity> goldberg_network(const EdgeColoredGraph& g, FlowCapacity guess_num,
                                           FlowCapacity guess_den) {
  return goldberg_impl(g, detail::weighted_degrees(g), guess_num, guess_den);
}
FlowNetwork<FlowCapacity> goldberg_network(const ColoredMultigraph& g, FlowCapacity guess_num,
                                           FlowCapacity guess_den) {
  return goldberg_impl(g, detail::weighted_degrees(g), guess_num, guess_den);
}

SubgraphResult exact_dsp_flow(const EdgeColoredGraph& g, FlowSearchStats* stats) { return exact_dsp_impl(g, stats); }
SubgraphResult exact_dsp_flow(const ColoredMultigraph& g, FlowSearchStats* stats) { return exact_dsp_impl(g, stats); }

SubgraphResult brute_force_densest(const EdgeColoredGraph& g, const BruteForceOptions& options) {
  return at_least_impl(g, 0, options);
}
SubgraphResult brute_force_densest(const ColoredMultigraph& g, const BruteForceOptions& options) {
  return at_least_impl(g, 0, options);
}

SubgraphResult brute_force_at_least_h_edges(const EdgeColoredGraph& g, std::int64_t h,
                                            const BruteForceOptions& options) {
  return at_least_impl(g, h, options);
}
SubgraphResult brute_force_at_least_h_edges(const ColoredMultigraph& g, std::int64_t h,
                                            const BruteForceOptions& options) {
  return at_least_impl(g, h, options);
}

SubgraphResult brute_force_colored(const EdgeColoredGraph& g, const ColorRequirement& req,
                                   const BruteForceOptions& options) {
  return colored_impl(g, req, options);
}
SubgraphResult brute_force_colored(const ColoredMultigraph& g, const ColorRequirement& req,
                                   const BruteForceOptions& options) {
  return colored_impl(g, req, options);
}

}  // namespace coldsp
