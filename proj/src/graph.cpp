#include <coldsp/graph.hpp>

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace coldsp {

std::string format_decimal(double value, int precision) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::fixed, precision);
  return std::string(buf, res.ptr);
}

EdgeColoredGraph::EdgeColoredGraph() : EdgeColoredGraph(GraphBuilder().build()) {}

std::optional<NodeIndex> EdgeColoredGraph::find_node(std::string_view label) const {
  auto it = store_->node_ids.find(std::string(label));
  if (it == store_->node_ids.end()) return std::nullopt;
  return it->second;
}

std::optional<ColorIndex> EdgeColoredGraph::find_color(std::string_view label) const {
  auto it = store_->color_ids.find(std::string(label));
  if (it == store_->color_ids.end()) return std::nullopt;
  return it->second;
}

std::int64_t ColoredMultigraph::weighted_degree(NodeIndex v) const {
  std::int64_t d = 0;
  for (const auto& inc : incident(v)) d += link_weight(inc.link);
  return d;
}

// ---------------------------------------------------------------------------
// GraphBuilder

GraphBuilder::GraphBuilder() : store_(std::make_shared<detail::GraphStore>()) {}

NodeIndex GraphBuilder::add_node(std::string_view label) {
  auto [it, inserted] =
      store_->node_ids.try_emplace(std::string(label), static_cast<NodeIndex>(store_->node_labels.size()));
  if (inserted) store_->node_labels.emplace_back(label);
  return it->second;
}

ColorIndex GraphBuilder::add_color(std::string_view label) {
  auto [it, inserted] = store_->color_ids.try_emplace(
      std::string(label), static_cast<ColorIndex>(store_->color_labels.size()));
  if (inserted) store_->color_labels.emplace_back(label);
  return it->second;
}

std::size_t GraphBuilder::num_nodes() const { return store_->node_labels.size(); }
std::size_t GraphBuilder::num_colors() const { return store_->color_labels.size(); }

void GraphBuilder::add_edge(NodeIndex u, NodeIndex v, std::span<const ColorIndex> colors) {
  const auto n = store_->node_labels.size();
  if (u >= n || v >= n) throw std::invalid_argument("edge endpoint is not a known node");
  if (u == v) throw std::invalid_argument("self-loop on node '" + store_->node_labels[u] + "'");
  if (colors.empty()) throw std::invalid_argument("edge has an empty color set");
  if (u > v) std::swap(u, v);
  for (ColorIndex c : colors) {
    if (c >= store_->color_labels.size()) throw std::invalid_argument("unknown color id");
    memberships_.push_back({u, v, c});
  }
}

void GraphBuilder::add_edge(std::string_view u, std::string_view v,
                            std::initializer_list<std::string_view> colors) {
  const NodeIndex a = add_node(u);
  const NodeIndex b = add_node(v);
  std::vector<ColorIndex> ids;
  ids.reserve(colors.size());
  for (auto c : colors) ids.push_back(add_color(c));
  add_edge(a, b, ids);
}

EdgeColoredGraph GraphBuilder::build() && {
  auto& s = *store_;
  std::sort(memberships_.begin(), memberships_.end(), [](const Membership& a, const Membership& b) {
    if (a.u != b.u) return a.u < b.u;
    if (a.v != b.v) return a.v < b.v;
    return a.color < b.color;
  });
  memberships_.erase(std::unique(memberships_.begin(), memberships_.end(),
                                 [](const Membership& a, const Membership& b) {
                                   return a.u == b.u && a.v == b.v && a.color == b.color;
                                 }),
                     memberships_.end());

  const std::size_t n = s.node_labels.size();
  s.colors.reserve(memberships_.size());
  s.membership_edge.reserve(memberships_.size());
  s.color_offsets.assign(1, 0);
  s.color_totals.assign(s.color_labels.size(), 0);
  for (std::size_t i = 0; i < memberships_.size(); ++i) {
    const auto& mb = memberships_[i];
    if (i == 0 || mb.u != memberships_[i - 1].u || mb.v != memberships_[i - 1].v) {
      if (i != 0) s.color_offsets.push_back(s.colors.size());
      s.edges.push_back({mb.u, mb.v});
    }
    s.colors.push_back(mb.color);
    s.membership_edge.push_back(static_cast<EdgeIndex>(s.edges.size() - 1));
    ++s.color_totals[mb.color];
  }
  if (!s.edges.empty()) s.color_offsets.push_back(s.colors.size());
  memberships_.clear();
  memberships_.shrink_to_fit();

  s.max_colors_per_edge = 0;
  for (std::size_t e = 0; e < s.edges.size(); ++e) {
    s.max_colors_per_edge = std::max(s.max_colors_per_edge, s.color_offsets[e + 1] - s.color_offsets[e]);
  }

  // Adjacency in edge order; since edges are sorted by (u, v), every list ends up sorted by neighbor.
  s.adj_offsets.assign(n + 1, 0);
  for (const auto& e : s.edges) {
    ++s.adj_offsets[e.u + 1];
    ++s.adj_offsets[e.v + 1];
  }
  std::partial_sum(s.adj_offsets.begin(), s.adj_offsets.end(), s.adj_offsets.begin());
  s.adj.resize(s.adj_offsets[n]);
  std::vector<std::size_t> fill(s.adj_offsets.begin(), s.adj_offsets.end() - 1);
  for (std::size_t e = 0; e < s.edges.size(); ++e) {
    const auto [u, v] = s.edges[e];
    s.adj[fill[u]++] = {v, static_cast<EdgeIndex>(e)};
    s.adj[fill[v]++] = {u, static_cast<EdgeIndex>(e)};
  }

  EdgeColoredGraph g(std::move(store_));
  store_ = std::make_shared<detail::GraphStore>();
  return g;
}

// ---------------------------------------------------------------------------
// Requirements

std::int64_t ColorRequirement::total() const {
  return std::accumulate(h.begin(), h.end(), std::int64_t{0});
}

bool ColorRequirement::satisfied_by(std::span<const std::int64_t> counts) const {
  if (counts.size() != h.size()) throw std::invalid_argument("requirement length differs from color count");
  for (std::size_t i = 0; i < h.size(); ++i) {
    switch (mode) {
      case RequirementMode::AtLeast:
        if (counts[i] < h[i]) return false;
        break;
      case RequirementMode::AtMost:
        if (counts[i] > h[i]) return false;
        break;
      case RequirementMode::Exactly:
        if (counts[i] != h[i]) return false;
        break;
    }
  }
  return true;
}

namespace {

std::int64_t parse_count(std::string_view token) {
  std::int64_t value = 0;
  auto res = std::from_chars(token.data(), token.data() + token.size(), value);
  if (res.ec != std::errc{} || res.ptr != token.data() + token.size() || value < 0) {
    throw std::invalid_argument("invalid requirement count '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

ColorRequirement parse_requirement(std::string_view text, const EdgeColoredGraph& g, RequirementMode mode) {
  ColorRequirement req;
  req.mode = mode;
  req.h.assign(g.num_colors(), 0);
  std::vector<std::string_view> items;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    if (comma > start) items.push_back(text.substr(start, comma - start));
    start = comma + 1;
  }
  const bool keyed = !items.empty() && items.front().find('=') != std::string_view::npos;
  if (!keyed) {
    if (items.size() != g.num_colors()) {
      throw std::invalid_argument("positional requirement needs " + std::to_string(g.num_colors()) +
                                  " entries, got " + std::to_string(items.size()));
    }
    for (std::size_t i = 0; i < items.size(); ++i) req.h[i] = parse_count(items[i]);
    return req;
  }
  for (auto item : items) {
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) throw std::invalid_argument("expected label=count, got '" + std::string(item) + "'");
    const auto color = g.find_color(item.substr(0, eq));
    if (!color) throw std::invalid_argument("unknown color '" + std::string(item.substr(0, eq)) + "'");
    req.h[*color] = parse_count(item.substr(eq + 1));
  }
  return req;
}

std::string format_requirement(const ColorRequirement& req, const EdgeColoredGraph& g) {
  std::string out;
  for (std::size_t i = 0; i < req.h.size(); ++i) {
    if (i) out += ',';
    out += (i < g.num_colors() ? g.color_label(static_cast<ColorIndex>(i)) : std::to_string(i));
    out += '=';
    out += std::to_string(req.h[i]);
  }
  return out;
}

namespace {

Feasibility feasibility_from_totals(std::span<const std::int64_t> totals, const ColorRequirement& req) {
  if (req.h.size() != totals.size()) {
    throw std::invalid_argument("requirement has " + std::to_string(req.h.size()) +
                                " entries but the graph has " + std::to_string(totals.size()) + " colors");
  }
  Feasibility f;
  f.slack.resize(totals.size());
  if (req.mode == RequirementMode::AtMost) {
    f.feasible = true;
    std::copy(req.h.begin(), req.h.end(), f.slack.begin());
    return f;
  }
  f.feasible = true;
  for (std::size_t i = 0; i < totals.size(); ++i) {
    f.slack[i] = totals[i] - req.h[i];
    if (f.slack[i] < 0) f.feasible = false;
  }
  return f;
}

template <class Graph>
std::vector<char> node_mask(const Graph& g, std::span<const NodeIndex> nodes) {
  std::vector<char> mask(g.num_nodes(), 0);
  for (NodeIndex v : nodes) {
    if (v >= g.num_nodes()) throw std::out_of_range("node index " + std::to_string(v) + " out of range");
    mask[v] = 1;
  }
  return mask;
}

// Sums link weights and per-color memberships over links with both endpoints in the mask.
template <class Graph>
void tally(const Graph& g, std::span<const NodeIndex> nodes, const std::vector<char>& mask,
           std::int64_t& weight, std::int64_t* links, std::vector<std::int64_t>* counts) {
  weight = 0;
  if (links) *links = 0;
  if (counts) counts->assign(g.num_colors(), 0);
  for (NodeIndex v : nodes) {
    for (const auto& inc : g.incident(v)) {
      if (inc.neighbor <= v || !mask[inc.neighbor]) continue;
      weight += g.link_weight(inc.link);
      if (links) ++*links;
      if (counts) {
        for (ColorIndex c : g.link_colors(inc.link)) ++(*counts)[c];
      }
    }
  }
}

}  // namespace

Feasibility check_feasibility(const EdgeColoredGraph& g, const ColorRequirement& req) {
  return feasibility_from_totals(g.color_totals(), req);
}

Feasibility check_feasibility(const ColoredMultigraph& g, const ColorRequirement& req) {
  return feasibility_from_totals(g.color_totals(), req);
}

std::vector<NodeIndex> normalize_nodes(std::span<const NodeIndex> nodes, std::size_t n) {
  std::vector<NodeIndex> out(nodes.begin(), nodes.end());
  for (NodeIndex v : out) {
    if (v >= n) throw std::out_of_range("node index " + std::to_string(v) + " out of range");
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

EdgeColoredGraph induced_subgraph(const EdgeColoredGraph& g, std::span<const NodeIndex> nodes) {
  const auto sorted = normalize_nodes(nodes, g.num_nodes());
  const auto mask = node_mask(g, sorted);
  GraphBuilder b;
  for (std::size_t c = 0; c < g.num_colors(); ++c) b.add_color(g.color_label(static_cast<ColorIndex>(c)));
  std::vector<NodeIndex> remap(g.num_nodes(), 0);
  for (NodeIndex v : sorted) remap[v] = b.add_node(g.node_label(v));
  for (NodeIndex v : sorted) {
    for (const auto& inc : g.incident(v)) {
      if (inc.neighbor <= v || !mask[inc.neighbor]) continue;
      b.add_edge(remap[v], remap[inc.neighbor], g.edge_colors(inc.link));
    }
  }
  return std::move(b).build();
}

Density density(const EdgeColoredGraph& g, std::span<const NodeIndex> nodes) {
  const auto sorted = normalize_nodes(nodes, g.num_nodes());
  std::int64_t weight = 0;
  tally(g, sorted, node_mask(g, sorted), weight, nullptr, nullptr);
  return Density::of(weight, static_cast<std::int64_t>(sorted.size()));
}

Density density(const ColoredMultigraph& g, std::span<const NodeIndex> nodes) {
  const auto sorted = normalize_nodes(nodes, g.num_nodes());
  std::int64_t weight = 0;
  tally(g, sorted, node_mask(g, sorted), weight, nullptr, nullptr);
  return Density::of(weight, static_cast<std::int64_t>(sorted.size()));
}

std::vector<std::int64_t> color_counts(const EdgeColoredGraph& g, std::span<const NodeIndex> nodes) {
  const auto sorted = normalize_nodes(nodes, g.num_nodes());
  std::int64_t weight = 0;
  std::vector<std::int64_t> counts;
  tally(g, sorted, node_mask(g, sorted), weight, nullptr, &counts);
  return counts;
}

std::vector<std::int64_t> color_counts(const ColoredMultigraph& g, std::span<const NodeIndex> nodes) {
  const auto sorted = normalize_nodes(nodes, g.num_nodes());
  std::int64_t weight = 0;
  std::vector<std::int64_t> counts;
  tally(g, sorted, node_mask(g, sorted), weight, nullptr, &counts);
  return counts;
}

SubgraphResult make_result(const EdgeColoredGraph& g, std::vector<NodeIndex> nodes) {
  SubgraphResult r;
  r.nodes = normalize_nodes(nodes, g.num_nodes());
  tally(g, r.nodes, node_mask(g, r.nodes), r.edge_count, nullptr, &r.color_counts);
  r.density = Density::of(r.edge_count, static_cast<std::int64_t>(r.nodes.size()));
  return r;
}

SubgraphResult make_result(const ColoredMultigraph& g, std::vector<NodeIndex> nodes) {
  SubgraphResult r;
  r.nodes = normalize_nodes(nodes, g.num_nodes());
  std::int64_t pairs = 0;
  tally(g, r.nodes, node_mask(g, r.nodes), r.edge_count, &pairs, &r.color_counts);
  const auto size = static_cast<std::int64_t>(r.nodes.size());
  r.density = Density::of(r.edge_count, size);
  r.simple_density = Density::of(pairs, size);
  return r;
}

ColoredMultigraph to_multigraph(const EdgeColoredGraph& g) { return ColoredMultigraph(g.store_); }

}  // namespace coldsp
