#include <coldsp/errors.hpp>
#include <coldsp/graph.hpp>
#include <coldsp/io.hpp>

#include "fixtures.hpp"
#include "naive.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

using namespace coldsp;

namespace {

std::vector<NodeIndex> ids(const EdgeColoredGraph& g, std::initializer_list<const char*> labels) {
  std::vector<NodeIndex> out;
  for (const char* l : labels) out.push_back(*g.find_node(l));
  return out;
}

// Edge set keyed by labels, for comparing graphs up to relabeling of indices.
std::set<std::tuple<std::string, std::string, std::set<std::string>>> labeled_edges(const EdgeColoredGraph& g) {
  std::set<std::tuple<std::string, std::string, std::set<std::string>>> out;
  for (EdgeIndex e = 0; e < g.num_edges(); ++e) {
    auto [u, v] = g.endpoints(e);
    std::string a = g.node_label(u), b = g.node_label(v);
    if (b < a) std::swap(a, b);
    std::set<std::string> cs;
    for (ColorIndex c : g.edge_colors(e)) cs.insert(g.color_label(c));
    out.emplace(a, b, cs);
  }
  return out;
}

}  // namespace

TEST_CASE("builder interns labels in first-appearance order") {
  const auto g = parse_edge_list("a b 1\nb c 2\n");
  CHECK(g.num_nodes() == 3);
  CHECK(g.num_edges() == 2);
  CHECK(g.num_colors() == 2);
  CHECK(g.node_label(0) == "a");
  CHECK(g.node_label(2) == "c");
  CHECK(g.color_label(1) == "2");
}

TEST_CASE("duplicate pairs merge by color union") {
  const auto g = parse_edge_list("a b 1\na b 2\n");
  CHECK(g.num_nodes() == 2);
  REQUIRE(g.num_edges() == 1);
  CHECK(g.edge_colors(0).size() == 2);
  CHECK(g.max_colors_per_edge() == 2);
  CHECK_FALSE(g.single_colored());
}

TEST_CASE("adjacency is symmetric") {
  const auto g = naive::random_graph(7, 20, 60, 3, 2);
  for (NodeIndex u = 0; u < g.num_nodes(); ++u) {
    for (const auto& inc : g.incident(u)) {
      const auto back = g.incident(inc.neighbor);
      CHECK(std::any_of(back.begin(), back.end(), [&](const Incidence& x) { return x.neighbor == u && x.link == inc.link; }));
    }
  }
}

TEST_CASE("builder rejects invalid edges") {
  GraphBuilder b;
  const auto a = b.add_node("a");
  const auto c = b.add_color("1");
  CHECK_THROWS_AS(b.add_edge(a, a, c), std::invalid_argument);
  CHECK_THROWS_AS(b.add_edge(a, 7, c), std::invalid_argument);
  CHECK_THROWS_AS(b.add_edge(a, b.add_node("b"), std::span<const ColorIndex>{}), std::invalid_argument);
}

TEST_CASE("induced subgraph") {
  const auto g = parse_edge_list("a b 1\nb c 1\na c 1\n");
  SUBCASE("pair") {
    const auto s = induced_subgraph(g, ids(g, {"a", "b"}));
    CHECK(s.num_nodes() == 2);
    REQUIRE(s.num_edges() == 1);
    CHECK(s.node_label(s.endpoints(0).u) == "a");
    CHECK(s.node_label(s.endpoints(0).v) == "b");
  }
  SUBCASE("all nodes") {
    const std::vector<NodeIndex> all{0, 1, 2};
    CHECK(labeled_edges(induced_subgraph(g, all)) == labeled_edges(g));
  }
  SUBCASE("empty") {
    const auto s = induced_subgraph(g, {});
    CHECK(s.num_nodes() == 0);
    CHECK(s.num_edges() == 0);
  }
  SUBCASE("out of range") {
    const std::vector<NodeIndex> bad{0, 9};
    CHECK_THROWS_AS(induced_subgraph(g, bad), std::out_of_range);
  }
}

TEST_CASE("density examples") {
  const auto k4 = parse_edge_list("a b 1\na c 1\na d 1\nb c 1\nb d 1\nc d 1\n");
  const std::vector<NodeIndex> all4{0, 1, 2, 3};
  CHECK(density(k4, all4) == Density{6, 4});
  CHECK(density(k4, all4) == Density{3, 2});

  const auto p = fixtures::path_abc();
  const std::vector<NodeIndex> all3{0, 1, 2};
  CHECK(density(p, all3) == Density{2, 3});

  const auto tri = parse_edge_list("a b 1,2\nb c 1,2\na c 1,2\n");
  CHECK(density(to_multigraph(tri), all3) == Density{6, 3});
  CHECK(density(tri, all3) == Density{3, 3});
  CHECK(density(tri, {}) == Density{0, 1});
}

TEST_CASE("density ordering is exact") {
  CHECK(Density{1, 3} < Density{334, 1000});
  CHECK(Density{2, 4} == Density{1, 2});
  CHECK(Density{0, 5} == Density{0, 1});
  CHECK(Density::of(3, 0) == Density{0, 1});
  CHECK(Density{7, 3}.fraction() == "7/3");
}

TEST_CASE("color counts") {
  const auto g = parse_edge_list("u v 1,3\n");
  const std::vector<NodeIndex> both{0, 1};
  const auto c = color_counts(g, both);
  CHECK(c == std::vector<std::int64_t>{1, 1});
  CHECK(color_counts(g, {}) == std::vector<std::int64_t>{0, 0});

  const auto t = fixtures::triangle_112();
  const std::vector<NodeIndex> all{0, 1, 2};
  CHECK(color_counts(t, all) == std::vector<std::int64_t>{2, 1});
}

TEST_CASE("feasibility") {
  const auto t = fixtures::triangle_112();
  auto ok = check_feasibility(t, {{2, 1}, RequirementMode::AtLeast});
  CHECK(ok.feasible);
  auto bad = check_feasibility(t, {{3, 1}, RequirementMode::AtLeast});
  CHECK_FALSE(bad.feasible);
  CHECK(bad.slack == std::vector<std::int64_t>{-1, 0});
  CHECK(check_feasibility(t, {{50, 50}, RequirementMode::AtMost}).feasible);
  CHECK_FALSE(check_feasibility(t, {{3, 1}, RequirementMode::Exactly}).feasible);
  CHECK_THROWS_AS(check_feasibility(t, {{1}, RequirementMode::AtLeast}), std::invalid_argument);
}

TEST_CASE("feasibility matches existence of a feasible subset") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto g = naive::random_graph(seed, 7, 10, 3, 2);
    const auto totals = color_counts(g, std::vector<NodeIndex>{0, 1, 2, 3, 4, 5, 6});
    coldsp::Rng rng(seed);
    ColorRequirement req;
    for (auto t : totals) req.h.push_back(rng.uniform(0, t + 1));
    const bool exists = naive::best_subset(g, false, false, [&](const naive::Stats& s, std::size_t) {
                          for (std::size_t c = 0; c < req.h.size(); ++c) {
                            if (s.colors[c] < req.h[c]) return false;
                          }
                          return true;
                        }).has_value();
    CHECK(check_feasibility(g, req).feasible == exists);
  }
}

TEST_CASE("multigraph transform") {
  const auto g = parse_edge_list("u v 1,3\nv w 2\n");
  const auto m = to_multigraph(g);
  CHECK(m.num_nodes() == 3);
  CHECK(m.num_edges() == 3);
  CHECK(m.num_pairs() == 2);
  CHECK(m.max_multiplicity() == 2);
  std::multiset<std::pair<EdgeIndex, std::string>> got;
  for (std::size_t i = 0; i < m.num_edges(); ++i) got.emplace(m.edge(i).pair, m.color_label(m.edge(i).color));
  CHECK(got.count({0, "1"}) == 1);
  CHECK(got.count({0, "3"}) == 1);
  CHECK(got.count({1, "2"}) == 1);
  CHECK(m.weighted_degree(*g.find_node("v")) == 3);
  CHECK(m.simple_graph().num_edges() == 2);
}

TEST_CASE("single-colored multigraph mirrors the simple graph") {
  const auto g = naive::random_graph(3, 12, 30, 4, 1);
  const auto m = to_multigraph(g);
  CHECK(m.num_edges() == g.num_edges());
  CHECK(m.max_multiplicity() == 1);
  const std::vector<NodeIndex> s{0, 2, 3, 5, 8};
  CHECK(density(m, s) == density(g, s));
}

TEST_CASE("property: recount, membership totals, multigraph dominance") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto g = naive::random_graph(100 + seed, 10, 25, 4, 3);
    const auto m = to_multigraph(g);
    std::int64_t memberships = 0;
    for (auto c : g.color_totals()) memberships += c;
    CHECK(static_cast<std::size_t>(memberships) == m.num_edges());
    CHECK(m.num_nodes() == g.num_nodes());
    CHECK(m.max_multiplicity() <= g.num_colors());

    coldsp::Rng rng(seed);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<char> in(g.num_nodes(), 0);
      std::vector<NodeIndex> s;
      for (NodeIndex v = 0; v < g.num_nodes(); ++v) {
        if (rng.below(2)) {
          in[v] = 1;
          s.push_back(v);
        }
      }
      const auto ref = naive::stats(g, in);
      const auto r = make_result(g, s);
      CHECK(r.edge_count == ref.simple_edges);
      CHECK(r.density.edges == ref.simple_edges);
      CHECK(r.density.nodes == static_cast<std::int64_t>(std::max<std::size_t>(s.size(), 1)));
      CHECK(r.color_counts == ref.colors);
      const auto rm = make_result(m, s);
      CHECK(rm.edge_count == ref.multi_edges);
      CHECK(rm.edge_count >= r.edge_count);
      REQUIRE(rm.simple_density.has_value());
      CHECK(*rm.simple_density == r.density);
    }
  }
}

TEST_CASE("round trip through the edge-list format") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const auto g = naive::random_graph(seed, 15, 40, 5, 3);
    const auto text = serialize_edge_list(g);
    const auto back = parse_edge_list(text);
    CHECK(labeled_edges(back) == labeled_edges(g));
    CHECK(serialize_edge_list(parse_edge_list(text)) == serialize_edge_list(back));
  }
}

TEST_CASE("requirement parsing") {
  const auto g = parse_edge_list("a b red\nb c blue\n");
  auto keyed = parse_requirement("blue=3", g);
  CHECK(keyed.h == std::vector<std::int64_t>{0, 3});
  auto positional = parse_requirement("1,2", g);
  CHECK(positional.h == std::vector<std::int64_t>{1, 2});
  CHECK(format_requirement(positional, g) == "red=1,blue=2");
  CHECK_THROWS(parse_requirement("green=1", g));
  CHECK_THROWS(parse_requirement("1", g));
  CHECK_THROWS(parse_requirement("red=-1", g));
}

TEST_CASE("normalize_nodes") {
  const std::vector<NodeIndex> raw{3, 1, 3, 0};
  CHECK(normalize_nodes(raw, 4) == std::vector<NodeIndex>{0, 1, 3});
  CHECK_THROWS_AS(normalize_nodes(raw, 3), std::out_of_range);
}
