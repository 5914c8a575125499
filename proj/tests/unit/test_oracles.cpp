#include <coldsp/errors.hpp>
#include <coldsp/oracles.hpp>

#include "fixtures.hpp"
#include "naive.hpp"

#include <doctest.h>

#include <cmath>

using namespace coldsp;

TEST_CASE("flow network on a textbook instance") {
  // Six-node network with maximum flow 23.
  FlowNetwork<long long> net(6);
  net.add_arc(0, 1, 16);
  net.add_arc(0, 2, 13);
  net.add_arc(1, 3, 12);
  net.add_arc(2, 1, 4);
  net.add_arc(2, 4, 14);
  net.add_arc(3, 2, 9);
  net.add_arc(3, 5, 20);
  net.add_arc(4, 3, 7);
  net.add_arc(4, 5, 4);
  CHECK(net.max_flow(0, 5) == 23);
  const auto side = net.source_side(0);
  CHECK(side[0]);
  CHECK_FALSE(side[5]);
  CHECK_THROWS_AS(net.add_arc(0, 1, -1), std::invalid_argument);
}

TEST_CASE("flow network with no path") {
  FlowNetwork<int> net(3);
  net.add_arc(0, 1, 5);
  CHECK(net.max_flow(0, 2) == 0);
}

TEST_CASE("goldberg network shape") {
  const auto g = fixtures::path_abc();
  const auto net = goldberg_network(g, 1, 2);
  CHECK(net.num_nodes() == 5);
  CHECK(net.num_arcs() == 2 * 3 + 2 * 2);
}

TEST_CASE("exact densest subgraph of K4 plus pendant") {
  const auto g = fixtures::k4_plus_pendant();
  const auto r = exact_dsp_flow(g);
  CHECK(r.density == Density{3, 2});
  CHECK(r.nodes.size() == 4);
  const auto edgeless = induced_subgraph(g, std::vector<NodeIndex>{0, 4});
  CHECK_THROWS_AS(exact_dsp_flow(edgeless), std::invalid_argument);
}

TEST_CASE("flow and enumeration agree") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const std::size_t n = 4 + seed % 7;
    const auto g = naive::random_graph(2000 + seed, n, n + seed % 9, 3, seed % 2 ? 2 : 1);
    FlowSearchStats stats;
    const auto flow = exact_dsp_flow(g, &stats);
    const auto ref = naive::best_subset(g, false, false, [](const naive::Stats&, std::size_t) { return true; });
    CHECK(flow.density == ref->density);
    CHECK(brute_force_densest(g).density == ref->density);
    CHECK(brute_force_densest(g).nodes == ref->nodes);
    const double m = static_cast<double>(g.num_edges());
    const double bound = std::ceil(std::log2(static_cast<double>(n * (n - 1)) * m)) + 2;
    CHECK(stats.iterations <= bound);

    const auto mg = to_multigraph(g);
    const auto mref = naive::best_subset(g, true, false, [](const naive::Stats&, std::size_t) { return true; });
    CHECK(exact_dsp_flow(mg).density == mref->density);
    CHECK(brute_force_densest(mg).density == mref->density);
  }
}

TEST_CASE("brute force at least h edges examples") {
  const auto p = fixtures::path_abc();
  const auto r = brute_force_at_least_h_edges(p, 2);
  CHECK(r.nodes.size() == 3);
  CHECK(r.density == Density{2, 3});
  const auto k = fixtures::k4_plus_pendant();
  CHECK(brute_force_at_least_h_edges(k, 1).density == Density{3, 2});
  CHECK(brute_force_at_least_h_edges(k, 1).nodes.size() == 4);
  CHECK(brute_force_at_least_h_edges(k, 7).nodes.size() == 5);
  CHECK_THROWS_AS(brute_force_at_least_h_edges(k, 8), InfeasibleError);
}

TEST_CASE("brute force matches the naive enumerator with tie-breaks") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const auto g = naive::random_graph(3000 + seed, 8, 12, 2);
    for (std::int64_t h = 1; h <= 12; h += 2) {
      const auto ref = naive::best_subset(g, false, false, [&](const naive::Stats& s, std::size_t) {
        return s.simple_edges >= h;
      });
      const auto got = brute_force_at_least_h_edges(g, h);
      CHECK(got.nodes == ref->nodes);
    }
  }
}

TEST_CASE("colored brute force examples") {
  const auto t = fixtures::triangle_pendant();
  const auto r = brute_force_colored(t, {{1, 1, 1}, RequirementMode::AtLeast});
  CHECK(r.nodes.size() == 5);
  CHECK(r.density == Density{4, 5});

  const auto at_most = brute_force_colored(t, {{2, 1, 1}, RequirementMode::AtMost});
  CHECK(at_most.density == brute_force_densest(t).density);

  const auto exactly_zero = brute_force_colored(t, {{0, 0, 0}, RequirementMode::Exactly});
  CHECK(exactly_zero.density == Density{0, 1});
  CHECK(exactly_zero.nodes.empty());

  CHECK_THROWS_AS(brute_force_colored(t, {{3, 1, 1}, RequirementMode::AtLeast}), InfeasibleError);
  CHECK_THROWS_AS(brute_force_colored(t, {{3, 1, 1}, RequirementMode::Exactly}), InfeasibleError);
}

TEST_CASE("colored brute force agrees with the naive enumerator in every mode") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto g = naive::random_graph(4000 + seed, 8, 13, 3, 2);
    coldsp::Rng rng(seed);
    std::vector<std::int64_t> h;
    for (auto total : g.color_totals()) h.push_back(rng.uniform(0, total));
    for (auto mode : {RequirementMode::AtLeast, RequirementMode::AtMost, RequirementMode::Exactly}) {
      const ColorRequirement req{h, mode};
      for (bool multi : {false, true}) {
        const auto ref = naive::best_subset(g, multi, mode != RequirementMode::AtLeast,
                                            [&](const naive::Stats& s, std::size_t) {
                                              std::vector<std::int64_t> counts = s.colors;
                                              return req.satisfied_by(counts);
                                            });
        if (!ref) {
          CHECK_THROWS_AS(multi ? brute_force_colored(to_multigraph(g), req) : brute_force_colored(g, req),
                          InfeasibleError);
          continue;
        }
        const auto got = multi ? brute_force_colored(to_multigraph(g), req) : brute_force_colored(g, req);
        CHECK(got.density == ref->density);
        CHECK(got.nodes == ref->nodes);
      }
    }
  }
}

TEST_CASE("zero AtLeast requirement equals the unconstrained optimum") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto g = naive::random_graph(5000 + seed, 10, 20, 3);
    const auto a = brute_force_colored(g, {{0, 0, 0}, RequirementMode::AtLeast});
    const auto b = brute_force_densest(g);
    CHECK(a.nodes == b.nodes);
  }
}

TEST_CASE("optimum is monotone in the requirement") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto g = naive::random_graph(6000 + seed, 10, 22, 2);
    Density prev{1000, 1};
    for (std::int64_t h = 1; h <= static_cast<std::int64_t>(g.num_edges()); ++h) {
      const auto d = brute_force_at_least_h_edges(g, h).density;
      CHECK(d <= prev);
      prev = d;
    }
    const auto totals = g.color_totals();
    Density last{0, 1};
    for (std::int64_t h0 = 0; h0 <= totals[0]; ++h0) {
      const auto d = brute_force_colored(g, {{h0, totals[1] / 2}, RequirementMode::AtMost}).density;
      CHECK(d >= last);
      last = d;
    }
  }
}

TEST_CASE("enumeration cap") {
  const auto g = naive::random_graph(1, 22, 30, 2);
  CHECK_THROWS_AS(brute_force_densest(g), CapExceededError);
  CHECK_THROWS_AS(brute_force_densest(g, {10}), CapExceededError);
}
