#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <queue>
#include <stdexcept>
#include <vector>

namespace coldsp {

/// Directed network with integral capacities; max flow by Dinic's algorithm.
///
/// Cap must be a signed integral type wide enough for the sum of capacities leaving
/// the source (the densest-subgraph oracle uses __int128).
template <class Cap>
class FlowNetwork {
 public:
  struct Arc {
    std::size_t to;
    Cap capacity;  // residual
    std::size_t reverse;
  };

  explicit FlowNetwork(std::size_t num_nodes) : arcs_(num_nodes) {}

  std::size_t num_nodes() const { return arcs_.size(); }
  std::size_t num_arcs() const { return arc_count_; }

  void add_arc(std::size_t from, std::size_t to, Cap capacity) {
    if (capacity < 0) throw std::invalid_argument("negative arc capacity");
    arcs_[from].push_back({to, capacity, arcs_[to].size() + (from == to ? 1 : 0)});
    arcs_[to].push_back({from, Cap{0}, arcs_[from].size() - 1});
    ++arc_count_;
  }

  Cap max_flow(std::size_t source, std::size_t sink) {
    Cap total{0};
    Cap unbounded{1};
    for (const auto& a : arcs_[source]) unbounded += a.capacity;
    level_.assign(num_nodes(), -1);
    next_.assign(num_nodes(), 0);
    while (build_levels(source, sink)) {
      std::fill(next_.begin(), next_.end(), 0);
      while (true) {
        const Cap pushed = augment(source, sink, unbounded);
        if (pushed == Cap{0}) break;
        total += pushed;
      }
    }
    return total;
  }

  /// Nodes reachable from `source` in the residual network after max_flow: the source side
  /// of the minimum cut that is smallest by inclusion.
  std::vector<char> source_side(std::size_t source) const {
    std::vector<char> seen(num_nodes(), 0);
    std::vector<std::size_t> stack{source};
    seen[source] = 1;
    while (!stack.empty()) {
      const auto v = stack.back();
      stack.pop_back();
      for (const auto& a : arcs_[v]) {
        if (a.capacity > Cap{0} && !seen[a.to]) {
          seen[a.to] = 1;
          stack.push_back(a.to);
        }
      }
    }
    return seen;
  }

 private:
  bool build_levels(std::size_t source, std::size_t sink) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<std::size_t> q;
    level_[source] = 0;
    q.push(source);
    while (!q.empty()) {
      const auto v = q.front();
      q.pop();
      for (const auto& a : arcs_[v]) {
        if (a.capacity > Cap{0} && level_[a.to] < 0) {
          level_[a.to] = level_[v] + 1;
          q.push(a.to);
        }
      }
    }
    return level_[sink] >= 0;
  }

  // Recursion depth is bounded by the sink's BFS level.
  Cap augment(std::size_t v, std::size_t sink, Cap limit) {
    if (v == sink) return limit;
    for (auto& i = next_[v]; i < arcs_[v].size(); ++i) {
      auto& a = arcs_[v][i];
      if (a.capacity <= Cap{0} || level_[a.to] != level_[v] + 1) continue;
      const Cap got = augment(a.to, sink, std::min(limit, a.capacity));
      if (got > Cap{0}) {
        a.capacity -= got;
        arcs_[a.to][a.reverse].capacity += got;
        return got;
      }
    }
    return Cap{0};
  }

  std::vector<std::vector<Arc>> arcs_;
  std::vector<int> level_;
  std::vector<std::size_t> next_;
  std::size_t arc_count_ = 0;
};

}  // namespace coldsp
