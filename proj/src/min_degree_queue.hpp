#pragma once

#include <coldsp/graph.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

namespace coldsp::detail {

// Bucket queue over (possibly weighted) degrees. Each bucket is a min-heap of node ids
// with lazy deletion, so pop() returns the smallest id among minimum-degree nodes.
// A node is pushed once initially and once per degree decrease.
class MinDegreeQueue {
 public:
  explicit MinDegreeQueue(std::vector<std::int64_t> degrees)
      : deg_(std::move(degrees)), removed_(deg_.size(), 0), alive_(deg_.size()) {
    std::int64_t max_deg = 0;
    for (auto d : deg_) max_deg = std::max(max_deg, d);
    buckets_.resize(static_cast<std::size_t>(max_deg) + 1);
    // Ascending pushes already form valid min-heaps.
    for (std::size_t v = 0; v < deg_.size(); ++v) {
      buckets_[static_cast<std::size_t>(deg_[v])].push_back(static_cast<NodeIndex>(v));
    }
    ops_ = deg_.size();
  }

  bool empty() const { return alive_ == 0; }
  std::size_t alive() const { return alive_; }
  bool removed(NodeIndex v) const { return removed_[v] != 0; }
  std::int64_t degree(NodeIndex v) const { return deg_[v]; }
  std::uint64_t ops() const { return ops_; }

  /// Smallest node id among those of minimum degree, without removing it.
  NodeIndex top() {
    while (true) {
      auto& bucket = buckets_[cur_];
      while (!bucket.empty()) {
        const NodeIndex v = bucket.front();
        if (!removed_[v] && deg_[v] == static_cast<std::int64_t>(cur_)) return v;
        std::pop_heap(bucket.begin(), bucket.end(), std::greater<>{});
        bucket.pop_back();
        ++ops_;
      }
      ++cur_;
    }
  }

  NodeIndex pop() {
    const NodeIndex v = top();
    auto& bucket = buckets_[cur_];
    std::pop_heap(bucket.begin(), bucket.end(), std::greater<>{});
    bucket.pop_back();
    ++ops_;
    removed_[v] = 1;
    --alive_;
    return v;
  }

  void decrease(NodeIndex v, std::int64_t by) {
    deg_[v] -= by;
    auto& bucket = buckets_[static_cast<std::size_t>(deg_[v])];
    bucket.push_back(v);
    std::push_heap(bucket.begin(), bucket.end(), std::greater<>{});
    ++ops_;
    cur_ = std::min(cur_, static_cast<std::size_t>(deg_[v]));
  }

 private:
  std::vector<std::int64_t> deg_;
  std::vector<char> removed_;
  std::vector<std::vector<NodeIndex>> buckets_;
  std::size_t cur_ = 0;
  std::size_t alive_;
  std::uint64_t ops_ = 0;
};

template <class Graph>
std::vector<std::int64_t> weighted_degrees(const Graph& g, std::uint64_t* visits = nullptr) {
  std::vector<std::int64_t> deg(g.num_nodes(), 0);
  for (NodeIndex v = 0; v < g.num_nodes(); ++v) {
    const auto inc = g.incident(v);
    for (const auto& i : inc) deg[v] += g.link_weight(i.link);
    if (visits) *visits += inc.size();
  }
  return deg;
}

}  // namespace coldsp::detail
