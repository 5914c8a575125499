#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace coldsp {

/// Exact density |E(S)| / |S| kept as an integer pair.
///
/// Ordering and equality compare values by cross-multiplication, so 2/4 == 1/2.
/// The empty set is represented as 0/1.
struct Density {
  std::int64_t edges = 0;
  std::int64_t nodes = 1;

  static constexpr Density of(std::int64_t edge_count, std::int64_t node_count) {
    return node_count == 0 ? Density{0, 1} : Density{edge_count, node_count};
  }

  double value() const { return static_cast<double>(edges) / static_cast<double>(nodes); }

  friend constexpr std::strong_ordering operator<=>(const Density& a, const Density& b) {
    const __int128 lhs = static_cast<__int128>(a.edges) * b.nodes;
    const __int128 rhs = static_cast<__int128>(b.edges) * a.nodes;
    return lhs <=> rhs;
  }
  friend constexpr bool operator==(const Density& a, const Density& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }

  /// "edges/nodes", unreduced.
  std::string fraction() const { return std::to_string(edges) + "/" + std::to_string(nodes); }
};

/// Fixed-point rendering used in CSV/JSON output (6 decimals, locale independent).
std::string format_decimal(double value, int precision = 6);

}  // namespace coldsp
