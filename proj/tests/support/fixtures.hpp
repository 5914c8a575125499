#pragma once

#include <coldsp/graph.hpp>
#include <coldsp/io.hpp>

namespace fixtures {

inline coldsp::EdgeColoredGraph k4_plus_pendant() {
  return coldsp::parse_edge_list("a b 1\na c 1\na d 1\nb c 1\nb d 1\nc d 1\nd e 1\n");
}

inline coldsp::EdgeColoredGraph path_abc() { return coldsp::parse_edge_list("a b 1\nb c 1\n"); }

// Triangle with edge colors {1},{1},{2}.
inline coldsp::EdgeColoredGraph triangle_112() { return coldsp::parse_edge_list("a b 1\nb c 1\na c 2\n"); }

// The same triangle plus a separate edge d-e of color 3 (5 nodes, 4 edges).
inline coldsp::EdgeColoredGraph triangle_pendant() {
  return coldsp::parse_edge_list("a b 1\nb c 1\na c 2\nd e 3\n");
}

}  // namespace fixtures
