"""Densest subgraphs with per-color edge requirements."""

from ._core import (
    Graph,
    InfeasibleError,
    CapExceededError,
    ParseError,
    lower_bound_nodes,
    greedy_dsp,
    exact_dsp,
    at_least_h_edges,
    col_approx,
    col_approx_multi,
    heuristic,
    brute_force_densest,
    brute_force_at_least_h_edges,
    brute_force_colored,
    write_ilp,
)

__all__ = [
    "Graph",
    "InfeasibleError",
    "CapExceededError",
    "ParseError",
    "lower_bound_nodes",
    "greedy_dsp",
    "exact_dsp",
    "at_least_h_edges",
    "col_approx",
    "col_approx_multi",
    "heuristic",
    "brute_force_densest",
    "brute_force_at_least_h_edges",
    "brute_force_colored",
    "write_ilp",
]
