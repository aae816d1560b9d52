"""Exact subpath numbers (counts of all simple paths, trivial ones included)
together with closed forms for the graph families where they are known."""

from .chains import ChainSpec, chain_graph, classify_chain, enumerate_family, extremal_in_family, pn_chain
from .count import BudgetExceeded, count_paths_between, count_subpaths, length_profile
from .explore import build_Ln, cubic_extremes, monte_carlo_pn, scan_stream
from .formulas import (
    expected_pn,
    hexagonal_bounds,
    pn_complete,
    pn_complete_bipartite,
    pn_cycle,
    pn_ladder,
    pn_tree,
    pn_unicyclic,
)
from .graph import Graph, GraphError, encode_graph6, parse_edge_list, parse_graph6, stats

__all__ = [
    "BudgetExceeded",
    "ChainSpec",
    "Graph",
    "GraphError",
    "build_Ln",
    "chain_graph",
    "classify_chain",
    "count_paths_between",
    "count_subpaths",
    "cubic_extremes",
    "encode_graph6",
    "enumerate_family",
    "expected_pn",
    "extremal_in_family",
    "hexagonal_bounds",
    "length_profile",
    "monte_carlo_pn",
    "parse_edge_list",
    "parse_graph6",
    "pn_chain",
    "pn_complete",
    "pn_complete_bipartite",
    "pn_cycle",
    "pn_ladder",
    "pn_tree",
    "pn_unicyclic",
    "scan_stream",
    "stats",
]
