"""Exact edge metric dimension and the graph products it is studied on."""

from .graph import UNREACHABLE, Edge, Graph, GraphError, all_pairs_distances, build_graph
from .products import complete_multipartite, corona, join, lexicographic
from .solver import EdimResult, edim_exact, edim_greedy_upper, is_edge_metric_generator

__all__ = [
    "UNREACHABLE",
    "Edge",
    "EdimResult",
    "Graph",
    "GraphError",
    "all_pairs_distances",
    "build_graph",
    "complete_multipartite",
    "corona",
    "edim_exact",
    "edim_greedy_upper",
    "is_edge_metric_generator",
    "join",
    "lexicographic",
]

__version__ = "0.1.0"
