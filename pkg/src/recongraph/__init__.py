"""Reconfiguration graphs of colourings and independent sets, and recovering
a graph from an unlabelled reconfiguration graph."""

from .chromatic import chromatic_number, find_colouring
from .errors import ReconError
from .graph import (
    Graph,
    complement,
    complete_bipartite,
    complete_graph,
    complete_join,
    connected_components,
    cycle_graph,
    empty_graph,
    independent_sets,
    line_graph,
    path_graph,
    star_graph,
)
from .graphio import from_graph6, parse_graph, to_graph6
from .iso import is_isomorphic
from .linegraph import line_graph_roots
from .reconfig import Kind, ReconfigGraph, build, build_kempe, build_single, build_token, strip

__version__ = "0.1.0"

__all__ = [
    "build",
    "build_kempe",
    "build_single",
    "build_token",
    "chromatic_number",
    "complement",
    "complete_bipartite",
    "complete_graph",
    "complete_join",
    "connected_components",
    "cycle_graph",
    "empty_graph",
    "find_colouring",
    "from_graph6",
    "Graph",
    "independent_sets",
    "is_isomorphic",
    "Kind",
    "line_graph",
    "line_graph_roots",
    "parse_graph",
    "path_graph",
    "ReconError",
    "ReconfigGraph",
    "star_graph",
    "strip",
    "to_graph6",
]
