"""Total graphs, total dominator colorings and their exact invariants."""

from .families import FamilySpec, generate
from .graph import EdgeObj, Graph, GraphError, TotalGraph, VertexObj, line_graph, total_graph
from .textio import digest, emit_graph, parse_graph
from .verify import Coloring, VerifyReport, check_coloring

__all__ = [
    "Coloring",
    "EdgeObj",
    "FamilySpec",
    "Graph",
    "GraphError",
    "TotalGraph",
    "VerifyReport",
    "VertexObj",
    "check_coloring",
    "digest",
    "emit_graph",
    "generate",
    "line_graph",
    "parse_graph",
    "total_graph",
]
