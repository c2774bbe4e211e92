"""Exact distance Laplacian eigenvalue distribution toolkit for small graphs."""

from .checks import CheckReport, GraphContext, catalog, run_all
from .eigen import Interval, Spectrum, count_in_interval, multiplicity_at, spectrum
from .graph import Graph, GraphParams, from_edges, graph_params
from .graph6 import decode as parse_graph6, encode as to_graph6
from .matrices import CharPoly, IntSymMatrix, char_poly, distance_laplacian, laplacian

__all__ = [
    "CharPoly",
    "CheckReport",
    "Graph",
    "GraphContext",
    "GraphParams",
    "IntSymMatrix",
    "Interval",
    "Spectrum",
    "catalog",
    "char_poly",
    "count_in_interval",
    "distance_laplacian",
    "from_edges",
    "graph_params",
    "laplacian",
    "multiplicity_at",
    "parse_graph6",
    "run_all",
    "spectrum",
    "to_graph6",
]

__version__ = "0.1.0"
