"""Hypergraph connectivity: cut edges, cut and separating vertices, blocks."""

from .core import Flag, Hypergraph, IncidenceMatrix, build
from .errors import HypergraphError

__version__ = "0.1.0"

__all__ = ["Flag", "Hypergraph", "IncidenceMatrix", "HypergraphError", "build", "__version__"]
