"""Exact quasi-homogenization of ideals invariant under contracting automorphisms."""

from .utils.config import PipelineOptions, get_options, setup_environment
from .graphs.homogenize import create_quasi_homogenize_graph, quasi_homogenize
from .graphs.embedding import create_embedding_graph, reduce_embedding
from .invariant.cofactors import IdealPresentation
from .polyring.polynomial import PolyMap, Polynomial

__all__ = [
    "PipelineOptions",
    "get_options",
    "setup_environment",
    "create_quasi_homogenize_graph",
    "quasi_homogenize",
    "create_embedding_graph",
    "reduce_embedding",
    "IdealPresentation",
    "PolyMap",
    "Polynomial",
]
