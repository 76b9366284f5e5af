"""Graph implementations."""

from .homogenize import create_quasi_homogenize_graph, quasi_homogenize
from .embedding import create_embedding_graph, reduce_embedding

__all__ = [
    "create_quasi_homogenize_graph",
    "quasi_homogenize",
    "create_embedding_graph",
    "reduce_embedding",
]
