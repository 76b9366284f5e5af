"""Embedding dimension, variable elimination and extension checks."""

from .checks import EmbeddingReport, ExtensionReport, check_extension, check_m2, schur_cohn_contracting
from .elimination import EliminationStep, EmbeddingReduction, eliminate_variable, solve_for_variable

__all__ = [
    "EmbeddingReport",
    "ExtensionReport",
    "check_extension",
    "check_m2",
    "schur_cohn_contracting",
    "EliminationStep",
    "EmbeddingReduction",
    "eliminate_variable",
    "solve_for_variable",
]
