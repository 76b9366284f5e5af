"""State types for the pipelines."""

from .types import EmbeddingState, QuasiHomogenizeState

__all__ = ["EmbeddingState", "QuasiHomogenizeState"]
