"""Pipeline node functions."""

from .common import note, stage
from .embedding import eliminate, route
from .pipeline import cofactors, default_truncation, extract, jordanize, minimize, normalize, verify

__all__ = [
    "note",
    "stage",
    "eliminate",
    "route",
    "cofactors",
    "default_truncation",
    "extract",
    "jordanize",
    "minimize",
    "normalize",
    "verify",
]
