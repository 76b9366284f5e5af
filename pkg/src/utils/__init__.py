"""Utility functions and configuration."""

from .config import PipelineOptions, get_options, parse_exponent, setup_environment
from .errors import (
    CertificationError,
    DimensionMismatch,
    EigenvalueNotInSpectrumImage,
    InternalInvariantViolation,
    IrrationalSpectrum,
    Mismatch,
    NoLinearPart,
    NotContracting,
    NotInImage,
    NotInvariant,
    ParseError,
    QuasiHomError,
    SingularLinearPart,
    ZeroExtractedGenerator,
)

__all__ = [
    "PipelineOptions",
    "get_options",
    "parse_exponent",
    "setup_environment",
    "CertificationError",
    "DimensionMismatch",
    "EigenvalueNotInSpectrumImage",
    "InternalInvariantViolation",
    "IrrationalSpectrum",
    "Mismatch",
    "NoLinearPart",
    "NotContracting",
    "NotInImage",
    "NotInvariant",
    "ParseError",
    "QuasiHomError",
    "SingularLinearPart",
    "ZeroExtractedGenerator",
]
