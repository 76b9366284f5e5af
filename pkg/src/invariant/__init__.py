"""Invariant ideals: membership, cofactor matrices and weighted homogeneous generators."""

from .membership import assemble_cofactors, graded_membership, solve_coefficients, truncated_membership
from .cofactors import (
    CofactorMatrix,
    IdealPresentation,
    cofactor_matrix,
    default_class_bound,
    jordanize_A0,
    minimal_generators,
    transport_ideal,
)
from .extraction import (
    EqualityCertificate,
    FiltrationCertificate,
    QHResult,
    essential_indices,
    extract_generators,
    filtration_witnesses,
    verify_equality,
    verify_filtration,
)

__all__ = [
    "assemble_cofactors",
    "graded_membership",
    "solve_coefficients",
    "truncated_membership",
    "CofactorMatrix",
    "IdealPresentation",
    "cofactor_matrix",
    "default_class_bound",
    "jordanize_A0",
    "minimal_generators",
    "transport_ideal",
    "EqualityCertificate",
    "FiltrationCertificate",
    "QHResult",
    "essential_indices",
    "extract_generators",
    "filtration_witnesses",
    "verify_equality",
    "verify_filtration",
]
