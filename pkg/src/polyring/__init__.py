"""Exact polynomials, polynomial maps and the lambda-grading."""

from .polynomial import (
    Polynomial,
    PolyMap,
    compose,
    map_compose,
    map_inverse,
    weighted_contraction,
    graded_lex_key,
)
from .grading import (
    GradedDecomposition,
    lambda_decompose,
    lambda_degree,
    class_floor,
    truncate_classes,
    is_weighted_homogeneous,
    h_space_basis,
    h_space_coordinates,
    h_space_matrix,
)
from .parsing import default_variables, parse_polynomial, format_polynomial

__all__ = [
    "Polynomial",
    "PolyMap",
    "compose",
    "map_compose",
    "map_inverse",
    "weighted_contraction",
    "graded_lex_key",
    "GradedDecomposition",
    "lambda_decompose",
    "lambda_degree",
    "class_floor",
    "truncate_classes",
    "is_weighted_homogeneous",
    "h_space_basis",
    "h_space_coordinates",
    "h_space_matrix",
    "default_variables",
    "parse_polynomial",
    "format_polynomial",
]
