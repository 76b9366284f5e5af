"""Exact Gaussian-rational arithmetic and Gaussian-integer factorization."""

from .numbers import (
    Rational,
    GaussianRational,
    ZERO,
    ONE,
    I_UNIT,
    modulus_squared,
    power,
    format_gaussian,
    parse_gaussian,
)
from .gaussian import (
    GaussianFactorization,
    canonical_associate,
    factor,
    gaussian_divisors,
    gaussian_roots,
)

__all__ = [
    "Rational",
    "GaussianRational",
    "ZERO",
    "ONE",
    "I_UNIT",
    "modulus_squared",
    "power",
    "format_gaussian",
    "parse_gaussian",
    "GaussianFactorization",
    "canonical_associate",
    "factor",
    "gaussian_divisors",
    "gaussian_roots",
]
