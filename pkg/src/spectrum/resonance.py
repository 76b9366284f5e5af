"""Resonances lambda^alpha == lambda_i and the bounded exponent search behind them."""

import logging
from fractions import Fraction
from functools import lru_cache
from typing import List, Tuple

from .ordering import Exponent, OrderedSpectrum, lambda_key, lambda_power, total_degree, unit_exponent

logger = logging.getLogger(__name__)


@lru_cache(maxsize=1024)
def _enumerate(spectrum: OrderedSpectrum, floor: Fraction) -> Tuple[Exponent, ...]:
    moduli = [spectrum.modulus(k) for k in range(spectrum.dimension)]
    found: List[Exponent] = []
    alpha = [0] * spectrum.dimension

    # Raising any component strictly lowers |lambda^alpha|, so each branch stops
    # at the first exponent falling below the floor.
    def walk(position: int, value: Fraction) -> None:
        if position == spectrum.dimension:
            found.append(tuple(alpha))
            return
        current = value
        while current >= floor:
            walk(position + 1, current)
            alpha[position] += 1
            current = current * moduli[position]
        alpha[position] = 0

    walk(0, Fraction(1))
    found.sort(key=lambda a: lambda_key(spectrum, a))
    logger.debug("enumerated %d exponents with modulus >= %s", len(found), floor)
    return tuple(found)


def enumerate_exponents(spectrum: OrderedSpectrum, floor: Fraction) -> List[Exponent]:
    """All alpha in N^d with |lambda^alpha|^2 >= floor, in lambda-order.

    Args:
        spectrum: contracting ordered spectrum
        floor: positive lower bound on |lambda^alpha|^2

    Returns:
        The complete finite list of such exponents
    """
    floor = Fraction(floor)
    if floor <= 0:
        raise ValueError("floor must be positive")
    return list(_enumerate(spectrum, floor))


def resonance_bound(spectrum: OrderedSpectrum) -> int:
    """Least M such that |alpha| > M forces |lambda^alpha|^2 < |lambda_d|^2."""
    largest = spectrum.modulus(0)
    smallest = spectrum.modulus(spectrum.dimension - 1)
    bound = 0
    value = largest
    while value >= smallest:
        bound += 1
        value *= largest
    return bound


def resonance_set(spectrum: OrderedSpectrum, index: int) -> List[Exponent]:
    """R_i = {alpha : lambda^alpha == lambda_i}, complete, in lambda-order."""
    target = spectrum[index]
    return [
        alpha
        for alpha in enumerate_exponents(spectrum, spectrum.modulus(index))
        if lambda_power(spectrum, alpha) == target
    ]


def normal_form_support(spectrum: OrderedSpectrum, index: int) -> List[Exponent]:
    """Exponents a Poincare-Dulac normal form may carry in component `index`.

    Resonances of total degree >= 2, plus the sub-diagonal unit exponent when
    lambda_{index-1} == lambda_index.
    """
    support = []
    for alpha in resonance_set(spectrum, index):
        if total_degree(alpha) >= 2:
            support.append(alpha)
        elif index > 0 and alpha == unit_exponent(spectrum.dimension, index - 1):
            support.append(alpha)
    return support


def is_resonant(spectrum: OrderedSpectrum, index: int, alpha: Exponent) -> bool:
    return lambda_power(spectrum, alpha) == spectrum[index]
