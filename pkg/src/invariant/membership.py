"""Ideal membership with explicit cofactors.

Two flavours: exact membership in an ideal generated by lambda-homogeneous
polynomials, decided one lambda-class at a time, and membership modulo
m^(D+1) for arbitrary generators, decided by total-degree linear algebra.
"""

import logging
from typing import Dict, List, Optional, Sequence, Tuple

from ..exactnum.numbers import ZERO, GaussianRational
from ..polyring.grading import lambda_decompose, lambda_degree
from ..polyring.polynomial import Exponent, Polynomial
from ..spectrum.classes import WeightClass, class_difference
from ..spectrum.ordering import OrderedSpectrum
from ..utils.linalg import solve

logger = logging.getLogger(__name__)


def solve_coefficients(
    target: Polynomial,
    products: List[Tuple[int, Exponent, Polynomial]],
    rows: Sequence[Exponent],
    column_order: Optional[Sequence[int]] = None,
) -> Optional[List[GaussianRational]]:
    """Coefficients c with sum c_k * products[k] == target on the monomials `rows`."""
    if not products:
        return [] if all(target.coefficient(alpha).is_zero() for alpha in rows) else None
    matrix = [[p.coefficient(alpha) for _, _, p in products] for alpha in rows]
    rhs = [target.coefficient(alpha) for alpha in rows]
    return solve(matrix, rhs, column_order)


def assemble_cofactors(
    solution: Sequence[GaussianRational],
    products: List[Tuple[int, Exponent, Polynomial]],
    count: int,
    dimension: int,
) -> List[Polynomial]:
    terms: List[Dict[Exponent, GaussianRational]] = [dict() for _ in range(count)]
    for c, (i, beta, _) in zip(solution, products):
        if not c.is_zero():
            terms[i][beta] = terms[i].get(beta, ZERO) + c
    return [Polynomial(t, dimension) for t in terms]


def graded_membership(
    f: Polynomial,
    generators: Sequence[Polynomial],
    spectrum: OrderedSpectrum,
) -> Optional[List[Polynomial]]:
    """Cofactors c with f == sum c_i * P_i exactly, or None when f is not in the ideal.

    Args:
        f: polynomial to test
        generators: lambda-homogeneous polynomials P_i
        spectrum: the spectrum defining the grading

    Returns:
        One cofactor per generator, or None
    """
    d = spectrum.dimension
    classes: List[Optional[WeightClass]] = []
    for k, P in enumerate(generators):
        if P.is_zero():
            classes.append(None)
            continue
        gamma = lambda_degree(P, spectrum)
        if gamma is None:
            raise ValueError(f"generator {k} is not lambda-homogeneous")
        classes.append(gamma)

    cofactors = [Polynomial.zero(d) for _ in generators]
    for delta, piece in lambda_decompose(f, spectrum).pieces:
        products: List[Tuple[int, Exponent, Polynomial]] = []
        for k, (P, gamma) in enumerate(zip(generators, classes)):
            if gamma is None:
                continue
            epsilon = class_difference(spectrum, delta, gamma)
            if epsilon is None:
                continue
            for beta in epsilon.members:
                products.append((k, beta, Polynomial.monomial(beta) * P))
        solution = solve_coefficients(piece, products, delta.members)
        if solution is None:
            logger.debug("class %s of f is not in the ideal", delta.representative)
            return None
        for k, c in enumerate(assemble_cofactors(solution, products, len(generators), d)):
            cofactors[k] = cofactors[k] + c
    return cofactors


def _exponents_up_to(dimension: int, degree: int) -> List[Exponent]:
    result: List[Exponent] = [()]
    for _ in range(dimension):
        result = [alpha + (a,) for alpha in result for a in range(degree + 1) if sum(alpha) + a <= degree]
    return sorted(result, key=lambda a: (sum(a), a))


def truncated_membership(
    f: Polynomial,
    generators: Sequence[Polynomial],
    degree: int,
) -> Optional[List[Polynomial]]:
    """Cofactors c with f == sum c_i g_i modulo m^(degree+1), or None."""
    d = f.dimension
    rows = _exponents_up_to(d, degree)
    products: List[Tuple[int, Exponent, Polynomial]] = []
    for k, g in enumerate(generators):
        if g.is_zero():
            continue
        room = degree - g.order
        for beta in rows:
            if sum(beta) <= room:
                products.append((k, beta, (Polynomial.monomial(beta) * g).truncate(degree)))
    solution = solve_coefficients(f.truncate(degree), products, rows)
    if solution is None:
        return None
    return assemble_cofactors(solution, products, len(generators), d)
