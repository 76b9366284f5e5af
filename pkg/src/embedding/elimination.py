"""Truncated elimination of one variable through a generator with a linear part."""

import logging
from dataclasses import dataclass, field
from typing import List, Tuple

from ..invariant.cofactors import IdealPresentation
from ..polyring.polynomial import PolyMap, Polynomial, compose
from ..utils.errors import NoLinearPart

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EliminationStep:
    """x_variable == solution modulo m^(truncation+1) on the zero set of generator."""

    variable: int
    original_variable: int
    generator: int
    solution: Polynomial
    truncation: int


@dataclass(frozen=True)
class EmbeddingReduction:
    original: IdealPresentation
    reduced: IdealPresentation
    variables: Tuple[int, ...]
    steps: Tuple[EliminationStep, ...] = field(default_factory=tuple)

    @property
    def embedding_dimension(self) -> int:
        return self.reduced.dimension

    @property
    def truncation(self) -> int:
        return min((step.truncation for step in self.steps), default=0)


def _pivot(ideal: IdealPresentation) -> Tuple[int, int]:
    """Largest variable index with a nonzero linear coefficient, and the first generator carrying it."""
    for k in range(ideal.dimension - 1, -1, -1):
        for j, g in enumerate(ideal):
            if not g.linear_coefficients()[k].is_zero():
                return k, j
    raise NoLinearPart("no generator has a nonzero linear part")


def _drop_variable(P: Polynomial, k: int) -> Polynomial:
    return Polynomial({alpha[:k] + alpha[k + 1:]: c for alpha, c in P.terms.items()}, P.dimension - 1)


def solve_for_variable(g: Polynomial, k: int, truncation: int) -> Polynomial:
    """phi free of x_k with g(x_1, .., phi, .., x_d) == 0 modulo m^(truncation+1).

    Writes g = c x_k + rest and iterates x_k <- -rest / c; each pass fixes one
    more degree since rest has no linear x_k term.
    """
    d = g.dimension
    c = g.linear_coefficients()[k]
    if c.is_zero():
        raise NoLinearPart(f"generator has no linear x_{k} term")
    rest = g - Polynomial.variable(k, d).scale(c)
    variables = [Polynomial.variable(m, d) for m in range(d)]
    phi = Polynomial.zero(d)
    for _ in range(truncation):
        substitution = PolyMap(variables[:k] + [phi] + variables[k + 1:], d)
        phi = compose(rest, substitution, truncation).scale(-1 / c)
    return phi


def eliminate_variable(ideal: IdealPresentation, truncation: int) -> Tuple[IdealPresentation, EliminationStep]:
    """Remove one variable using a generator with a nonzero linear part.

    Returns:
        Tuple of (ideal in dimension - 1 variables, the step taken)
    """
    k, j = _pivot(ideal)
    d = ideal.dimension
    phi = solve_for_variable(ideal[j], k, truncation)
    variables = [Polynomial.variable(m, d) for m in range(d)]
    substitution = PolyMap(variables[:k] + [phi] + variables[k + 1:], d)

    generators: List[Polynomial] = []
    for m, g in enumerate(ideal):
        if m == j:
            continue
        reduced = _drop_variable(compose(g, substitution, truncation), k)
        if reduced.is_zero():
            logger.debug("generator %d vanished after eliminating x_%d", m, k)
            continue
        generators.append(reduced)
    logger.info("eliminated x_%d with generator %d, %d generators left", k, j, len(generators))
    step = EliminationStep(k, k, j, phi, truncation)
    return IdealPresentation(tuple(generators), d - 1), step
