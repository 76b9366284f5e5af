"""Multiplicative relations among eigenvalues and the weight vector they force.

The relation lattice L = {v in Z^d : lambda^v = 1} is read off the Gaussian
factorizations of the lambda_i: prime exponents must cancel and the units,
which live in Z/4, must multiply to 1. Any positive integer vector
orthogonal to L is a weight vector for which every lambda-homogeneous
polynomial is weighted homogeneous.
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import List, Tuple

import sympy
from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from ..exactnum.gaussian import factor
from ..exactnum.numbers import ONE
from ..utils.errors import InternalInvariantViolation
from ..utils.intlattice import hermite_rows, integer_kernel
from .ordering import OrderedSpectrum, lambda_power

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class WeightLattice:
    basis: Tuple[Tuple[int, ...], ...]

    @property
    def rank(self) -> int:
        return len(self.basis)

    def is_trivial(self) -> bool:
        return not self.basis


def relation_lattice(spectrum: OrderedSpectrum) -> WeightLattice:
    """Hermite basis of {v in Z^d : lambda^v = 1}."""
    d = spectrum.dimension
    factorizations = [factor(z) for z in spectrum.entries]
    primes = []
    for f in factorizations:
        for prime, _ in f.factors:
            if prime not in primes:
                primes.append(prime)

    # Unknowns (v_1..v_d, t): prime exponents cancel, sum k_i v_i = 4 t.
    rows = [[f.exponent_of(prime) for f in factorizations] + [0] for prime in primes]
    rows.append([f.unit_exponent() for f in factorizations] + [-4])
    kernel = integer_kernel(rows, d + 1)
    basis = hermite_rows([v[:d] for v in kernel])

    for v in basis:
        if lambda_power(spectrum, v) != ONE:
            raise InternalInvariantViolation(f"relation {v} does not satisfy lambda^v = 1")
    logger.debug("relation lattice of %s: %s", [str(z) for z in spectrum.entries], basis)
    return WeightLattice(tuple(tuple(v) for v in basis))


def _log_weights(spectrum: OrderedSpectrum, digits: int) -> List[Fraction]:
    """-log|lambda_i|, scaled so the smallest entry is 1, to `digits` digits."""
    logs = []
    for k in range(spectrum.dimension):
        m = spectrum.modulus(k)
        value = (-sympy.log(sympy.Rational(m.numerator, m.denominator)) / 2).evalf(digits)
        logs.append(Fraction(str(value)))
    smallest = min(logs)
    return [w / smallest for w in logs]


def _primitive(vector: List[Fraction]) -> List[int]:
    scale = reduce(math.lcm, (x.denominator for x in vector), 1)
    integers = [int(x * scale) for x in vector]
    g = reduce(math.gcd, integers, 0)
    return [x // g for x in integers] if g else integers


def weight_vector(spectrum: OrderedSpectrum) -> Tuple[int, ...]:
    """Positive primitive n with n . v = 0 for every relation v."""
    d = spectrum.dimension
    lattice = relation_lattice(spectrum)
    if lattice.is_trivial():
        return (1,) * d

    # Rational basis of the orthogonal complement; B_j is 1 at its free column
    # and 0 at the others, so the log weights give the coefficients directly.
    relations = DomainMatrix([[QQ(x) for x in v] for v in lattice.basis], (lattice.rank, d), QQ)
    reduced, pivots = relations.rref()
    free_columns = [k for k in range(d) if k not in pivots]
    complement = [
        [Fraction(int(QQ.numer(x)), int(QQ.denom(x))) for x in b]
        for b in reduced.nullspace_from_rref(pivots).to_list()
    ]

    digits = 30
    while True:
        target = _log_weights(spectrum, digits)
        denominator = 1
        while denominator <= 10 ** (digits // 2):
            coefficients = [target[k].limit_denominator(denominator) for k in free_columns]
            combined = [sum((c * b[k] for c, b in zip(coefficients, complement)), Fraction(0)) for k in range(d)]
            n = _primitive(combined)
            if all(x > 0 for x in n):
                logger.debug("weight vector %s found at denominator %d", n, denominator)
                return tuple(n)
            denominator *= 10
        digits *= 2
