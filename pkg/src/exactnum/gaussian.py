"""Factorization over the Gaussian integers, extended to Q(i).

Rational primes are split with `sympy.factorint` on the norm; primes
p = 1 (mod 4) are written as a sum of two squares with the Hermite-Serret
descent. Every Gaussian prime is reported in its canonical associate:
re > 0 and re >= |im|, ties broken toward im >= 0.
"""

import math
from dataclasses import dataclass
from functools import reduce
from itertools import product
from typing import Dict, List, Sequence, Tuple

from sympy import factorint
from sympy.ntheory import sqrt_mod

from .numbers import ONE, GaussianRational, Scalar

UNITS = (
    GaussianRational(1),
    GaussianRational(0, 1),
    GaussianRational(-1),
    GaussianRational(0, -1),
)


@dataclass(frozen=True)
class GaussianFactorization:
    """z == unit * prod(prime ** exponent)."""

    unit: GaussianRational
    factors: Tuple[Tuple[GaussianRational, int], ...]

    def expand(self) -> GaussianRational:
        value = self.unit
        for prime, exponent in self.factors:
            value = value * (prime ** exponent)
        return value

    def unit_exponent(self) -> int:
        """The k in unit == i^k, k in {0, 1, 2, 3}."""
        return UNITS.index(self.unit)

    def exponent_of(self, prime: GaussianRational) -> int:
        for candidate, exponent in self.factors:
            if candidate == prime:
                return exponent
        return 0


def canonical_associate(w: GaussianRational) -> Tuple[GaussianRational, GaussianRational]:
    """Return (associate, unit) with w == unit * associate."""
    for unit in UNITS:
        candidate = w * unit.inverse()
        re, im = candidate.re, candidate.im
        if re > 0 and re >= abs(im) and (re != abs(im) or im >= 0):
            return candidate, unit
    raise ValueError(f"no canonical associate for {w}")


def _exact_quotient(w: GaussianRational, d: GaussianRational):
    """w / d if it is a Gaussian integer, else None."""
    q = w / d
    return q if q.is_gaussian_integer() else None


def _two_squares(p: int) -> Tuple[int, int]:
    """x, y with x^2 + y^2 == p for a prime p = 1 (mod 4)."""
    t = sqrt_mod(-1, p)
    a, b = p, t
    bound = math.isqrt(p)
    while b > bound:
        a, b = b, a % b
    x = b
    y = math.isqrt(p - x * x)
    assert x * x + y * y == p
    return x, y


def _primes_above(p: int) -> List[GaussianRational]:
    if p == 2:
        return [GaussianRational(1, 1)]
    if p % 4 == 3:
        return [GaussianRational(p)]
    x, y = _two_squares(p)
    first, _ = canonical_associate(GaussianRational(x, y))
    second, _ = canonical_associate(GaussianRational(x, -y))
    return [first, second]


def _factor_gaussian_integer(w: GaussianRational) -> Tuple[GaussianRational, Dict[GaussianRational, int]]:
    norm = int(w.modulus_squared())
    factors: Dict[GaussianRational, int] = {}
    for p in sorted(factorint(norm)):
        for prime in _primes_above(p):
            count = 0
            quotient = _exact_quotient(w, prime)
            while quotient is not None:
                w = quotient
                count += 1
                quotient = _exact_quotient(w, prime)
            if count:
                factors[prime] = count
    if w not in UNITS:
        raise ArithmeticError(f"incomplete Gaussian factorization, cofactor {w}")
    return w, factors


def _sort_key(prime: GaussianRational):
    return (prime.modulus_squared(), prime.re, prime.im)


def factor(z: Scalar) -> GaussianFactorization:
    """Canonical factorization of a nonzero Gaussian rational."""
    z = GaussianRational.coerce(z)
    if z.is_zero():
        raise ValueError("cannot factor zero")
    denominator = math.lcm(z.re.denominator, z.im.denominator)
    numerator = z * denominator

    unit_num, num_factors = _factor_gaussian_integer(numerator)
    unit_den, den_factors = _factor_gaussian_integer(GaussianRational(denominator))

    exponents: Dict[GaussianRational, int] = dict(num_factors)
    for prime, count in den_factors.items():
        exponents[prime] = exponents.get(prime, 0) - count
    factors = tuple(
        (prime, exponents[prime])
        for prime in sorted(exponents, key=_sort_key)
        if exponents[prime] != 0
    )
    return GaussianFactorization(unit=unit_num / unit_den, factors=factors)


def gaussian_divisors(w: GaussianRational) -> List[GaussianRational]:
    """All divisors of a nonzero Gaussian integer, every associate included."""
    if not w.is_gaussian_integer():
        raise ValueError(f"{w} is not a Gaussian integer")
    factorization = factor(w)
    ranges = [range(exponent + 1) for _, exponent in factorization.factors]
    divisors = []
    for exponents in product(*ranges):
        base = reduce(
            lambda acc, pair: acc * (pair[0] ** pair[1]),
            zip((prime for prime, _ in factorization.factors), exponents),
            ONE,
        )
        divisors.extend(base * unit for unit in UNITS)
    return divisors


def _horner(coefficients: Sequence[GaussianRational], x: GaussianRational) -> GaussianRational:
    value = GaussianRational(0)
    for c in reversed(coefficients):
        value = value * x + c
    return value


def _deflate(coefficients: List[GaussianRational], root: GaussianRational) -> List[GaussianRational]:
    """Divide by (t - root); coefficients are listed constant term first."""
    degree = len(coefficients) - 1
    quotient = [GaussianRational(0)] * degree
    carry = GaussianRational(0)
    for k in range(degree, 0, -1):
        carry = carry * root + coefficients[k]
        quotient[k - 1] = carry
    return quotient


def gaussian_roots(
    coefficients: Sequence[Scalar],
) -> Tuple[List[Tuple[GaussianRational, int]], List[GaussianRational]]:
    """Gaussian-rational roots of a polynomial, with multiplicities.

    Coefficients are given constant term first. Returns the roots found and
    the leftover factor (constant term first) that has no root in Q(i);
    the leftover is `[c]` when the polynomial splits completely.
    """
    coeffs = [GaussianRational.coerce(c) for c in coefficients]
    while len(coeffs) > 1 and coeffs[-1].is_zero():
        coeffs.pop()
    roots: Dict[GaussianRational, int] = {}

    while len(coeffs) > 1 and coeffs[0].is_zero():
        coeffs = coeffs[1:]
        roots[GaussianRational(0)] = roots.get(GaussianRational(0), 0) + 1

    while len(coeffs) > 1:
        scale = math.lcm(*(c.re.denominator for c in coeffs), *(c.im.denominator for c in coeffs))
        integral = [c * scale for c in coeffs]
        found = None
        for q in gaussian_divisors(integral[-1]):
            for p in gaussian_divisors(integral[0]):
                candidate = p / q
                if _horner(coeffs, candidate).is_zero():
                    found = candidate
                    break
            if found is not None:
                break
        if found is None:
            break
        roots[found] = roots.get(found, 0) + 1
        coeffs = _deflate(coeffs, found)

    ordered = sorted(roots.items(), key=lambda item: (-item[0].modulus_squared(), item[0].re, item[0].im))
    return ordered, coeffs
