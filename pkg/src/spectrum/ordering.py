"""Ordered spectra and the lambda-order on exponents."""

from dataclasses import dataclass, field
from enum import IntEnum
from fractions import Fraction
from functools import lru_cache
from typing import List, Sequence, Tuple

from ..exactnum.numbers import ONE, GaussianRational, Scalar, modulus_squared
from ..utils.errors import DimensionMismatch, NotContracting, SingularLinearPart

Exponent = Tuple[int, ...]


class Ordering(IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1

    @classmethod
    def of(cls, a, b) -> "Ordering":
        if a < b:
            return cls.LESS
        if a > b:
            return cls.GREATER
        return cls.EQUAL


@dataclass(frozen=True)
class OrderedSpectrum:
    """Eigenvalues lambda_1..lambda_d of a contracting linear part, nicely ordered.

    jordan_flags[i] marks a 1 below the diagonal between positions i and i+1.
    """

    entries: Tuple[GaussianRational, ...]
    jordan_flags: Tuple[bool, ...] = field(default=())

    def __post_init__(self):
        entries = tuple(GaussianRational.coerce(z) for z in self.entries)
        object.__setattr__(self, "entries", entries)
        flags = tuple(bool(f) for f in self.jordan_flags) or (False,) * max(len(entries) - 1, 0)
        object.__setattr__(self, "jordan_flags", flags)

        if len(flags) != max(len(entries) - 1, 0):
            raise DimensionMismatch(f"expected {len(entries) - 1} Jordan flags, got {len(flags)}")
        for k, z in enumerate(entries):
            if z.is_zero():
                raise SingularLinearPart(f"eigenvalue {k} is zero")
            if z.modulus_squared() >= 1:
                raise NotContracting(f"eigenvalue {k} = {z} has modulus >= 1")
        for k in range(len(entries) - 1):
            if entries[k].modulus_squared() < entries[k + 1].modulus_squared():
                raise ValueError(f"spectrum is not nicely ordered at position {k}")
            if flags[k] and entries[k] != entries[k + 1]:
                raise ValueError(f"Jordan flag {k} joins different eigenvalues")

    @property
    def dimension(self) -> int:
        return len(self.entries)

    def modulus(self, index: int) -> Fraction:
        return self.entries[index].modulus_squared()

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, index: int) -> GaussianRational:
        return self.entries[index]


def _order_key(z: GaussianRational):
    return (-z.modulus_squared(), z.re, z.im)


def nicely_order(raw: Sequence[Scalar]) -> Tuple[OrderedSpectrum, List[int]]:
    """Sort by non-increasing modulus, ties by (re, im).

    Returns the spectrum and the permutation p with spectrum[k] == raw[p[k]].
    """
    values = [GaussianRational.coerce(z) for z in raw]
    for k, z in enumerate(values):
        if z.is_zero():
            raise SingularLinearPart(f"eigenvalue {k} is zero")
        if z.modulus_squared() >= 1:
            raise NotContracting(f"eigenvalue {k} = {z} has modulus >= 1")
    permutation = sorted(range(len(values)), key=lambda k: (_order_key(values[k]), k))
    return OrderedSpectrum(tuple(values[k] for k in permutation)), permutation


def _check_dimension(spectrum: OrderedSpectrum, alpha: Sequence[int]) -> None:
    if len(alpha) != spectrum.dimension:
        raise DimensionMismatch(f"exponent {tuple(alpha)} has length {len(alpha)}, expected {spectrum.dimension}")


@lru_cache(maxsize=65536)
def _power(spectrum: OrderedSpectrum, alpha: Exponent) -> GaussianRational:
    value = ONE
    for z, a in zip(spectrum.entries, alpha):
        if a:
            value = value * (z ** a)
    return value


def lambda_power(spectrum: OrderedSpectrum, alpha: Sequence[int]) -> GaussianRational:
    """lambda^alpha (negative entries allowed)."""
    _check_dimension(spectrum, alpha)
    return _power(spectrum, tuple(alpha))


def lambda_modulus(spectrum: OrderedSpectrum, alpha: Sequence[int]) -> Fraction:
    """|lambda^alpha|^2."""
    return modulus_squared(lambda_power(spectrum, alpha))


def lambda_key(spectrum: OrderedSpectrum, alpha: Sequence[int]):
    """Sort key realizing the lambda-order: larger modulus first, then lex."""
    return (-lambda_modulus(spectrum, alpha), tuple(alpha))


def lambda_compare(spectrum: OrderedSpectrum, alpha: Sequence[int], beta: Sequence[int]) -> Ordering:
    """alpha > beta iff |lambda^alpha| < |lambda^beta|, lexicographic on ties."""
    return Ordering.of(lambda_key(spectrum, alpha), lambda_key(spectrum, beta))


def total_degree(alpha: Sequence[int]) -> int:
    return sum(alpha)


def unit_exponent(dimension: int, index: int) -> Exponent:
    return tuple(1 if k == index else 0 for k in range(dimension))
