"""lambda-weight classes: exponents grouped by the value of lambda^alpha.

Every class is finite, so it is stored extensionally with its full member
list. The set of classes is well ordered by the lambda-order of the
representatives.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from ..exactnum.numbers import GaussianRational, Scalar
from ..utils.errors import DimensionMismatch
from .ordering import Exponent, OrderedSpectrum, Ordering, lambda_compare, lambda_key, lambda_power
from .resonance import enumerate_exponents


@dataclass(frozen=True)
class WeightClass:
    """All alpha with lambda^alpha == value; representative is the lambda-minimum."""

    representative: Exponent
    members: Tuple[Exponent, ...]
    value: GaussianRational

    @property
    def dimension(self) -> int:
        return len(self.representative)

    @property
    def modulus(self) -> Fraction:
        return self.value.modulus_squared()

    def __contains__(self, alpha) -> bool:
        return tuple(alpha) in self.members

    def __len__(self) -> int:
        return len(self.members)


def _group(spectrum: OrderedSpectrum, exponents: Sequence[Exponent]) -> List[WeightClass]:
    groups: Dict[GaussianRational, List[Exponent]] = {}
    for alpha in exponents:
        groups.setdefault(lambda_power(spectrum, alpha), []).append(alpha)
    classes = []
    for value, members in groups.items():
        members.sort(key=lambda a: lambda_key(spectrum, a))
        classes.append(WeightClass(members[0], tuple(members), value))
    classes.sort(key=lambda c: lambda_key(spectrum, c.representative))
    return classes


def _class_of_value(spectrum: OrderedSpectrum, value: GaussianRational) -> Optional[WeightClass]:
    floor = value.modulus_squared()
    if floor > 1:
        return None
    members = [a for a in enumerate_exponents(spectrum, floor) if lambda_power(spectrum, a) == value]
    if not members:
        return None
    return WeightClass(members[0], tuple(members), value)


def weight_class(spectrum: OrderedSpectrum, alpha: Sequence[int]) -> WeightClass:
    """The class [alpha]."""
    alpha = tuple(alpha)
    if len(alpha) != spectrum.dimension:
        raise DimensionMismatch(f"exponent {alpha} does not match dimension {spectrum.dimension}")
    return _class_of_value(spectrum, lambda_power(spectrum, alpha))


def zero_class(spectrum: OrderedSpectrum) -> WeightClass:
    return weight_class(spectrum, (0,) * spectrum.dimension)


def log_lambda(spectrum: OrderedSpectrum, z: Scalar) -> Optional[WeightClass]:
    """The class gamma with lambda^gamma == z, or None when z is not in lambda^Gamma."""
    z = GaussianRational.coerce(z)
    if z.is_zero():
        raise ValueError("log_lambda of zero")
    return _class_of_value(spectrum, z)


def class_compare(spectrum: OrderedSpectrum, gamma: WeightClass, delta: WeightClass) -> Ordering:
    if gamma.dimension != delta.dimension or gamma.dimension != spectrum.dimension:
        raise DimensionMismatch("classes belong to spectra of different dimension")
    return lambda_compare(spectrum, gamma.representative, delta.representative)


def class_key(spectrum: OrderedSpectrum, gamma: WeightClass):
    return lambda_key(spectrum, gamma.representative)


def class_successor(spectrum: OrderedSpectrum, gamma: WeightClass) -> WeightClass:
    """The least class strictly greater than gamma."""
    # The class of rep + e_1 is greater than gamma, which bounds the search.
    floor = gamma.modulus * spectrum.modulus(0)
    current = class_key(spectrum, gamma)
    for candidate in _group(spectrum, enumerate_exponents(spectrum, floor)):
        if class_key(spectrum, candidate) > current:
            return candidate
    raise AssertionError("class successor search exhausted")


def class_add(spectrum: OrderedSpectrum, gamma: WeightClass, delta: WeightClass) -> WeightClass:
    return weight_class(
        spectrum, tuple(a + b for a, b in zip(gamma.representative, delta.representative))
    )


def class_difference(spectrum: OrderedSpectrum, delta: WeightClass, gamma: WeightClass) -> Optional[WeightClass]:
    """The class epsilon with epsilon + gamma == delta, if any."""
    return log_lambda(spectrum, delta.value / gamma.value)


def classes_up_to(spectrum: OrderedSpectrum, floor: Fraction) -> List[WeightClass]:
    """Every class with |lambda^gamma|^2 >= floor, in increasing class order."""
    return _group(spectrum, enumerate_exponents(spectrum, floor))


def class_bound_for(spectrum: OrderedSpectrum, floor: Fraction) -> WeightClass:
    return classes_up_to(spectrum, floor)[-1]


def class_precedes(spectrum: OrderedSpectrum, gamma: WeightClass, bound: WeightClass) -> bool:
    """gamma <= bound."""
    return class_key(spectrum, gamma) <= class_key(spectrum, bound)
