"""Exact Gaussian-rational numbers.

All coefficients and eigenvalues handled by the library live in Q(i). Keeping
to this field makes resonance detection (lambda^alpha == lambda_i) and
lambda-weight equality decidable by plain equality tests; no floating point
is used on any exact code path.
"""

from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Union

from ..utils.errors import ParseError

Rational = Fraction
Scalar = Union["GaussianRational", Fraction, int]


class GaussianRational:
    """Immutable complex number with rational real and imaginary parts."""

    __slots__ = ("_re", "_im")

    def __init__(self, re: Union[Fraction, int, str] = 0, im: Union[Fraction, int, str] = 0):
        object.__setattr__(self, "_re", Fraction(re))
        object.__setattr__(self, "_im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    @property
    def re(self) -> Fraction:
        return self._re

    @property
    def im(self) -> Fraction:
        return self._im

    @classmethod
    def coerce(cls, value: Scalar) -> "GaussianRational":
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, (int, _RationalABC)):
            return cls(Fraction(value))
        raise TypeError(f"cannot convert {type(value).__name__} to GaussianRational")

    # Predicates

    def is_zero(self) -> bool:
        return self._re == 0 and self._im == 0

    def is_real(self) -> bool:
        return self._im == 0

    def is_gaussian_integer(self) -> bool:
        return self._re.denominator == 1 and self._im.denominator == 1

    def __bool__(self) -> bool:
        return not self.is_zero()

    # Arithmetic

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self._re, -self._im)

    def modulus_squared(self) -> Fraction:
        return self._re * self._re + self._im * self._im

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self._re, -self._im)

    def __pos__(self) -> "GaussianRational":
        return self

    def __add__(self, other: Scalar) -> "GaussianRational":
        try:
            other = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self._re + other._re, self._im + other._im)

    __radd__ = __add__

    def __sub__(self, other: Scalar) -> "GaussianRational":
        try:
            other = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self._re - other._re, self._im - other._im)

    def __rsub__(self, other: Scalar) -> "GaussianRational":
        return (-self) + other

    def __mul__(self, other: Scalar) -> "GaussianRational":
        try:
            other = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        a, b, c, d = self._re, self._im, other._re, other._im
        return GaussianRational(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def inverse(self) -> "GaussianRational":
        norm = self.modulus_squared()
        if norm == 0:
            raise ZeroDivisionError("GaussianRational division by zero")
        return GaussianRational(self._re / norm, -self._im / norm)

    def __truediv__(self, other: Scalar) -> "GaussianRational":
        try:
            other = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other: Scalar) -> "GaussianRational":
        return GaussianRational.coerce(other) * self.inverse()

    def __pow__(self, exponent: int) -> "GaussianRational":
        return power(self, exponent)

    # Comparison and hashing

    def __eq__(self, other) -> bool:
        if isinstance(other, GaussianRational):
            return self._re == other._re and self._im == other._im
        if isinstance(other, (int, _RationalABC)):
            return self._im == 0 and self._re == other
        return NotImplemented

    def __hash__(self) -> int:
        # Agrees with hash(int) / hash(Fraction) on the real axis.
        if self._im == 0:
            return hash(self._re)
        return hash((self._re, self._im))

    def __repr__(self) -> str:
        return f"GaussianRational('{format_gaussian(self)}')"

    def __str__(self) -> str:
        return format_gaussian(self)


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I_UNIT = GaussianRational(0, 1)


def modulus_squared(z: Scalar) -> Fraction:
    """Return re^2 + im^2 exactly."""
    return GaussianRational.coerce(z).modulus_squared()


def power(z: Scalar, k: int) -> GaussianRational:
    """Exact k-th power by repeated squaring; k may be negative for z != 0."""
    z = GaussianRational.coerce(z)
    if k < 0:
        if z.is_zero():
            raise ZeroDivisionError("zero base with negative exponent")
        z = z.inverse()
        k = -k
    result = ONE
    base = z
    while k:
        if k & 1:
            result = result * base
        base = base * base
        k >>= 1
    return result


def _format_fraction(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def format_gaussian(z: GaussianRational) -> str:
    """Canonical text: `0`, `a/b`, `c/d*i` or `a/b+c/d*i`."""
    if z.im == 0:
        return _format_fraction(z.re)
    imaginary = f"{_format_fraction(z.im)}*i"
    if z.re == 0:
        return imaginary
    sign = "-" if z.im < 0 else "+"
    return f"{_format_fraction(z.re)}{sign}{_format_fraction(abs(z.im))}*i"


def _parse_fraction(text: str, source: str) -> Fraction:
    if not text:
        raise ParseError(f"missing number in {source!r}")
    numerator, _, denominator = text.partition("/")
    if not numerator.lstrip("+-").isdigit() or (denominator and not denominator.isdigit()):
        raise ParseError(f"malformed rational {text!r} in {source!r}")
    if denominator and int(denominator) == 0:
        raise ParseError(f"zero denominator in {source!r}")
    return Fraction(int(numerator), int(denominator) if denominator else 1)


def parse_gaussian(text: str) -> GaussianRational:
    """Parse `a/b`, `a/b*i`, `a/b+c/d*i` (signs optional, integers allowed)."""
    source = text
    compact = "".join(text.split())
    if not compact:
        raise ParseError("empty coefficient")
    if not compact.endswith("i"):
        return GaussianRational(_parse_fraction(compact, source))

    body = compact[:-1]
    if body.endswith("*"):
        body = body[:-1]
    split = max(body.rfind("+"), body.rfind("-"))
    if split > 0:
        real_text, imag_text = body[:split], body[split:]
    else:
        real_text, imag_text = "", body
    if imag_text in ("", "+", "-"):
        imag_text += "1"
    real = _parse_fraction(real_text, source) if real_text else Fraction(0)
    return GaussianRational(real, _parse_fraction(imag_text, source))
