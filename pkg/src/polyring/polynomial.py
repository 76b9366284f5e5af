"""Sparse exact multivariate polynomials and polynomial maps.

A Polynomial stores only its nonzero terms as {exponent tuple: coefficient}.
A PolyMap is a tuple of Polynomials in the same variables, vanishing at the
origin; composition and inversion are truncated by total degree.
"""

from types import MappingProxyType
from typing import Callable, Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

from ..exactnum.numbers import ONE, ZERO, GaussianRational, Scalar
from ..utils.errors import DimensionMismatch
from ..utils.linalg import Matrix, inverse

Exponent = Tuple[int, ...]


def _add_exponents(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x + y for x, y in zip(a, b))


def graded_lex_key(alpha: Exponent):
    return (sum(alpha), alpha)


class Polynomial:
    """Immutable polynomial in `dimension` variables over Q(i)."""

    __slots__ = ("_terms", "_dimension", "_hash")

    def __init__(self, terms: Mapping[Sequence[int], Scalar], dimension: int):
        clean: Dict[Exponent, GaussianRational] = {}
        for alpha, c in terms.items():
            alpha = tuple(int(a) for a in alpha)
            if len(alpha) != dimension:
                raise DimensionMismatch(f"exponent {alpha} in a polynomial of dimension {dimension}")
            if any(a < 0 for a in alpha):
                raise ValueError(f"negative exponent {alpha}")
            c = GaussianRational.coerce(c)
            if not c.is_zero():
                clean[alpha] = clean.get(alpha, ZERO) + c
                if clean[alpha].is_zero():
                    del clean[alpha]
        self._terms = clean
        self._dimension = dimension
        self._hash = None

    # Constructors

    @classmethod
    def zero(cls, dimension: int) -> "Polynomial":
        return cls({}, dimension)

    @classmethod
    def constant(cls, c: Scalar, dimension: int) -> "Polynomial":
        return cls({(0,) * dimension: c}, dimension)

    @classmethod
    def monomial(cls, alpha: Sequence[int], c: Scalar = 1) -> "Polynomial":
        return cls({tuple(alpha): c}, len(alpha))

    @classmethod
    def variable(cls, index: int, dimension: int) -> "Polynomial":
        return cls.monomial(tuple(1 if k == index else 0 for k in range(dimension)))

    @classmethod
    def linear_form(cls, coefficients: Sequence[Scalar]) -> "Polynomial":
        d = len(coefficients)
        return cls({tuple(1 if k == j else 0 for k in range(d)): c for j, c in enumerate(coefficients)}, d)

    # Inspection

    @property
    def dimension(self) -> int:
        return self._dimension

    @property
    def terms(self) -> Mapping[Exponent, GaussianRational]:
        return MappingProxyType(self._terms)

    def support(self) -> List[Exponent]:
        """Exponents in graded-lex descending order."""
        return sorted(self._terms, key=graded_lex_key, reverse=True)

    def items(self) -> Iterator[Tuple[Exponent, GaussianRational]]:
        for alpha in self.support():
            yield alpha, self._terms[alpha]

    def coefficient(self, alpha: Sequence[int]) -> GaussianRational:
        return self._terms.get(tuple(alpha), ZERO)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    @property
    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(a) for a in self._terms), default=-1)

    @property
    def order(self) -> int:
        """Least total degree of a term; -1 for the zero polynomial."""
        return min((sum(a) for a in self._terms), default=-1)

    def constant_term(self) -> GaussianRational:
        return self.coefficient((0,) * self._dimension)

    def linear_coefficients(self) -> List[GaussianRational]:
        d = self._dimension
        return [self.coefficient(tuple(1 if k == j else 0 for k in range(d))) for j in range(d)]

    def filter(self, keep: Callable[[Exponent], bool]) -> "Polynomial":
        return Polynomial({a: c for a, c in self._terms.items() if keep(a)}, self._dimension)

    def truncate(self, degree: int) -> "Polynomial":
        """Drop every term of total degree > degree."""
        return self.filter(lambda a: sum(a) <= degree)

    def homogeneous_part(self, degree: int) -> "Polynomial":
        return self.filter(lambda a: sum(a) == degree)

    def depends_only_on(self, count: int) -> bool:
        """True when only the first `count` variables occur."""
        return all(not any(a[count:]) for a in self._terms)

    # Arithmetic

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other._dimension != self._dimension:
                raise DimensionMismatch(f"dimensions {self._dimension} and {other._dimension} differ")
            return other
        return Polynomial.constant(GaussianRational.coerce(other), self._dimension)

    def __add__(self, other) -> "Polynomial":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        terms = dict(self._terms)
        for alpha, c in other._terms.items():
            terms[alpha] = terms.get(alpha, ZERO) + c
        return Polynomial(terms, self._dimension)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial({a: -c for a, c in self._terms.items()}, self._dimension)

    def __sub__(self, other) -> "Polynomial":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        return (-self) + other

    def scale(self, c: Scalar) -> "Polynomial":
        c = GaussianRational.coerce(c)
        return Polynomial({a: c * v for a, v in self._terms.items()}, self._dimension)

    def multiply(self, other: "Polynomial", truncation: Optional[int] = None) -> "Polynomial":
        other = self._coerce(other)
        terms: Dict[Exponent, GaussianRational] = {}
        right = sorted(((sum(b), b, e) for b, e in other._terms.items()), key=lambda item: item[0])
        for a, c in self._terms.items():
            da = sum(a)
            for db, b, e in right:
                if truncation is not None and da + db > truncation:
                    break
                key = _add_exponents(a, b)
                terms[key] = terms.get(key, ZERO) + c * e
        return Polynomial(terms, self._dimension)

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return self.multiply(other)
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    __rmul__ = __mul__

    def power(self, k: int, truncation: Optional[int] = None) -> "Polynomial":
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = Polynomial.constant(ONE, self._dimension)
        base = self
        while k:
            if k & 1:
                result = result.multiply(base, truncation)
            k >>= 1
            if k:
                base = base.multiply(base, truncation)
        return result

    def __pow__(self, k: int) -> "Polynomial":
        return self.power(k)

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self._dimension == other._dimension and self._terms == other._terms
        try:
            return self == Polynomial.constant(GaussianRational.coerce(other), self._dimension)
        except TypeError:
            return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self._dimension, frozenset(self._terms.items()))))
        return self._hash

    def __repr__(self) -> str:
        return f"Polynomial('{self}', dimension={self._dimension})"

    def __str__(self) -> str:
        from .parsing import format_polynomial

        return format_polynomial(self)


class PolyMap:
    """A tuple of polynomials without constant terms; component i is the image of x_i."""

    __slots__ = ("_components", "_dimension")

    def __init__(self, components: Iterable[Polynomial], dimension: Optional[int] = None):
        components = tuple(components)
        if dimension is None:
            if not components:
                raise ValueError("dimension is required for an empty map")
            dimension = components[0].dimension
        for k, p in enumerate(components):
            if p.dimension != dimension:
                raise DimensionMismatch(f"component {k} has dimension {p.dimension}, expected {dimension}")
            if not p.constant_term().is_zero():
                raise ValueError(f"component {k} does not vanish at the origin")
        self._components = components
        self._dimension = dimension

    @classmethod
    def identity(cls, dimension: int) -> "PolyMap":
        return cls((Polynomial.variable(k, dimension) for k in range(dimension)), dimension)

    @classmethod
    def from_matrix(cls, matrix: Sequence[Sequence[Scalar]]) -> "PolyMap":
        """The linear map x -> M x."""
        dimension = len(matrix[0]) if matrix else 0
        return cls((Polynomial.linear_form(row) for row in matrix), dimension)

    @property
    def dimension(self) -> int:
        """Number of source variables."""
        return self._dimension

    @property
    def components(self) -> Tuple[Polynomial, ...]:
        return self._components

    def __len__(self) -> int:
        return len(self._components)

    def __iter__(self) -> Iterator[Polynomial]:
        return iter(self._components)

    def __getitem__(self, index: int) -> Polynomial:
        return self._components[index]

    def __eq__(self, other) -> bool:
        if not isinstance(other, PolyMap):
            return NotImplemented
        return self._dimension == other._dimension and self._components == other._components

    def __hash__(self) -> int:
        return hash((self._dimension, self._components))

    def __repr__(self) -> str:
        return f"PolyMap({[str(p) for p in self._components]})"

    def linear_matrix(self) -> Matrix:
        """M[i][j] = coefficient of x_j in component i."""
        return [p.linear_coefficients() for p in self._components]

    def linear_part(self) -> "PolyMap":
        return PolyMap((p.homogeneous_part(1) for p in self._components), self._dimension)

    def nonlinear_part(self) -> "PolyMap":
        return PolyMap((p.filter(lambda a: sum(a) >= 2) for p in self._components), self._dimension)

    def truncate(self, degree: int) -> "PolyMap":
        return PolyMap((p.truncate(degree) for p in self._components), self._dimension)

    @property
    def degree(self) -> int:
        return max((p.degree for p in self._components), default=-1)

    def __add__(self, other: "PolyMap") -> "PolyMap":
        if len(other) != len(self):
            raise DimensionMismatch("maps with different numbers of components")
        return PolyMap((p + q for p, q in zip(self, other)), self._dimension)

    def __sub__(self, other: "PolyMap") -> "PolyMap":
        if len(other) != len(self):
            raise DimensionMismatch("maps with different numbers of components")
        return PolyMap((p - q for p, q in zip(self, other)), self._dimension)


def compose(g: Polynomial, F: PolyMap, truncation: Optional[int] = None) -> Polynomial:
    """g(F_1, ..., F_d), dropping total degree > truncation when given."""
    if g.dimension != len(F):
        raise DimensionMismatch(f"cannot compose a polynomial in {g.dimension} variables with a map of {len(F)} components")
    powers: Dict[Tuple[int, int], Polynomial] = {}

    def component_power(k: int, a: int) -> Polynomial:
        key = (k, a)
        if key not in powers:
            if a == 0:
                powers[key] = Polynomial.constant(ONE, F.dimension)
            else:
                powers[key] = component_power(k, a - 1).multiply(F[k], truncation)
        return powers[key]

    terms: Dict[Exponent, GaussianRational] = {}
    for alpha, c in g.terms.items():
        # Components vanish at 0, so F^alpha has order >= |alpha|.
        if truncation is not None and sum(alpha) > truncation:
            continue
        product = Polynomial.constant(c, F.dimension)
        for k, a in enumerate(alpha):
            if a:
                product = product.multiply(component_power(k, a), truncation)
        for beta, e in product.terms.items():
            terms[beta] = terms.get(beta, ZERO) + e
    return Polynomial(terms, F.dimension)


def map_compose(F: PolyMap, G: PolyMap, truncation: Optional[int] = None) -> PolyMap:
    """F o G, componentwise, with shared truncation."""
    return PolyMap((compose(f, G, truncation) for f in F), G.dimension)


def map_inverse(H: PolyMap, truncation: int) -> PolyMap:
    """K with H o K == identity modulo total degree truncation + 1.

    Writing H = L + Q with L linear, K is the fixed point of
    K = L^{-1} (x - Q o K); each pass fixes one more degree.
    """
    if len(H) != H.dimension:
        raise DimensionMismatch("only square maps can be inverted")
    d = H.dimension
    try:
        linear_inverse = PolyMap.from_matrix(inverse(H.linear_matrix()))
    except ZeroDivisionError:
        raise ValueError("map has a singular linear part") from None
    nonlinear = H.nonlinear_part()
    identity = PolyMap.identity(d)

    K = linear_inverse
    for _ in range(max(truncation - 1, 0)):
        K = map_compose(linear_inverse, identity - map_compose(nonlinear, K, truncation), truncation)
    return K.truncate(truncation)


def weighted_contraction(weights: Sequence[int], t: Scalar) -> PolyMap:
    """The diagonal map x_i -> t^{n_i} x_i carried by weighted homogeneous ideals."""
    t = GaussianRational.coerce(t)
    d = len(weights)
    return PolyMap((Polynomial.variable(k, d).scale(t ** n) for k, n in enumerate(weights)), d)
