"""The lambda-grading of the polynomial ring and weighted homogeneity."""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from ..exactnum.numbers import GaussianRational, Scalar
from ..spectrum.classes import WeightClass, class_key, weight_class
from ..spectrum.ordering import OrderedSpectrum, lambda_modulus, lambda_power
from ..utils.errors import DimensionMismatch
from ..utils.linalg import Matrix
from .polynomial import Exponent, PolyMap, Polynomial, compose


@dataclass(frozen=True)
class GradedDecomposition:
    """phi = sum of its pieces phi_gamma, pieces in increasing class order."""

    pieces: Tuple[Tuple[WeightClass, Polynomial], ...]

    def classes(self) -> List[WeightClass]:
        return [gamma for gamma, _ in self.pieces]

    def piece(self, gamma: WeightClass) -> Polynomial:
        for delta, p in self.pieces:
            if delta == gamma:
                return p
        raise KeyError(gamma.representative)

    def get(self, gamma: WeightClass, dimension: int) -> Polynomial:
        try:
            return self.piece(gamma)
        except KeyError:
            return Polynomial.zero(dimension)

    def total(self, dimension: int) -> Polynomial:
        result = Polynomial.zero(dimension)
        for _, p in self.pieces:
            result = result + p
        return result

    def __len__(self) -> int:
        return len(self.pieces)


def lambda_decompose(phi: Polynomial, spectrum: OrderedSpectrum) -> GradedDecomposition:
    if phi.dimension != spectrum.dimension:
        raise DimensionMismatch(f"polynomial in {phi.dimension} variables, spectrum of dimension {spectrum.dimension}")
    groups: Dict[GaussianRational, Dict[Exponent, GaussianRational]] = {}
    for alpha, c in phi.terms.items():
        groups.setdefault(lambda_power(spectrum, alpha), {})[alpha] = c
    pieces = []
    for terms in groups.values():
        gamma = weight_class(spectrum, next(iter(terms)))
        pieces.append((gamma, Polynomial(terms, phi.dimension)))
    pieces.sort(key=lambda piece: class_key(spectrum, piece[0]))
    return GradedDecomposition(tuple(pieces))


def lambda_degree(P: Polynomial, spectrum: OrderedSpectrum) -> Optional[WeightClass]:
    """The class of a lambda-homogeneous P, or None when P mixes classes."""
    if P.is_zero():
        raise ValueError("lambda_degree of the zero polynomial")
    pieces = lambda_decompose(P, spectrum).pieces
    return pieces[0][0] if len(pieces) == 1 else None


def class_floor(spectrum: OrderedSpectrum, truncation: int) -> Fraction:
    """|lambda_1|^(2(truncation+1)), an upper bound on |lambda^alpha|^2 once |alpha| > truncation."""
    return spectrum.modulus(0) ** (truncation + 1)


def truncate_classes(P: Polynomial, spectrum: OrderedSpectrum, truncation: int) -> Polynomial:
    """Keep the lambda-classes of P strictly above class_floor, each one whole.

    Every kept term has total degree <= truncation, so when P is exact modulo
    m^(truncation+1) the result is exact, class by class.
    """
    floor = class_floor(spectrum, truncation)
    return P.filter(lambda alpha: lambda_modulus(spectrum, alpha) > floor)


def is_weighted_homogeneous(P: Polynomial, weights: Sequence[int]) -> Optional[int]:
    """The common n . alpha over supp(P), or None when it is not constant.

    The zero polynomial has no degree and gives None.
    """
    if any(n <= 0 for n in weights):
        raise ValueError(f"weights must be positive: {tuple(weights)}")
    if len(weights) != P.dimension:
        raise DimensionMismatch(f"{len(weights)} weights for {P.dimension} variables")
    degrees = {sum(n * a for n, a in zip(weights, alpha)) for alpha in P.terms}
    return degrees.pop() if len(degrees) == 1 else None


def h_space_basis(spectrum: OrderedSpectrum, gamma: WeightClass) -> List[Polynomial]:
    """Monomials spanning H_gamma, in lambda-order."""
    return [Polynomial.monomial(alpha) for alpha in gamma.members]


def h_space_coordinates(P: Polynomial, gamma: WeightClass) -> List[GaussianRational]:
    """Coefficients of P on the monomial basis of H_gamma (other terms ignored)."""
    return [P.coefficient(alpha) for alpha in gamma.members]


def h_space_matrix(
    spectrum: OrderedSpectrum,
    gamma: WeightClass,
    F: PolyMap,
    zeta: Scalar = 0,
) -> Matrix:
    """Matrix of phi -> phi o F - zeta phi on H_gamma.

    Column j holds the image of the j-th basis monomial. For F in normal form
    the image stays in H_gamma and the matrix is lower triangular with
    lambda^gamma - zeta on the diagonal.
    """
    zeta = GaussianRational.coerce(zeta)
    top = max(sum(alpha) for alpha in gamma.members)
    columns = []
    for alpha in gamma.members:
        image = compose(Polynomial.monomial(alpha), F, top) - Polynomial.monomial(alpha).scale(zeta)
        columns.append(h_space_coordinates(image, gamma))
    n = len(gamma.members)
    return [[columns[j][i] for j in range(n)] for i in range(n)] if n else []
