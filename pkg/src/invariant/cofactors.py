"""Generators of invariant ideals and the cofactor matrix of F acting on them.

For an ideal I = <phi_1..phi_r> invariant under F, phi_i o F = sum_j A_ij phi_j.
The constant part A0 = A(0) is determined once the generators are minimal,
and after a linear change of generators it becomes lower Jordan.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from ..exactnum.gaussian import gaussian_roots
from ..exactnum.numbers import GaussianRational
from ..normalform.jordan import jordan_basis
from ..polyring.grading import lambda_decompose, truncate_classes
from ..polyring.polynomial import Exponent, PolyMap, Polynomial, compose, map_inverse
from ..spectrum.classes import (
    WeightClass,
    class_bound_for,
    class_key,
    class_precedes,
    classes_up_to,
    log_lambda,
)
from ..spectrum.ordering import OrderedSpectrum, lambda_modulus
from ..spectrum.resonance import enumerate_exponents
from ..utils.errors import (
    DimensionMismatch,
    EigenvalueNotInSpectrumImage,
    InternalInvariantViolation,
    NotInvariant,
)
from ..utils.linalg import Matrix, charpoly, inverse, matmul, matrices_equal
from .membership import assemble_cofactors, solve_coefficients, truncated_membership

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IdealPresentation:
    """Nonzero generators vanishing at the origin, all in `dimension` variables."""

    generators: Tuple[Polynomial, ...]
    dimension: int

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        for k, g in enumerate(self.generators):
            if g.dimension != self.dimension:
                raise DimensionMismatch(f"generator {k} has dimension {g.dimension}, expected {self.dimension}")
            if g.is_zero():
                raise ValueError(f"generator {k} is zero")
            if not g.constant_term().is_zero():
                raise ValueError(f"generator {k} does not vanish at the origin")

    def __len__(self) -> int:
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __getitem__(self, index: int) -> Polynomial:
        return self.generators[index]

    @property
    def degree(self) -> int:
        return max((g.degree for g in self.generators), default=0)

    def transformed(self, matrix: Sequence[Sequence[GaussianRational]]) -> "IdealPresentation":
        """Generators T phi for a constant r x r matrix T."""
        generators = []
        for row in matrix:
            g = Polynomial.zero(self.dimension)
            for c, phi in zip(row, self.generators):
                g = g + phi.scale(c)
            generators.append(g)
        return IdealPresentation(tuple(generators), self.dimension)


@dataclass(frozen=True)
class CofactorMatrix:
    """phi_i o F - sum_j entries[i][j] phi_j has no lambda-piece of class <= bound."""

    entries: Tuple[Tuple[Polynomial, ...], ...]
    constant_part: Tuple[Tuple[GaussianRational, ...], ...]
    bound: WeightClass

    @property
    def size(self) -> int:
        return len(self.entries)

    def a0(self) -> Matrix:
        return [list(row) for row in self.constant_part]


def minimal_generators(
    ideal: IdealPresentation,
    spectrum: OrderedSpectrum,
    degree_bound: int,
) -> IdealPresentation:
    """Drop generators lying in the others modulo m^(degree_bound+1), last first."""
    if ideal.dimension != spectrum.dimension:
        raise DimensionMismatch("ideal and spectrum live in different dimensions")
    if degree_bound < ideal.degree:
        raise ValueError(f"degree bound {degree_bound} is below the generator degree {ideal.degree}")
    kept = list(ideal.generators)
    for k in range(len(kept) - 1, -1, -1):
        others = kept[:k] + kept[k + 1:]
        if truncated_membership(kept[k], others, degree_bound) is not None:
            logger.info("generator %d is redundant modulo degree %d", k, degree_bound)
            del kept[k]
    return IdealPresentation(tuple(kept), ideal.dimension)


def transport_ideal(
    ideal: IdealPresentation,
    conjugacy: PolyMap,
    truncation: int,
    spectrum: Optional[OrderedSpectrum] = None,
) -> IdealPresentation:
    """Generators phi o H^{-1} modulo m^(truncation+1), for new coordinates y = H(x).

    With a spectrum, each series phi o H^{-1} is cut by whole lambda-classes
    (truncate_classes) instead of by total degree, so no class is split.
    """
    inverse_map = map_inverse(conjugacy, truncation)
    generators = [compose(phi, inverse_map, truncation) for phi in ideal]
    if spectrum is not None:
        generators = [truncate_classes(g, spectrum, truncation) for g in generators]
    for k, g in enumerate(generators):
        if g.is_zero():
            raise InternalInvariantViolation(
                f"generator {k} has no term left after the change of coordinates at truncation {truncation}"
            )
    return IdealPresentation(tuple(generators), ideal.dimension)


def default_class_bound(
    ideal: IdealPresentation,
    F: PolyMap,
    spectrum: OrderedSpectrum,
    truncation: int,
) -> WeightClass:
    """Largest class not below the smallest monomial of any phi_i o F."""
    floor: Optional[Fraction] = None
    for phi in ideal:
        for alpha in compose(phi, F, truncation).terms:
            m = lambda_modulus(spectrum, alpha)
            floor = m if floor is None else min(floor, m)
    if floor is None:
        floor = spectrum.modulus(spectrum.dimension - 1)
    return class_bound_for(spectrum, floor)


def _equation_rows(
    spectrum: OrderedSpectrum,
    bound: WeightClass,
    truncation: Optional[int],
) -> List[Tuple[WeightClass, List[Exponent]]]:
    """Classes <= bound with their members of degree <= truncation, in class order."""
    rows = []
    for c in classes_up_to(spectrum, bound.modulus):
        if not class_precedes(spectrum, c, bound):
            continue
        members = [a for a in c.members if truncation is None or sum(a) <= truncation]
        if members:
            rows.append((c, members))
    return rows


def cofactor_matrix(
    ideal: IdealPresentation,
    F: PolyMap,
    spectrum: OrderedSpectrum,
    bound: Optional[WeightClass] = None,
    pivot_order: str = "forward",
    truncation: Optional[int] = None,
) -> CofactorMatrix:
    """Solve phi_i o F == sum_j A_ij phi_j on every lambda-class up to `bound`.

    Args:
        ideal: minimal generators
        F: the map, in Poincare-Dulac normal form for `spectrum`
        spectrum: ordered spectrum of F
        bound: largest class constrained; defaults to default_class_bound
        pivot_order: "forward" or "reverse" column order for the elimination
        truncation: total degree used when composing, defaults to the top
            degree among the constrained monomials

    Returns:
        CofactorMatrix with entries supported on monomials of modulus >= bound
    """
    if pivot_order not in ("forward", "reverse"):
        raise ValueError(f"unknown pivot order {pivot_order!r}")
    d = spectrum.dimension
    r = len(ideal)
    if bound is None:
        bound = default_class_bound(ideal, F, spectrum, truncation or max(ideal.degree, 1) * max(F.degree, 1))

    classes = _equation_rows(spectrum, bound, truncation)
    rows = [alpha for _, members in classes for alpha in members]
    top = max((sum(alpha) for alpha in rows), default=0)

    # Products x^beta phi_j with |lambda^beta| below the bound only feed classes past it.
    betas = enumerate_exponents(spectrum, bound.modulus)
    products = [
        (j, beta, (Polynomial.monomial(beta) * phi).truncate(top))
        for j, phi in enumerate(ideal)
        for beta in betas
    ]
    column_order = list(range(len(products)))
    if pivot_order == "reverse":
        column_order.reverse()

    entries = []
    for i, phi in enumerate(ideal):
        image = compose(phi, F, top)
        solution = solve_coefficients(image, products, rows, column_order)
        if solution is None:
            failing, residual = _first_failing_class(image, products, classes, column_order, spectrum)
            raise NotInvariant(
                f"generator {i} o F is not in the ideal at class {failing.representative}",
                index=i,
                failing_class=failing,
                residual=residual,
            )
        entries.append(tuple(assemble_cofactors(solution, products, r, d)))

    constant = tuple(tuple(a.constant_term() for a in row) for row in entries)
    logger.debug("A0 = %s", [[str(c) for c in row] for row in constant])
    return CofactorMatrix(tuple(entries), constant, bound)


def _first_failing_class(image, products, classes, column_order, spectrum):
    rows: List[Exponent] = []
    for gamma, members in classes:
        rows.extend(members)
        if solve_coefficients(image, products, rows, column_order) is None:
            piece = lambda_decompose(image, spectrum)
            return gamma, piece.get(gamma, image.dimension)
    raise InternalInvariantViolation("cofactor system failed but every class prefix is solvable")


def jordanize_A0(
    ideal: IdealPresentation,
    cofactors: CofactorMatrix,
    F: PolyMap,
    spectrum: OrderedSpectrum,
    truncation: Optional[int] = None,
) -> Tuple[IdealPresentation, CofactorMatrix, Matrix]:
    """Change generators phi' = T phi so that A0' = T A0 T^{-1} is lower Jordan.

    Eigenvalues of A0 are grouped in increasing lambda-class order.

    Returns:
        Tuple of (new presentation, recomputed cofactor matrix, T)
    """
    A0 = cofactors.a0()
    r = len(A0)
    if r == 0:
        return ideal, cofactors, []

    roots, leftover = gaussian_roots(charpoly(A0))
    if len(leftover) > 1:
        raise EigenvalueNotInSpectrumImage(
            f"A0 has a factor of degree {len(leftover) - 1} without Gaussian-rational roots"
        )
    classes = {}
    for mu, _ in roots:
        gamma = None if mu.is_zero() else log_lambda(spectrum, mu)
        if gamma is None:
            raise EigenvalueNotInSpectrumImage(f"eigenvalue {mu} of A0 is not a power of the spectrum")
        classes[mu] = gamma

    S, sizes = jordan_basis(A0, key=lambda mu: class_key(spectrum, classes[mu]))
    T = inverse(S)
    new_ideal = ideal.transformed(T)
    new_cofactors = cofactor_matrix(new_ideal, F, spectrum, cofactors.bound, truncation=truncation)
    expected = matmul(matmul(T, A0), S)
    if not matrices_equal(new_cofactors.a0(), expected):
        raise InternalInvariantViolation("recomputed A0 does not match T A0 T^-1")
    logger.info("A0 Jordan blocks %s", sizes)
    return new_ideal, new_cofactors, T
