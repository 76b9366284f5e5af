"""Extraction of weighted homogeneous generators and their certificates.

With A0 lower Jordan, the diagonal entry of row i is lambda^gamma_i for a
class gamma_i, and the gamma_i-piece P_i of phi_i generates, together with
the other pieces, the same ideal as the phi_i. Both inclusions are
certified: phi = B P exactly, and P = B^{-1} phi modulo m^(N+1) with B0
unit lower triangular.
"""

import logging
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from ..exactnum.numbers import ONE, ZERO, GaussianRational
from ..normalform.poincare_dulac import NormalFormCertificate
from ..polyring.grading import is_weighted_homogeneous, lambda_decompose
from ..polyring.polynomial import PolyMap, Polynomial, compose
from ..spectrum.classes import WeightClass, class_key, log_lambda
from ..spectrum.lattice import weight_vector
from ..spectrum.ordering import OrderedSpectrum
from ..utils.errors import InternalInvariantViolation, Mismatch, NotInImage, ZeroExtractedGenerator
from ..utils.linalg import Matrix, inverse, matmul
from .cofactors import CofactorMatrix, IdealPresentation
from .membership import graded_membership

logger = logging.getLogger(__name__)

PolyMatrix = Tuple[Tuple[Polynomial, ...], ...]


@dataclass(frozen=True)
class EqualityCertificate:
    """phi_i == sum_j B_ij P_j exactly; P_i == sum_j beta_ij phi_j mod m^(N+1)."""

    B: PolyMatrix
    B0: Tuple[Tuple[GaussianRational, ...], ...]
    inverse_witness: PolyMatrix
    truncation_degree: int
    essential: Tuple[int, ...]


@dataclass(frozen=True)
class FiltrationCertificate:
    """P_i o F == sum_{j <= i} cofactors[i][j] P_j for every i up to the first failure."""

    cofactors: PolyMatrix
    holds: bool
    failing_index: Optional[int] = None

    def __bool__(self) -> bool:
        return self.holds


@dataclass(frozen=True)
class QHResult:
    """Weighted homogeneous generators P_i of an invariant ideal."""

    generators_P: Tuple[Polynomial, ...]
    classes: Tuple[WeightClass, ...]
    weights: Tuple[int, ...]
    degrees: Tuple[int, ...]
    basis_change: Tuple[Tuple[GaussianRational, ...], ...]
    spectrum: OrderedSpectrum
    source_generators: Tuple[Polynomial, ...]
    a0: Tuple[Tuple[GaussianRational, ...], ...]
    truncation_degree: int = 0
    class_bound: Optional[WeightClass] = None
    equality: Optional[EqualityCertificate] = None
    filtration: Optional[FiltrationCertificate] = None
    normal_form: Optional[NormalFormCertificate] = None
    normalized_map: Optional[PolyMap] = field(default=None)
    input_generators: Tuple[Polynomial, ...] = ()

    @property
    def size(self) -> int:
        return len(self.generators_P)


def _polymatrix(rows: Sequence[Sequence[Polynomial]]) -> PolyMatrix:
    return tuple(tuple(row) for row in rows)


def _constant(matrix: Sequence[Sequence[GaussianRational]]):
    return tuple(tuple(row) for row in matrix)


def extract_generators(
    ideal: IdealPresentation,
    cofactors: CofactorMatrix,
    spectrum: OrderedSpectrum,
    transition: Optional[Matrix] = None,
) -> QHResult:
    """gamma_i = log_lambda(A0_ii) and P_i = the gamma_i-piece of phi_i.

    Generators are reordered stably so the classes are non-decreasing.
    `transition` is the generator change already applied to reach `ideal`;
    the result's basis_change composes it with the reorder.
    """
    A0 = cofactors.a0()
    r = len(ideal)
    classes: List[WeightClass] = []
    for i in range(r):
        gamma = None if A0[i][i].is_zero() else log_lambda(spectrum, A0[i][i])
        if gamma is None:
            raise NotInImage(f"A0[{i}][{i}] = {A0[i][i]} is not lambda^gamma for any class", index=i)
        classes.append(gamma)

    order = sorted(range(r), key=lambda i: (class_key(spectrum, classes[i]), i))
    permutation = [[ONE if order[row] == col else ZERO for col in range(r)] for row in range(r)]
    basis_change = matmul(permutation, transition) if transition else permutation

    weights = weight_vector(spectrum)
    generators, sorted_classes, degrees = [], [], []
    for position, i in enumerate(order):
        gamma = classes[i]
        P = lambda_decompose(ideal[i], spectrum).get(gamma, spectrum.dimension)
        if P.is_zero():
            raise ZeroExtractedGenerator(
                f"generator {i} has no component in its class {gamma.representative}", index=position
            )
        degree = is_weighted_homogeneous(P, weights)
        if degree is None:
            raise InternalInvariantViolation(f"extracted generator {position} is not weighted homogeneous")
        generators.append(P)
        sorted_classes.append(gamma)
        degrees.append(degree)
        logger.debug("P_%d = %s, class %s, degree %d", position, P, gamma.representative, degree)

    reordered_a0 = [[A0[i][j] for j in order] for i in order]
    return QHResult(
        generators_P=tuple(generators),
        classes=tuple(sorted_classes),
        weights=tuple(weights),
        degrees=tuple(degrees),
        basis_change=_constant(basis_change),
        spectrum=spectrum,
        source_generators=tuple(ideal[i] for i in order),
        a0=_constant(reordered_a0),
    )


def essential_indices(generators: Sequence[Polynomial], spectrum: OrderedSpectrum) -> Tuple[int, ...]:
    """Greedy E: i is essential iff P_i is not in the ideal of earlier essential P_j."""
    essential: List[int] = []
    for i, P in enumerate(generators):
        if graded_membership(P, [generators[j] for j in essential], spectrum) is None:
            essential.append(i)
    return tuple(essential)


def _neumann_inverse(B: Sequence[Sequence[Polynomial]], B0: Matrix, truncation: int, dimension: int) -> List[List[Polynomial]]:
    """B^{-1} modulo m^(truncation+1) for B = B0 + (terms vanishing at 0)."""
    r = len(B)
    B0_inverse = inverse(B0)
    inv0 = [[Polynomial.constant(c, dimension) for c in row] for row in B0_inverse]
    # E = -B0^{-1} (B - B0) has entries vanishing at the origin.
    E = []
    for i in range(r):
        row = []
        for j in range(r):
            entry = Polynomial.zero(dimension)
            for k in range(r):
                entry = entry + B[k][j].filter(lambda a: sum(a) > 0).scale(-B0_inverse[i][k])
            row.append(entry)
        E.append(row)

    def multiply(X, Y):
        return [
            [
                sum((X[i][k].multiply(Y[k][j], truncation) for k in range(r)), Polynomial.zero(dimension))
                for j in range(r)
            ]
            for i in range(r)
        ]

    total = [[Polynomial.constant(1 if i == j else 0, dimension) for j in range(r)] for i in range(r)]
    power = total
    for _ in range(truncation):
        power = multiply(power, E)
        total = [[total[i][j] + power[i][j] for j in range(r)] for i in range(r)]
    return multiply(total, inv0)


def verify_equality(
    ideal: IdealPresentation,
    result: QHResult,
    spectrum: OrderedSpectrum,
    truncation: int,
) -> EqualityCertificate:
    """Certify <phi> == <P>: phi = B P exactly, B0 unit lower triangular, P = B^{-1} phi mod m^(N+1).

    `ideal` holds the generators the P_i were extracted from, in result order.
    """
    d = spectrum.dimension
    P = list(result.generators_P)
    r = len(P)
    if len(ideal) != r:
        raise Mismatch(f"{len(ideal)} generators against {r} extracted ones", index=0)

    B: List[List[Polynomial]] = []
    for i, phi in enumerate(ideal):
        row = graded_membership(phi, P, spectrum)
        if row is None:
            raise Mismatch(f"generator {i} is not in the ideal of the extracted generators", index=i, residual=phi)
        combined = sum((c * p for c, p in zip(row, P)), Polynomial.zero(d))
        if combined != phi:
            raise Mismatch(f"cofactors of generator {i} do not reproduce it", index=i, residual=phi - combined)
        B.append(row)

    B0 = [[B[i][j].constant_term() for j in range(r)] for i in range(r)]
    for i in range(r):
        if B0[i][i] != 1 or any(B0[i][j] != 0 for j in range(i + 1, r)):
            raise Mismatch(f"B0 row {i} is not unit lower triangular", index=i)

    witness = _neumann_inverse(B, B0, truncation, d) if r else []
    for i in range(r):
        recovered = sum((witness[i][j].multiply(ideal[j], truncation) for j in range(r)), Polynomial.zero(d))
        if recovered.truncate(truncation) != P[i].truncate(truncation):
            raise Mismatch(
                f"extracted generator {i} is not recovered from the input modulo degree {truncation}",
                index=i,
                residual=P[i].truncate(truncation) - recovered.truncate(truncation),
            )

    essential = essential_indices(P, spectrum)
    if len(essential) != r:
        missing = next(i for i in range(r) if i not in essential)
        raise Mismatch(f"extracted generator {missing} is redundant", index=missing)

    return EqualityCertificate(
        B=_polymatrix(B),
        B0=_constant(B0),
        inverse_witness=_polymatrix(witness),
        truncation_degree=truncation,
        essential=essential,
    )


def filtration_witnesses(result: QHResult, F: PolyMap, spectrum: OrderedSpectrum) -> FiltrationCertificate:
    """Cofactors of P_i o F in <P_1..P_i>, stopping at the first failure."""
    P = list(result.generators_P)
    rows: List[Tuple[Polynomial, ...]] = []
    for i in range(len(P)):
        cofactors = graded_membership(compose(P[i], F), P[: i + 1], spectrum)
        if cofactors is None:
            logger.info("P_%d o F is not in the ideal of P_0..P_%d", i, i)
            return FiltrationCertificate(_polymatrix(rows), False, i)
        rows.append(tuple(cofactors))
    return FiltrationCertificate(_polymatrix(rows), True)


def verify_filtration(result: QHResult, F: PolyMap, spectrum: OrderedSpectrum) -> bool:
    """<P_1..P_i> is F-invariant for every i."""
    return filtration_witnesses(result, F, spectrum).holds
