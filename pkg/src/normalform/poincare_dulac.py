"""Poincare-Dulac normalization of contracting polynomial jets.

The map is first conjugated by its Jordan transition S, then normalized one
total degree at a time. Writing the conjugacy as H' = x + h and the normal
form as F~ = J x + f~, the degree-k part of H' o G == F~ o H' reads

    h_k o (J x) - J h_k - f~_k == [F~_<k o H'_<k]_k - [H'_<k o G]_k

Every (i, alpha) with lambda^alpha != lambda_i is an unknown coefficient of
h_k; every resonant (i, alpha) is an unknown coefficient of f~_k. The system
splits into one exact solve per pair (lambda^alpha, lambda_i).
"""

import logging
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Dict, List, Optional, Tuple

from ..exactnum.numbers import ZERO, GaussianRational
from ..polyring.polynomial import PolyMap, Polynomial, compose, map_compose
from ..spectrum.ordering import Exponent, OrderedSpectrum, lambda_power
from ..spectrum.resonance import is_resonant, normal_form_support, resonance_bound
from ..utils.errors import DimensionMismatch, InternalInvariantViolation, QuasiHomError
from ..utils.linalg import inverse, rank, solve
from .jordan import is_lower_jordan, jordan_lower, spectrum_of_jordan

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class NormalFormCertificate:
    """H o original == normalized o H modulo total degree truncation_degree + 1."""

    original: PolyMap
    normalized: PolyMap
    conjugacy: PolyMap
    truncation_degree: int
    spectrum: OrderedSpectrum


def exponents_of_degree(dimension: int, degree: int) -> List[Exponent]:
    """All alpha in N^dimension with |alpha| == degree, graded-lex descending."""
    result = []
    for combo in combinations_with_replacement(range(dimension), degree):
        alpha = [0] * dimension
        for k in combo:
            alpha[k] += 1
        result.append(tuple(alpha))
    return sorted(result, reverse=True)


def normal_form_spectrum(F: PolyMap) -> Optional[OrderedSpectrum]:
    """Spectrum read off a lower Jordan, nicely ordered linear part; None otherwise."""
    if len(F) != F.dimension:
        return None
    J = F.linear_matrix()
    if not is_lower_jordan(J):
        return None
    d = len(J)
    for k in range(d - 1):
        if J[k][k].modulus_squared() < J[k + 1][k + 1].modulus_squared():
            return None
    return spectrum_of_jordan(J)


def spectrum_of(F: PolyMap) -> OrderedSpectrum:
    """Nicely ordered spectrum of the linear part of F."""
    if len(F) != F.dimension:
        raise DimensionMismatch("a self-map is required")
    J, _ = jordan_lower(F.linear_matrix())
    return spectrum_of_jordan(J)


def is_normal_form(F: PolyMap, spectrum: OrderedSpectrum) -> bool:
    """Lower Jordan linear part with diagonal `spectrum`, resonant nonlinear terms only."""
    if len(F) != spectrum.dimension or F.dimension != spectrum.dimension:
        return False
    try:
        own = normal_form_spectrum(F)
    except QuasiHomError:
        return False
    if own is None or own.entries != spectrum.entries:
        return False
    for i, component in enumerate(F):
        allowed = set(normal_form_support(spectrum, i))
        for alpha in component.terms:
            if sum(alpha) >= 2 and alpha not in allowed:
                return False
    return True


def verify_conjugacy(cert: NormalFormCertificate) -> bool:
    """Recompute H o F and F~ o H modulo degree N + 1 and compare exactly."""
    N = cert.truncation_degree
    try:
        if rank(cert.conjugacy.linear_matrix()) < cert.conjugacy.dimension:
            return False
        left = map_compose(cert.conjugacy, cert.original, N)
        right = map_compose(cert.normalized, cert.conjugacy, N)
    except QuasiHomError:
        return False
    return left.truncate(N) == right.truncate(N)


def _linear_operator_image(
    alpha: Exponent, i: int, J_map: PolyMap, J: List[List[GaussianRational]], degree: int
) -> Dict[Tuple[int, Exponent], GaussianRational]:
    """Coordinates of L(x^alpha e_i) = (x^alpha o Jx) e_i - J (x^alpha e_i)."""
    d = len(J)
    image: Dict[Tuple[int, Exponent], GaussianRational] = {}
    for beta, c in compose(Polynomial.monomial(alpha), J_map, degree).terms.items():
        image[(i, beta)] = image.get((i, beta), ZERO) + c
    for m in range(d):
        if J[m][i] != 0:
            image[(m, alpha)] = image.get((m, alpha), ZERO) - J[m][i]
    return image


def _solve_degree(
    spectrum: OrderedSpectrum,
    J: List[List[GaussianRational]],
    J_map: PolyMap,
    residual: PolyMap,
    degree: int,
) -> Tuple[List[Polynomial], List[Polynomial]]:
    """Solve L(h_k) - f~_k == residual_k; returns (h_k, f~_k) componentwise.

    L keeps the pair (lambda^alpha, lambda_i) of x^alpha e_i fixed, so the
    system splits into one block per pair. A resonant block takes
    f~ = -residual and h = 0; any other block is invertible and gives h.
    """
    d = spectrum.dimension
    blocks: Dict[Tuple[GaussianRational, GaussianRational], List[Tuple[int, Exponent]]] = {}
    for i in range(d):
        for alpha in exponents_of_degree(d, degree):
            blocks.setdefault((lambda_power(spectrum, alpha), spectrum[i]), []).append((i, alpha))

    h_terms = [dict() for _ in range(d)]
    f_terms = [dict() for _ in range(d)]
    resonant = 0
    for positions in blocks.values():
        rhs = [residual[i].coefficient(alpha) for i, alpha in positions]
        if is_resonant(spectrum, *positions[0]):
            resonant += len(positions)
            for (i, alpha), c in zip(positions, rhs):
                f_terms[i][alpha] = -c
            continue
        if all(c.is_zero() for c in rhs):
            continue
        index = {p: n for n, p in enumerate(positions)}
        matrix = [[ZERO] * len(positions) for _ in positions]
        for col, (i, alpha) in enumerate(positions):
            for position, c in _linear_operator_image(alpha, i, J_map, J, degree).items():
                matrix[index[position]][col] = matrix[index[position]][col] + c
        if rank(matrix) < len(positions):
            raise InternalInvariantViolation(f"homological block {positions[0]} of degree {degree} is singular")
        for (i, alpha), c in zip(positions, solve(matrix, rhs)):
            h_terms[i][alpha] = c
    logger.debug("degree %d: %d blocks, %d resonant positions", degree, len(blocks), resonant)
    return (
        [Polynomial(t, d) for t in h_terms],
        [Polynomial(t, d) for t in f_terms],
    )


def poincare_dulac(F: PolyMap, truncation: int) -> NormalFormCertificate:
    """Conjugate F to Poincare-Dulac normal form modulo degree truncation + 1.

    Args:
        F: polynomial self-map with contracting, Gaussian-rational linear part
        truncation: total degree N up to which the conjugacy is computed

    Returns:
        NormalFormCertificate with H o F == F~ o H mod m^(N+1)
    """
    d = F.dimension
    if len(F) != d:
        raise DimensionMismatch("a self-map is required")
    J, S = jordan_lower(F.linear_matrix())
    spectrum = spectrum_of_jordan(J)
    if truncation < resonance_bound(spectrum):
        logger.warning(
            "truncation %d is below the resonance bound %d; the normal form may be incomplete",
            truncation,
            resonance_bound(spectrum),
        )

    S_map = PolyMap.from_matrix(S)
    S_inverse = PolyMap.from_matrix(inverse(S))
    G = map_compose(S_inverse, map_compose(F.truncate(truncation), S_map, truncation), truncation)
    J_map = PolyMap.from_matrix(J)

    # pushed is H' o G and pulled the nonlinear part of F~ o H', both short of degree k.
    conjugacy = PolyMap.identity(d)
    resonant = PolyMap((Polynomial.zero(d) for _ in range(d)), d)
    pushed = G
    for degree in range(2, truncation + 1):
        pulled = map_compose(resonant, conjugacy, degree)
        residual = PolyMap((p.homogeneous_part(degree) - q.homogeneous_part(degree) for p, q in zip(pulled, pushed)), d)
        h, f = _solve_degree(spectrum, J, J_map, residual, degree)
        step = PolyMap(h, d)
        conjugacy = conjugacy + step
        resonant = resonant + PolyMap(f, d)
        if any(not p.is_zero() for p in h):
            pushed = pushed + map_compose(step, G, truncation)
        logger.debug("degree %d conjugacy step %s", degree, [str(p) for p in h])
    normalized = J_map + resonant

    cert = NormalFormCertificate(
        original=F,
        normalized=normalized,
        conjugacy=map_compose(conjugacy, S_inverse, truncation),
        truncation_degree=truncation,
        spectrum=spectrum,
    )
    if not is_normal_form(cert.normalized, spectrum):
        raise InternalInvariantViolation("normalized map is not in normal form")
    if not verify_conjugacy(cert):
        raise InternalInvariantViolation("normal form conjugacy does not verify")
    logger.info("normal form computed to degree %d", truncation)
    return cert
