"""Embedding-dimension test and the decidable checks on a contracting extension."""

import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from ..exactnum.gaussian import gaussian_roots
from ..exactnum.numbers import GaussianRational, Scalar
from ..invariant.cofactors import IdealPresentation, cofactor_matrix, transport_ideal
from ..normalform.poincare_dulac import poincare_dulac, spectrum_of
from ..polyring.polynomial import PolyMap
from ..spectrum.classes import WeightClass
from ..spectrum.ordering import OrderedSpectrum
from ..spectrum.resonance import resonance_bound
from ..utils.errors import DimensionMismatch, NotInvariant, QuasiHomError
from ..utils.linalg import Matrix, charpoly, determinant

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EmbeddingReport:
    """in_m2 is true iff every generator has zero linear part."""

    in_m2: bool
    offending_generator: Optional[int]
    linear_part: Tuple[Tuple[GaussianRational, ...], ...]


@dataclass(frozen=True)
class ExtensionReport:
    invertible: bool
    contracting: bool
    invariant: Optional[bool]
    spectrum: Optional[OrderedSpectrum] = None
    failing_generator: Optional[int] = None


def check_m2(ideal: IdealPresentation) -> EmbeddingReport:
    """Whether I lies in the square of the maximal ideal."""
    linear = tuple(tuple(g.linear_coefficients()) for g in ideal)
    offending = next((k for k, row in enumerate(linear) if any(not c.is_zero() for c in row)), None)
    return EmbeddingReport(offending is None, offending, linear)


def _reciprocal(coefficients: Sequence[GaussianRational]) -> List[GaussianRational]:
    return [c.conjugate() for c in reversed(coefficients)]


def schur_cohn_contracting(coefficients: Sequence[Scalar]) -> bool:
    """True iff every root of the polynomial lies in the open unit disk.

    Coefficients are listed constant term first. Each step replaces p by
    (conj(a_n) p - a_0 p*) / t, which keeps the count of roots inside the
    disk while lowering the degree, as long as |a_0| < |a_n|.
    """
    p = [GaussianRational.coerce(c) for c in coefficients]
    while p and p[-1].is_zero():
        p.pop()
    if not p:
        raise ValueError("zero polynomial")
    while len(p) > 1:
        a0, an = p[0], p[-1]
        if a0.modulus_squared() >= an.modulus_squared():
            return False
        star = _reciprocal(p)
        reduced = [an.conjugate() * c - a0 * s for c, s in zip(p, star)]
        p = reduced[1:]
    return True


def _exact_spectrum(M: Matrix) -> Optional[List[GaussianRational]]:
    roots, leftover = gaussian_roots(charpoly(M))
    if len(leftover) > 1:
        return None
    return [mu for mu, multiplicity in roots for _ in range(multiplicity)]


def check_extension(
    F: PolyMap,
    ideal: IdealPresentation,
    bound: Optional[WeightClass] = None,
    truncation: Optional[int] = None,
) -> ExtensionReport:
    """Invertibility, contraction and invariance of I under F, as far as decidable.

    Invariance is only tested when the linear part is invertible, contracting
    and has a Gaussian-rational spectrum; otherwise it is reported as None.
    """
    if len(F) != F.dimension:
        raise DimensionMismatch("a self-map is required")
    if ideal.dimension != F.dimension:
        raise DimensionMismatch("map and ideal live in different dimensions")
    M = F.linear_matrix()
    invertible = not determinant(M).is_zero()

    values = _exact_spectrum(M)
    if values is not None:
        contracting = all(mu.modulus_squared() < 1 for mu in values)
    else:
        contracting = schur_cohn_contracting(charpoly(M))
    logger.info("extension check: invertible=%s contracting=%s", invertible, contracting)
    if not (invertible and contracting) or values is None:
        return ExtensionReport(invertible, contracting, None)

    spectrum = spectrum_of(F)
    if truncation is None:
        truncation = max(F.degree, ideal.degree, 1) + 2
    truncation = max(truncation, resonance_bound(spectrum))
    try:
        cert = poincare_dulac(F, truncation)
        transported = transport_ideal(ideal, cert.conjugacy, truncation, spectrum)
        cofactor_matrix(transported, cert.normalized, spectrum, bound, truncation=truncation)
    except NotInvariant as err:
        logger.info("generator %d is not mapped into the ideal", err.index)
        return ExtensionReport(True, True, False, spectrum, err.index)
    except QuasiHomError as err:
        logger.warning("invariance check skipped: %s", err)
        return ExtensionReport(True, True, None, spectrum)
    return ExtensionReport(True, True, True, spectrum)
