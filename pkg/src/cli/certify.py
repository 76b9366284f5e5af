"""Independent re-verification of serialized normal forms and results."""

import logging
from typing import List

from ..invariant.cofactors import IdealPresentation, cofactor_matrix, minimal_generators, transport_ideal
from ..invariant.extraction import QHResult, essential_indices
from ..invariant.membership import truncated_membership
from ..normalform.jordan import is_lower_jordan
from ..normalform.poincare_dulac import NormalFormCertificate, is_normal_form, verify_conjugacy
from ..polyring.grading import is_weighted_homogeneous, lambda_degree
from ..polyring.polynomial import Polynomial, compose
from ..spectrum.lattice import weight_vector
from ..utils.errors import CertificationError, QuasiHomError
from ..utils.linalg import determinant, matrices_equal
from .codec import NORMAL_FORM, RESULT, Document, check_header, normal_form_from_document, result_from_document

logger = logging.getLogger(__name__)


def certify_normal_form(cert: NormalFormCertificate) -> List[str]:
    if not is_normal_form(cert.normalized, cert.spectrum):
        raise CertificationError("normalized map is not in normal form for the stated spectrum")
    if not verify_conjugacy(cert):
        raise CertificationError(f"H o F != F~ o H modulo degree {cert.truncation_degree + 1}")
    return ["normal form", "conjugacy"]


def _combination(cofactors, generators, dimension: int) -> Polynomial:
    return sum((c * g for c, g in zip(cofactors, generators)), Polynomial.zero(dimension))


def _check_cofactors(result: QHResult) -> None:
    """A0 is lower Jordan with diagonal lambda^gamma_i and is recomputed from the generators."""
    spectrum, r = result.spectrum, len(result.generators_P)
    A0 = [list(row) for row in result.a0]
    if len(A0) != r or any(len(row) != r for row in A0):
        raise CertificationError(f"A0 is not {r} x {r}")
    if not is_lower_jordan(A0):
        raise CertificationError("A0 is not lower Jordan")
    for i, gamma in enumerate(result.classes):
        if A0[i][i] != gamma.value:
            raise CertificationError(f"A0[{i}][{i}] = {A0[i][i]} is not lambda^{list(gamma.representative)}")
    try:
        source = IdealPresentation(tuple(result.source_generators), spectrum.dimension)
        recomputed = cofactor_matrix(
            source, result.normalized_map, spectrum, result.class_bound, truncation=result.truncation_degree
        )
    except (QuasiHomError, ValueError) as err:
        raise CertificationError(f"cofactor matrix cannot be recomputed: {err}") from None
    if not matrices_equal(recomputed.a0(), A0):
        raise CertificationError("A0 is not the constant part of the cofactor matrix of the generators")


def _check_presentation(result: QHResult) -> None:
    """The generators are minimal and basis_change carries the input ideal onto them."""
    spectrum, d, N = result.spectrum, result.spectrum.dimension, result.truncation_degree
    source = list(result.source_generators)
    top = max([N] + [g.degree for g in source])
    for k, phi in enumerate(source):
        if truncated_membership(phi, source[:k] + source[k + 1:], top) is not None:
            raise CertificationError(f"generator {k} lies in the ideal of the others")

    if not result.input_generators:
        raise CertificationError("result does not record the input ideal")
    try:
        ideal = IdealPresentation(tuple(result.input_generators), d)
        cert = result.normal_form
        if not is_normal_form(cert.original, spectrum):
            ideal = transport_ideal(ideal, cert.conjugacy, N, spectrum)
        minimal = minimal_generators(ideal, spectrum, max(N, ideal.degree))
    except (QuasiHomError, ValueError) as err:
        raise CertificationError(f"input ideal cannot be presented again: {err}") from None
    T = result.basis_change
    if len(T) != len(minimal) or any(len(row) != len(minimal) for row in T):
        raise CertificationError(f"basis_change is not {len(minimal)} x {len(minimal)}")
    if determinant(T).is_zero():
        raise CertificationError("basis_change is singular")
    for i, row in enumerate(T):
        if _combination(row, minimal.generators, d) != source[i]:
            raise CertificationError(f"generator {i} != sum_j basis_change[{i}][j] phi_j of the input ideal")


def certify_result(result: QHResult) -> List[str]:
    """Check every stored claim of a result from its own data."""
    spectrum = result.spectrum
    d = spectrum.dimension
    P = list(result.generators_P)
    r = len(P)
    passed: List[str] = []

    if result.normal_form is None or result.normalized_map is None:
        raise CertificationError("result carries no normal form")
    passed.extend(certify_normal_form(result.normal_form))

    if tuple(result.weights) != tuple(weight_vector(spectrum)):
        raise CertificationError(f"weights {list(result.weights)} are not the weights of the spectrum")
    for i, (Pi, gamma, degree) in enumerate(zip(P, result.classes, result.degrees)):
        own = lambda_degree(Pi, spectrum) if not Pi.is_zero() else None
        if own is None or own.representative != gamma.representative:
            raise CertificationError(f"P[{i}] is not lambda-homogeneous of class {gamma.representative}")
        if is_weighted_homogeneous(Pi, result.weights) != degree:
            raise CertificationError(f"P[{i}] is not weighted homogeneous of degree {degree}")
    for i in range(r - 1):
        if result.classes[i + 1].modulus > result.classes[i].modulus:
            raise CertificationError(f"classes are not non-decreasing at {i + 1}")
    passed.append("weighted homogeneous")

    _check_presentation(result)
    _check_cofactors(result)
    passed.append("cofactors")

    equality = result.equality
    if equality is None:
        raise CertificationError("result carries no equality certificate")
    N = equality.truncation_degree
    for i, phi in enumerate(result.source_generators):
        if _combination(equality.B[i], P, d) != phi:
            raise CertificationError(f"generator {i} != sum_j B[{i}][j] P[j]")
        for j in range(r):
            if equality.B[i][j].constant_term() != equality.B0[i][j]:
                raise CertificationError(f"B0[{i}][{j}] is not the constant term of B[{i}][{j}]")
            expected = 1 if i == j else 0
            if j >= i and equality.B0[i][j] != expected:
                raise CertificationError(f"B0 is not unit lower triangular at ({i}, {j})")
    for i in range(r):
        recovered = sum(
            (w.multiply(phi, N) for w, phi in zip(equality.inverse_witness[i], result.source_generators)),
            Polynomial.zero(d),
        )
        if recovered.truncate(N) != P[i].truncate(N):
            raise CertificationError(f"P[{i}] is not recovered from the generators modulo degree {N + 1}")
    if tuple(equality.essential) != tuple(range(r)) or essential_indices(P, spectrum) != tuple(range(r)):
        raise CertificationError("some extracted generator is redundant")
    passed.append("equality")

    filtration = result.filtration
    if filtration is None or not filtration.holds:
        raise CertificationError("result carries no valid filtration certificate")
    for i in range(r):
        image = compose(P[i], result.normalized_map)
        if len(filtration.cofactors[i]) != i + 1 or _combination(filtration.cofactors[i], P, d) != image:
            raise CertificationError(f"P[{i}] o F is not sum_(j <= {i}) c_j P[j]")
    passed.append("filtration")
    return passed


def certify_document(document: Document) -> List[str]:
    """Names of the checks passed; CertificationError on the first failure."""
    kind = check_header(document, RESULT, NORMAL_FORM)
    if kind == NORMAL_FORM:
        passed = certify_normal_form(normal_form_from_document(document))
    else:
        passed = certify_result(result_from_document(document))
    logger.info("certified: %s", ", ".join(passed))
    return passed
