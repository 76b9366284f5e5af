"""Node functions of the quasi-homogenization sequence."""

import dataclasses
import logging

from ..invariant.cofactors import (
    IdealPresentation,
    cofactor_matrix,
    jordanize_A0,
    minimal_generators,
    transport_ideal,
)
from ..invariant.extraction import extract_generators, filtration_witnesses, verify_equality
from ..normalform.poincare_dulac import (
    NormalFormCertificate,
    is_normal_form,
    poincare_dulac,
    spectrum_of,
)
from ..polyring.polynomial import PolyMap, compose
from ..spectrum.classes import weight_class
from ..spectrum.resonance import resonance_bound
from ..states.types import QuasiHomogenizeState
from ..utils.errors import DimensionMismatch, Mismatch
from .common import note, stage

logger = logging.getLogger(__name__)


def default_truncation(spectrum, ideal: IdealPresentation) -> int:
    """resonance bound + largest generator degree + 2."""
    return resonance_bound(spectrum) + ideal.degree + 2


@stage("normalize")
def normalize(state: QuasiHomogenizeState) -> dict:
    """Bring F to normal form and carry the ideal along."""
    F, ideal, options = state["map"], state["ideal"], state["options"]
    if ideal.dimension != F.dimension:
        raise DimensionMismatch(f"ideal in {ideal.dimension} variables, map in {F.dimension}")
    spectrum = spectrum_of(F)
    N = options.degree or default_truncation(spectrum, ideal)
    if is_normal_form(F, spectrum):
        cert = NormalFormCertificate(F, F, PolyMap.identity(F.dimension), N, spectrum)
        transported = ideal
        logger.info("map is already in normal form")
    else:
        cert = poincare_dulac(F, N)
        transported = transport_ideal(ideal, cert.conjugacy, N, spectrum)
    return {
        "normal_form": cert,
        "spectrum": spectrum,
        "truncation": N,
        "transported": transported,
        **note("spectrum %s, truncation degree %d", [str(z) for z in spectrum], N),
    }


@stage("minimize")
def minimize(state: QuasiHomogenizeState) -> dict:
    transported, N = state["transported"], state["truncation"]
    minimal = minimal_generators(transported, state["spectrum"], max(N, transported.degree))
    return {"minimal": minimal, **note("%d of %d generators are minimal", len(minimal), len(transported))}


@stage("cofactors")
def cofactors(state: QuasiHomogenizeState) -> dict:
    options, spectrum = state["options"], state["spectrum"]
    bound = weight_class(spectrum, options.class_bound) if options.class_bound is not None else None
    matrix = cofactor_matrix(
        state["minimal"],
        state["normal_form"].normalized,
        spectrum,
        bound,
        pivot_order=options.pivot_order,
        truncation=state["truncation"],
    )
    return {"cofactor_matrix": matrix, **note("class bound %s", matrix.bound.representative)}


@stage("jordanize")
def jordanize(state: QuasiHomogenizeState) -> dict:
    ideal, matrix, T = jordanize_A0(
        state["minimal"],
        state["cofactor_matrix"],
        state["normal_form"].normalized,
        state["spectrum"],
        truncation=state["truncation"],
    )
    return {"jordanized": ideal, "cofactor_matrix": matrix, "transition": T}


@stage("extract")
def extract(state: QuasiHomogenizeState) -> dict:
    matrix = state["cofactor_matrix"]
    result = extract_generators(state["jordanized"], matrix, state["spectrum"], state["transition"])
    result = dataclasses.replace(
        result,
        truncation_degree=state["truncation"],
        class_bound=matrix.bound,
        normal_form=state["normal_form"],
        normalized_map=state["normal_form"].normalized,
        input_generators=tuple(state["ideal"].generators),
    )
    return {"result": result, **note("weights %s, degrees %s", result.weights, result.degrees)}


@stage("verify")
def verify(state: QuasiHomogenizeState) -> dict:
    result, spectrum = state["result"], state["spectrum"]
    if not state["options"].verify:
        return note("verification skipped")
    source = IdealPresentation(result.source_generators, spectrum.dimension)
    equality = verify_equality(source, result, spectrum, state["truncation"])
    filtration = filtration_witnesses(result, state["normal_form"].normalized, spectrum)
    if not filtration.holds:
        i = filtration.failing_index
        raise Mismatch(
            f"P_{i} o F is not in the ideal of P_0..P_{i}",
            index=i,
            residual=compose(result.generators_P[i], state["normal_form"].normalized),
        )
    result = dataclasses.replace(result, equality=equality, filtration=filtration)
    return {"result": result, **note("equality and filtration certified")}
