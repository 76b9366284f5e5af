import dataclasses
import random
from fractions import Fraction

import pytest

from conftest import ideal, poly, poly_map
from src.cli.certify import certify_result
from src.graphs.homogenize import create_quasi_homogenize_graph, quasi_homogenize
from src.invariant.cofactors import IdealPresentation
from src.nodes.pipeline import default_truncation, verify
from src.normalform.poincare_dulac import NormalFormCertificate
from src.polyring.grading import is_weighted_homogeneous
from src.polyring.parsing import format_polynomial
from src.polyring.polynomial import PolyMap, Polynomial
from src.utils.config import PipelineOptions
from src.utils.errors import CertificationError, IrrationalSpectrum, Mismatch, NotInvariant


def test_graph_compiles():
    graph = create_quasi_homogenize_graph()
    nodes = set(graph.get_graph().nodes)
    assert {"normalize", "minimize", "cofactors", "jordanize", "extract", "verify"} <= nodes


def test_default_truncation(worked_ideal, half_quarter):
    assert default_truncation(half_quarter, worked_ideal) == 9


class TestQuasiHomogenize:
    def test_worked_example(self, worked_ideal, diagonal_map):
        result = quasi_homogenize(worked_ideal, diagonal_map, PipelineOptions())
        assert result.generators_P == (poly("x^2 - y"), poly("x^5"))
        assert result.weights == (1, 2)
        assert result.degrees == (2, 5)
        assert result.truncation_degree == 9
        assert result.class_bound.value == Fraction(1, 32)
        assert result.a0 == ((Fraction(1, 4), 0), (0, Fraction(1, 32)))
        assert result.equality.essential == (0, 1)
        assert result.filtration.holds

    def test_transports_to_normal_form_coordinates(self):
        F = poly_map("x/2", "y/4 + x^3")
        result = quasi_homogenize(ideal("y + 8*x^3 - x^2"), F, PipelineOptions())
        assert result.normalized_map == poly_map("x/2", "y/4")
        assert result.normal_form.conjugacy == poly_map("x", "y + 8*x^3")
        assert [format_polynomial(P) for P in result.generators_P] == ["-x^2 + y"]
        assert result.degrees == (2,)

    @pytest.mark.parametrize("degree", [None, 6, 9])
    def test_series_conjugacy(self, degree):
        # (y - x^2) o F == (1/4 + y^2)(y - x^2), and the conjugacy to (x/2, y/4) is an infinite series
        F = poly_map("x/2 + x*y", "y/4 + x^2*y + y^3")
        result = quasi_homogenize(ideal("y - x^2"), F, PipelineOptions(degree=degree))
        assert result.normalized_map == poly_map("x/2", "y/4")
        assert [format_polynomial(P) for P in result.generators_P] == ["-x^2 + y"]
        assert result.degrees == (2,)
        assert result.a0 == ((Fraction(1, 4),),)
        assert result.filtration.holds
        assert certify_result(result)[-1] == "filtration"

    def test_larger_class_bound(self, worked_ideal, diagonal_map):
        result = quasi_homogenize(worked_ideal, diagonal_map, PipelineOptions(class_bound=(7, 0)))
        assert result.class_bound.value == Fraction(1, 128)
        assert result.generators_P == (poly("x^2 - y"), poly("x^5"))

    def test_empty_ideal(self, diagonal_map):
        result = quasi_homogenize(ideal(), diagonal_map, PipelineOptions())
        assert result.size == 0
        assert result.weights == (1, 2)
        assert result.filtration.holds

    def test_skip_verification(self, worked_ideal, diagonal_map):
        result = quasi_homogenize(worked_ideal, diagonal_map, PipelineOptions(verify=False))
        assert result.equality is None
        assert result.filtration is None

    def test_not_invariant_is_labelled(self):
        with pytest.raises(NotInvariant) as info:
            quasi_homogenize(ideal("x^2 - y"), poly_map("x/2", "y/2"), PipelineOptions())
        assert info.value.stage == "cofactors"
        assert str(info.value).startswith("[cofactors]")

    def test_irrational_spectrum_is_labelled(self):
        with pytest.raises(IrrationalSpectrum) as info:
            quasi_homogenize(ideal("x"), poly_map("y", "x/2"), PipelineOptions())
        assert info.value.stage == "normalize"

    def test_failed_filtration_raises(self, half_quarter):
        result = quasi_homogenize(ideal("y"), poly_map("x/2", "y/4"), PipelineOptions(verify=False))
        # y o F = y/4 + x^2 leaves <y>
        F = poly_map("x/2", "y/4 + x^2")
        N = result.truncation_degree
        state = {
            "result": result,
            "spectrum": half_quarter,
            "options": PipelineOptions(),
            "truncation": N,
            "normal_form": NormalFormCertificate(F, F, PolyMap.identity(2), N, half_quarter),
        }
        with pytest.raises(Mismatch) as info:
            verify(state)
        assert info.value.stage == "verify"
        assert info.value.index == 0
        assert info.value.residual == poly("y/4 + x^2")


def random_quasi_homogeneous(rng):
    """A diagonal contraction with weights n and an ideal of n-homogeneous generators."""
    n1, n2 = rng.choice([(1, 1), (1, 2), (1, 3), (2, 3)])
    F = poly_map(f"x/{2 ** n1}", f"y/{2 ** n2}")
    generators = []
    for _ in range(rng.randint(1, 3)):
        D = rng.randint(n2, n2 + 4)
        monomials = [(a, (D - a * n1) // n2) for a in range(D // n1 + 1) if (D - a * n1) % n2 == 0]
        chosen = rng.sample(monomials, min(len(monomials), rng.randint(1, 2)))
        terms = {alpha: Fraction(rng.choice([-3, -2, -1, 1, 2, 3]), rng.randint(1, 4)) for alpha in chosen}
        generators.append(Polynomial(terms, 2))
    return (n1, n2), F, IdealPresentation(tuple(generators), 2)


@pytest.mark.parametrize("seed", range(30))
def test_quasi_homogeneous_round_trip(seed):
    weights, F, I = random_quasi_homogeneous(random.Random(seed))
    result = quasi_homogenize(I, F, PipelineOptions())
    assert result.weights == weights
    for P, degree in zip(result.generators_P, result.degrees):
        assert is_weighted_homogeneous(P, weights) == degree
    assert certify_result(result)[-1] == "filtration"


class TestCertifyResult:
    @pytest.fixture
    def worked_result(self, worked_ideal, diagonal_map):
        return quasi_homogenize(worked_ideal, diagonal_map, PipelineOptions())

    def test_records_input_ideal(self, worked_result, worked_ideal):
        assert worked_result.input_generators == worked_ideal.generators
        assert certify_result(worked_result) == [
            "normal form",
            "conjugacy",
            "weighted homogeneous",
            "cofactors",
            "equality",
            "filtration",
        ]

    @pytest.mark.parametrize(
        "a0, message",
        [
            (((7, 0), (0, Fraction(1, 32))), "is not lambda"),
            (((Fraction(1, 4), 0), (1, Fraction(1, 32))), "not lower Jordan"),
            (((Fraction(1, 4),),), "is not 2 x 2"),
        ],
    )
    def test_rejects_altered_a0(self, worked_result, a0, message):
        with pytest.raises(CertificationError, match=message):
            certify_result(dataclasses.replace(worked_result, a0=a0))

    def test_rejects_altered_basis_change(self, worked_result):
        altered = dataclasses.replace(worked_result, basis_change=((3, 5), (0, 1)))
        with pytest.raises(CertificationError, match="basis_change"):
            certify_result(altered)

    def test_rejects_redundant_generators(self, worked_result):
        altered = dataclasses.replace(worked_result, source_generators=(poly("x^2 - y"), poly("x^3 - x*y")))
        with pytest.raises(CertificationError, match="lies in the ideal"):
            certify_result(altered)

    def test_rejects_missing_input_ideal(self, worked_result):
        with pytest.raises(CertificationError, match="input ideal"):
            certify_result(dataclasses.replace(worked_result, input_generators=()))

    def test_series_conjugacy_presentation(self):
        F = poly_map("x/2 + x*y", "y/4 + x^2*y + y^3")
        result = quasi_homogenize(ideal("y - x^2"), F, PipelineOptions())
        assert "cofactors" in certify_result(result)
        with pytest.raises(CertificationError, match="basis_change"):
            certify_result(dataclasses.replace(result, basis_change=((2,),)))
