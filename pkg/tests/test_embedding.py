from fractions import Fraction

import pytest

from conftest import ideal, poly, poly_map
from src.embedding.checks import check_extension, check_m2, schur_cohn_contracting
from src.embedding.elimination import eliminate_variable, solve_for_variable
from src.graphs.embedding import reduce_embedding
from src.polyring.polynomial import PolyMap, Polynomial, compose
from src.utils.errors import NoLinearPart

XYZ = ("x", "y", "z")
XZ = ("x", "z")


class TestM2:
    def test_linear_part_present(self):
        report = check_m2(ideal("x^2 - y"))
        assert not report.in_m2
        assert report.offending_generator == 0
        assert report.linear_part == ((0, -1),)

    def test_in_m2(self):
        assert check_m2(ideal("x^2 - y^2")).in_m2
        assert check_m2(ideal("x^2 + y^3", "x*y")).in_m2

    def test_second_generator_offends(self):
        assert check_m2(ideal("x*y", "x + y^2")).offending_generator == 1

    def test_empty_ideal(self):
        assert check_m2(ideal()).in_m2


class TestSchurCohn:
    @pytest.mark.parametrize(
        "coefficients, inside",
        [
            ([Fraction(1, 4), 0, 1], True),
            ([-2, 0, 1], False),
            ([Fraction(-1, 2), 1], True),
            ([-1, 1], False),
            ([1, Fraction(-5, 2), 1], False),
            ([Fraction(1, 6), Fraction(-5, 6), 1], True),
        ],
    )
    def test_unit_disk(self, coefficients, inside):
        assert schur_cohn_contracting(coefficients) is inside

    def test_trailing_zeros_are_ignored(self):
        assert schur_cohn_contracting([Fraction(-1, 2), 1, 0])

    def test_zero_polynomial(self):
        with pytest.raises(ValueError):
            schur_cohn_contracting([0, 0])


class TestExtension:
    def test_invariant(self, worked_ideal, diagonal_map):
        report = check_extension(diagonal_map, worked_ideal)
        assert report.invertible and report.contracting
        assert report.invariant is True
        assert report.spectrum.entries == (Fraction(1, 2), Fraction(1, 4))

    def test_not_invariant(self):
        report = check_extension(poly_map("x/2", "y/2"), ideal("x^2 - y"))
        assert report.invariant is False
        assert report.failing_generator == 0

    def test_irrational_spectrum_is_undecided(self):
        report = check_extension(poly_map("y", "x/2"), ideal("x"))
        assert report.invertible and report.contracting
        assert report.invariant is None
        assert report.spectrum is None

    def test_not_contracting(self):
        report = check_extension(poly_map("2*x", "y/2"), ideal("x"))
        assert report.invertible
        assert not report.contracting
        assert report.invariant is None

    def test_singular(self):
        report = check_extension(PolyMap([poly("x/2"), Polynomial.zero(2)]), ideal("x"))
        assert not report.invertible
        assert report.invariant is None


class TestElimination:
    def test_solve_for_variable(self):
        g = poly("y - x^2 - y^2")
        phi = solve_for_variable(g, 1, 4)
        assert phi == poly("x^2 + x^4")
        assert compose(g, PolyMap([poly("x"), phi]), 4).is_zero()

    def test_solve_needs_linear_term(self):
        with pytest.raises(NoLinearPart):
            solve_for_variable(poly("x^2 - y^2"), 1, 3)

    def test_eliminate_curve(self):
        reduced, step = eliminate_variable(ideal("y - x^2", "z^2 - x^3", variables=XYZ), 6)
        assert reduced.dimension == 2
        assert reduced.generators == (poly("z^2 - x^3", variables=XZ),)
        assert step.variable == 1
        assert step.generator == 0
        assert step.solution == poly("x^2", variables=XYZ)

    def test_eliminate_to_empty_ideal(self):
        reduced, step = eliminate_variable(ideal("x^2 - y"), 5)
        assert reduced.dimension == 1
        assert len(reduced) == 0
        assert step.variable == 1

    def test_no_linear_part(self):
        with pytest.raises(NoLinearPart):
            eliminate_variable(ideal("x^2 + y^2"), 4)


class TestReduceEmbedding:
    def test_space_curve(self):
        reduction = reduce_embedding(ideal("y - x^2", "z^2 - x^3", variables=XYZ), 6)
        assert reduction.embedding_dimension == 2
        assert reduction.variables == (0, 2)
        assert reduction.reduced.generators == (poly("z^2 - x^3", variables=XZ),)
        assert [step.original_variable for step in reduction.steps] == [1]
        assert reduction.truncation == 6

    def test_two_linear_generators(self):
        reduction = reduce_embedding(ideal("z - x*y", "y - x^2", variables=XYZ), 5)
        assert reduction.embedding_dimension == 1
        assert reduction.variables == (0,)
        assert len(reduction.reduced) == 0
        assert [step.original_variable for step in reduction.steps] == [2, 1]

    def test_already_in_m2(self):
        reduction = reduce_embedding(ideal("x^2 - y^3"), 5)
        assert reduction.embedding_dimension == 2
        assert reduction.steps == ()
        assert reduction.reduced == reduction.original
