import logging
import random
from fractions import Fraction

import pytest

from conftest import poly, poly_map, random_coefficient, random_small_spectrum
from src.exactnum.numbers import GaussianRational
from src.normalform.jordan import is_lower_jordan, jordan_lower
from src.normalform.poincare_dulac import (
    NormalFormCertificate,
    exponents_of_degree,
    is_normal_form,
    poincare_dulac,
    spectrum_of,
    verify_conjugacy,
)
from src.polyring.polynomial import PolyMap, Polynomial
from src.spectrum.resonance import resonance_bound
from src.utils.errors import IrrationalSpectrum, NotContracting, SingularLinearPart
from src.utils.linalg import identity, inverse, matmul

HALF, QUARTER = Fraction(1, 2), Fraction(1, 4)
XYZ = ("x", "y", "z")


def random_jet(rng):
    """Contracting jet of degree <= 3: a conjugated lower Jordan matrix plus quadratic and cubic terms."""
    spectrum = random_small_spectrum(rng, rng.randint(1, 3))
    d = spectrum.dimension
    J = [[spectrum[i] if i == j else int(j == i - 1 and spectrum.jordan_flags[j]) for j in range(d)] for i in range(d)]
    U = identity(d)
    for _ in range(d):
        if d > 1:
            i, j = rng.sample(range(d), 2)
            U = [[U[r][k] + (U[j][k] * rng.choice([-1, 1]) if r == i else 0) for k in range(d)] for r in range(d)]
    M = matmul(matmul(U, J), inverse(U))
    components = []
    for row in M:
        p = Polynomial.linear_form(row)
        for _ in range(2):
            alpha = rng.choice(exponents_of_degree(d, rng.choice([2, 3])))
            p = p + Polynomial.monomial(alpha, random_coefficient(rng))
        components.append(p)
    return PolyMap(components, d)


class TestJordan:
    def test_diagonal_is_reordered(self):
        J, S = jordan_lower([[QUARTER, 0], [0, HALF]])
        assert J == [[HALF, 0], [0, QUARTER]]
        assert matmul(matmul(inverse(S), [[QUARTER, 0], [0, HALF]]), S) == J

    def test_lower_block(self):
        M = [[HALF, 0], [3, HALF]]
        J, S = jordan_lower(M)
        assert J == [[HALF, 0], [1, HALF]]
        assert matmul(matmul(inverse(S), M), S) == J

    def test_upper_block_becomes_lower(self):
        M = [[HALF, 1], [0, HALF]]
        J, S = jordan_lower(M)
        assert is_lower_jordan(J)
        assert J[1][0] == 1 and J[0][1] == 0
        assert matmul(matmul(inverse(S), M), S) == J

    def test_complex_eigenvalues(self):
        # eigenvalues +-i/2
        M = [[0, QUARTER], [-1, 0]]
        J, S = jordan_lower(M)
        assert {J[0][0], J[1][1]} == {GaussianRational(0, HALF), GaussianRational(0, -HALF)}
        assert J[1][0] == 0
        assert matmul(matmul(inverse(S), M), S) == J

    def test_irrational(self):
        with pytest.raises(IrrationalSpectrum):
            jordan_lower([[0, 1], [HALF, 0]])

    def test_singular(self):
        with pytest.raises(SingularLinearPart):
            jordan_lower([[HALF, 0], [0, 0]])

    def test_not_contracting(self):
        with pytest.raises(NotContracting):
            spectrum_of(poly_map("2*x", "y/2"))

    def test_spectrum_of(self):
        spectrum = spectrum_of(poly_map("x/2 + y", "y/4"))
        assert spectrum.entries == (HALF, QUARTER)
        assert spectrum.jordan_flags == (False,)


class TestNormalFormPredicate:
    def test_resonant_term_is_allowed(self, half_quarter):
        assert is_normal_form(poly_map("x/2", "y/4 + x^2"), half_quarter)
        assert is_normal_form(poly_map("x/2", "y/4"), half_quarter)

    def test_removable_term(self, half_quarter):
        assert not is_normal_form(poly_map("x/2", "y/4 + x^3"), half_quarter)
        assert not is_normal_form(poly_map("x/2 + x*y", "y/4"), half_quarter)

    def test_linear_part_must_be_lower_jordan(self, half_quarter):
        assert not is_normal_form(poly_map("x/2 + y", "y/4"), half_quarter)
        assert not is_normal_form(poly_map("y/4", "x/2"), half_quarter)


class TestPoincareDulac:
    def test_removes_non_resonant_cubic(self, half_quarter):
        cert = poincare_dulac(poly_map("x/2", "y/4 + x^3"), 4)
        assert cert.spectrum == half_quarter
        assert cert.normalized == poly_map("x/2", "y/4")
        assert cert.conjugacy == poly_map("x", "y + 8*x^3")
        assert verify_conjugacy(cert)

    def test_normal_form_is_fixed(self):
        F = poly_map("x/2", "y/4 + x^2")
        cert = poincare_dulac(F, 5)
        assert cert.normalized == F
        assert cert.conjugacy == PolyMap.identity(2)

    def test_idempotent(self):
        F = poly_map("x/2 + y^2", "y/4 + x^2 - x*y + x^3")
        first = poincare_dulac(F, 4)
        second = poincare_dulac(first.normalized, 4)
        assert second.normalized == first.normalized
        assert second.conjugacy == PolyMap.identity(2)

    def test_non_diagonal_linear_part(self, half_quarter):
        cert = poincare_dulac(poly_map("x/2 + y", "y/4 + x^2"), 3)
        assert cert.spectrum == half_quarter
        assert is_normal_form(cert.normalized, half_quarter)
        assert verify_conjugacy(cert)

    def test_rotating_spectrum(self, rotating_spectrum):
        F = poly_map("-x/2 + y*z", "i/2*y + x^2", "i/2*z + x*y", variables=XYZ)
        cert = poincare_dulac(F, 3)
        assert cert.spectrum == rotating_spectrum
        assert is_normal_form(cert.normalized, rotating_spectrum)
        assert cert.normalized.degree == 1

    @pytest.mark.parametrize("seed", range(50))
    def test_random_jets(self, seed):
        F = random_jet(random.Random(seed))
        spectrum = spectrum_of(F)
        cert = poincare_dulac(F, resonance_bound(spectrum) + 2)
        assert cert.spectrum == spectrum
        assert is_normal_form(cert.normalized, spectrum)
        assert verify_conjugacy(cert)
        # lower triangular: component i only sees x_1..x_(i+1)
        assert all(cert.normalized[i].depends_only_on(i + 1) for i in range(F.dimension))

    def test_low_truncation_warns(self, caplog):
        with caplog.at_level(logging.WARNING):
            cert = poincare_dulac(poly_map("x/2", "y/4 + x^2"), 1)
        assert "resonance bound" in caplog.text
        assert cert.normalized == poly_map("x/2", "y/4")

    def test_irrational_spectrum(self):
        with pytest.raises(IrrationalSpectrum):
            poincare_dulac(poly_map("y", "x/2"), 3)


class TestVerifyConjugacy:
    def certificate(self, conjugacy):
        return NormalFormCertificate(
            original=poly_map("x/2", "y/4 + x^3"),
            normalized=poly_map("x/2", "y/4"),
            conjugacy=conjugacy,
            truncation_degree=4,
            spectrum=spectrum_of(poly_map("x/2", "y/4")),
        )

    def test_accepts_correct_conjugacy(self):
        assert verify_conjugacy(self.certificate(poly_map("x", "y + 8*x^3")))

    def test_rejects_corrupted_coefficient(self):
        assert not verify_conjugacy(self.certificate(poly_map("x", "y + 7*x^3")))

    def test_rejects_singular_conjugacy(self):
        assert not verify_conjugacy(self.certificate(PolyMap([poly("x"), Polynomial.zero(2)])))


def test_exponents_of_degree():
    assert exponents_of_degree(2, 2) == [(2, 0), (1, 1), (0, 2)]
    assert len(exponents_of_degree(3, 3)) == 10
