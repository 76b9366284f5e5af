"""Shared fixtures: the worked spectra, maps and ideals."""

import json
from fractions import Fraction

import pytest

from src.exactnum.numbers import GaussianRational
from src.invariant.cofactors import IdealPresentation
from src.polyring.parsing import parse_polynomial
from src.polyring.polynomial import PolyMap, Polynomial
from src.spectrum.ordering import OrderedSpectrum, nicely_order
from src.spectrum.resonance import normal_form_support

XY = ("x", "y")


def poly(text, variables=XY):
    return parse_polynomial(text, variables)


def poly_map(*texts, variables=XY):
    return PolyMap([poly(t, variables) for t in texts], len(variables))


def ideal(*texts, variables=XY):
    return IdealPresentation(tuple(poly(t, variables) for t in texts), len(variables))


@pytest.fixture
def half_quarter():
    """lambda = (1/2, 1/4)."""
    return OrderedSpectrum((Fraction(1, 2), Fraction(1, 4)))


@pytest.fixture
def rotating_spectrum():
    """lambda = (-1/2, i/2, i/2)."""
    return OrderedSpectrum((Fraction(-1, 2), GaussianRational(0, Fraction(1, 2)), GaussianRational(0, Fraction(1, 2))))


@pytest.fixture
def diagonal_map():
    return poly_map("x/2", "y/4")


@pytest.fixture
def worked_ideal():
    return ideal("x^2 - y", "x*(x^2 - y) + x^5")


@pytest.fixture
def problem_file(tmp_path):
    """Write a problem document and return its path."""

    def write(map_texts=None, ideal_texts=None, name="problem.json", **extra):
        document = {"format": "quasihom-problem", "version": 1, "variables": ["x", "y"]}
        if map_texts is not None:
            document["map"] = list(map_texts)
        if ideal_texts is not None:
            document["ideal"] = list(ideal_texts)
        document.update(extra)
        path = tmp_path / name
        path.write_text(json.dumps(document))
        return path

    return write


# Eigenvalues of modulus at most 1/2, so resonance bounds stay small.
SMALL_EIGENVALUES = [
    GaussianRational(Fraction(1, 2)),
    GaussianRational(Fraction(-1, 2)),
    GaussianRational(0, Fraction(1, 2)),
    GaussianRational(0, Fraction(-1, 2)),
    GaussianRational(Fraction(3, 8)),
    GaussianRational(Fraction(1, 3)),
    GaussianRational(Fraction(1, 4), Fraction(1, 4)),
    GaussianRational(Fraction(1, 4), Fraction(-1, 4)),
    GaussianRational(Fraction(1, 4)),
    GaussianRational(Fraction(-1, 4)),
    GaussianRational(0, Fraction(1, 4)),
    GaussianRational(Fraction(1, 8)),
]


def random_spectrum(rng, dimension):
    """Gaussian-rational spectrum with denominators 4, nicely ordered; may drop entries."""
    values = [
        GaussianRational(Fraction(rng.randint(-3, 3), 4), Fraction(rng.randint(-3, 3), 4))
        for _ in range(dimension)
    ]
    values = [z for z in values if 0 < z.modulus_squared() < 1] or [GaussianRational(Fraction(1, 2))]
    spectrum, _ = nicely_order(values)
    return spectrum


def random_small_spectrum(rng, dimension):
    """Spectrum drawn from SMALL_EIGENVALUES, with repeats and random Jordan flags."""
    values = [rng.choice(SMALL_EIGENVALUES) for _ in range(dimension)]
    if dimension > 1 and rng.random() < 0.3:
        values[1] = values[0]
    spectrum, _ = nicely_order(values)
    flags = tuple(
        spectrum[k] == spectrum[k + 1] and rng.random() < 0.5 for k in range(dimension - 1)
    )
    return OrderedSpectrum(spectrum.entries, flags)


def random_coefficient(rng, denominator=8):
    return Fraction(rng.choice([-3, -2, -1, 1, 2, 3]), rng.randint(1, denominator))


def random_normal_map(rng, spectrum, terms=2):
    """Lower Jordan linear part from `spectrum` plus random resonant terms of degree >= 2."""
    d = spectrum.dimension
    components = []
    for i in range(d):
        p = Polynomial.monomial(tuple(int(k == i) for k in range(d)), spectrum[i])
        if i and spectrum.jordan_flags[i - 1]:
            p = p + Polynomial.variable(i - 1, d)
        support = [alpha for alpha in normal_form_support(spectrum, i) if sum(alpha) >= 2]
        for alpha in rng.sample(support, min(terms, len(support))):
            p = p + Polynomial.monomial(alpha, random_coefficient(rng))
        components.append(p)
    return PolyMap(components, d)
