import itertools
import random
from fractions import Fraction

import pytest

from conftest import random_spectrum
from src.exactnum.numbers import ONE, GaussianRational
from src.normalform.poincare_dulac import exponents_of_degree
from src.spectrum.classes import (
    class_add,
    class_compare,
    class_difference,
    class_precedes,
    class_successor,
    classes_up_to,
    log_lambda,
    weight_class,
    zero_class,
)
from src.spectrum.lattice import relation_lattice, weight_vector
from src.spectrum.ordering import (
    OrderedSpectrum,
    Ordering,
    lambda_compare,
    lambda_key,
    lambda_modulus,
    lambda_power,
    nicely_order,
)
from src.spectrum.resonance import (
    enumerate_exponents,
    is_resonant,
    normal_form_support,
    resonance_bound,
    resonance_set,
)
from src.utils.errors import NotContracting, SingularLinearPart

HALF, QUARTER = Fraction(1, 2), Fraction(1, 4)
I_HALF = GaussianRational(0, HALF)


def all_exponents(dimension, degree):
    return [a for a in itertools.product(range(degree + 1), repeat=dimension) if sum(a) <= degree]


def exponents_up_to(dimension, degree):
    return [alpha for k in range(degree + 1) for alpha in exponents_of_degree(dimension, k)]


class TestOrdering:
    def test_nicely_order_sorts_by_modulus(self):
        spectrum, permutation = nicely_order([QUARTER, HALF])
        assert spectrum.entries == (HALF, QUARTER)
        assert permutation == [1, 0]

    def test_rotating_spectrum_is_already_ordered(self):
        raw = [Fraction(-1, 2), I_HALF, I_HALF]
        spectrum, permutation = nicely_order(raw)
        assert list(spectrum.entries) == raw
        assert permutation == [0, 1, 2]

    def test_rejects_non_contracting(self):
        with pytest.raises(NotContracting):
            nicely_order([HALF, 1])

    def test_rejects_zero(self):
        with pytest.raises(SingularLinearPart):
            nicely_order([HALF, 0])

    def test_jordan_flag_needs_equal_eigenvalues(self):
        with pytest.raises(ValueError):
            OrderedSpectrum((HALF, QUARTER), (True,))

    def test_lambda_compare(self, half_quarter):
        assert lambda_compare(half_quarter, (2, 0), (0, 1)) == Ordering.GREATER
        assert lambda_compare(half_quarter, (0, 0), (1, 0)) == Ordering.LESS
        assert lambda_compare(half_quarter, (3, 1), (3, 1)) == Ordering.EQUAL

    def test_lambda_power_allows_negative_exponents(self, half_quarter):
        assert lambda_power(half_quarter, (2, -1)) == 1
        assert lambda_modulus(half_quarter, (1, 1)) == Fraction(1, 64)

    def test_order_is_total_and_additive(self):
        rng = random.Random(7)
        for _ in range(1000):
            spectrum = random_spectrum(rng, rng.randint(1, 4))
            exponents = exponents_up_to(spectrum.dimension, 3)
            a, b, c = (rng.choice(exponents) for _ in range(3))
            ab, bc = lambda_compare(spectrum, a, b), lambda_compare(spectrum, b, c)
            assert lambda_compare(spectrum, b, a) == Ordering(-ab)
            if ab != Ordering.LESS and bc != Ordering.LESS:
                assert lambda_compare(spectrum, a, c) != Ordering.LESS
            if ab != Ordering.LESS:
                shifted = lambda_compare(spectrum, tuple(x + z for x, z in zip(a, c)), tuple(y + z for y, z in zip(b, c)))
                assert shifted != Ordering.LESS


class TestResonances:
    def test_resonance_bound(self, half_quarter, rotating_spectrum):
        assert resonance_bound(half_quarter) == 2
        assert resonance_bound(OrderedSpectrum((HALF,))) == 1
        assert resonance_bound(rotating_spectrum) == 1

    def test_bound_is_least(self, half_quarter):
        M = resonance_bound(half_quarter)
        smallest = half_quarter.modulus(1)
        assert any(lambda_modulus(half_quarter, a) >= smallest for a in all_exponents(2, M) if sum(a) == M)
        assert all(lambda_modulus(half_quarter, a) < smallest for a in all_exponents(2, M + 3) if sum(a) > M)

    def test_resonance_sets(self, half_quarter, rotating_spectrum):
        assert set(resonance_set(half_quarter, 1)) == {(0, 1), (2, 0)}
        assert resonance_set(half_quarter, 0) == [(1, 0)]
        assert set(resonance_set(rotating_spectrum, 2)) == {(0, 0, 1), (0, 1, 0)}

    def test_normal_form_support(self, half_quarter):
        assert normal_form_support(half_quarter, 1) == [(2, 0)]
        assert normal_form_support(half_quarter, 0) == []
        jordan = OrderedSpectrum((HALF, HALF), (True,))
        assert normal_form_support(jordan, 1) == [(1, 0)]

    def test_support_is_the_guarded_resonance_set(self, half_quarter, rotating_spectrum):
        jordan = OrderedSpectrum((HALF, HALF), (True,))
        for spectrum in (half_quarter, rotating_spectrum, jordan):
            d = spectrum.dimension
            for i in range(d):
                unguarded = resonance_set(spectrum, i)
                own = tuple(1 if k == i else 0 for k in range(d))
                assert own in unguarded
                assert own not in normal_form_support(spectrum, i)
                assert set(normal_form_support(spectrum, i)) <= set(unguarded)
                assert {a for a in unguarded if sum(a) >= 2} <= set(normal_form_support(spectrum, i))

    def test_is_resonant(self, half_quarter):
        assert is_resonant(half_quarter, 1, (2, 0))
        assert is_resonant(half_quarter, 1, (0, 1))
        assert not is_resonant(half_quarter, 0, (1, 1))
        for i in range(2):
            for alpha in all_exponents(2, 6):
                assert is_resonant(half_quarter, i, alpha) == (alpha in resonance_set(half_quarter, i))

    def test_enumeration_is_in_lambda_order(self, half_quarter):
        found = enumerate_exponents(half_quarter, Fraction(1, 1024))
        assert found == sorted(found, key=lambda a: lambda_key(half_quarter, a))
        assert found[0] == (0, 0)
        assert (5, 0) in found and (6, 0) not in found


class TestClasses:
    def test_rotating_class(self, rotating_spectrum):
        gamma = weight_class(rotating_spectrum, (0, 1, 0))
        assert set(gamma.members) == {(0, 1, 0), (0, 0, 1)}

    def test_reordered_spectrum_separates(self):
        mu = OrderedSpectrum((I_HALF, I_HALF, Fraction(-1, 2)))
        gamma = weight_class(mu, (0, 1, 0))
        assert set(gamma.members) == {(1, 0, 0), (0, 1, 0)}
        assert (0, 0, 1) not in gamma

    def test_representative_is_lambda_minimum(self, half_quarter):
        gamma = weight_class(half_quarter, (2, 0))
        assert set(gamma.members) == {(2, 0), (0, 1)}
        assert gamma.representative == (0, 1)
        assert gamma.value == QUARTER

    def test_log_lambda(self, half_quarter):
        gamma = log_lambda(half_quarter, Fraction(1, 32))
        assert set(gamma.members) == {(5, 0), (3, 1), (1, 2)}
        assert log_lambda(half_quarter, 1) == zero_class(half_quarter)
        assert log_lambda(half_quarter, Fraction(1, 3)) is None
        with pytest.raises(ValueError):
            log_lambda(half_quarter, 0)

    def test_class_compare(self, half_quarter):
        zero = zero_class(half_quarter)
        x, y = weight_class(half_quarter, (1, 0)), weight_class(half_quarter, (0, 1))
        assert class_compare(half_quarter, zero, x) == Ordering.LESS
        assert class_compare(half_quarter, x, y) == Ordering.LESS
        assert class_compare(half_quarter, y, y) == Ordering.EQUAL

    def test_class_precedes(self, half_quarter):
        x, y = weight_class(half_quarter, (1, 0)), weight_class(half_quarter, (0, 1))
        assert class_precedes(half_quarter, x, y)
        assert class_precedes(half_quarter, y, y)
        assert not class_precedes(half_quarter, y, x)

    def test_successor(self, half_quarter):
        zero = zero_class(half_quarter)
        x = class_successor(half_quarter, zero)
        assert x.members == ((1, 0),)
        assert (2, 0) in class_successor(half_quarter, x)
        line = OrderedSpectrum((HALF,))
        gamma = weight_class(line, (3,))
        assert class_successor(line, gamma).representative == (4,)

    def test_sum_and_difference(self, half_quarter):
        x, y = weight_class(half_quarter, (1, 0)), weight_class(half_quarter, (0, 1))
        assert class_add(half_quarter, x, y) == weight_class(half_quarter, (3, 0))
        assert class_difference(half_quarter, y, x) == x
        assert class_difference(half_quarter, x, y) is None

    def test_classes_up_to_partition(self, half_quarter):
        classes = classes_up_to(half_quarter, Fraction(1, 256))
        members = [a for c in classes for a in c.members]
        assert sorted(members) == sorted(enumerate_exponents(half_quarter, Fraction(1, 256)))
        assert [c.value for c in classes] == [Fraction(1, 2**k) for k in range(5)]


class TestLattice:
    def test_half_quarter(self, half_quarter):
        assert relation_lattice(half_quarter).basis == ((2, -1),)
        assert weight_vector(half_quarter) == (1, 2)

    def test_independent_primes(self):
        spectrum = OrderedSpectrum((HALF, Fraction(1, 3)))
        assert relation_lattice(spectrum).is_trivial()
        assert weight_vector(spectrum) == (1, 1)

    def test_equal_eigenvalues(self):
        spectrum = OrderedSpectrum((HALF, HALF))
        assert relation_lattice(spectrum).basis == ((1, -1),)
        assert weight_vector(spectrum) == (1, 1)

    def test_rotating_spectrum(self, rotating_spectrum):
        basis = relation_lattice(rotating_spectrum).basis
        assert basis == ((4, 0, -4), (0, 1, -1))
        assert weight_vector(rotating_spectrum) == (1, 1, 1)

    @pytest.mark.parametrize("seed", range(100))
    def test_against_enumeration(self, seed):
        rng = random.Random(seed)
        spectrum = random_spectrum(rng, rng.randint(1, 4))
        d = spectrum.dimension
        top = resonance_bound(spectrum) + 2
        by_value = {}
        for beta in exponents_up_to(d, top):
            by_value.setdefault(lambda_power(spectrum, beta), set()).add(beta)

        for i in range(d):
            assert set(resonance_set(spectrum, i)) == by_value.get(spectrum[i], set())
        for alpha in exponents_up_to(d, 2):
            gamma = weight_class(spectrum, alpha)
            assert {b for b in gamma.members if sum(b) <= top} == by_value[gamma.value]
            assert all(lambda_power(spectrum, b) == gamma.value for b in gamma.members)

        lattice = relation_lattice(spectrum)
        n = weight_vector(spectrum)
        assert all(x >= 1 for x in n)
        for v in lattice.basis:
            assert lambda_power(spectrum, v) == ONE
            assert sum(a * b for a, b in zip(n, v)) == 0
        for v in relations_in_box(spectrum, 6):
            assert in_lattice(v, lattice.basis)

    def test_classes_share_weighted_degree(self, rotating_spectrum):
        n = weight_vector(rotating_spectrum)
        gamma = weight_class(rotating_spectrum, (0, 2, 0))
        assert len(gamma) == 3
        degrees = {sum(a * b for a, b in zip(n, alpha)) for alpha in gamma.members}
        assert len(degrees) == 1


def relations_in_box(spectrum, radius):
    """Every v with |v|_inf <= radius and lambda^v == 1, matching the two halves of v."""
    d = spectrum.dimension
    half = d // 2
    box = range(-radius, radius + 1)
    left = {}
    for u in itertools.product(box, repeat=half):
        left.setdefault(lambda_power(spectrum, u + (0,) * (d - half)), []).append(u)
    for w in itertools.product(box, repeat=d - half):
        target = lambda_power(spectrum, (0,) * half + w).inverse()
        for u in left.get(target, []):
            yield u + w


def in_lattice(v, hermite_basis):
    """Membership by reducing v against a row Hermite basis."""
    v = list(v)
    for row in hermite_basis:
        p = next(k for k, x in enumerate(row) if x)
        if v[p] % row[p]:
            return False
        q = v[p] // row[p]
        v = [a - q * b for a, b in zip(v, row)]
    return not any(v)
