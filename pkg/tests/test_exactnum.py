import random
from fractions import Fraction

import pytest

from src.exactnum.gaussian import factor, gaussian_divisors, gaussian_roots
from src.exactnum.numbers import GaussianRational, format_gaussian, modulus_squared, parse_gaussian, power
from src.utils.errors import ParseError


def gr(re, im=0):
    return GaussianRational(Fraction(re), Fraction(im))


def random_gaussian(rng, bound=10**6):
    def part():
        return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))

    z = GaussianRational(part(), part())
    return z if not z.is_zero() else gr(1)


class TestArithmetic:
    def test_field_operations(self):
        a, b = gr(1, 2), gr(3, -1)
        assert a * b == gr(5, 5)
        assert (a * b) / b == a
        assert a + b == gr(4, 1)
        assert a - b == gr(-2, 3)
        assert a.conjugate() == gr(1, -2)
        assert a.modulus_squared() == 5

    def test_mixed_with_rationals(self):
        half = gr(Fraction(1, 2))
        assert half == Fraction(1, 2)
        assert 1 - half == half
        assert 1 / half == 2
        assert hash(half) == hash(Fraction(1, 2))
        assert {Fraction(1, 2): "x"}[half] == "x"

    def test_negative_power(self):
        assert power(gr(0, Fraction(1, 2)), -2) == -4
        with pytest.raises(ZeroDivisionError):
            power(gr(0), -1)

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            gr(1) / 0


class TestText:
    @pytest.mark.parametrize(
        "text, expected",
        [
            ("1/2", gr(Fraction(1, 2))),
            ("-3", gr(-3)),
            ("i", gr(0, 1)),
            ("-i", gr(0, -1)),
            ("3i", gr(0, 3)),
            ("1/2*i", gr(0, Fraction(1, 2))),
            ("1/2-3/4*i", gr(Fraction(1, 2), Fraction(-3, 4))),
            ("-1/2+i", gr(Fraction(-1, 2), 1)),
        ],
    )
    def test_parse(self, text, expected):
        assert parse_gaussian(text) == expected

    @pytest.mark.parametrize("text", ["0", "7", "-1/3", "1/2*i", "1/2-3/4*i", "-5+2*i"])
    def test_format_is_canonical(self, text):
        assert format_gaussian(parse_gaussian(text)) == text

    @pytest.mark.parametrize("text", ["", "1/0", "a", "1//2", "1/2+x"])
    def test_malformed(self, text):
        with pytest.raises(ParseError):
            parse_gaussian(text)


class TestFactorization:
    def test_split_prime(self):
        f = factor(5)
        assert f.expand() == 5
        assert {p for p, _ in f.factors} == {gr(2, 1), gr(2, -1)}
        assert f.unit == 1

    def test_ramified_prime_in_denominator(self):
        f = factor(Fraction(1, 2))
        assert f.factors == ((gr(1, 1), -2),)
        assert f.expand() == Fraction(1, 2)
        assert f.unit_exponent() == 1

    def test_inert_prime(self):
        f = factor(gr(0, Fraction(3, 4)))
        assert f.exponent_of(gr(3)) == 1
        assert f.exponent_of(gr(1, 1)) == -4
        assert f.expand() == gr(0, Fraction(3, 4))

    def test_zero_has_no_factorization(self):
        with pytest.raises(ValueError):
            factor(0)

    def test_divisors_of_two(self):
        divisors = gaussian_divisors(gr(2))
        assert len(divisors) == 12
        assert {gr(1), gr(0, 1), gr(1, 1), gr(2)} <= set(divisors)


class TestRoots:
    def test_imaginary_pair(self):
        roots, leftover = gaussian_roots([Fraction(1, 4), 0, 1])
        assert dict(roots) == {gr(0, Fraction(1, 2)): 1, gr(0, Fraction(-1, 2)): 1}
        assert len(leftover) == 1

    def test_multiplicity_and_order(self):
        # (t - 1/2)^2 (t - 1/4)
        roots, leftover = gaussian_roots([Fraction(-1, 16), Fraction(1, 2), Fraction(-5, 4), 1])
        assert roots == [(gr(Fraction(1, 2)), 2), (gr(Fraction(1, 4)), 1)]
        assert len(leftover) == 1

    def test_irrational_factor_is_left_over(self):
        roots, leftover = gaussian_roots([-2, 0, 1])
        assert roots == []
        assert len(leftover) == 3

    def test_zero_root(self):
        roots, _ = gaussian_roots([0, Fraction(-1, 2), 1])
        assert dict(roots) == {gr(0): 1, gr(Fraction(1, 2)): 1}


class TestProperties:
    def test_factor_round_trip(self):
        rng = random.Random(2)
        for _ in range(1000):
            z = random_gaussian(rng)
            f = factor(z)
            assert f.expand() == z
            for prime, exponent in f.factors:
                assert prime.is_gaussian_integer() and exponent != 0
                assert prime.re > 0 and prime.re >= abs(prime.im)

    def test_modulus_is_multiplicative(self):
        rng = random.Random(3)
        for _ in range(200):
            a, b = random_gaussian(rng), random_gaussian(rng)
            assert modulus_squared(a * b) == modulus_squared(a) * modulus_squared(b)
            assert modulus_squared(a / b) == modulus_squared(a) / modulus_squared(b)

    def test_power_is_additive(self):
        rng = random.Random(4)
        for _ in range(200):
            z = random_gaussian(rng, 20)
            j, k = rng.randint(-5, 5), rng.randint(-5, 5)
            assert power(z, j + k) == power(z, j) * power(z, k)
            assert power(z, j * k) == power(power(z, j), k)
