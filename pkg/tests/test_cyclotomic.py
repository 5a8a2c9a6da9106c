import cmath
from fractions import Fraction

import pytest

from qautk.cyclotomic import (
    Cyclotomic,
    cyclotomic_from_json,
    cyclotomic_polynomial,
    cyclotomic_to_json,
)


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(2) == (1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert cyclotomic_polynomial(8) == (1, 0, 0, 0, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)


@pytest.mark.parametrize("m", [1, 2, 3, 4, 6, 8, 12, 16])
def test_root_arithmetic(m):
    one = Cyclotomic.one(m)
    for a in range(m):
        za = Cyclotomic.root(m, a)
        assert (za * za.conjugate()).as_rational() == 1
        assert za * Cyclotomic.root(m, (m - a) % m) == one
        assert za.inverse() == Cyclotomic.root(m, (m - a) % m)
        assert abs(complex(za) - cmath.exp(2j * cmath.pi * a / m)) < 1e-12
    for a in range(m):
        for b in range(m):
            assert Cyclotomic.root(m, a) * Cyclotomic.root(m, b) == Cyclotomic.root(m, (a + b) % m)


def test_root_sums_vanish():
    for m in (2, 3, 4, 6, 8, 12):
        total = Cyclotomic.zero(m)
        for a in range(m):
            total = total + Cyclotomic.root(m, a)
        assert total.is_zero()


def test_minus_one_identification():
    assert (Cyclotomic.one(2) + Cyclotomic.root(2, 1)).is_zero()
    assert Cyclotomic.root(4, 2) == Cyclotomic.rational(4, -1)


def test_lift():
    assert Cyclotomic.root(4, 1).lift(8) == Cyclotomic.root(8, 2)
    assert Cyclotomic.rational(2, Fraction(3, 5)).lift(8).as_rational() == Fraction(3, 5)
    with pytest.raises(ValueError):
        Cyclotomic.root(3, 1).lift(8)


def test_general_inverse():
    x = Cyclotomic.from_coeffs(12, [Fraction(3, 2), Fraction(1), Fraction(0), Fraction(2)])
    assert (x * x.inverse()).as_rational() == 1
    with pytest.raises(ZeroDivisionError):
        Cyclotomic.zero(5).inverse()


def test_mixed_orders_rejected():
    with pytest.raises(ValueError):
        Cyclotomic.one(3) + Cyclotomic.one(4)


def test_json_roundtrip():
    for x in (
        Cyclotomic.rational(8, Fraction(2, 3)),
        Cyclotomic.root(8, 3),
        Cyclotomic.from_coeffs(8, [1, 2, 0, Fraction(1, 2)]),
    ):
        data = cyclotomic_to_json(x)
        assert cyclotomic_from_json(8, data) == x
    with pytest.raises(ValueError):
        cyclotomic_from_json(8, 0.5)
