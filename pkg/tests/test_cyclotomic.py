from fractions import Fraction
from math import gcd

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from icosacert.exact.cyclotomic import (
    DEGREE,
    GOLDEN,
    GOLDEN_INV,
    I,
    ONE,
    ORDER,
    PHI60,
    ZERO,
    CyclotomicNumber,
    UnsupportedOrderError,
    cyclo_root_of_unity,
    cyclotomic_polynomial,
    multiplicative_order,
)
from strategies import cyclotomics

x = sympy.Symbol("x")


def to_sympy(a: CyclotomicNumber):
    return sum(sympy.Rational(c.numerator, c.denominator) * x**i for i, c in enumerate(a.coefficients))


def from_sympy(p) -> CyclotomicNumber:
    poly = sympy.Poly(p, x)
    coeffs = [Fraction(0)] * DEGREE
    for (k,), c in poly.terms():
        coeffs[k] = Fraction(int(c.p), int(c.q))
    return CyclotomicNumber(coeffs)


PHI_SYMPY = sympy.cyclotomic_poly(60, x)


def test_cyclotomic_polynomial_matches_sympy():
    expected = sympy.Poly(PHI_SYMPY, x).all_coeffs()[::-1]
    assert list(PHI60) == [int(c) for c in expected]
    assert DEGREE == 16
    for n in (1, 2, 3, 4, 5, 6, 12, 15, 20, 30):
        assert list(cyclotomic_polynomial(n)) == [int(c) for c in sympy.Poly(sympy.cyclotomic_poly(n, x), x).all_coeffs()[::-1]]


def test_zeta_has_order_60():
    z = CyclotomicNumber.zeta_power(1)
    assert z**60 == ONE
    assert all(z**k != ONE for k in range(1, 60))
    assert multiplicative_order(z) == 60


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6, 10, 12, 15, 20, 30, 60])
def test_roots_of_unity_orders(n):
    assert multiplicative_order(cyclo_root_of_unity(n)) == n


@pytest.mark.parametrize("n", [7, 8, 9, 11, 120])
def test_unsupported_root_orders(n):
    with pytest.raises(UnsupportedOrderError):
        cyclo_root_of_unity(n)


def test_named_constants():
    assert I * I == -ONE
    assert GOLDEN * GOLDEN == GOLDEN + 1
    assert GOLDEN * GOLDEN_INV == ONE
    assert GOLDEN.is_algebraic_integer() and not GOLDEN.is_rational()


def test_rationals_behave_like_fractions():
    a = CyclotomicNumber.from_rational(Fraction(3, 4))
    assert a.is_rational() and a.to_fraction() == Fraction(3, 4)
    assert a == Fraction(3, 4)
    assert hash(a) == hash(Fraction(3, 4))
    assert not a.is_algebraic_integer()
    with pytest.raises(ValueError):
        a.to_int()


def test_zero_division():
    with pytest.raises(ZeroDivisionError):
        ZERO.inverse()
    with pytest.raises(ZeroDivisionError):
        ONE / ZERO


def test_galois_requires_units():
    with pytest.raises(ValueError):
        I.galois(2)


@settings(max_examples=80)
@given(cyclotomics(), cyclotomics())
def test_product_matches_sympy_reduction(a, b):
    expected = sympy.rem(sympy.expand(to_sympy(a) * to_sympy(b)), PHI_SYMPY, x)
    assert a * b == from_sympy(expected)


@settings(max_examples=40)
@given(cyclotomics(max_terms=6))
def test_inverse_matches_sympy(a):
    if a.is_zero():
        return
    inv = sympy.invert(to_sympy(a), PHI_SYMPY, x)
    assert a.inverse() == from_sympy(sympy.rem(sympy.expand(inv), PHI_SYMPY, x))


@settings(max_examples=200)
@given(cyclotomics(), cyclotomics(), st.sampled_from([k for k in range(1, ORDER) if gcd(k, ORDER) == 1]))
def test_galois_is_a_ring_automorphism(a, b, k):
    assert (a * b).galois(k) == a.galois(k) * b.galois(k)
    assert (a + b).galois(k) == a.galois(k) + b.galois(k)
    assert a.conjugate().conjugate() == a


@settings(max_examples=200)
@given(cyclotomics())
def test_json_round_trip(a):
    data = a.to_json()
    assert len(data) == DEGREE
    assert CyclotomicNumber.from_json(data) == a


@settings(max_examples=200)
@given(cyclotomics())
def test_norm_times_conjugate_is_real_nonnegative_rational(a):
    n = a * a.conjugate()
    assert n == n.conjugate()
