import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coxsort.field import MAX_N, ExactScalar, NumberField, cyclotomic_polynomial, minimal_polynomial_2cos


def _eval(poly, x):
    return sum(c * x**k for k, c in enumerate(poly))


def _euler_phi(n):
    return sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)


@pytest.mark.parametrize("n", range(1, 31))
def test_cyclotomic_roots_and_degree(n):
    poly = cyclotomic_polynomial(n)
    assert len(poly) - 1 == _euler_phi(n)
    z = complex(math.cos(2 * math.pi / n), math.sin(2 * math.pi / n))
    assert abs(_eval(poly, z)) < 1e-8


@pytest.mark.parametrize("N", range(1, 41))
def test_minimal_polynomial_vanishes_at_two_cos(N):
    poly = minimal_polynomial_2cos(N)
    assert poly[-1] == 1
    assert abs(_eval(poly, 2 * math.cos(math.pi / N))) < 1e-7
    if N >= 3:
        assert len(poly) - 1 == _euler_phi(2 * N) // 2


def test_small_fields():
    assert minimal_polynomial_2cos(2) == (0, 1)
    assert minimal_polynomial_2cos(3) == (-1, 1)
    # golden ratio: x^2 - x - 1
    assert minimal_polynomial_2cos(5) == (-1, -1, 1)


@pytest.mark.parametrize("N,m", [(12, 3), (12, 4), (12, 6), (12, 12), (10, 5), (10, 10), (7, 7), (30, 15)])
def test_two_cos_values(N, m):
    F = NumberField(N)
    assert F.to_float(F.two_cos(m)) == pytest.approx(2 * math.cos(math.pi / m), abs=1e-12)
    assert F.is_zero(F.two_cos(2))


def test_two_cos_requires_divisor():
    with pytest.raises(ValueError):
        NumberField(5).two_cos(3)


def test_field_size_cap():
    with pytest.raises(ValueError):
        NumberField(MAX_N + 1)


coeffs = st.lists(st.fractions(min_value=-20, max_value=20, max_denominator=7), min_size=4, max_size=4)


@settings(max_examples=60, deadline=None)
@given(coeffs, coeffs, coeffs)
def test_ring_axioms(a, b, c):
    F = NumberField(15)  # degree 4
    x, y, z = F.element(a), F.element(b), F.element(c)
    assert x * y == y * x
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert (x - x).is_zero()
    assert float(x * y) == pytest.approx(float(x) * float(y), rel=1e-9, abs=1e-9)


@settings(max_examples=80, deadline=None)
@given(coeffs)
def test_sign_matches_float(a):
    F = NumberField(15)
    x = F.element(a)
    v = float(x)
    if abs(v) > 1e-6:
        assert x.sign() == (1 if v > 0 else -1)
    if x.is_zero():
        assert x.sign() == 0


def test_sign_of_tiny_nonzero_uses_exact_path():
    # theta^2 - theta - 1 = 0 for the golden field; perturb by a tiny rational
    F = NumberField(5)
    from fractions import Fraction

    theta = F.element((0, 1))
    tiny = Fraction(1, 10**15)
    x = theta * theta - theta - F.element((1 - tiny, 0))
    assert x.sign() == 1
    y = theta * theta - theta - F.element((1 + tiny, 0))
    assert y.sign() == -1
    assert (theta * theta - theta - 1).is_zero()


def test_exact_scalar_coercion():
    F = NumberField(3)
    x = F.element((2,))
    assert isinstance(x, ExactScalar)
    assert x + 1 == F.element((3,))
    assert 5 - x == F.element((3,))
    assert bool(F.element((0,))) is False
