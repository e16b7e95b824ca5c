# -*- coding: utf-8 -*-
"""
Tests for cyclotomic.py module.

Tests cover:
- Cyclotomic polynomials against known values and degrees
- Canonical reduction and the roots of unity
- Ring axioms on random elements (hypothesis)
- Display formatting
"""

import pytest
from hypothesis import given, settings, strategies as st

from grouplab.cyclotomic import (
    CycPoly, CyclotomicInt, add, conjugate, cyclotomic_polynomial, eq, euler_phi,
    format_element, mul, neg, power, reduce, sub, zeta
)
from grouplab.errors import OrderMismatch


# ===== POLYNOMIALS =====

@pytest.mark.parametrize('m,coeffs', [
    (1, (-1, 1)),
    (2, (1, 1)),
    (4, (1, 0, 1)),
    (6, (1, -1, 1)),
    (8, (1, 0, 0, 0, 1)),
    (12, (1, 0, -1, 0, 1)),
])
def test_cyclotomic_polynomial_known_values(m, coeffs):
    """Verify Phi_m matches the textbook coefficients (lowest degree first).

    Failure indicates the divisor-product division is wrong.
    """
    assert cyclotomic_polynomial(m).coeffs == coeffs, \
        f"Phi_{m} should be {coeffs}, got {cyclotomic_polynomial(m).coeffs}"


def test_cyclotomic_polynomial_degree_is_euler_phi():
    """Verify deg Phi_m = phi(m) for m up to 40."""
    for m in range(1, 41):
        assert cyclotomic_polynomial(m).degree == euler_phi(m), f"degree mismatch at m={m}"


def test_cyclotomic_polynomial_rejects_zero():
    with pytest.raises(ValueError, match="m >= 1"):
        cyclotomic_polynomial(0)


def test_cycpoly_strips_trailing_zeros():
    assert CycPoly((1, 2, 0, 0)).coeffs == (1, 2)
    assert CycPoly((0, 0)).degree == -1


# ===== CANONICAL FORM =====

def test_i_squared_is_minus_one():
    """Verify zeta_4 * zeta_4 = -1.

    Failure indicates multiplication does not reduce modulo Phi_4.
    """
    i = zeta(4)
    assert eq(mul(i, i), CyclotomicInt.from_int(4, -1))


def test_reduction_is_modulo_phi_not_x_m_minus_1():
    """Verify zeta_4^2 + 1 reduces to zero.

    Modulo x^4 - 1 the residue x^2 + 1 would be nonzero.
    """
    assert reduce([1, 0, 1], 4).is_zero


def test_reduce_is_idempotent():
    raw = [3, -1, 4, 1, -5, 9, 2, 6, 5, 3]
    once = reduce(raw, 8)
    assert reduce(list(once.coeffs), 8) == once


@pytest.mark.parametrize('m', [1, 2, 3, 4, 5, 6, 8, 12, 16])
def test_zeta_is_primitive_root_of_unity(m):
    """Verify zeta_m^m = 1 and zeta_m^k != 1 for 0 < k < m."""
    one = CyclotomicInt.one(m)
    assert eq(power(zeta(m), m), one), f"zeta_{m}^{m} should be 1"
    for k in range(1, m):
        assert not eq(power(zeta(m), k), one), f"zeta_{m}^{k} should not be 1"


def test_zeta_exponent_taken_modulo_m():
    assert zeta(8, -1) == zeta(8, 7)
    assert zeta(8, 9) == zeta(8, 1)


def test_conjugate_of_zeta_is_its_inverse():
    for m in (3, 4, 8, 12):
        z = zeta(m)
        assert conjugate(z) == zeta(m, -1)
        assert eq(mul(z, conjugate(z)), CyclotomicInt.one(m))


def test_mixed_rings_raise_order_mismatch():
    with pytest.raises(OrderMismatch):
        eq(zeta(4), zeta(8))
    with pytest.raises(OrderMismatch):
        add(zeta(4), zeta(8))


def test_wrong_coefficient_count_rejected():
    with pytest.raises(ValueError, match="coefficients"):
        CyclotomicInt(8, (1, 0))


def test_negative_power_rejected():
    with pytest.raises(ValueError):
        power(zeta(4), -1)


# ===== RING AXIOMS =====

RING_ORDERS = [3, 4, 5, 8, 12]


@st.composite
def ring_elements(draw, count=3):
    m = draw(st.sampled_from(RING_ORDERS))
    width = euler_phi(m)
    coeffs = st.lists(st.integers(-6, 6), min_size=width, max_size=width)
    return [CyclotomicInt(m, tuple(draw(coeffs))) for _ in range(count)]


@settings(max_examples=60, deadline=None)
@given(ring_elements())
def test_ring_axioms(elements):
    """Verify commutativity, associativity and distributivity in Z[zeta_m].

    Failure indicates add or mul leaves a non-canonical residue.
    """
    a, b, c = elements
    assert add(a, b) == add(b, a)
    assert mul(a, b) == mul(b, a)
    assert add(add(a, b), c) == add(a, add(b, c))
    assert mul(mul(a, b), c) == mul(a, mul(b, c))
    assert mul(a, add(b, c)) == add(mul(a, b), mul(a, c))
    assert add(a, neg(a)).is_zero
    assert sub(a, b) == add(a, neg(b))
    assert mul(a, CyclotomicInt.one(a.order)) == a


@settings(max_examples=40, deadline=None)
@given(ring_elements(count=2))
def test_conjugation_is_a_ring_automorphism(elements):
    a, b = elements
    assert conjugate(mul(a, b)) == mul(conjugate(a), conjugate(b))
    assert conjugate(add(a, b)) == add(conjugate(a), conjugate(b))
    assert conjugate(conjugate(a)) == a


# ===== DISPLAY =====

@pytest.mark.parametrize('value,expected', [
    (CyclotomicInt.zero(4), '0'),
    (CyclotomicInt.from_int(4, -1), '-1'),
    (zeta(4), 'z'),
    (reduce([1, 0, -1], 8), '1 - z^2'),
    (reduce([0, -1, 0, 2], 8), '-z + 2z^3'),
])
def test_format_element(value, expected):
    assert format_element(value) == expected
