# -*- coding: utf-8 -*-
"""
Tests for matrices.py module.

Tests cover:
- Basic algebra (identity, powers, equality across rings)
- The standard matrices and the identities relating them
- Associativity on random matrices (hypothesis)
"""

import pytest
from hypothesis import given, settings, strategies as st

from grouplab.cyclotomic import CyclotomicInt, euler_phi, zeta
from grouplab.errors import OrderMismatch
from grouplab.matrices import (
    Mat2, diag, mat_conjugate, mat_eq, mat_from_ints, mat_identity, mat_mul, mat_neg,
    mat_pow, standard_matrices
)


# ===== BASIC ALGEBRA =====

def test_s_squared_is_minus_identity():
    """Verify S^2 = -I, the matrix form of j^2 = -1."""
    M = standard_matrices(4)
    assert mat_eq(mat_mul(M.S, M.S), mat_neg(mat_identity(4)))


def test_f_is_an_involution():
    M = standard_matrices(6)
    assert mat_eq(mat_mul(M.F, M.F), mat_identity(6))


@pytest.mark.parametrize('m', [3, 4, 6, 8, 16])
def test_rotation_has_order_m(m):
    """Verify R(m)^m = I and no smaller positive power is I."""
    R = standard_matrices(m).R
    assert mat_eq(mat_pow(R, m), mat_identity(m))
    assert all(not mat_eq(mat_pow(R, k), mat_identity(m)) for k in range(1, m))


def test_mat_eq_across_rings_raises():
    with pytest.raises(OrderMismatch):
        mat_eq(mat_identity(4), mat_identity(8))


def test_mixed_entries_rejected():
    with pytest.raises(OrderMismatch):
        Mat2(4, (zeta(4), zeta(8), CyclotomicInt.zero(4), CyclotomicInt.one(4)))


def test_matmul_operator_matches_mat_mul():
    M = standard_matrices(8)
    assert M.R @ M.S == mat_mul(M.R, M.S)


def test_label_format():
    assert mat_identity(4).label == "[[1, 0], [0, 1]]"
    assert standard_matrices(4).R.label == "[[z, 0], [0, -z]]"


# ===== STANDARD MATRIX IDENTITIES =====

@pytest.mark.parametrize('m', [4, 8, 16])
def test_pauli_products(m):
    """Verify XY = R, XZ = S and YZ = conj(T) entry-wise.

    Failure indicates the diquaternion generating sets would not agree.
    """
    M = standard_matrices(m)
    assert mat_eq(M.X @ M.Y, M.R), "XY should equal R"
    assert mat_eq(M.X @ M.Z, M.S), "XZ should equal S"
    assert mat_eq(M.Y @ M.Z, mat_conjugate(M.T)), "YZ should equal conj(T)"


def test_t_is_r_times_s():
    M = standard_matrices(8)
    assert M.T == M.R @ M.S


def test_reflection_times_s_is_z():
    M = standard_matrices(4)
    assert M.F @ M.S == M.Z


def test_twisted_rotations_differ_by_a_sign():
    """diag(z, -conj z) and diag(z, -z) both have order n, like R."""
    n = 8
    z = zeta(n)
    semidihedral_r = diag(z, -zeta(n, -1))
    semiabelian_r = diag(z, -z)
    for r in (semidihedral_r, semiabelian_r):
        assert mat_eq(mat_pow(r, n), mat_identity(n))
        assert not mat_eq(mat_pow(r, n // 2), mat_identity(n))


def test_as_dict_names():
    assert set(standard_matrices(4).as_dict()) == {'R', 'S', 'T', 'F', 'X', 'Y', 'Z'}


def test_standard_matrices_rejects_zero():
    with pytest.raises(ValueError):
        standard_matrices(0)


# ===== PROPERTIES =====

@st.composite
def matrix_triples(draw):
    m = draw(st.sampled_from([3, 4, 8]))
    width = euler_phi(m)
    entry = st.lists(st.integers(-3, 3), min_size=width, max_size=width).map(
        lambda c: CyclotomicInt(m, tuple(c))
    )
    return [Mat2(m, tuple(draw(entry) for _ in range(4))) for _ in range(3)]


@settings(max_examples=40, deadline=None)
@given(matrix_triples())
def test_matrix_multiplication_is_associative(mats):
    A, B, C = mats
    assert mat_eq((A @ B) @ C, A @ (B @ C))
    assert mat_eq(mat_identity(A.order) @ A, A)


def test_mat_from_ints_roundtrip():
    A = mat_from_ints(6, 1, -2, 3, 0)
    assert A.entries[1] == CyclotomicInt.from_int(6, -2)
