# -*- coding: utf-8 -*-
"""2x2 matrices over a single cyclotomic ring.

Mat2 values are the concrete carriers of group elements while a group is
being generated. There is no inverse operation; finite closure finds
every inverse as a positive power.

Functions:
- mat_mul(), mat_identity(), mat_eq(), mat_pow(): basic algebra
- diag(), mat_from_ints(), mat_conjugate(): builders
- standard_matrices(): the named matrices R, S, T, F, X, Y, Z
"""

from dataclasses import dataclass
from typing import Dict, Tuple

from .cyclotomic import (
    CyclotomicInt, add, conjugate, format_element, mul, neg, zeta
)
from .errors import OrderMismatch


@dataclass(frozen=True)
class Mat2:
    """2x2 matrix over Z[zeta_m], entries row-major (a, b, c, d)."""
    order: int
    entries: Tuple[CyclotomicInt, CyclotomicInt, CyclotomicInt, CyclotomicInt]

    def __post_init__(self):
        if len(self.entries) != 4:
            raise ValueError(f"Mat2 needs 4 entries, got {len(self.entries)}")
        object.__setattr__(self, 'entries', tuple(self.entries))
        bad = [e.order for e in self.entries if e.order != self.order]
        if bad:
            raise OrderMismatch(
                f"Mat2 over Z[zeta_{self.order}] has entries from rings {sorted(set(bad))}"
            )

    @property
    def label(self) -> str:
        a, b, c, d = (format_element(e) for e in self.entries)
        return f"[[{a}, {b}], [{c}, {d}]]"

    def __matmul__(self, other: 'Mat2') -> 'Mat2':
        return mat_mul(self, other)

    def __str__(self):
        return self.label


def _check_same_ring(A: Mat2, B: Mat2, op: str) -> None:
    if A.order != B.order:
        raise OrderMismatch(
            f"Cannot {op} matrices over Z[zeta_{A.order}] and Z[zeta_{B.order}]"
        )


def mat_mul(A: Mat2, B: Mat2) -> Mat2:
    _check_same_ring(A, B, 'multiply')
    a, b, c, d = A.entries
    e, f, g, h = B.entries
    return Mat2(A.order, (
        add(mul(a, e), mul(b, g)),
        add(mul(a, f), mul(b, h)),
        add(mul(c, e), mul(d, g)),
        add(mul(c, f), mul(d, h)),
    ))


def mat_identity(m: int) -> Mat2:
    return mat_from_ints(m, 1, 0, 0, 1)


def mat_eq(A: Mat2, B: Mat2) -> bool:
    _check_same_ring(A, B, 'compare')
    return A.entries == B.entries


def mat_pow(A: Mat2, e: int) -> Mat2:
    if e < 0:
        raise ValueError(f"mat_pow takes non-negative exponents, got {e}")
    result = mat_identity(A.order)
    for _ in range(e):
        result = mat_mul(result, A)
    return result


def mat_from_ints(m: int, a: int, b: int, c: int, d: int) -> Mat2:
    return Mat2(m, tuple(CyclotomicInt.from_int(m, v) for v in (a, b, c, d)))


def diag(a: CyclotomicInt, d: CyclotomicInt) -> Mat2:
    zero = CyclotomicInt.zero(a.order)
    return Mat2(a.order, (a, zero, zero, d))


def mat_neg(A: Mat2) -> Mat2:
    return Mat2(A.order, tuple(neg(e) for e in A.entries))


def mat_conjugate(A: Mat2) -> Mat2:
    """Entry-wise complex conjugate (no transpose)."""
    return Mat2(A.order, tuple(conjugate(e) for e in A.entries))


@dataclass(frozen=True)
class StandardMatrices:
    """The named matrices over Z[zeta_m].

    R = diag(z, conj z), S = [[0, -1], [1, 0]], T = R S,
    F = X = [[0, 1], [1, 0]], Y = [[0, conj z], [z, 0]], Z = diag(1, -1).
    """
    m: int
    R: Mat2
    S: Mat2
    T: Mat2
    F: Mat2
    X: Mat2
    Y: Mat2
    Z: Mat2

    def as_dict(self) -> Dict[str, Mat2]:
        return {name: getattr(self, name) for name in ('R', 'S', 'T', 'F', 'X', 'Y', 'Z')}


def standard_matrices(m: int) -> StandardMatrices:
    if m < 1:
        raise ValueError(f"standard_matrices requires m >= 1, got {m}")
    z = zeta(m, 1)
    z_bar = zeta(m, -1)
    zero = CyclotomicInt.zero(m)

    R = diag(z, z_bar)
    S = mat_from_ints(m, 0, -1, 1, 0)
    F = mat_from_ints(m, 0, 1, 1, 0)
    return StandardMatrices(
        m=m,
        R=R,
        S=S,
        T=mat_mul(R, S),
        F=F,
        X=F,
        Y=Mat2(m, (zero, z_bar, z, zero)),
        Z=mat_from_ints(m, 1, 0, 0, -1),
    )
