# -*- coding: utf-8 -*-
"""Exact arithmetic in the cyclotomic integer ring Z[zeta_m].

Every element is stored as its canonical residue modulo the m-th cyclotomic
polynomial Phi_m, so equality of algebraic numbers is decided by comparing
integer coefficient vectors. No floating point is ever involved.

Key components:
- CycPoly: integer polynomial, coefficient of x^i at index i
- CyclotomicInt: canonical element of Z[zeta_m]
- cyclotomic_polynomial(): Phi_m by exact division in Z[x] (sympy)
- reduce(), add(), mul(), neg(), sub(), eq(), zeta(), conjugate()
"""

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, List, Sequence, Tuple, Union

from sympy import Poly, divisors, totient
from sympy.abc import x

from .config import STATIC_CONFIG
from .errors import OrderMismatch


# =============================================================================
# POLYNOMIALS
# =============================================================================

@dataclass(frozen=True)
class CycPoly:
    """Integer polynomial with coefficients stored lowest degree first.

    Trailing zeros are stripped on construction, so the zero polynomial is
    the empty tuple and the last coefficient of any other value is nonzero.
    """
    coeffs: Tuple[int, ...] = field(default_factory=tuple)

    def __post_init__(self):
        coeffs = [int(c) for c in self.coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, 'coeffs', tuple(coeffs))

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for zero."""
        return len(self.coeffs) - 1

    @classmethod
    def from_sympy(cls, poly: Poly) -> 'CycPoly':
        """Convert a sympy Poly in x (highest degree first) to a CycPoly."""
        return cls(tuple(int(c) for c in reversed(poly.all_coeffs())))

    def to_sympy(self) -> Poly:
        return Poly.from_list(list(reversed(self.coeffs)) or [0], gens=x)

    def __str__(self):
        return str(self.to_sympy().as_expr())


PolyLike = Union[CycPoly, Sequence[int]]


@lru_cache(maxsize=None)
def _cyclotomic_sympy(m: int) -> Poly:
    numerator = Poly(x**m - 1, x)
    denominator = Poly(1, x)
    for d in divisors(m)[:-1]:
        denominator = denominator * _cyclotomic_sympy(d)

    quotient, remainder = numerator.div(denominator)
    if not remainder.is_zero:
        raise ArithmeticError(f"x^{m} - 1 is not divisible by its proper cyclotomic factors")
    return quotient


def cyclotomic_polynomial(m: int) -> CycPoly:
    """Return Phi_m, computed by dividing x^m - 1 by Phi_d for every proper divisor d of m.

    Raises:
        ValueError: If m < 1
    """
    if m < 1:
        raise ValueError(f"cyclotomic_polynomial requires m >= 1, got {m}")
    return CycPoly.from_sympy(_cyclotomic_sympy(m))


@lru_cache(maxsize=None)
def euler_phi(m: int) -> int:
    """Degree of Phi_m."""
    if m < 1:
        raise ValueError(f"euler_phi requires m >= 1, got {m}")
    return int(totient(m))


@lru_cache(maxsize=None)
def _phi_coeffs(m: int) -> Tuple[int, ...]:
    return cyclotomic_polynomial(m).coeffs


def _reduce_coeffs(coeffs: Iterable[int], m: int) -> Tuple[int, ...]:
    """Remainder of a coefficient list modulo the monic Phi_m, padded to phi(m).

    Plain integer long division; Phi_m is monic so no rationals appear.
    """
    phi = _phi_coeffs(m)
    d = len(phi) - 1
    work = list(coeffs)
    for i in range(len(work) - 1, d - 1, -1):
        c = work[i]
        if c:
            shift = i - d
            for j in range(d):
                if phi[j]:
                    work[shift + j] -= c * phi[j]
            work[i] = 0
    if len(work) < d:
        work.extend([0] * (d - len(work)))
    return tuple(work[:d])


# =============================================================================
# RING ELEMENTS
# =============================================================================

@dataclass(frozen=True)
class CyclotomicInt:
    """Canonical element of Z[zeta_m].

    Attributes:
        order: The ring parameter m
        coeffs: phi(m) integers; the value is sum(coeffs[i] * zeta_m**i)
    """
    order: int
    coeffs: Tuple[int, ...]

    def __post_init__(self):
        if self.order < 1:
            raise ValueError(f"Ring order must be >= 1, got {self.order}")
        object.__setattr__(self, 'coeffs', tuple(int(c) for c in self.coeffs))
        expected = euler_phi(self.order)
        if len(self.coeffs) != expected:
            raise ValueError(
                f"Z[zeta_{self.order}] elements carry {expected} coefficients, "
                f"got {len(self.coeffs)}"
            )

    @classmethod
    def from_int(cls, m: int, value: int) -> 'CyclotomicInt':
        return reduce([value], m)

    @classmethod
    def zero(cls, m: int) -> 'CyclotomicInt':
        return cls(m, (0,) * euler_phi(m))

    @classmethod
    def one(cls, m: int) -> 'CyclotomicInt':
        return reduce([1], m)

    @property
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __add__(self, other: 'CyclotomicInt') -> 'CyclotomicInt':
        return add(self, other)

    def __sub__(self, other: 'CyclotomicInt') -> 'CyclotomicInt':
        return sub(self, other)

    def __mul__(self, other: 'CyclotomicInt') -> 'CyclotomicInt':
        return mul(self, other)

    def __neg__(self) -> 'CyclotomicInt':
        return neg(self)

    def __str__(self):
        return format_element(self)


def _check_same_ring(a: CyclotomicInt, b: CyclotomicInt, op: str) -> None:
    if a.order != b.order:
        raise OrderMismatch(
            f"Cannot {op} elements of Z[zeta_{a.order}] and Z[zeta_{b.order}]"
        )


def reduce(raw: PolyLike, m: int) -> CyclotomicInt:
    """Canonical remainder of raw modulo Phi_m. Idempotent."""
    if m < 1:
        raise ValueError(f"reduce requires m >= 1, got {m}")
    coeffs = raw.coeffs if isinstance(raw, CycPoly) else raw
    return CyclotomicInt(m, _reduce_coeffs(coeffs, m))


def add(a: CyclotomicInt, b: CyclotomicInt) -> CyclotomicInt:
    _check_same_ring(a, b, 'add')
    return CyclotomicInt(a.order, tuple(p + q for p, q in zip(a.coeffs, b.coeffs)))


def neg(a: CyclotomicInt) -> CyclotomicInt:
    return CyclotomicInt(a.order, tuple(-c for c in a.coeffs))


def sub(a: CyclotomicInt, b: CyclotomicInt) -> CyclotomicInt:
    _check_same_ring(a, b, 'subtract')
    return CyclotomicInt(a.order, tuple(p - q for p, q in zip(a.coeffs, b.coeffs)))


def mul(a: CyclotomicInt, b: CyclotomicInt) -> CyclotomicInt:
    _check_same_ring(a, b, 'multiply')
    if a.is_zero or b.is_zero:
        return CyclotomicInt.zero(a.order)

    product: List[int] = [0] * (len(a.coeffs) + len(b.coeffs) - 1)
    for i, p in enumerate(a.coeffs):
        if p:
            for j, q in enumerate(b.coeffs):
                if q:
                    product[i + j] += p * q
    return reduce(product, a.order)


def eq(a: CyclotomicInt, b: CyclotomicInt) -> bool:
    """Equality of canonical forms. Raises OrderMismatch across rings."""
    _check_same_ring(a, b, 'compare')
    return a.coeffs == b.coeffs


@lru_cache(maxsize=None)
def zeta(m: int, k: int = 1) -> CyclotomicInt:
    """Canonical form of zeta_m ** k; k is taken modulo m and may be negative."""
    if m < 1:
        raise ValueError(f"zeta requires m >= 1, got {m}")
    k %= m
    raw = [0] * (k + 1)
    raw[k] = 1
    return reduce(raw, m)


def power(a: CyclotomicInt, e: int) -> CyclotomicInt:
    """a ** e for e >= 0 by repeated squaring."""
    if e < 0:
        raise ValueError(f"Only non-negative powers exist in Z[zeta_m], got {e}")
    result = CyclotomicInt.one(a.order)
    base = a
    while e:
        if e & 1:
            result = mul(result, base)
        base = mul(base, base)
        e >>= 1
    return result


def conjugate(a: CyclotomicInt) -> CyclotomicInt:
    """Complex conjugate: the ring automorphism zeta_m -> zeta_m ** (m - 1)."""
    m = a.order
    raw = [0] * m
    for i, c in enumerate(a.coeffs):
        raw[(-i) % m] += c
    return reduce(raw, m)


# =============================================================================
# DISPLAY
# =============================================================================

def format_element(a: CyclotomicInt, symbol: str = None) -> str:
    """Render as a polynomial in the display symbol, constant term first.

    Examples: '0', '-1', 'z', '1 - z^2', '-z + 2z^3'.
    """
    symbol = symbol or STATIC_CONFIG['zeta_symbol']
    terms = []
    for i, c in enumerate(a.coeffs):
        if c == 0:
            continue
        if i == 0:
            body = str(abs(c))
        else:
            power_str = symbol if i == 1 else f"{symbol}^{i}"
            body = power_str if abs(c) == 1 else f"{abs(c)}{power_str}"
        if not terms:
            terms.append(body if c > 0 else f"-{body}")
        else:
            terms.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(terms) if terms else "0"
