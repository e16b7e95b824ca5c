# -*- coding: utf-8 -*-
"""Named group families and the spec-string grammar that selects them.

Every matrix family closes the standard 2x2 matrices over Z[zeta_m]; the
twisted products C_n x| C_2 are built directly as tables so the two
construction paths can be cross-checked by isomorphism.

Subscript conventions:
- D_n (dihedral), Dic_n, SD_n, SA_n: cyclic part of order n, group order 2n
- Q_N: generalized quaternion of order N (= Dic_{N/2})
- DQ_{2m}: diquaternion built from zeta_m, group order 4m

Key components:
- Family: enum of supported families
- FamilySpec: family + integer parameters, with .build() and display_name
- FAMILY_BUILDERS: Family -> constructor
- parse_family_spec(): 'Q8', 'D6', 'Dic6', 'DQ8', 'SD8', 'SA8', 'C8xC2', 'sdp:8:3', 'pauli1'
- Constructors: cyclic(), dihedral(), dicyclic(), generalized_quaternion(),
  diquaternion(), pauli1(), semidihedral(), semiabelian(), abelian_cn_c2(),
  semidirect_cn_c2(), direct_product(), with_generators()
"""

from dataclasses import dataclass, field, replace
from enum import Enum
from functools import reduce
from math import gcd
from typing import Callable, Dict, List, Sequence, Tuple
import re

import numpy as np

from .cyclotomic import neg, zeta
from .errors import InvalidTwist, OddParameter, ParameterError, SpecParseError
from .group import FiniteGroup, generate_group, generated_subgroup
from .matrices import Mat2, diag, standard_matrices


# =============================================================================
# ENUMS
# =============================================================================

class Family(Enum):
    """Supported group families."""
    CYCLIC = "Cyclic"
    DIHEDRAL = "Dihedral"
    DICYCLIC = "Dicyclic"
    GENERALIZED_QUATERNION = "GeneralizedQuaternion"
    DIQUATERNION = "Diquaternion"
    SEMIDIHEDRAL = "Semidihedral"
    SEMIABELIAN = "Semiabelian"
    ABELIAN_CN_C2 = "AbelianCnxC2"
    SEMIDIRECT_CN_C2 = "SemidirectCnC2"
    PAULI_1_QUBIT = "Pauli1Qubit"
    DIRECT_PRODUCT = "DirectProduct"

    @property
    def is_matrix_family(self) -> bool:
        """True when the constructor closes Mat2 generators."""
        return self not in (Family.SEMIDIRECT_CN_C2, Family.DIRECT_PRODUCT)


# =============================================================================
# HELPER FUNCTIONS
# =============================================================================

def is_power_of_two(n: int) -> bool:
    return n >= 1 and n & (n - 1) == 0


def _source(family: Family, *params: int) -> dict:
    return {'family': family.value, 'params': list(params)}


def element_of(G: FiniteGroup, matrix: Mat2) -> int:
    """Index of a matrix in a matrix-built group.

    Raises:
        KeyError: If G was not built from matrices or does not contain matrix
    """
    if G.matrices is None:
        raise KeyError(f"{G.name} was not built from matrices")
    try:
        return G.matrices.index(matrix)
    except ValueError:
        raise KeyError(f"{matrix.label} is not an element of {G.name}") from None


# =============================================================================
# MATRIX FAMILIES
# =============================================================================

def cyclic(n: int) -> FiniteGroup:
    """C_n = <R(n)>."""
    if n < 1:
        raise ParameterError(f"cyclic(n) requires n >= 1, got {n}")
    M = standard_matrices(n)
    return generate_group([M.R], name=f"C{n}", source=_source(Family.CYCLIC, n), symbols=('r',))


def dihedral(n: int) -> FiniteGroup:
    """D_n = <R(n), F>, order 2n; relations r^n = f^2 = 1, rfr = f."""
    if n < 3:
        raise ParameterError(f"dihedral(n) requires n >= 3, got {n}")
    M = standard_matrices(n)
    return generate_group(
        [M.R, M.F], name=f"D{n}", source=_source(Family.DIHEDRAL, n), symbols=('r', 'f')
    )


def dicyclic(n: int) -> FiniteGroup:
    """Dic_n = <R(n), S>, order 2n; relations r^n = s^4 = 1, rsr = s, r^(n/2) = s^2.

    An odd root of unity would generate zeta_2n instead, so odd n is rejected.
    """
    if n % 2:
        raise OddParameter(f"dicyclic(n) requires even n, got {n}")
    if n < 4:
        raise ParameterError(f"dicyclic(n) requires n >= 4, got {n}")
    M = standard_matrices(n)
    name = f"Q{2 * n}" if is_power_of_two(n) else f"Dic{n}"
    return generate_group(
        [M.R, M.S], name=name, source=_source(Family.DICYCLIC, n), symbols=('r', 's')
    )


def generalized_quaternion(order: int) -> FiniteGroup:
    """Q_order = Dic_(order/2) for order a power of 2, at least 8."""
    if not is_power_of_two(order) or order < 8:
        raise ParameterError(
            f"generalized_quaternion(order) requires a power of 2 >= 8, got {order}"
        )
    return dicyclic(order // 2)


def diquaternion(m: int) -> FiniteGroup:
    """DQ_2m = <R(m), S, F>, order 4m, which equals <X, Y(m), Z>.

    Generators are named a, b, c so the presentation
    a^4 = c^2 = 1, a^2 = b^2, ... can be checked directly.
    """
    if not is_power_of_two(m) or m < 4:
        raise ParameterError(f"diquaternion(m) requires m a power of 2 >= 4, got {m}")
    M = standard_matrices(m)
    return generate_group(
        [M.R, M.S, M.F],
        name=f"DQ{2 * m}",
        source=_source(Family.DIQUATERNION, m),
        symbols=('a', 'b', 'c'),
    )


def pauli1() -> FiniteGroup:
    """The Pauli group on one qubit, <X, Y, Z> over Z[zeta_4]."""
    M = standard_matrices(4)
    return generate_group(
        [M.X, M.Y, M.Z], name="Pauli1", source=_source(Family.PAULI_1_QUBIT), symbols=('x', 'y', 'z')
    )


def _check_twist_modulus(n: int, family: str) -> None:
    if not is_power_of_two(n) or n < 8:
        raise ParameterError(f"{family}(n) requires n a power of 2 >= 8, got {n}")


def semidihedral(n: int) -> FiniteGroup:
    """SD_n = <diag(z, -conj z), F>, order 2n; srs = r^(n/2 - 1)."""
    _check_twist_modulus(n, 'semidihedral')
    M = standard_matrices(n)
    r = diag(zeta(n, 1), neg(zeta(n, -1)))
    return generate_group(
        [r, M.F], name=f"SD{n}", source=_source(Family.SEMIDIHEDRAL, n), symbols=('r', 's')
    )


def semiabelian(n: int) -> FiniteGroup:
    """SA_n = <diag(z, -z), F>, order 2n; srs = r^(n/2 + 1)."""
    _check_twist_modulus(n, 'semiabelian')
    M = standard_matrices(n)
    r = diag(zeta(n, 1), neg(zeta(n, 1)))
    return generate_group(
        [r, M.F], name=f"SA{n}", source=_source(Family.SEMIABELIAN, n), symbols=('r', 's')
    )


def abelian_cn_c2(n: int) -> FiniteGroup:
    """C_n x C_2 = <diag(z, z), F>, order 2n."""
    if n < 2:
        raise ParameterError(f"abelian_cn_c2(n) requires n >= 2, got {n}")
    M = standard_matrices(n)
    r = diag(zeta(n, 1), zeta(n, 1))
    return generate_group(
        [r, M.F], name=f"C{n}xC2", source=_source(Family.ABELIAN_CN_C2, n), symbols=('r', 's')
    )


# =============================================================================
# TABLE FAMILIES
# =============================================================================

def square_roots_of_one(n: int) -> List[int]:
    """All k in [1, n) with k^2 = 1 mod n, by exhaustive scan."""
    return [k for k in range(1, n) if (k * k) % n == 1]


def _twist_name(n: int, k: int) -> str:
    if k == 1:
        return f"C{n}xC2"
    if k == n - 1:
        return f"D{n}"
    if is_power_of_two(n) and n >= 8 and k == n // 2 - 1:
        return f"SD{n}"
    if is_power_of_two(n) and n >= 8 and k == n // 2 + 1:
        return f"SA{n}"
    return f"C{n}:{k}C2"


def _word_label(a: int, b: int) -> str:
    r_part = '' if a == 0 else ('r' if a == 1 else f"r^{a}")
    s_part = 's' if b else ''
    return (r_part + s_part) or '1'


def semidirect_cn_c2(n: int, k: int) -> FiniteGroup:
    """C_n x|_k C_2 as a table on r^a s^b, element index a + n*b.

    (r^a s^b)(r^c s^d) = r^(a + k^b c) s^(b + d), since s r s = r^k.

    Raises:
        ParameterError: If n < 2 or k is outside [1, n)
        InvalidTwist: If k^2 != 1 mod n or gcd(k, n) != 1
    """
    if n < 2:
        raise ParameterError(f"semidirect_cn_c2 requires n >= 2, got {n}")
    if not 1 <= k < n:
        raise ParameterError(f"semidirect_cn_c2 requires 1 <= k < n, got k={k}, n={n}")
    if (k * k) % n != 1 or gcd(k, n) != 1:
        raise InvalidTwist(
            f"k={k} does not define an automorphism of order dividing 2 on C{n}; "
            f"valid twists are {square_roots_of_one(n)}"
        )

    idx = np.arange(2 * n)
    a, b = idx % n, idx // n
    twist = np.where(b == 1, k, 1)
    r_part = (a[:, None] + twist[:, None] * a[None, :]) % n
    s_part = (b[:, None] + b[None, :]) % 2
    table = r_part + n * s_part

    return FiniteGroup(
        name=_twist_name(n, k),
        labels=tuple(_word_label(int(x), int(y)) for x, y in zip(a, b)),
        table=table,
        generators=(1, n),
        identity=0,
        source=_source(Family.SEMIDIRECT_CN_C2, n, k),
        symbols=('r', 's'),
    )


def direct_product(G: FiniteGroup, H: FiniteGroup) -> FiniteGroup:
    """Componentwise product on pairs (g, h), element index g*|H| + h."""
    nG, nH = G.order, H.order
    table = (
        G.table[:, None, :, None] * nH + H.table[None, :, None, :]
    ).reshape(nG * nH, nG * nH)
    labels = tuple(f"({g}, {h})" for g in G.labels for h in H.labels)

    identity = G.identity * nH + H.identity
    gens = [g * nH + H.identity for g in G.generators if g != G.identity]
    gens += [G.identity * nH + h for h in H.generators if h != H.identity]
    return FiniteGroup(
        name=f"{G.name}x{H.name}",
        labels=labels,
        table=table,
        generators=tuple(gens) or (identity,),
        identity=identity,
        source={'family': Family.DIRECT_PRODUCT.value, 'factors': [G.name, H.name]},
    )


def with_generators(G: FiniteGroup, elements: Sequence[int], symbols: Sequence[str] = ()) -> FiniteGroup:
    """Same group, different designated generators.

    Raises:
        ParameterError: If an element index is out of range or the elements do not generate G
    """
    outside = [x for x in elements if not 0 <= x < G.order]
    if outside:
        raise ParameterError(f"Element indices {outside} are outside 0..{G.order - 1} for {G.name}")
    span = generated_subgroup(G, elements)
    if span.size != G.order:
        raise ParameterError(
            f"Elements {list(elements)} generate a subgroup of order {span.size}, not all of {G.name}"
        )
    if symbols and len(symbols) != len(elements):
        raise ParameterError(f"Got {len(symbols)} symbols for {len(elements)} generators")
    return replace(G, generators=tuple(elements), symbols=tuple(symbols))


# =============================================================================
# SPECS
# =============================================================================

FAMILY_BUILDERS: Dict[Family, Callable[..., FiniteGroup]] = {
    Family.CYCLIC: cyclic,
    Family.DIHEDRAL: dihedral,
    Family.DICYCLIC: dicyclic,
    Family.GENERALIZED_QUATERNION: generalized_quaternion,
    Family.DIQUATERNION: diquaternion,
    Family.SEMIDIHEDRAL: semidihedral,
    Family.SEMIABELIAN: semiabelian,
    Family.ABELIAN_CN_C2: abelian_cn_c2,
    Family.SEMIDIRECT_CN_C2: semidirect_cn_c2,
    Family.PAULI_1_QUBIT: pauli1,
}


@dataclass(frozen=True)
class FamilySpec:
    """A family and its integer parameters.

    Attributes:
        family: Which constructor to call
        params: Constructor arguments (n, or n and k for twists)
        factors: Component specs for DirectProduct
    """
    family: Family
    params: Tuple[int, ...] = ()
    factors: Tuple['FamilySpec', ...] = field(default_factory=tuple)

    @property
    def display_name(self) -> str:
        """Canonical spec string, e.g. 'Dic6', 'Q16', 'DQ8', 'sdp:8:3'."""
        p = self.params
        if self.family == Family.CYCLIC:
            return f"C{p[0]}"
        if self.family == Family.DIHEDRAL:
            return f"D{p[0]}"
        if self.family == Family.DICYCLIC:
            return f"Dic{p[0]}"
        if self.family == Family.GENERALIZED_QUATERNION:
            return f"Q{p[0]}"
        if self.family == Family.DIQUATERNION:
            return f"DQ{2 * p[0]}"
        if self.family == Family.SEMIDIHEDRAL:
            return f"SD{p[0]}"
        if self.family == Family.SEMIABELIAN:
            return f"SA{p[0]}"
        if self.family == Family.ABELIAN_CN_C2:
            return f"C{p[0]}xC2"
        if self.family == Family.SEMIDIRECT_CN_C2:
            return f"sdp:{p[0]}:{p[1]}"
        if self.family == Family.PAULI_1_QUBIT:
            return "pauli1"
        return "x".join(f.display_name for f in self.factors)

    def build(self) -> FiniteGroup:
        """Construct the group, tagging its provenance with this spec."""
        if self.family == Family.DIRECT_PRODUCT:
            G = reduce(direct_product, (f.build() for f in self.factors))
        else:
            G = FAMILY_BUILDERS[self.family](*self.params)
        return replace(G, source={**G.source, 'spec': self.display_name})

    def __str__(self):
        return self.display_name


_ATOM_PATTERNS: List[Tuple[re.Pattern, Family]] = [
    (re.compile(r'dic(\d+)'), Family.DICYCLIC),
    (re.compile(r'dih(\d+)'), Family.DIHEDRAL),
    (re.compile(r'dq(\d+)'), Family.DIQUATERNION),
    (re.compile(r'd(\d+)'), Family.DIHEDRAL),
    (re.compile(r'sd(\d+)'), Family.SEMIDIHEDRAL),
    (re.compile(r'sa(\d+)'), Family.SEMIABELIAN),
    (re.compile(r'q(\d+)'), Family.GENERALIZED_QUATERNION),
    (re.compile(r'c(\d+)'), Family.CYCLIC),
]
_SDP_PATTERN = re.compile(r'sdp:(\d+):(\d+)')
_PAULI_PATTERN = re.compile(r'pauli1?')


def _parse_atom(text: str, original: str) -> FamilySpec:
    for pattern, family in _ATOM_PATTERNS:
        match = pattern.fullmatch(text)
        if not match:
            continue
        value = int(match.group(1))
        if family == Family.DIQUATERNION:
            if value % 2:
                raise ParameterError(f"DQ order must be even, got {value} in {original!r}")
            value //= 2
        return FamilySpec(family, (value,))

    raise SpecParseError(
        f"Cannot parse group spec {original!r}; expected forms like "
        f"Q8, D6, Dic6, DQ8, SD8, SA8, C8, C8xC2, C4xC2xC2, sdp:8:3, pauli1"
    )


def parse_family_spec(text: str) -> FamilySpec:
    """Parse a case-insensitive spec string.

    Grammar:
        spec    := 'pauli1' | 'sdp:' n ':' k | product
        product := atom ('x' atom)*
        atom    := 'C' n | 'D' n | 'Dih' n | 'Dic' n | 'Q' n | 'DQ' n | 'SD' n | 'SA' n

    C_n x C_2 with exactly two factors maps to the AbelianCnxC2 matrix family.

    Raises:
        SpecParseError: If the string does not match the grammar
        ParameterError: If DQ is given an odd order
    """
    cleaned = ''.join(text.split()).lower()
    if not cleaned:
        raise SpecParseError("Empty group spec")

    if _PAULI_PATTERN.fullmatch(cleaned):
        return FamilySpec(Family.PAULI_1_QUBIT)

    match = _SDP_PATTERN.fullmatch(cleaned)
    if match:
        return FamilySpec(Family.SEMIDIRECT_CN_C2, (int(match.group(1)), int(match.group(2))))
    if cleaned.startswith('sdp'):
        raise SpecParseError(f"Cannot parse twist spec {text!r}; expected sdp:<n>:<k>")

    parts = cleaned.split('x')
    if len(parts) == 1:
        return _parse_atom(parts[0], text)

    factors = tuple(_parse_atom(part, text) for part in parts)
    if (
        len(factors) == 2
        and all(f.family == Family.CYCLIC for f in factors)
        and factors[1].params == (2,)
        and factors[0].params[0] >= 2
    ):
        return FamilySpec(Family.ABELIAN_CN_C2, factors[0].params)
    return FamilySpec(Family.DIRECT_PRODUCT, factors=factors)
