# -*- coding: utf-8 -*-
"""Naming groups by the families they belong to.

Abelian groups are named by invariant factors computed from the element
orders ('C1', 'C6', 'C8xC2', 'C4xC2xC2'). Non-abelian groups are tested for
isomorphism against the named families of the same order; anything else
gets a descriptive fallback label such as 'order16-nonabelian-1:1,2:7,4:8'.

Functions:
- identify(): label for a group
- invariant_factors(): invariant factor decomposition of an abelian group
- named_groups_of_order(): (label, group) catalog entries of one order
- catalog_specs(): family specs of every catalog group up to an order
"""

from collections import Counter
from functools import lru_cache
from typing import List, Tuple

from sympy import factorint, integer_log

from .config import STATIC_CONFIG
from .families import Family, FamilySpec, is_power_of_two
from .group import FiniteGroup, is_abelian
from .isomorphism import fingerprint, isomorphic


# =============================================================================
# ABELIAN GROUPS
# =============================================================================

def _p_part_type(orders: List[int], p: int) -> List[int]:
    """Exponents of the cyclic factors of the Sylow p-subgroup, largest first.

    With c_k = #{x : x^(p^k) = 1} = p^(e_k), the number of factors of
    exponent at least k is e_k - e_(k-1).
    """
    exponents = [0]
    k = 1
    while True:
        count = sum(1 for o in orders if (p ** k) % o == 0)
        e, _ = integer_log(count, p)
        if e == exponents[-1]:
            break
        exponents.append(e)
        k += 1
    at_least = [exponents[i] - exponents[i - 1] for i in range(1, len(exponents))]
    # at_least[k-1] factors have exponent >= k
    parts = []
    for k in range(len(at_least), 0, -1):
        exact = at_least[k - 1] - (at_least[k] if k < len(at_least) else 0)
        parts.extend([k] * exact)
    return parts


def invariant_factors(G: FiniteGroup) -> List[int]:
    """Invariant factors n_1 >= n_2 >= ... with n_(i+1) | n_i; [] for the trivial group.

    Raises:
        ValueError: If G is not abelian
    """
    if not is_abelian(G):
        raise ValueError(f"{G.name} is not abelian")
    orders = list(G.element_orders)
    types = {p: _p_part_type(orders, p) for p in factorint(G.order)}
    length = max((len(t) for t in types.values()), default=0)
    factors = [1] * length
    for p, parts in types.items():
        for i, e in enumerate(parts):
            factors[i] *= p ** e
    return factors


def abelian_label(G: FiniteGroup) -> str:
    factors = invariant_factors(G)
    if not factors:
        return "C1"
    return "x".join(f"C{f}" for f in factors)


# =============================================================================
# NON-ABELIAN CATALOG
# =============================================================================

def catalog_specs(max_order: int) -> List[FamilySpec]:
    """Named non-abelian family members of order <= max_order."""
    specs = []
    for n in range(3, max_order // 2 + 1):
        specs.append(FamilySpec(Family.DIHEDRAL, (n,)))
    for n in range(4, max_order // 2 + 1, 2):
        specs.append(FamilySpec(Family.DICYCLIC, (n,)))
    n = 8
    while 2 * n <= max_order:
        specs.append(FamilySpec(Family.SEMIDIHEDRAL, (n,)))
        specs.append(FamilySpec(Family.SEMIABELIAN, (n,)))
        n *= 2
    m = 4
    while 4 * m <= max_order:
        specs.append(FamilySpec(Family.DIQUATERNION, (m,)))
        m *= 2
    return specs


def _label_for(spec: FamilySpec) -> str:
    n = spec.params[0]
    if spec.family == Family.DICYCLIC and is_power_of_two(n):
        return f"Q{2 * n}"
    return spec.display_name


@lru_cache(maxsize=None)
def named_groups_of_order(order: int) -> Tuple[Tuple[str, FiniteGroup], ...]:
    """(label, group) pairs for the named non-abelian groups of one order."""
    entries = []
    for spec in catalog_specs(order):
        family = spec.family
        n = spec.params[0]
        size = 4 * n if family == Family.DIQUATERNION else 2 * n
        if size == order:
            entries.append((_label_for(spec), spec.build()))
    return tuple(entries)


def _fallback_label(G: FiniteGroup) -> str:
    fp = fingerprint(G) if G.order <= STATIC_CONFIG['max_analysis_order'] else None
    kind = 'abelian' if is_abelian(G) else 'nonabelian'
    histogram = (
        fp.histogram_string() if fp
        else ",".join(f"{k}:{v}" for k, v in sorted(Counter(G.element_orders).items()))
    )
    return f"order{G.order}-{kind}-{histogram}"


@lru_cache(maxsize=1024)
def identify(G: FiniteGroup) -> str:
    """Catalog label for G; never claims a name it has not verified."""
    if is_abelian(G):
        return abelian_label(G)
    if G.order > STATIC_CONFIG['catalog_max_order']:
        return _fallback_label(G)

    target = fingerprint(G)
    for label, candidate in named_groups_of_order(G.order):
        if fingerprint(candidate) == target and isomorphic(G, candidate):
            return label
    return _fallback_label(G)
