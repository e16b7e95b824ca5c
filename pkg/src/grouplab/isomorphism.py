# -*- coding: utf-8 -*-
"""Isomorphism testing for small finite groups.

Two stages:
1. Fingerprint filter: order, abelian flag, element-order histogram, center
   order, conjugacy class sizes, commutator subgroup order, and the squaring
   map (how many square roots each element has, keyed by its order).
2. Backtracking over images of a small generating set of G. Each partial
   assignment is extended along Cayley edges (phi(a*g) = phi(a)*phi(g)) and
   pruned on the first conflict. A complete map is verified against both
   full tables before it is returned.
"""

from collections import Counter, deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .config import STATIC_CONFIG
from .errors import TooLarge
from .group import (
    FiniteGroup, center, commutator_subgroup, conjugacy_classes, generating_set, is_abelian
)


@dataclass(frozen=True)
class Fingerprint:
    """Isomorphism invariants. Different fingerprints imply non-isomorphic groups."""
    order: int
    abelian: bool
    order_histogram: Tuple[Tuple[int, int], ...]
    center_order: int
    class_sizes: Tuple[int, ...]
    commutator_order: int
    square_roots: Tuple[Tuple[Tuple[int, int], int], ...]

    def histogram_string(self) -> str:
        """'1:1,2:7,4:8' style rendering of the element-order histogram."""
        return ",".join(f"{k}:{v}" for k, v in self.order_histogram)


@dataclass(frozen=True)
class Isomorphism:
    """A verified isomorphism G -> H.

    Attributes:
        mapping: mapping[x] is the image in H of element x of G
        generator_map: images of the generating set used by the search
    """
    mapping: Tuple[int, ...]
    generator_map: Tuple[Tuple[int, int], ...]

    def as_dict(self) -> Dict[int, int]:
        return dict(enumerate(self.mapping))


@lru_cache(maxsize=1024)
def fingerprint(G: FiniteGroup) -> Fingerprint:
    return Fingerprint(
        order=G.order,
        abelian=is_abelian(G),
        order_histogram=tuple(sorted(Counter(G.element_orders).items())),
        center_order=center(G).size,
        class_sizes=tuple(sorted(len(c) for c in conjugacy_classes(G))),
        commutator_order=commutator_subgroup(G).size,
        square_roots=_square_root_histogram(G),
    )


def _square_root_histogram(G: FiniteGroup) -> Tuple[Tuple[Tuple[int, int], int], ...]:
    """Counts of (element order, number of square roots) over all elements."""
    roots = np.bincount(np.diagonal(G.table), minlength=G.order)
    return tuple(sorted(Counter(zip(G.element_orders, roots.tolist())).items()))


@lru_cache(maxsize=1024)
def _element_invariants(G: FiniteGroup) -> Tuple[Tuple[int, int], ...]:
    class_size = [0] * G.order
    for cls in conjugacy_classes(G):
        for x in cls:
            class_size[x] = len(cls)
    return tuple(zip(G.element_orders, class_size))


def _check_bound(G: FiniteGroup) -> None:
    bound = STATIC_CONFIG['max_analysis_order']
    if G.order > bound:
        raise TooLarge(f"{G.name} has order {G.order}; isomorphism testing supports order <= {bound}")


def _extend(
    G: FiniteGroup,
    H: FiniteGroup,
    gens: Sequence[int],
    images: Sequence[int],
) -> Optional[Dict[int, int]]:
    """Propagate phi over <gens> along right multiplication; None on conflict."""
    g_rows, h_rows = G.rows, H.rows
    phi = {G.identity: H.identity}
    used = {H.identity}
    queue = deque([G.identity])
    while queue:
        a = queue.popleft()
        for g, img in zip(gens, images):
            b = g_rows[a][g]
            target = h_rows[phi[a]][img]
            known = phi.get(b)
            if known is None:
                if target in used:
                    return None
                phi[b] = target
                used.add(target)
                queue.append(b)
            elif known != target:
                return None
    return phi


def _is_homomorphism(G: FiniteGroup, H: FiniteGroup, mapping: np.ndarray) -> bool:
    left = mapping[G.table]
    right = H.table[np.ix_(mapping, mapping)]
    return bool(np.array_equal(left, right))


def find_isomorphism(G: FiniteGroup, H: FiniteGroup) -> Optional[Isomorphism]:
    """Return a verified isomorphism G -> H, or None.

    Raises:
        TooLarge: If either group is beyond the analysis bound
    """
    _check_bound(G)
    _check_bound(H)
    if fingerprint(G) != fingerprint(H):
        return None

    gens = generating_set(G)
    g_inv = _element_invariants(G)
    h_inv = _element_invariants(H)
    candidates: List[List[int]] = [
        [y for y in range(H.order) if h_inv[y] == g_inv[g]] for g in gens
    ]

    def search(depth: int, images: List[int]) -> Optional[Dict[int, int]]:
        if depth == len(gens):
            phi = _extend(G, H, gens, images)
            if phi is not None and len(phi) == G.order:
                return phi
            return None
        for y in candidates[depth]:
            if y in images:
                continue
            trial = images + [y]
            partial = _extend(G, H, gens[:depth + 1], trial)
            if partial is None:
                continue
            # element orders must survive on the partial span
            if any(G.element_orders[a] != H.element_orders[b] for a, b in partial.items()):
                continue
            found = search(depth + 1, trial)
            if found is not None:
                return found
        return None

    phi = search(0, [])
    if phi is None:
        return None

    mapping = np.array([phi[x] for x in range(G.order)], dtype=np.int64)
    if len(set(mapping.tolist())) != H.order or not _is_homomorphism(G, H, mapping):
        return None
    return Isomorphism(
        mapping=tuple(int(v) for v in mapping),
        generator_map=tuple((int(g), int(phi[g])) for g in gens),
    )


def isomorphic(G: FiniteGroup, H: FiniteGroup) -> bool:
    return find_isomorphism(G, H) is not None
