# -*- coding: utf-8 -*-
"""Subgroup enumeration and subgroup lattices.

Lattices are index-weighted: a cover H < K carries [K:H]. Two lattices are
equal when some bijection of subgroups preserves covers and their weights,
and a lattice automorphism is such a bijection of a lattice with itself.
A unicorn is a subgroup fixed by every lattice automorphism.

Key components:
- SubgroupLattice: canonically sorted nodes plus weighted cover edges
- ReducedLattice: conjugacy classes of subgroups as a DAG
- all_subgroups(): cyclic subgroups closed under joins
- is_normal(), subgroup_class(), intersect(), join(), normal_subgroups()
- hasse(), lattice_automorphisms(), lattice_orbits(), unicorns(), reduced_lattice()
- lattice_isomorphism(), lattices_equal()
"""

from collections import Counter
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import networkx as nx

from .config import STATIC_CONFIG
from .errors import NotASubgroup, TooLarge
from .group import (
    FiniteGroup, Subgroup, check_closed, cyclic_subgroup, generated_subgroup,
    is_normal_members, subgroup_as_group
)


# =============================================================================
# DATACLASSES
# =============================================================================

@dataclass(frozen=True, eq=False)
class SubgroupLattice:
    """Hasse diagram of all subgroups.

    Attributes:
        parent: The group
        nodes: Subgroups sorted by (size, members); node 0 is trivial, the last is the group
        covers: (lower, upper, index) node-index triples
    """
    parent: FiniteGroup
    nodes: Tuple[Subgroup, ...]
    covers: Tuple[Tuple[int, int, int], ...]

    @property
    def bottom(self) -> int:
        return 0

    @property
    def top(self) -> int:
        return len(self.nodes) - 1

    @cached_property
    def graph(self) -> nx.DiGraph:
        """Cover graph, edges pointing from subgroup to supergroup."""
        graph = nx.DiGraph()
        for i, node in enumerate(self.nodes):
            graph.add_node(i, size=node.size)
        for lower, upper, index in self.covers:
            graph.add_edge(lower, upper, index=index)
        return graph

    def node_index(self, H: Subgroup) -> int:
        return self._positions[H.members]

    @cached_property
    def _positions(self) -> Dict[Tuple[int, ...], int]:
        return {node.members: i for i, node in enumerate(self.nodes)}

    def __len__(self):
        return len(self.nodes)


@dataclass(frozen=True)
class SubgroupClass:
    """One conjugacy class of subgroups in a reduced lattice."""
    nodes: Tuple[int, ...]
    order: int
    label: str

    @property
    def size(self) -> int:
        return len(self.nodes)


@dataclass(frozen=True, eq=False)
class ReducedLattice:
    """Conjugacy classes of subgroups with maximal-containment edges.

    This is a DAG; it need not be a lattice.
    """
    lattice: SubgroupLattice
    classes: Tuple[SubgroupClass, ...]
    edges: Tuple[Tuple[int, int], ...]

    @property
    def subgroup_count(self) -> int:
        return sum(c.size for c in self.classes)

    @property
    def class_sizes(self) -> List[int]:
        return [c.size for c in self.classes]


# =============================================================================
# ENUMERATION
# =============================================================================

def _check_analysis_bound(G: FiniteGroup) -> None:
    bound = STATIC_CONFIG['max_analysis_order']
    if G.order > bound:
        raise TooLarge(f"{G.name} has order {G.order}; subgroup analysis supports order <= {bound}")


@lru_cache(maxsize=256)
def _enumerate(G: FiniteGroup) -> Tuple[Subgroup, ...]:
    cyclics: Dict[Tuple[int, ...], int] = {}
    for x in range(G.order):
        members = cyclic_subgroup(G, x).members
        if members not in cyclics:
            cyclics[members] = x

    # generators carried along so each join is a small closure
    found: Dict[Tuple[int, ...], Tuple[int, ...]] = {m: (x,) for m, x in cyclics.items()}
    frontier = list(found.items())
    cyclic_list = list(cyclics.items())
    while frontier:
        next_frontier = []
        for members, gens in frontier:
            member_set = set(members)
            for c_members, x in cyclic_list:
                if x in member_set:
                    continue
                joined = generated_subgroup(G, gens + (x,)).members
                if joined not in found:
                    found[joined] = gens + (x,)
                    next_frontier.append((joined, gens + (x,)))
        frontier = next_frontier

    ordered = sorted(found, key=lambda m: (len(m), m))
    return tuple(Subgroup(G, m) for m in ordered)


def all_subgroups(G: FiniteGroup) -> List[Subgroup]:
    """Every subgroup exactly once, sorted by (size, members).

    Raises:
        TooLarge: Above the configured analysis bound
    """
    _check_analysis_bound(G)
    return list(_enumerate(G))


def _require_subgroup(G: FiniteGroup, H: Subgroup) -> None:
    if any(not 0 <= m < G.order for m in H.members):
        raise NotASubgroup(f"Members out of range for {G.name}")
    check_closed(G, H.members)


def is_normal(G: FiniteGroup, H: Subgroup) -> bool:
    """gHg^-1 = H for all g.

    Raises:
        NotASubgroup: If H is not closed
    """
    _require_subgroup(G, H)
    return is_normal_members(G, H.members)


def normal_subgroups(G: FiniteGroup) -> List[Subgroup]:
    return [H for H in all_subgroups(G) if is_normal_members(G, H.members)]


def subgroup_class(G: FiniteGroup, H: Subgroup) -> List[Subgroup]:
    """All conjugates gHg^-1, sorted by members.

    Raises:
        NotASubgroup: If H is not closed
    """
    _require_subgroup(G, H)
    rows, inv = G.rows, G.inverses
    seen = set()
    for g in range(G.order):
        conj = tuple(sorted(rows[rows[g][h]][inv[g]] for h in H.members))
        seen.add(conj)
    return [Subgroup(G, m) for m in sorted(seen)]


def intersect(H: Subgroup, K: Subgroup) -> Subgroup:
    if H.parent is not K.parent:
        raise ValueError("Cannot intersect subgroups of different groups")
    return Subgroup(H.parent, tuple(sorted(H.member_set & K.member_set)))


def join(G: FiniteGroup, H: Subgroup, K: Subgroup) -> Subgroup:
    """Smallest subgroup containing H and K."""
    return generated_subgroup(G, H.members + K.members)


# =============================================================================
# LATTICES
# =============================================================================

@lru_cache(maxsize=256)
def _hasse(G: FiniteGroup) -> SubgroupLattice:
    nodes = _enumerate(G)
    containment = nx.DiGraph()
    containment.add_nodes_from(range(len(nodes)))
    for i, lower in enumerate(nodes):
        for j in range(i + 1, len(nodes)):
            upper = nodes[j]
            if upper.size > lower.size and upper.size % lower.size == 0 and lower.issubset(upper):
                containment.add_edge(i, j)

    reduced = nx.transitive_reduction(containment)
    covers = sorted(
        (i, j, nodes[j].size // nodes[i].size) for i, j in reduced.edges()
    )
    return SubgroupLattice(parent=G, nodes=nodes, covers=tuple(covers))


def hasse(G: FiniteGroup) -> SubgroupLattice:
    """Index-weighted Hasse diagram of the subgroup lattice."""
    _check_analysis_bound(G)
    return _hasse(G)


# =============================================================================
# AUTOMORPHISMS AND ISOMORPHISMS
# =============================================================================
# Colour refinement with individualization. Nodes start coloured by subgroup
# size; a cover index is the ratio of the two sizes, so colours carry it.

@dataclass(frozen=True)
class _Adjacency:
    below: Tuple[Tuple[int, ...], ...]
    above: Tuple[Tuple[int, ...], ...]

    @classmethod
    def of(cls, L: SubgroupLattice) -> '_Adjacency':
        below: List[List[int]] = [[] for _ in L.nodes]
        above: List[List[int]] = [[] for _ in L.nodes]
        for lower, upper, _ in L.covers:
            below[upper].append(lower)
            above[lower].append(upper)
        return cls(tuple(map(tuple, below)), tuple(map(tuple, above)))


def _size_colours(L: SubgroupLattice) -> List[int]:
    return [node.size for node in L.nodes]


def _refine(
    sides: Sequence[_Adjacency], colourings: Sequence[List[int]]
) -> Optional[List[List[int]]]:
    """Jointly refine colourings until stable; None once their histograms differ."""
    cells = len(set(colourings[0]))
    while True:
        tokens = [
            [
                (c[v], tuple(sorted(c[u] for u in adj.below[v])), tuple(sorted(c[w] for w in adj.above[v])))
                for v in range(len(c))
            ]
            for adj, c in zip(sides, colourings)
        ]
        palette = {tok: i for i, tok in enumerate(sorted(set().union(*tokens)))}
        colourings = [[palette[tok] for tok in side] for side in tokens]
        histogram = Counter(colourings[0])
        if any(Counter(c) != histogram for c in colourings[1:]):
            return None
        if len(histogram) == cells:
            return list(colourings)
        cells = len(histogram)


def _preserves_covers(a: _Adjacency, b: _Adjacency, perm: Sequence[int]) -> bool:
    return all(
        sorted(perm[u] for u in a.above[v]) == sorted(b.above[perm[v]])
        for v in range(len(perm))
    )


def _matches(
    a: _Adjacency, b: _Adjacency, colours_a: List[int], colours_b: List[int]
) -> Iterator[Tuple[int, ...]]:
    """Every cover-preserving bijection a -> b that respects the colourings."""
    refined = _refine((a, b), (colours_a, colours_b))
    if refined is None:
        return
    ca, cb = refined
    n = len(ca)
    counts = Counter(ca)
    if len(counts) == n:
        position = {c: w for w, c in enumerate(cb)}
        perm = tuple(position[c] for c in ca)
        if _preserves_covers(a, b, perm):
            yield perm
        return

    target = min((size, c) for c, size in counts.items() if size > 1)[1]
    v = ca.index(target)
    for w in (w for w in range(n) if cb[w] == target):
        yield from _matches(a, b, _individualize(ca, v, n), _individualize(cb, w, n))


def _individualize(colours: List[int], v: int, fresh: int) -> List[int]:
    out = list(colours)
    out[v] = fresh
    return out


def _check_lattice_bound(L: SubgroupLattice) -> None:
    bound = STATIC_CONFIG['max_lattice_nodes']
    if len(L) > bound:
        raise TooLarge(f"Lattice has {len(L)} nodes; automorphism search supports <= {bound}")


def lattice_automorphisms(L: SubgroupLattice) -> List[Tuple[int, ...]]:
    """All node permutations preserving covers and their indices.

    Each permutation p maps node i to node p[i]. The identity comes first.
    Candidates are split by refined colour, so only nodes that agree on
    size and on the colours of everything above and below are tried.
    """
    _check_lattice_bound(L)
    adj = _Adjacency.of(L)
    colours = _size_colours(L)
    perms = set(_matches(adj, adj, colours, colours))
    return sorted(perms, key=lambda p: (p != tuple(range(len(L))), p))


def lattice_orbits(L: SubgroupLattice) -> Tuple[Tuple[int, ...], ...]:
    """Orbits of the lattice automorphism group on nodes, sorted.

    Each pair of nodes sharing a refined colour and not yet in one orbit
    gets one search for an automorphism sending the first to the second;
    every automorphism found merges the orbits of all nodes it moves.
    """
    _check_lattice_bound(L)
    return _orbits(L)


@lru_cache(maxsize=256)
def _orbits(L: SubgroupLattice) -> Tuple[Tuple[int, ...], ...]:
    n = len(L)
    adj = _Adjacency.of(L)
    base = _refine((adj,), (_size_colours(L),))[0]
    parent = list(range(n))

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for v in range(n):
        for w in range(v + 1, n):
            if base[w] != base[v] or find(w) == find(v):
                continue
            perm = next(_matches(adj, adj, _individualize(base, v, n), _individualize(base, w, n)), None)
            if perm is None:
                continue
            for u, image in enumerate(perm):
                parent[find(u)] = find(image)

    orbits: Dict[int, List[int]] = {}
    for v in range(n):
        orbits.setdefault(find(v), []).append(v)
    return tuple(sorted(tuple(orbit) for orbit in orbits.values()))


def unicorns(L: SubgroupLattice) -> List[Subgroup]:
    """Subgroups fixed by every lattice automorphism (singleton orbits)."""
    fixed = sorted(orbit[0] for orbit in lattice_orbits(L) if len(orbit) == 1)
    return [L.nodes[v] for v in fixed]


# =============================================================================
# REDUCED LATTICES
# =============================================================================

def subgroup_conjugacy_classes(G: FiniteGroup) -> List[Tuple[int, ...]]:
    """Conjugacy classes of subgroups as tuples of lattice node indices."""
    L = hasse(G)
    assigned = [False] * len(L)
    classes = []
    for i, H in enumerate(L.nodes):
        if assigned[i]:
            continue
        members = tuple(sorted(L.node_index(K) for K in subgroup_class(G, H)))
        for j in members:
            assigned[j] = True
        classes.append(members)
    return classes


def reduced_lattice(G: FiniteGroup) -> ReducedLattice:
    """Collapse the lattice to conjugacy classes of subgroups.

    Class labels come from the identification catalog; edges join classes
    with some member of one maximal in some member of the other.
    """
    from .catalog import identify

    L = hasse(G)
    node_classes = subgroup_conjugacy_classes(G)
    class_of = {}
    classes = []
    for c, members in enumerate(node_classes):
        for i in members:
            class_of[i] = c
        representative = L.nodes[members[0]]
        classes.append(SubgroupClass(
            nodes=members,
            order=representative.size,
            label=identify(subgroup_as_group(G, representative)),
        ))

    edges = sorted({(class_of[lower], class_of[upper]) for lower, upper, _ in L.covers})
    return ReducedLattice(lattice=L, classes=tuple(classes), edges=tuple(edges))


def lattice_isomorphism(L1: SubgroupLattice, L2: SubgroupLattice) -> Optional[Dict[int, int]]:
    """A weight-preserving bijection of lattice nodes, or None.

    Node count and the cover-index multiset are compared before the
    refinement search.
    """
    if len(L1) != len(L2):
        return None
    if Counter(c[2] for c in L1.covers) != Counter(c[2] for c in L2.covers):
        return None

    perm = next(
        _matches(_Adjacency.of(L1), _Adjacency.of(L2), _size_colours(L1), _size_colours(L2)),
        None,
    )
    if perm is None:
        return None
    return dict(enumerate(perm))


def lattices_equal(L1: SubgroupLattice, L2: SubgroupLattice) -> bool:
    return lattice_isomorphism(L1, L2) is not None
