# -*- coding: utf-8 -*-
"""Group-level structure: decompositions, cycle graphs and Cayley graphs.

Key components:
- DecompositionKind / Decomposition: semidirect, direct and central products
- semidirect_decompositions(), central_product_decompositions()
- rebuild_semidirect(): the abstract product N x| H from conjugation
- CycleGraph, cycle_graph(), cycle_graph_isomorphism(), cycle_graphs_isomorphic()
- cayley_edges(): coloured edges x -> x*g
- s_edge_targets(), twist_rewiring(): how the twists of C_n x| C_2 rewire s-edges
"""

from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

import networkx as nx
from networkx.algorithms.isomorphism import GraphMatcher

from .catalog import identify
from .group import (
    FiniteGroup, Subgroup, center, cyclic_subgroup, is_normal_members, subgroup_as_group
)
from .subgroups import all_subgroups


# =============================================================================
# DECOMPOSITIONS
# =============================================================================

class DecompositionKind(Enum):
    SEMIDIRECT = "Semidirect"
    DIRECT = "Direct"
    CENTRAL = "Central"

    @property
    def symbol(self) -> str:
        """Infix operator used in display strings."""
        return {'Semidirect': ':', 'Direct': 'x', 'Central': 'o'}[self.value]


@dataclass(frozen=True)
class Decomposition:
    """G as a product of two subgroups.

    Semidirect/Direct: parts are (normal kernel N, complement H).
    Central: parts are (H, K), the larger first.
    """
    kind: DecompositionKind
    parts: Tuple[Subgroup, Subgroup]
    labels: Tuple[str, str]

    @property
    def display(self) -> str:
        return f"{self.labels[0]} {self.kind.symbol} {self.labels[1]}"

    @property
    def intersection_order(self) -> int:
        return len(self.parts[0].member_set & self.parts[1].member_set)


def _label(G: FiniteGroup, H: Subgroup) -> str:
    return identify(subgroup_as_group(G, H))


def _canonical_key(d: Decomposition) -> Tuple:
    a, b = d.parts
    return (d.kind.value, -a.size, a.members, b.size, b.members)


def semidirect_decompositions(G: FiniteGroup) -> List[Decomposition]:
    """Every (N, H) with N normal and proper, H nontrivial, N n H = 1 and |N||H| = |G|.

    Pairs with H normal as well become Direct and appear once per unordered pair.
    """
    subgroups = all_subgroups(G)
    normal = {H.members for H in subgroups if is_normal_members(G, H.members)}
    results = []
    seen_direct = set()
    for N in subgroups:
        if N.members not in normal or N.is_trivial or N.size == G.order:
            continue
        for H in subgroups:
            if N.size * H.size != G.order or H.is_trivial:
                continue
            if len(N.member_set & H.member_set) != 1:
                continue
            if H.members in normal:
                pair = frozenset((N.members, H.members))
                if pair in seen_direct:
                    continue
                seen_direct.add(pair)
                kernel, complement = (N, H) if (N.size, N.members) >= (H.size, H.members) else (H, N)
                kind = DecompositionKind.DIRECT
            else:
                kernel, complement = N, H
                kind = DecompositionKind.SEMIDIRECT
            results.append(Decomposition(
                kind=kind,
                parts=(kernel, complement),
                labels=(_label(G, kernel), _label(G, complement)),
            ))
    return sorted(results, key=_canonical_key)


def _commute(G: FiniteGroup, H: Subgroup, K: Subgroup) -> bool:
    rows = G.rows
    return all(rows[h][k] == rows[k][h] for h in H.members for k in K.members)


def central_product_decompositions(G: FiniteGroup) -> List[Decomposition]:
    """Unordered pairs of proper subgroups (H, K) with HK = G, elementwise
    commuting, and a nontrivial intersection inside the center."""
    subgroups = [H for H in all_subgroups(G) if not H.is_trivial and H.size < G.order]
    Z = center(G).member_set
    results = []
    for i, H in enumerate(subgroups):
        for K in subgroups[:i]:
            common = H.member_set & K.member_set
            if len(common) < 2 or not common <= Z:
                continue
            if H.size * K.size != G.order * len(common):
                continue
            if not _commute(G, H, K):
                continue
            big, small = (H, K) if (H.size, H.members) >= (K.size, K.members) else (K, H)
            results.append(Decomposition(
                kind=DecompositionKind.CENTRAL,
                parts=(big, small),
                labels=(_label(G, big), _label(G, small)),
            ))
    return sorted(results, key=_canonical_key)


def decomposition_types(decompositions: Sequence[Decomposition]) -> List[Tuple[str, str, str]]:
    """Distinct (kind, label, label) triples, sorted."""
    return sorted({(d.kind.value, d.labels[0], d.labels[1]) for d in decompositions})


def rebuild_semidirect(G: FiniteGroup, decomposition: Decomposition) -> FiniteGroup:
    """Build N x| H abstractly from the conjugation action of H on N.

    Element (n, h) has index i*|H| + j for n = N[i], h = H[j], and
    (n1, h1)(n2, h2) = (n1 * h1 n2 h1^-1, h1 h2).
    """
    N, H = decomposition.parts
    rows, inv = G.rows, G.inverses
    n_pos = {n: i for i, n in enumerate(N.members)}
    h_pos = {h: j for j, h in enumerate(H.members)}
    pairs = [(n, h) for n in N.members for h in H.members]
    size = len(pairs)
    table = [[0] * size for _ in range(size)]
    for a, (n1, h1) in enumerate(pairs):
        for b, (n2, h2) in enumerate(pairs):
            twisted = rows[rows[h1][n2]][inv[h1]]
            n = rows[n1][twisted]
            h = rows[h1][h2]
            table[a][b] = n_pos[n] * H.size + h_pos[h]

    identity = n_pos[G.identity] * H.size + h_pos[G.identity]
    return FiniteGroup(
        name=f"{decomposition.labels[0]}:{decomposition.labels[1]}",
        labels=tuple(f"({G.labels[n]}, {G.labels[h]})" for n, h in pairs),
        table=table,
        generators=tuple(range(size)),
        identity=identity,
        source={'family': 'rebuilt semidirect', 'parent': G.name},
    )


# =============================================================================
# CYCLE GRAPHS
# =============================================================================

@dataclass(frozen=True, eq=False)
class CycleGraph:
    """Union of the cycles 1 - x - x^2 - ... - 1 over maximal cyclic subgroups.

    Attributes:
        vertex_count: |G|
        edges: Deduplicated unordered pairs (a, b) with a < b
        identity: The identity vertex
        cycles: Element sequence of each maximal cyclic subgroup, starting at the identity
    """
    vertex_count: int
    edges: FrozenSet[Tuple[int, int]]
    identity: int
    cycles: Tuple[Tuple[int, ...], ...]

    @cached_property
    def graph(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.vertex_count))
        graph.add_edges_from(self.edges)
        return graph

    def to_networkx(self) -> nx.Graph:
        return self.graph.copy()


def maximal_cyclic_subgroups(G: FiniteGroup) -> List[Tuple[Subgroup, int]]:
    """(subgroup, minimal-index generator) for each maximal cyclic subgroup."""
    by_members: Dict[Tuple[int, ...], int] = {}
    for x in range(G.order):
        members = cyclic_subgroup(G, x).members
        if members not in by_members:
            by_members[members] = x

    cyclics = [(Subgroup(G, m), x) for m, x in by_members.items()]
    maximal = []
    for C, x in cyclics:
        contained = any(
            D.size > C.size and C.issubset(D) for D, _ in cyclics
        )
        if not contained:
            maximal.append((C, x))
    return sorted(maximal, key=lambda item: (item[0].size, item[0].members))


def cycle_graph(G: FiniteGroup) -> CycleGraph:
    rows = G.rows
    edges = set()
    cycles = []
    for C, x in maximal_cyclic_subgroups(G):
        sequence = [G.identity]
        current = x
        while current != G.identity:
            sequence.append(current)
            current = rows[current][x]
        cycles.append(tuple(sequence))
        if len(sequence) < 2:
            continue
        for a, b in zip(sequence, sequence[1:] + [G.identity]):
            if a != b:
                edges.add((min(a, b), max(a, b)))
    return CycleGraph(
        vertex_count=G.order,
        edges=frozenset(edges),
        identity=G.identity,
        cycles=tuple(cycles),
    )


def cycle_graph_isomorphism(C1: CycleGraph, C2: CycleGraph) -> Optional[Dict[int, int]]:
    """Plain graph isomorphism (identity not pinned), or None."""
    if C1.vertex_count != C2.vertex_count or len(C1.edges) != len(C2.edges):
        return None
    degrees1 = sorted(d for _, d in C1.graph.degree())
    degrees2 = sorted(d for _, d in C2.graph.degree())
    if degrees1 != degrees2:
        return None
    matcher = GraphMatcher(C1.graph, C2.graph)
    mapping = next(matcher.isomorphisms_iter(), None)
    if mapping is None:
        return None
    return dict(sorted(mapping.items()))


def cycle_graphs_isomorphic(C1: CycleGraph, C2: CycleGraph) -> bool:
    return cycle_graph_isomorphism(C1, C2) is not None


# =============================================================================
# CAYLEY GRAPHS
# =============================================================================

def cayley_edges(G: FiniteGroup, generators: Optional[Sequence[int]] = None) -> List[Tuple[int, int, int]]:
    """(x, x*g, generator position) for every element x and generator g."""
    gens = G.generators if generators is None else tuple(generators)
    rows = G.rows
    return [(x, rows[x][g], pos) for pos, g in enumerate(gens) for x in range(G.order)]


def cayley_graph(G: FiniteGroup, generators: Optional[Sequence[int]] = None) -> nx.MultiDiGraph:
    graph = nx.MultiDiGraph()
    graph.add_nodes_from(range(G.order))
    for x, y, pos in cayley_edges(G, generators):
        graph.add_edge(x, y, generator=pos)
    return graph


def s_edge_targets(G: FiniteGroup) -> List[int]:
    """For a C_n x| C_2 table group with generators (r, s): position b of the
    s-edge from r^a, where the second coset is laid out as s r^b."""
    r, s = G.generators[:2]
    n = G.element_orders[r]
    rows = G.rows
    powers = [G.identity]
    for _ in range(n - 1):
        powers.append(rows[powers[-1]][r])
    position = {rows[s][powers[b]]: b for b in range(n)}
    return [position[rows[powers[a]][s]] for a in range(n)]


def twist_rewiring(G1: FiniteGroup, G2: FiniteGroup) -> int:
    """Number of s-edges landing on different positions in two twists."""
    t1, t2 = s_edge_targets(G1), s_edge_targets(G2)
    if len(t1) != len(t2):
        raise ValueError(f"Cannot compare twists of C{len(t1)} and C{len(t2)}")
    return sum(1 for a, b in zip(t1, t2) if a != b)
