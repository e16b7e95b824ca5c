# -*- coding: utf-8 -*-
"""Abstract finite groups and their element-level structure.

A FiniteGroup is built once, either by closing a set of matrix generators
or directly from a multiplication table, and is immutable afterwards. Every
algorithm in this module reads only the table; the matrices are kept for
display and provenance.

Key components:
- FiniteGroup: labels, n x n numpy table, generators, provenance
- Subgroup: sorted member indices with a back reference to the parent
- generate_group(): breadth-first closure of Mat2 generators
- group_from_table(): wrap an existing table (families, quotients, documents)
- element_order(), inverse(), multiply(), power(), is_abelian()
- center(), conjugacy_classes(), commutator_subgroup(), derived_series()
- generated_subgroup(), generating_set(), subgroup_as_group()
- quotient(): left cosets with minimal-index representatives
- check_relations(), evaluate_word(): presentation checking
"""

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

import numpy as np

from .config import STATIC_CONFIG
from .errors import BadWord, CapExceeded, NotASubgroup, NotNormal, OrderMismatch
from .matrices import Mat2, mat_identity, mat_mul


# =============================================================================
# DATACLASSES
# =============================================================================

@dataclass(frozen=True, eq=False)
class FiniteGroup:
    """Finite group given by its multiplication table.

    table[a][b] is the index of the product a*b, read left to right.

    Attributes:
        name: Display name (e.g. 'Q8', 'Dic6', 'matrix closure')
        labels: One display string per element
        table: n x n integer array, read-only
        generators: Indices of the designated generators
        identity: Index of the identity element (0 for every constructor here)
        source: Provenance, e.g. {'family': 'Dicyclic', 'params': [6]}
        symbols: Optional one-character names for the generators, used in relation words
        matrices: The Mat2 carrier of each element when built by closure
    """
    name: str
    labels: Tuple[str, ...] = field(repr=False)
    table: np.ndarray = field(repr=False)
    generators: Tuple[int, ...]
    identity: int = 0
    source: Mapping[str, Any] = field(default_factory=dict, repr=False)
    symbols: Tuple[str, ...] = ()
    matrices: Optional[Tuple[Mat2, ...]] = field(default=None, repr=False)

    def __post_init__(self):
        table = np.array(self.table, dtype=np.int64)
        table.setflags(write=False)
        object.__setattr__(self, 'table', table)
        object.__setattr__(self, 'labels', tuple(self.labels))
        object.__setattr__(self, 'generators', tuple(int(g) for g in self.generators))
        object.__setattr__(self, 'symbols', tuple(self.symbols))

        n = len(self.labels)
        if table.shape != (n, n):
            raise ValueError(
                f"Table shape {table.shape} does not match {n} labels"
            )

    @property
    def order(self) -> int:
        return len(self.labels)

    @cached_property
    def rows(self) -> List[List[int]]:
        """The table as nested Python lists, for tight scalar loops."""
        return self.table.tolist()

    @cached_property
    def inverses(self) -> Tuple[int, ...]:
        return tuple(int(i) for i in np.argmax(self.table == self.identity, axis=1))

    @cached_property
    def element_orders(self) -> Tuple[int, ...]:
        n = self.order
        idx = np.arange(n)
        orders = np.zeros(n, dtype=np.int64)
        current = idx.copy()
        for k in range(1, n + 1):
            done = (current == self.identity) & (orders == 0)
            orders[done] = k
            if orders.all():
                break
            current = self.table[current, idx]
        return tuple(int(o) for o in orders)

    @property
    def generator_symbols(self) -> Tuple[str, ...]:
        if self.symbols:
            return self.symbols
        return tuple('abcdefgh'[:len(self.generators)])

    def __len__(self):
        return self.order


@dataclass(frozen=True)
class Subgroup:
    """Subgroup as a strictly sorted tuple of element indices.

    Equality and hashing use the members only; compare subgroups of the same parent.
    """
    parent: FiniteGroup = field(compare=False, repr=False)
    members: Tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.members)

    @cached_property
    def member_set(self) -> frozenset:
        return frozenset(self.members)

    def __contains__(self, x: int) -> bool:
        return x in self.member_set

    def __len__(self):
        return len(self.members)

    def issubset(self, other: 'Subgroup') -> bool:
        return self.member_set <= other.member_set

    @property
    def is_trivial(self) -> bool:
        return len(self.members) == 1


# =============================================================================
# CONSTRUCTION
# =============================================================================

def generate_group(
    gens: Sequence[Mat2],
    cap: Optional[int] = None,
    name: str = 'matrix closure',
    source: Optional[Mapping[str, Any]] = None,
    symbols: Sequence[str] = (),
) -> FiniteGroup:
    """Close a set of Mat2 generators under multiplication.

    Breadth-first search from the identity, multiplying on the right by each
    generator. Element 0 is the identity. The full table is then filled
    column by column: if element b was first reached as p*g, then
    a*b = (a*p)*g, which is one lookup in the right-multiplication table.

    Raises:
        OrderMismatch: If generators come from different rings
        CapExceeded: If the closure grows past cap elements
    """
    cap = STATIC_CONFIG['closure_cap'] if cap is None else cap
    if cap < 1:
        raise ValueError(f"cap must be >= 1, got {cap}")
    if not gens:
        raise ValueError("generate_group needs at least one generator")
    m = gens[0].order
    mixed = sorted({g.order for g in gens if g.order != m})
    if mixed:
        raise OrderMismatch(f"Generators mix Z[zeta_{m}] with rings {mixed}")

    distinct = list(dict.fromkeys(gens))
    identity = mat_identity(m)
    elements: List[Mat2] = [identity]
    index: Dict[Mat2, int] = {identity: 0}
    parent: List[Tuple[int, int]] = [(0, -1)]
    rmul: List[List[int]] = []
    queue = deque([0])

    while queue:
        i = queue.popleft()
        row = []
        for g_pos, g in enumerate(distinct):
            product = mat_mul(elements[i], g)
            j = index.get(product)
            if j is None:
                j = len(elements)
                if j >= cap:
                    raise CapExceeded(
                        f"Closure exceeded cap={cap} elements; check the generators or raise the cap"
                    )
                index[product] = j
                elements.append(product)
                parent.append((i, g_pos))
                queue.append(j)
            row.append(j)
        # BFS pops in index order, so row i lands at position i
        rmul.append(row)

    n = len(elements)
    rmul_arr = np.array(rmul, dtype=np.int64)
    table = np.zeros((n, n), dtype=np.int64)
    table[:, 0] = np.arange(n)
    for b in range(1, n):
        p, g_pos = parent[b]
        table[:, b] = rmul_arr[table[:, p], g_pos]

    # one index per input matrix, repeats included
    generator_indices = tuple(index[g] for g in gens)
    return FiniteGroup(
        name=name,
        labels=tuple(e.label for e in elements),
        table=table,
        generators=generator_indices,
        identity=0,
        source=dict(source) if source else {'family': 'matrix closure'},
        symbols=tuple(symbols),
        matrices=tuple(elements),
    )


def group_from_table(
    table: Union[np.ndarray, Sequence[Sequence[int]]],
    labels: Sequence[str],
    generators: Sequence[int],
    name: str,
    source: Optional[Mapping[str, Any]] = None,
    symbols: Sequence[str] = (),
    identity: int = 0,
) -> FiniteGroup:
    """Wrap an existing multiplication table as a FiniteGroup (no validation)."""
    return FiniteGroup(
        name=name,
        labels=tuple(labels),
        table=np.asarray(table, dtype=np.int64),
        generators=tuple(generators),
        identity=identity,
        source=dict(source) if source else {'family': 'custom'},
        symbols=tuple(symbols),
    )


def _dedupe(items: Iterable[int]) -> Tuple[int, ...]:
    seen = []
    for item in items:
        if item not in seen:
            seen.append(item)
    return tuple(seen)


# =============================================================================
# ELEMENTS
# =============================================================================

def multiply(G: FiniteGroup, x: int, y: int) -> int:
    return G.rows[x][y]


def inverse(G: FiniteGroup, x: int) -> int:
    return G.inverses[x]


def element_order(G: FiniteGroup, x: int) -> int:
    """Least k >= 1 with x^k equal to the identity."""
    if not 0 <= x < G.order:
        raise IndexError(f"Element {x} out of range for group of order {G.order}")
    return G.element_orders[x]


def power(G: FiniteGroup, x: int, k: int) -> int:
    """x^k; negative k uses the inverse."""
    if k < 0:
        x, k = G.inverses[x], -k
    k %= G.element_orders[x]
    result = G.identity
    rows = G.rows
    for _ in range(k):
        result = rows[result][x]
    return result


def is_abelian(G: FiniteGroup) -> bool:
    return bool(np.array_equal(G.table, G.table.T))


def commutator(G: FiniteGroup, x: int, y: int) -> int:
    """[x, y] = x^-1 y^-1 x y."""
    rows, inv = G.rows, G.inverses
    return rows[rows[rows[inv[x]][inv[y]]][x]][y]


# =============================================================================
# SUBGROUPS
# =============================================================================

def make_subgroup(G: FiniteGroup, members: Iterable[int], check: bool = True) -> Subgroup:
    """Build a Subgroup from member indices, verifying closure when check is set.

    Raises:
        NotASubgroup: If the identity is missing or a product leaves the set
    """
    ordered = tuple(sorted(set(int(m) for m in members)))
    if check:
        check_closed(G, ordered)
    return Subgroup(G, ordered)


def check_closed(G: FiniteGroup, members: Tuple[int, ...]) -> None:
    if not members or G.identity not in members:
        raise NotASubgroup(f"Element set {list(members)[:8]} does not contain the identity")
    idx = np.array(members)
    products = G.table[np.ix_(idx, idx)]
    outside = np.setdiff1d(products, idx)
    if outside.size:
        raise NotASubgroup(
            f"Element set of size {len(members)} is not closed: products include {outside[:5].tolist()}"
        )


def trivial_subgroup(G: FiniteGroup) -> Subgroup:
    return Subgroup(G, (G.identity,))


def whole_group(G: FiniteGroup) -> Subgroup:
    return Subgroup(G, tuple(range(G.order)))


def generated_subgroup(G: FiniteGroup, elements: Iterable[int]) -> Subgroup:
    """Smallest subgroup containing the given elements."""
    gens = _dedupe(int(e) for e in elements)
    rows = G.rows
    seen = {G.identity}
    queue = deque([G.identity])
    while queue:
        a = queue.popleft()
        for g in gens:
            b = rows[a][g]
            if b not in seen:
                seen.add(b)
                queue.append(b)
    return Subgroup(G, tuple(sorted(seen)))


def cyclic_subgroup(G: FiniteGroup, x: int) -> Subgroup:
    return generated_subgroup(G, [x])


def generating_set(G: FiniteGroup, members: Optional[Sequence[int]] = None) -> Tuple[int, ...]:
    """Small generating set for a subgroup (the whole group by default).

    Greedy: take elements of largest order first, skipping any already
    inside the span of those chosen.
    """
    target = set(range(G.order)) if members is None else set(members)
    orders = G.element_orders
    candidates = sorted(target, key=lambda e: (-orders[e], e))
    chosen: List[int] = []
    span = {G.identity}
    for e in candidates:
        if len(span) == len(target):
            break
        if e in span:
            continue
        chosen.append(e)
        span = set(generated_subgroup(G, chosen).members)
    return tuple(chosen) if chosen else (G.identity,)


def subgroup_as_group(G: FiniteGroup, H: Subgroup, name: Optional[str] = None) -> FiniteGroup:
    """Re-index a subgroup as a standalone FiniteGroup (identity first)."""
    members = sorted(H.members, key=lambda e: (e != G.identity, e))
    position = np.full(G.order, -1, dtype=np.int64)
    position[members] = np.arange(len(members))
    idx = np.array(members)
    table = position[G.table[np.ix_(idx, idx)]]
    gens = generating_set(G, members)
    return FiniteGroup(
        name=name or f"subgroup of {G.name}",
        labels=tuple(G.labels[e] for e in members),
        table=table,
        generators=tuple(int(position[g]) for g in gens),
        identity=0,
        source={'family': 'subgroup', 'parent': G.name, 'members': list(H.members)},
    )


# =============================================================================
# STRUCTURE
# =============================================================================

def center(G: FiniteGroup) -> Subgroup:
    """Elements commuting with every element."""
    central = np.all(G.table == G.table.T, axis=1)
    return Subgroup(G, tuple(int(i) for i in np.flatnonzero(central)))


def conjugates_of(G: FiniteGroup, x: int) -> Tuple[int, ...]:
    """The conjugacy class {g x g^-1} as sorted indices."""
    g = np.arange(G.order)
    inv = np.array(G.inverses)
    conj = G.table[G.table[g, x], inv]
    return tuple(int(c) for c in np.unique(conj))


def conjugacy_classes(G: FiniteGroup) -> List[Tuple[int, ...]]:
    """Partition into conjugacy classes, ordered by smallest member."""
    assigned = np.zeros(G.order, dtype=bool)
    classes = []
    for x in range(G.order):
        if assigned[x]:
            continue
        cls = conjugates_of(G, x)
        assigned[list(cls)] = True
        classes.append(cls)
    return classes


def _commutator_closure(G: FiniteGroup, members: Sequence[int]) -> Subgroup:
    comms = {commutator(G, x, y) for x in members for y in members}
    return generated_subgroup(G, sorted(comms))


def commutator_subgroup(G: FiniteGroup) -> Subgroup:
    """Subgroup generated by all commutators [x, y]."""
    return _commutator_closure(G, range(G.order))


def derived_series(G: FiniteGroup) -> List[Subgroup]:
    """G = G0 > G1 > ... until the series stabilises."""
    series = [whole_group(G)]
    while True:
        nxt = _commutator_closure(G, series[-1].members)
        if nxt == series[-1]:
            return series
        series.append(nxt)


def is_normal_members(G: FiniteGroup, members: Sequence[int]) -> bool:
    """gHg^-1 = H for every g in G."""
    idx = np.array(members)
    member_mask = np.zeros(G.order, dtype=bool)
    member_mask[idx] = True
    inv = np.array(G.inverses)
    left = G.table[:, idx]
    conj = G.table[left, inv[:, None]]
    return bool(member_mask[conj].all())


def quotient(G: FiniteGroup, N: Subgroup, name: Optional[str] = None) -> FiniteGroup:
    """G/N on left cosets xN, represented by their minimal element index.

    Raises:
        NotNormal: If N is not normal in G
    """
    if not is_normal_members(G, N.members):
        raise NotNormal(f"Subgroup of order {N.size} is not normal in {G.name}")

    idx = np.array(N.members)
    coset_of = np.full(G.order, -1, dtype=np.int64)
    reps: List[int] = []
    for x in range(G.order):
        if coset_of[x] >= 0:
            continue
        coset_of[G.table[x, idx]] = len(reps)
        reps.append(x)

    rep_arr = np.array(reps)
    table = coset_of[G.table[np.ix_(rep_arr, rep_arr)]]
    gens = [int(coset_of[g]) for g in G.generators]
    gens = [g for g in _dedupe(gens) if g != 0] or [0]
    return FiniteGroup(
        name=name or f"{G.name}/N",
        labels=tuple(f"{G.labels[r]}N" for r in reps),
        table=table,
        generators=tuple(gens),
        identity=0,
        source={'family': 'quotient', 'parent': G.name, 'kernel': list(N.members)},
    )


# =============================================================================
# PRESENTATIONS
# =============================================================================

Word = Union[str, Sequence[Tuple[int, int]]]


class _WordParser:
    """Recursive descent over: relation := word ['=' word];
    word := factor*; factor := atom ['^' int]; atom := symbol | '1' | '(' word ')'.
    """

    def __init__(self, G: FiniteGroup, text: str, symbols: Sequence[str]):
        self.G = G
        self.text = ''.join(text.split())
        self.pos = 0
        self.lookup = {}
        for i, s in enumerate(symbols):
            if i >= len(G.generators):
                continue
            self.lookup[s] = G.generators[i]
        self.symbols = tuple(symbols)

    def fail(self, message: str) -> BadWord:
        return BadWord(f"{message} in word {self.text!r} at position {self.pos}")

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ''

    def relation(self) -> int:
        lhs = self.word()
        if self.peek() == '=':
            self.pos += 1
            rhs = self.word()
            lhs = self.G.rows[lhs][self.G.inverses[rhs]]
        if self.pos != len(self.text):
            raise self.fail(f"Unexpected {self.peek()!r}")
        return lhs

    def word(self) -> int:
        value = self.G.identity
        while self.peek() and self.peek() not in ')=':
            value = self.G.rows[value][self.factor()]
        return value

    def factor(self) -> int:
        base = self.atom()
        if self.peek() == '^':
            self.pos += 1
            start = self.pos
            if self.peek() and self.peek() in '+-':
                self.pos += 1
            while self.peek().isdigit():
                self.pos += 1
            digits = self.text[start:self.pos]
            if not digits or digits in '+-':
                raise self.fail("Missing exponent")
            base = power(self.G, base, int(digits))
        return base

    def atom(self) -> int:
        ch = self.peek()
        if ch == '(':
            self.pos += 1
            value = self.word()
            if self.peek() != ')':
                raise self.fail("Unbalanced parenthesis")
            self.pos += 1
            return value
        if ch == '1':
            self.pos += 1
            return self.G.identity
        if ch in self.lookup:
            self.pos += 1
            return self.lookup[ch]
        if ch in self.symbols:
            raise self.fail(
                f"Symbol {ch!r} names generator {self.symbols.index(ch)} but the group has "
                f"{len(self.G.generators)} generators"
            )
        raise self.fail(f"Unknown symbol {ch!r}")


def evaluate_word(G: FiniteGroup, word: Word, symbols: Optional[Sequence[str]] = None) -> int:
    """Evaluate a relation word to an element index.

    Words are either strings over the generator symbols ('r^6', 'rsr s^-1',
    '(rf)^2', 'a^2=b^2') or sequences of (generator position, exponent) pairs.

    Raises:
        BadWord: On syntax errors or references to missing generators
    """
    if isinstance(word, str):
        return _WordParser(G, word, symbols or G.generator_symbols).relation()

    value = G.identity
    for pos, exp in word:
        if not 0 <= pos < len(G.generators):
            raise BadWord(
                f"Generator position {pos} out of range; group has {len(G.generators)} generators"
            )
        value = G.rows[value][power(G, G.generators[pos], exp)]
    return value


def check_relations(
    G: FiniteGroup,
    relations: Sequence[Word],
    symbols: Optional[Sequence[str]] = None,
) -> bool:
    """True iff every relation word evaluates to the identity."""
    return all(evaluate_word(G, w, symbols) == G.identity for w in relations)
