# -*- coding: utf-8 -*-
"""Verification suite: the structural facts this package exists to check.

Each claim pairs a stable id and a topic anchor with a one-line statement.
Its check function returns a ClaimResult. run_verification() runs a selection of claims and
collects the outcomes into a VerificationReport backed by a DataFrame.

A check that raises counts as FAIL with the exception as its detail, so one
broken construction never hides the remaining results.

Functions:
- run_verification(): Run claims and build a report
- claim_ids(): Stable ids in suite order
"""

from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple
import json
import sys

import networkx as nx
import pandas as pd

from .catalog import catalog_specs, identify
from .config import STATIC_CONFIG, get_package_version, get_runtime_config
from .cyclotomic import CyclotomicInt, add, eq, mul, neg, power as ring_power, zeta
from .errors import ParameterError
from .families import (
    FamilySpec, abelian_cn_c2, cyclic, dicyclic, diquaternion, dihedral, element_of,
    generalized_quaternion, parse_family_spec, semiabelian, semidihedral,
    semidirect_cn_c2, square_roots_of_one, with_generators
)
from .group import (
    FiniteGroup, Subgroup, center, check_relations, conjugacy_classes, cyclic_subgroup,
    generated_subgroup, is_abelian, multiply, power, quotient, subgroup_as_group
)
from .isomorphism import find_isomorphism, isomorphic
from .matrices import diag, mat_identity, mat_mul, mat_neg, standard_matrices
from .structure import (
    DecompositionKind, cayley_edges, central_product_decompositions, cycle_graph,
    cycle_graphs_isomorphic, decomposition_types, semidirect_decompositions, twist_rewiring
)
from .subgroups import (
    all_subgroups, hasse, is_normal, lattice_isomorphism, lattices_equal,
    normal_subgroups, reduced_lattice, subgroup_class, unicorns
)
from .validation import validate_group


# =============================================================================
# DATACLASSES
# =============================================================================

@dataclass(frozen=True)
class ClaimResult:
    passed: bool
    detail: str


@dataclass(frozen=True)
class ClaimSpec:
    """One verifiable statement.

    Attributes:
        claim_id: Stable identifier, used by `verify --claim`
        anchor: Topic the claim belongs to
        statement: Human-readable form of what is checked
        check: Zero-argument callable returning a ClaimResult
    """
    claim_id: str
    anchor: str
    statement: str
    check: Callable[[], ClaimResult]


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one verification run.

    Attributes:
        results: One row per claim with columns claim, anchor, statement, status, detail
        run_timestamp: When the run started
        version: Package version that produced the report
    """
    results: pd.DataFrame
    run_timestamp: str
    version: str

    @property
    def passed(self) -> bool:
        return bool((self.results['status'] == 'PASS').all())

    @property
    def failures(self) -> List[str]:
        return self.results.loc[self.results['status'] != 'PASS', 'claim'].tolist()

    def to_table(self, no_color: bool = False) -> str:
        """Fixed-width table; PASS/FAIL are coloured unless no_color is set."""
        df = self.results[['claim', 'anchor', 'status', 'detail']].copy()
        if not no_color:
            colors = {'PASS': '\033[32mPASS\033[0m', 'FAIL': '\033[31mFAIL\033[0m'}
            df['status'] = df['status'].map(colors)
        passed = int((self.results['status'] == 'PASS').sum())
        footer = f"{passed}/{len(self.results)} claims passed"
        return df.to_string(index=False) + '\n\n' + footer + '\n'

    def to_json(self) -> str:
        payload = {
            'schema': STATIC_CONFIG['schema_version'],
            'version': self.version,
            'run_timestamp': self.run_timestamp,
            'passed': self.passed,
            'claims': self.results.to_dict(orient='records'),
        }
        return json.dumps(payload, indent=2) + '\n'


# =============================================================================
# HELPER FUNCTIONS
# =============================================================================

def _build(spec: str) -> FiniteGroup:
    return parse_family_spec(spec).build()


def _label(G: FiniteGroup, H: Subgroup) -> str:
    return identify(subgroup_as_group(G, H))


def _minus_identity(G: FiniteGroup) -> int:
    m = G.matrices[0].order
    return element_of(G, mat_neg(mat_identity(m)))


def _scalar(G: FiniteGroup, value: CyclotomicInt) -> int:
    return element_of(G, diag(value, value))


def _result(failures: Sequence[str], success: str) -> ClaimResult:
    if failures:
        return ClaimResult(False, '; '.join(failures))
    return ClaimResult(True, success)


def _iso_failure(G: FiniteGroup, H: FiniteGroup, what: str) -> Optional[str]:
    if find_isomorphism(G, H) is None:
        return f"{what}: no isomorphism onto {H.name}"
    return None


def dihedral_relations(n: int) -> List[str]:
    return [f"r^{n}", "f^2", "rfr=f"]


def dicyclic_relations(n: int) -> List[str]:
    return [f"r^{n}", "s^4", "rsr=s", f"r^{n // 2}=s^2"]


# Symbols a, b, c for R_4, S, F. The printed form with ab = ba and
# cba = a^2 b forces c = a and presents an abelian group, so the
# non-commuting relations are stated as conjugations.
DIQUATERNION_RELATIONS = ["a^4", "c^2", "a^2=b^2", "aba=b", "cac=a^-1", "cbc=b^-1"]


# =============================================================================
# CLAIMS: ORDERS AND PRESENTATIONS
# =============================================================================

def _check_orders() -> ClaimResult:
    expected = {'Q8': 8, 'Dic6': 12, 'DQ8': 16, 'DQ16': 32, 'SD8': 16, 'SA8': 16, 'C8xC2': 16}
    actual = {spec: _build(spec).order for spec in expected}
    failures = [f"|{s}| = {actual[s]}, expected {n}" for s, n in expected.items() if actual[s] != n]
    return _result(failures, ', '.join(f"|{s}|={n}" for s, n in actual.items()))


def _check_presentations() -> ClaimResult:
    failures = []
    for n in (3, 4, 6, 8):
        G = dihedral(n)
        if not check_relations(G, dihedral_relations(n)) or G.order != 2 * n:
            failures.append(f"D{n} does not satisfy its presentation")
    for n in (4, 6, 8, 16):
        G = dicyclic(n)
        if not check_relations(G, dicyclic_relations(n)) or G.order != 2 * n:
            failures.append(f"{G.name} does not satisfy its presentation")
    G = diquaternion(4)
    if not check_relations(G, DIQUATERNION_RELATIONS) or G.order != 16:
        failures.append("DQ8 does not satisfy its presentation")
    return _result(failures, "D3, D4, D6, D8, Q8, Dic6, Q16, Q32, DQ8 satisfy their presentations")


def _check_dic6_alt_presentation() -> ClaimResult:
    G = dicyclic(6)
    r, s = G.generators
    H = with_generators(G, [s, power(G, r, 2)], symbols=('a', 'b'))
    if not check_relations(H, ["a^4=b^3", "bab=a"]):
        return ClaimResult(False, "<s, r^2> does not satisfy a^4 = b^3, bab = a")
    return ClaimResult(True, "Dic6 = <a, b | a^4 = b^3, bab = a> with a = s, b = r^2")


# =============================================================================
# CLAIMS: QUOTIENTS AND DICYCLIC GROUPS
# =============================================================================

def _check_quotients() -> ClaimResult:
    failures = []
    cases = [
        (dicyclic(6), dihedral(3)),
        (generalized_quaternion(16), dihedral(4)),
        (generalized_quaternion(32), dihedral(8)),
        (diquaternion(4), _build('C2xC2xC2')),
    ]
    for G, target in cases:
        N = cyclic_subgroup(G, _minus_identity(G))
        Q = quotient(G, N, name=f"{G.name}/<-1>")
        failure = _iso_failure(Q, target, Q.name)
        if failure:
            failures.append(failure)
    return _result(failures, "Dic6/<-1> = D3, Q16/<-1> = D4, Q32/<-1> = D8, DQ8/<-I> = C2xC2xC2")


def _check_dicyclic_extension() -> ClaimResult:
    failures = []
    for n in (6, 8, 10, 12):
        G = dicyclic(n)
        r = G.generators[0]
        rotations = cyclic_subgroup(G, r)
        if rotations.size != n or not is_normal(G, rotations):
            failures.append(f"<r> is not a normal C{n} in {G.name}")
        Q = quotient(G, cyclic_subgroup(G, power(G, r, n // 2)))
        failure = _iso_failure(Q, dihedral(n // 2), f"{G.name}/<r^{n // 2}>")
        if failure:
            failures.append(failure)
    return _result(failures, "Dic_n/<r^(n/2)> = D_(n/2) for n = 6, 8, 10, 12")


def _check_dicyclic_semidirect() -> ClaimResult:
    failures = []
    types = decomposition_types(semidirect_decompositions(dicyclic(6)))
    if ('Semidirect', 'C3', 'C4') not in types:
        failures.append(f"Dic6 has no C3 : C4 decomposition, found {types}")
    for order in (16, 32):
        found = semidirect_decompositions(generalized_quaternion(order))
        if found:
            failures.append(f"Q{order} has {len(found)} decompositions, expected none")
    return _result(failures, "Dic6 = C3 : C4; Q16 and Q32 do not decompose")


def _check_quaternion_intersections() -> ClaimResult:
    failures = []
    for n in (8, 16, 32):
        G = dicyclic(n)
        minus = _minus_identity(G)
        missing = [H for H in all_subgroups(G) if not H.is_trivial and minus not in H]
        if missing:
            failures.append(f"{G.name}: {len(missing)} nontrivial subgroups miss -1")
    return _result(failures, "every nontrivial subgroup of Q16, Q32, Q64 contains -1")


def _chain_plus_wings(classes, order: int) -> bool:
    """Chain C1 < C2 < ... < C_(order/2) < Q_order, the rest pairing off."""
    counts = Counter((c.label, c.size) for c in classes)
    chain = [(f"C{2 ** i}", 1) for i in range(order.bit_length() - 1)] + [(f"Q{order}", 1)]
    for key in chain:
        if counts[key] < 1:
            return False
        counts[key] -= 1
    return all(v % 2 == 0 for v in counts.values())


def _check_reduced_lattices() -> ClaimResult:
    failures = []
    expected = {
        16: (11, [1] * 7 + [2] * 2),
        32: (20, [1] * 8 + [2] * 2 + [4] * 2),
    }
    for order, (subgroup_count, class_sizes) in expected.items():
        R = reduced_lattice(generalized_quaternion(order))
        if R.subgroup_count != subgroup_count:
            failures.append(f"Q{order} has {R.subgroup_count} subgroups, expected {subgroup_count}")
        if sorted(R.class_sizes) != class_sizes:
            failures.append(f"Q{order} class sizes {sorted(R.class_sizes)}, expected {class_sizes}")
        if not _chain_plus_wings(R.classes, order):
            failures.append(f"Q{order} classes do not form a chain with paired wings")
    return _result(failures, "Q16: 11 subgroups in 9 classes; Q32: 20 subgroups in 12 classes")


# =============================================================================
# CLAIMS: DIQUATERNION GROUPS
# =============================================================================

def _complement_c2_kernels(G: FiniteGroup) -> List[str]:
    return sorted({
        d.labels[0] for d in semidirect_decompositions(G)
        if d.kind == DecompositionKind.SEMIDIRECT and d.labels[1] == 'C2'
    })


def _check_dq8_structure() -> ClaimResult:
    G = diquaternion(4)
    failures = []
    Z = center(G)
    minus_i = _scalar(G, neg(zeta(4, 1)))
    if _label(G, Z) != 'C4' or Z != cyclic_subgroup(G, minus_i):
        failures.append(f"center is {_label(G, Z)}, expected <-iI> = C4")

    kernels = _complement_c2_kernels(G)
    if kernels != ['C4xC2', 'D4', 'Q8']:
        failures.append(f"kernels with complement C2 are {kernels}")
    if any(d.kind == DecompositionKind.DIRECT for d in semidirect_decompositions(G)):
        failures.append("unexpected direct decomposition")

    central = {(d.labels, d.intersection_order) for d in central_product_decompositions(G)}
    for labels in (('Q8', 'C4'), ('D4', 'C4')):
        if (labels, 2) not in central:
            failures.append(f"missing central product {labels[0]} o {labels[1]}")
    return _result(failures, "Z(DQ8) = C4; D4, C4xC2, Q8 each : C2; DQ8 = Q8 o C4 = D4 o C4")


def _check_dq8_quotient_involutions() -> ClaimResult:
    G = diquaternion(4)
    failures = []
    Q = quotient(G, cyclic_subgroup(G, _minus_identity(G)))
    involutions = sum(1 for o in Q.element_orders if o == 2)
    if involutions != 7:
        failures.append(f"DQ8/<-I> has {involutions} subgroups of order 2, expected 7")

    subgroups = all_subgroups(G)
    abelian_eights = [
        H for H in subgroups if H.size == 8 and is_abelian(subgroup_as_group(G, H))
    ]
    triple = [
        H for H in subgroups
        if H.size == 4 and sum(1 for K in abelian_eights if H.issubset(K)) == 3
    ]
    minus_i = cyclic_subgroup(G, _scalar(G, neg(zeta(4, 1))))
    if triple != [minus_i]:
        failures.append(f"{len(triple)} order-4 subgroups lie in three abelian subgroups of order 8")
    return _result(failures, "DQ8/<-I> has 7 involutions; only <-iI> lies in all three abelian index-2 subgroups")


def _check_dq16_structure() -> ClaimResult:
    G = diquaternion(8)
    M = standard_matrices(8)
    X, Y, Z = (element_of(G, A) for A in (M.X, M.Y, M.Z))
    failures = []

    reflections = generated_subgroup(G, [X, Y])
    if reflections.size != 16 or _label(G, reflections) != 'D8':
        failures.append(f"<X, Y> is {_label(G, reflections)} of order {reflections.size}")
    axes = generated_subgroup(G, [element_of(G, mat_mul(M.X, M.Y)), Z])
    if axes.size != 16 or _label(G, axes) != 'C8xC2':
        failures.append(f"<XY, Z> is {_label(G, axes)} of order {axes.size}")

    Zc = center(G)
    minus_i = cyclic_subgroup(G, _scalar(G, neg(zeta(8, 2))))
    if Zc != minus_i:
        failures.append("center is not <-iI>")
    central = {
        d.labels for d in central_product_decompositions(G) if d.parts[1] == Zc
    }
    for labels in (('Q16', 'C4'), ('D8', 'C4')):
        if labels not in central:
            failures.append(f"missing central product {labels[0]} o <-iI>")
    return _result(failures, "<X, Y> = D8, <XY, Z> = C8xC2; DQ16 = Q16 o C4 = D8 o C4")


# =============================================================================
# CLAIMS: TWISTS OF C_n x| C_2
# =============================================================================

def _pairwise_distinct(groups: Sequence[FiniteGroup]) -> List[str]:
    return [
        f"{G.name} = {H.name}" for G, H in combinations(groups, 2) if isomorphic(G, H)
    ]


def _check_twists_c16() -> ClaimResult:
    failures = []
    roots = square_roots_of_one(16)
    if roots != [1, 7, 9, 15]:
        failures.append(f"square roots of 1 mod 16 are {roots}")
    twists = [semidirect_cn_c2(16, k) for k in roots]
    failures.extend(_pairwise_distinct(twists))
    failure = _iso_failure(semidirect_cn_c2(16, 15), dihedral(16), "twist k=15")
    if failure:
        failures.append(failure)
    if not is_abelian(semidirect_cn_c2(16, 1)):
        failures.append("twist k=1 is not abelian")
    return _result(failures, "k in {1, 7, 9, 15}; four distinct twists; k=15 dihedral, k=1 abelian")


def _check_matrix_table_crosscheck() -> ClaimResult:
    failures = []
    for n in (8, 16):
        for build, k in ((semidihedral, n // 2 - 1), (semiabelian, n // 2 + 1)):
            G = build(n)
            failure = _iso_failure(G, semidirect_cn_c2(n, k), f"{G.name} vs sdp:{n}:{k}")
            if failure:
                failures.append(failure)
    return _result(failures, "SD_n = C_n :_(n/2-1) C2 and SA_n = C_n :_(n/2+1) C2 for n = 8, 16")


def _check_twist_rewiring() -> ClaimResult:
    twists = {k: semidirect_cn_c2(8, k) for k in (1, 3, 5, 7)}
    expected = {(1, 5): 4, (3, 7): 4, (1, 3): 6, (1, 7): 6, (3, 5): 6, (5, 7): 6}
    failures = []
    for (a, b), count in expected.items():
        actual = twist_rewiring(twists[a], twists[b])
        if actual != count:
            failures.append(f"k={a} vs k={b}: {actual} s-edges differ, expected {count}")
    return _result(failures, "C8xC2 vs SA8 and D8 vs SD8 differ in 4 s-edges, other pairs in 6")


def _check_order16_involutions() -> ClaimResult:
    expected = {'D8': 9, 'SD8': 5, 'SA8': 3}
    failures = []
    for spec, count in expected.items():
        G = _build(spec)
        actual = sum(1 for o in G.element_orders if o == 2)
        if actual != count:
            failures.append(f"{spec} has {actual} involutions, expected {count}")
        if 8 not in G.element_orders:
            failures.append(f"{spec} has no element of order 8")
    SA = semiabelian(8)
    eights = {cyclic_subgroup(SA, x).members for x in range(SA.order) if SA.element_orders[x] == 8}
    if len(eights) != 2:
        failures.append(f"SA8 has {len(eights)} cyclic subgroups of order 8, expected 2")
    return _result(failures, "involutions: D8 9, SD8 5, SA8 3; SA8 has two C8")


def _check_sd8_upper_subgroup() -> ClaimResult:
    failures = []
    for build, expected in ((semidihedral, 'Q8'), (dihedral, 'D4')):
        G = build(8)
        r, s = G.generators
        H = generated_subgroup(G, [power(G, r, 2), multiply(G, r, s)])
        label = _label(G, H)
        if H.size != 8 or label != expected:
            failures.append(f"<r^2, rs> in {G.name} is {label}, expected {expected}")
    return _result(failures, "<r^2, rs> = Q8 in SD8 and D4 in D8")


def _check_sd8_d8_lattices() -> ClaimResult:
    failures = []
    for G, count in ((semidihedral(8), 15), (dihedral(8), 19)):
        actual = len(hasse(G))
        if actual != count:
            failures.append(f"{G.name} has {actual} subgroups, expected {count}")
        kernels = _complement_c2_kernels(G)
        if len(kernels) < 2:
            failures.append(f"{G.name} splits over C2 with kernels {kernels} only")
    SD = semidihedral(8)
    Q = quotient(SD, cyclic_subgroup(SD, power(SD, SD.generators[0], 4)))
    failure = _iso_failure(Q, dihedral(4), "SD8/<r^4>")
    if failure:
        failures.append(failure)
    return _result(failures, "SD8: 15 subgroups, D8: 19; both split over C2 two ways; SD8/<r^4> = D4")


def _check_dih6_decompositions() -> ClaimResult:
    G = dihedral(6)
    expected = [
        ('Direct', 'D3', 'C2'),
        ('Semidirect', 'C3', 'C2xC2'),
        ('Semidirect', 'C6', 'C2'),
        ('Semidirect', 'D3', 'C2'),
    ]
    actual = decomposition_types(semidirect_decompositions(G))
    if actual != expected:
        return ClaimResult(False, f"decomposition types {actual}")
    return ClaimResult(True, "D6 = C6 : C2 = C3 : C2xC2 = D3 : C2 = D3 x C2")


def _check_dih6_reflection_cayley() -> ClaimResult:
    G = dihedral(6)
    r, f = G.generators
    graph = nx.Graph()
    graph.add_nodes_from(range(G.order))
    graph.add_edges_from((x, y) for x, y, _ in cayley_edges(G, [f, multiply(G, r, f)]))
    degrees = {d for _, d in graph.degree()}
    if degrees != {2} or not nx.is_connected(graph):
        return ClaimResult(False, f"Cayley graph on <f, rf> has degrees {sorted(degrees)}")
    return ClaimResult(True, "Cayley graph of D6 on <f, rf> is a single 12-cycle")


# =============================================================================
# CLAIMS: LATTICES, UNICORNS AND CYCLE GRAPHS
# =============================================================================

def _check_mystery_lattice() -> ClaimResult:
    A, B = abelian_cn_c2(8), semiabelian(8)
    LA, LB = hasse(A), hasse(B)
    failures = []
    if len(LA) != 11 or len(LB) != 11:
        failures.append(f"subgroup counts {len(LA)} and {len(LB)}, expected 11")
    if lattice_isomorphism(LA, LB) is None:
        failures.append("lattices differ")
    if isomorphic(A, B):
        failures.append("C8xC2 and SA8 are isomorphic")

    normal = normal_subgroups(B)
    if len(normal) != 9:
        failures.append(f"SA8 has {len(normal)} normal subgroups, expected 9")
    found = unicorns(LB)
    if len(found) != 7:
        failures.append(f"SA8 has {len(found)} unicorns, expected 7")

    r, s = B.generators
    wings = {cyclic_subgroup(B, s), cyclic_subgroup(B, multiply(B, power(B, r, 4), s))}
    non_normal = [H for H in all_subgroups(B) if H not in normal]
    if set(non_normal) != wings or set(subgroup_class(B, non_normal[0])) != wings:
        failures.append("non-normal subgroups are not the class {<s>, <r^4 s>}")
    if wings & set(found):
        failures.append("<s> or <r^4 s> is a unicorn")
    return _result(failures, "C8xC2 and SA8 share an 11-node lattice; SA8: 9 normal, 7 unicorns")


def _check_cycle_graphs() -> ClaimResult:
    failures = []
    if not cycle_graphs_isomorphic(cycle_graph(abelian_cn_c2(8)), cycle_graph(semiabelian(8))):
        failures.append("C8xC2 and SA8 cycle graphs differ")
    A, DQ = _build('C4xC2xC2'), diquaternion(4)
    if not cycle_graphs_isomorphic(cycle_graph(A), cycle_graph(DQ)):
        failures.append("C4xC2xC2 and DQ8 cycle graphs differ")
    if lattices_equal(hasse(A), hasse(DQ)):
        failures.append("C4xC2xC2 and DQ8 share a lattice")
    return _result(failures, "cycle graphs: C8xC2 ~ SA8, C4xC2xC2 ~ DQ8; lattices of the latter differ")


def _check_six_groups_order_32() -> ClaimResult:
    groups = [
        cyclic(32), abelian_cn_c2(16), dihedral(16),
        semidihedral(16), semiabelian(16), generalized_quaternion(32),
    ]
    failures = [f"{G.name} has no element of order 16" for G in groups if 16 not in G.element_orders]
    failures.extend(_pairwise_distinct(groups))
    return _result(failures, "C32, C16xC2, D16, SD16, SA16, Q32 are pairwise non-isomorphic")


def _unicorn_catalog() -> List[FamilySpec]:
    bound = STATIC_CONFIG['unicorn_catalog_max_order']
    extra = [parse_family_spec(s) for s in ('C8xC2', 'C4xC2xC2', 'C16xC2')]
    return catalog_specs(bound) + extra


def _check_unicorns_normal() -> ClaimResult:
    failures = []
    specs = _unicorn_catalog()
    for spec in specs:
        G = spec.build()
        bad = [H for H in unicorns(hasse(G)) if not is_normal(G, H)]
        if bad:
            failures.append(f"{spec}: {len(bad)} non-normal unicorns")
    return _result(failures, f"every unicorn is normal in {len(specs)} catalog groups")


# =============================================================================
# CLAIMS: PROPERTY CHECKS
# =============================================================================

def _latin_square_groups() -> List[FiniteGroup]:
    specs = ('Q8', 'D6', 'Dic6', 'DQ8', 'SD8', 'SA8', 'C8xC2', 'C4xC2xC2', 'sdp:16:7', 'pauli1')
    return [_build(s) for s in specs]


def _check_latin_square() -> ClaimResult:
    failures = []
    groups = _latin_square_groups()
    for G in groups:
        try:
            validate_group(G)
        except ValueError as e:
            failures.append(f"{G.name}: {e}")
    return _result(failures, f"{len(groups)} tables are associative Latin squares with identity")


def _check_lagrange_class_equation() -> ClaimResult:
    failures = []
    groups = _latin_square_groups()
    for G in groups:
        sizes = [len(c) for c in conjugacy_classes(G)]
        if sum(sizes) != G.order or any(G.order % s for s in sizes):
            failures.append(f"{G.name}: class equation fails")
        if any(G.order % H.size for H in all_subgroups(G)):
            failures.append(f"{G.name}: a subgroup order does not divide {G.order}")
        if any(G.order % o for o in G.element_orders):
            failures.append(f"{G.name}: an element order does not divide {G.order}")
    return _result(failures, f"Lagrange and the class equation hold in {len(groups)} groups")


def _check_cyclotomic_ring() -> ClaimResult:
    failures = []
    for m in range(1, 17):
        z = zeta(m)
        one = CyclotomicInt.one(m)
        powers = [ring_power(z, k) for k in range(1, m + 1)]
        if not eq(powers[-1], one) or any(eq(p, one) for p in powers[:-1]):
            failures.append(f"zeta_{m} is not a primitive {m}-th root of unity")
        a, b = add(z, one), ring_power(z, m - 1)
        if not eq(mul(a, add(b, z)), add(mul(a, b), mul(a, z))):
            failures.append(f"distributivity fails in Z[zeta_{m}]")
    return _result(failures, "zeta_m is a primitive m-th root of unity for m <= 16")


# =============================================================================
# REGISTRY
# =============================================================================

CLAIM_SPECS: Dict[str, ClaimSpec] = {
    spec.claim_id: spec for spec in [
        ClaimSpec('orders', "family constructions", "orders of Q8, Dic6, DQ8, DQ16, SD8, SA8, C8xC2", _check_orders),
        ClaimSpec('presentations', "presentations", "dihedral, dicyclic and DQ8 presentations hold", _check_presentations),
        ClaimSpec('quotients', "quotients by central subgroups", "Dic6/<-1>, Q16/<-1>, Q32/<-1>, DQ8/<-I>", _check_quotients),
        ClaimSpec('dicyclic-semidirect', "dicyclic groups", "Dic6 = C3 : C4; Q16 and Q32 are indecomposable", _check_dicyclic_semidirect),
        ClaimSpec('quaternion-intersections', "generalized quaternion groups", "nontrivial subgroups of Q_2^n meet in <-1>", _check_quaternion_intersections),
        ClaimSpec('reduced-lattices', "reduced subgroup lattices", "reduced lattices of Q16 and Q32", _check_reduced_lattices),
        ClaimSpec('dq8-structure', "diquaternion group DQ8", "center, splittings and central products of DQ8", _check_dq8_structure),
        ClaimSpec('dq16-structure', "diquaternion group DQ16", "index-2 subgroups and central products of DQ16", _check_dq16_structure),
        ClaimSpec('twists-c16', "twisted products C16 : C2", "the four twists of C16 : C2", _check_twists_c16),
        ClaimSpec('matrix-table-crosscheck', "semidihedral and semiabelian matrices", "SD and SA matrices match their twist tables", _check_matrix_table_crosscheck),
        ClaimSpec('sd8-d8-lattices', "semidihedral lattice", "SD8 and D8 lattices and splittings", _check_sd8_d8_lattices),
        ClaimSpec('mystery-lattice', "mystery lattice", "C8xC2 and SA8 share a lattice; SA8 unicorns", _check_mystery_lattice),
        ClaimSpec('cycle-graphs', "cycle graphs", "cycle graph coincidences", _check_cycle_graphs),
        ClaimSpec('six-groups-order-32', "cyclic index-2 subgroups", "six groups of order 32 with a cyclic index-2 subgroup", _check_six_groups_order_32),
        ClaimSpec('unicorns-normal', "unicorns", "unicorns are normal across the catalog", _check_unicorns_normal),
        ClaimSpec('latin-square', "multiplication tables", "tables are associative Latin squares", _check_latin_square),
        ClaimSpec('lagrange-class-equation', "Lagrange and class equation", "Lagrange and class equation", _check_lagrange_class_equation),
        ClaimSpec('cyclotomic-ring', "cyclotomic integers", "exact arithmetic in Z[zeta_m]", _check_cyclotomic_ring),
        ClaimSpec('dic6-alt-presentation', "dicyclic groups", "Dic6 = <a, b | a^4 = b^3, bab = a>", _check_dic6_alt_presentation),
        ClaimSpec('dicyclic-extension', "dicyclic groups", "Dic_n/<r^(n/2)> = D_(n/2)", _check_dicyclic_extension),
        ClaimSpec('dih6-reflection-cayley', "Cayley graphs", "D6 on two reflections is a 12-cycle", _check_dih6_reflection_cayley),
        ClaimSpec('dq8-quotient-involutions', "diquaternion group DQ8", "DQ8/<-I> involutions and <-iI>", _check_dq8_quotient_involutions),
        ClaimSpec('twist-rewiring', "twisted products C8 : C2", "s-edge rewiring between the twists of C8", _check_twist_rewiring),
        ClaimSpec('order16-involutions', "groups of order 16", "involution counts of D8, SD8, SA8", _check_order16_involutions),
        ClaimSpec('sd8-upper-subgroup', "semidihedral lattice", "<r^2, rs> in SD8 and D8", _check_sd8_upper_subgroup),
        ClaimSpec('dih6-decompositions', "dihedral decompositions", "D6 splits three ways and as a direct product", _check_dih6_decompositions),
    ]
}


def claim_ids() -> List[str]:
    return list(CLAIM_SPECS)


# =============================================================================
# RUNNER
# =============================================================================

def _run_claim(spec: ClaimSpec) -> ClaimResult:
    try:
        return spec.check()
    except Exception as e:
        return ClaimResult(False, f"{type(e).__name__}: {e}")


def run_verification(ids: Optional[Iterable[str]] = None) -> VerificationReport:
    """Run the selected claims (all by default) in registry order.

    Args:
        ids: Claim ids to run; duplicates are ignored

    Returns:
        VerificationReport with one row per claim

    Raises:
        ParameterError: If an id is not registered
    """
    runtime_config = get_runtime_config()
    selected: List[str] = claim_ids() if ids is None else list(dict.fromkeys(ids))
    unknown = [i for i in selected if i not in CLAIM_SPECS]
    if unknown:
        raise ParameterError(f"Unknown claim ids {unknown}; run 'grouplab verify --list'")

    rows: List[Tuple[str, str, str, str, str]] = []
    for num, claim_id in enumerate(selected, start=1):
        spec = CLAIM_SPECS[claim_id]
        print(f'[{num}/{len(selected)}] {claim_id}', file=sys.stderr)
        result = _run_claim(spec)
        rows.append((claim_id, spec.anchor, spec.statement, 'PASS' if result.passed else 'FAIL', result.detail))

    results = pd.DataFrame(rows, columns=['claim', 'anchor', 'statement', 'status', 'detail'])
    return VerificationReport(
        results=results,
        run_timestamp=runtime_config['run_timestamp'],
        version=get_package_version(),
    )
