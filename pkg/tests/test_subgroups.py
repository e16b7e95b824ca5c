# -*- coding: utf-8 -*-
"""
Tests for subgroups.py module.

Tests cover:
- Subgroup enumeration counts for small families
- Normality, conjugacy classes of subgroups, meets and joins
- Hasse diagrams, lattice automorphisms and unicorns
- Reduced lattices and lattice isomorphism
"""

from collections import Counter
import time

import pytest
from hypothesis import given, settings, strategies as st

from grouplab.catalog import catalog_specs
from grouplab.errors import NotASubgroup, TooLarge
from grouplab.families import dicyclic, dihedral, parse_family_spec
from grouplab.group import Subgroup, center, check_closed, cyclic_subgroup, multiply, power
from grouplab.subgroups import (
    all_subgroups, hasse, intersect, is_normal, join, lattice_automorphisms, lattice_orbits,
    lattice_isomorphism, lattices_equal, normal_subgroups, reduced_lattice,
    subgroup_class, subgroup_conjugacy_classes, unicorns
)


# ===== ENUMERATION =====

@pytest.mark.parametrize('spec,count', [
    ('C1', 1),
    ('C8', 4),
    ('Q8', 6),
    ('D6', 16),
    ('D8', 19),
    ('SD8', 15),
    ('SA8', 11),
    ('C8xC2', 11),
    ('Q16', 11),
])
def test_subgroup_counts(spec, count):
    """Verify the number of subgroups against hand counts.

    D_n has tau(n) + sigma(n) subgroups; SD8 has 15.
    Failure indicates the join closure misses subgroups or counts one twice.
    """
    G = parse_family_spec(spec).build()
    found = all_subgroups(G)
    assert len(found) == count, f"{spec}: expected {count} subgroups, got {len(found)}"
    assert len({H.members for H in found}) == len(found)


def test_subgroups_sorted_trivial_first(q8):
    found = all_subgroups(q8)
    assert found[0].is_trivial
    assert found[-1].size == q8.order
    assert [H.size for H in found] == sorted(H.size for H in found)


def test_every_subgroup_is_closed(dq8):
    for H in all_subgroups(dq8):
        check_closed(dq8, H.members)
        assert dq8.order % H.size == 0


def test_analysis_bound():
    with pytest.raises(TooLarge, match="order <= 64"):
        all_subgroups(dihedral(33))


# ===== NORMALITY AND CLASSES =====

def test_every_subgroup_of_q8_is_normal(q8):
    assert len(normal_subgroups(q8)) == 6


def test_reflection_classes_in_d6(d6):
    """In D6 the six reflections fall into two classes of three."""
    f = d6.generators[1]
    assert not is_normal(d6, cyclic_subgroup(d6, f))
    assert len(subgroup_class(d6, cyclic_subgroup(d6, f))) == 3


def test_is_normal_rejects_unclosed(q8):
    r = q8.generators[0]
    with pytest.raises(NotASubgroup):
        is_normal(q8, Subgroup(q8, tuple(sorted((q8.identity, r)))))


def test_subgroup_conjugacy_classes_partition_nodes(d8):
    classes = subgroup_conjugacy_classes(d8)
    nodes = sorted(i for c in classes for i in c)
    assert nodes == list(range(len(hasse(d8))))


def test_meet_and_join_of_quaternion_c4s(q8):
    """Two distinct C4 subgroups of Q8 meet in {1, -1} and join to Q8."""
    i, j = q8.generators
    A, B = cyclic_subgroup(q8, i), cyclic_subgroup(q8, j)
    assert intersect(A, B) == center(q8)
    assert join(q8, A, B).size == 8


def test_intersect_across_groups_raises(q8, d6):
    with pytest.raises(ValueError):
        intersect(all_subgroups(q8)[0], all_subgroups(d6)[0])


# ===== HASSE DIAGRAMS =====

def test_q8_hasse_covers(q8):
    L = hasse(q8)
    assert len(L) == 6
    assert len(L.covers) == 7
    assert {index for _, _, index in L.covers} == {2}
    assert L.bottom == 0 and L.top == 5


def test_cover_indices_are_ratios(dq8):
    L = hasse(dq8)
    for lower, upper, index in L.covers:
        assert L.nodes[upper].size == index * L.nodes[lower].size
        assert L.graph.edges[lower, upper]['index'] == index


def test_node_index_round_trip(d6):
    L = hasse(d6)
    for i, H in enumerate(L.nodes):
        assert L.node_index(H) == i


# ===== AUTOMORPHISMS AND UNICORNS =====

def test_q8_lattice_automorphisms_permute_c4s(q8):
    """Verify the six permutations of the three C4 subgroups, identity first."""
    autos = lattice_automorphisms(hasse(q8))
    assert len(autos) == 6
    assert autos[0] == tuple(range(6))


def test_q8_unicorns(q8):
    found = unicorns(hasse(q8))
    assert [H.size for H in found] == [1, 2, 8]


def test_sa8_unicorns_are_normal(sa8):
    """Verify SA8 has 9 normal subgroups and exactly 7 unicorns, all normal.

    Failure indicates the pinned automorphism search moves too few or too many nodes.
    """
    L = hasse(sa8)
    found = unicorns(L)
    assert len(normal_subgroups(sa8)) == 9
    assert len(found) == 7
    assert all(is_normal(sa8, H) for H in found)


def test_sa8_wings_are_not_unicorns(sa8):
    r, s = sa8.generators
    wings = {cyclic_subgroup(sa8, s), cyclic_subgroup(sa8, multiply(sa8, power(sa8, r, 4), s))}
    assert not wings & set(unicorns(hasse(sa8)))


@pytest.mark.parametrize('spec', ['SA8', 'D6', 'Q8'])
def test_unicorns_match_full_automorphism_group(spec):
    """Fixed points of the full automorphism list equal the singleton orbits."""
    L = hasse(parse_family_spec(spec).build())
    fixed = [v for v in range(len(L)) if all(p[v] == v for p in lattice_automorphisms(L))]
    assert [L.nodes[v] for v in fixed] == unicorns(L)


@pytest.mark.parametrize('n,count', [(9, 1296), (10, 240)])
def test_dihedral_lattice_automorphism_counts(n, count):
    """Verify D9 and D10 lattice automorphism counts, found within a few seconds.

    D9: the three D3 subgroups and the three reflections inside each permute
    freely (3! * 3!^3). D10: the five Klein subgroups permute freely and the
    two D5 subgroups swap (5! * 2). Failure indicates the refinement search
    either misses automorphisms or stopped pruning.
    """
    L = hasse(dihedral(n))
    started = time.perf_counter()
    autos = lattice_automorphisms(L)
    assert time.perf_counter() - started < 10
    assert len(autos) == count
    assert autos[0] == tuple(range(len(L)))


@pytest.mark.parametrize('n,sizes', [
    (10, [1, 2, 5, 10, 20]),
    (12, [1, 2, 3, 4, 6, 12, 24]),
    (16, [1, 2, 4, 8, 16, 32]),
])
def test_dihedral_unicorns_are_rotation_subgroups(n, sizes):
    """Verify the unicorns of D10, D12 and D16 are the rotation subgroups and the whole group.

    The two index-2 dihedral subgroups are swapped by an automorphism, so
    they are not unicorns. Failure indicates the orbit computation is wrong
    or too slow on lattices of 22 to 36 nodes.
    """
    G = dihedral(n)
    started = time.perf_counter()
    found = unicorns(hasse(G))
    assert time.perf_counter() - started < 10
    assert [H.size for H in found] == sizes
    assert all(is_normal(G, H) for H in found)


def test_sa8_orbits(sa8):
    r, s = sa8.generators
    L = hasse(sa8)
    wings = (
        L.node_index(cyclic_subgroup(sa8, s)),
        L.node_index(cyclic_subgroup(sa8, multiply(sa8, power(sa8, r, 4), s))),
    )
    orbits = lattice_orbits(L)
    assert tuple(sorted(wings)) in orbits
    assert sum(len(orbit) for orbit in orbits) == len(L)
    assert sum(1 for orbit in orbits if len(orbit) == 1) == 7


def test_unicorns_normal_across_order_32_catalog():
    """Verify every unicorn is normal in every catalog group of order <= 32, in well under a minute."""
    started = time.perf_counter()
    for spec in catalog_specs(32):
        G = spec.build()
        assert all(is_normal(G, H) for H in unicorns(hasse(G))), spec.display_name
    assert time.perf_counter() - started < 60


def test_lattice_bound(mocker, q8):
    mocker.patch.dict('grouplab.subgroups.STATIC_CONFIG', {'max_lattice_nodes': 5})
    with pytest.raises(TooLarge, match="<= 5"):
        unicorns(hasse(q8))


# ===== REDUCED LATTICES =====

def test_q16_reduced_lattice(q16):
    """Verify Q16: 11 subgroups in 9 conjugacy classes, two of them of size 2."""
    R = reduced_lattice(q16)
    assert R.subgroup_count == 11
    assert len(R.classes) == 9
    assert sorted(R.class_sizes) == [1] * 7 + [2] * 2
    labels = Counter(c.label for c in R.classes)
    assert labels['Q8'] == 2
    assert labels['C4'] == 3
    assert labels['Q16'] == 1


@pytest.mark.slow
def test_q32_reduced_lattice():
    R = reduced_lattice(dicyclic(16))
    assert R.subgroup_count == 20
    assert sorted(R.class_sizes) == [1] * 8 + [2] * 2 + [4] * 2


def test_reduced_edges_point_upwards(q16):
    R = reduced_lattice(q16)
    for lower, upper in R.edges:
        assert R.classes[lower].order < R.classes[upper].order


# ===== LATTICE ISOMORPHISM =====

def test_c8xc2_and_sa8_share_a_lattice(c8xc2, sa8):
    mapping = lattice_isomorphism(hasse(c8xc2), hasse(sa8))
    assert mapping is not None
    assert sorted(mapping) == list(range(11))
    assert sorted(mapping.values()) == list(range(11))


def test_c4xc2xc2_and_dq8_lattices_differ(c4xc2xc2, dq8):
    assert not lattices_equal(hasse(c4xc2xc2), hasse(dq8))


def test_lattice_equal_to_itself(d6):
    assert lattices_equal(hasse(d6), hasse(d6))


# ===== PROPERTIES =====

GROUP_SPECS = ['Q8', 'D6', 'Dic6', 'SD8', 'C4xC2xC2']


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(GROUP_SPECS), st.data())
def test_meets_and_joins_are_subgroups(spec, data):
    """Verify H n K and <H, K> are subgroups and |H||K| <= |<H, K>||H n K|."""
    G = parse_family_spec(spec).build()
    found = all_subgroups(G)
    H = data.draw(st.sampled_from(found))
    K = data.draw(st.sampled_from(found))
    meet, joined = intersect(H, K), join(G, H, K)
    check_closed(G, meet.members)
    assert meet in found and joined in found
    assert H.size * K.size <= joined.size * meet.size
