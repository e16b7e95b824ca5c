# -*- coding: utf-8 -*-
"""
Tests for isomorphism.py module.

Tests cover:
- Fingerprints as a fast rejection filter
- Verified isomorphisms between matrix and table constructions
- Relabelled copies found under arbitrary permutations (hypothesis)
- The analysis bound
"""

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from grouplab.errors import TooLarge
from grouplab.families import (
    dicyclic, dihedral, diquaternion, parse_family_spec, pauli1, semiabelian,
    semidihedral, semidirect_cn_c2
)
from grouplab.group import group_from_table
from grouplab.isomorphism import find_isomorphism, fingerprint, isomorphic


def relabel(G, perm):
    """Copy of G with element x renamed perm[x]."""
    perm = np.asarray(perm)
    table = np.empty_like(G.table)
    table[np.ix_(perm, perm)] = perm[G.table]
    labels = [''] * G.order
    for x, label in enumerate(G.labels):
        labels[perm[x]] = label
    return group_from_table(
        table=table,
        labels=labels,
        generators=[int(perm[g]) for g in G.generators],
        name=f"relabelled {G.name}",
        identity=int(perm[G.identity]),
    )


# ===== FINGERPRINTS =====

def test_q8_fingerprint(q8):
    fp = fingerprint(q8)
    assert fp.order == 8
    assert not fp.abelian
    assert fp.histogram_string() == '1:1,2:1,4:6'
    assert fp.center_order == 2
    assert fp.class_sizes == (1, 1, 2, 2, 2)
    assert fp.commutator_order == 2
    # 1 has roots +-1, -1 has the six elements of order 4
    assert fp.square_roots == (((1, 2), 1), ((2, 6), 1), ((4, 0), 6))


def test_fingerprint_separates_q8_and_d4(q8):
    """Verify Q8 and D4 differ in the squaring map as well as in the histogram."""
    assert fingerprint(dihedral(4)).square_roots == (((1, 6), 1), ((2, 0), 4), ((2, 2), 1), ((4, 0), 2))
    assert fingerprint(q8) != fingerprint(dihedral(4))
    assert find_isomorphism(q8, dihedral(4)) is None


# ===== ISOMORPHISMS =====

@pytest.mark.parametrize('table_spec,matrix_build,n', [
    ('sdp:8:3', semidihedral, 8),
    ('sdp:8:5', semiabelian, 8),
    ('sdp:8:7', dihedral, 8),
])
def test_twist_tables_match_matrix_groups(table_spec, matrix_build, n):
    """Verify each C8 twist table is isomorphic to its matrix construction.

    Failure indicates the twist table or the matrix generators are wrong.
    """
    G = parse_family_spec(table_spec).build()
    H = matrix_build(n)
    iso = find_isomorphism(G, H)
    assert iso is not None, f"{table_spec} should be isomorphic to {H.name}"
    assert sorted(iso.mapping) == list(range(H.order))


def test_isomorphism_is_a_homomorphism(dq8):
    H = pauli1()
    iso = find_isomorphism(dq8, H)
    assert iso is not None
    phi = iso.as_dict()
    for a in range(dq8.order):
        for b in range(dq8.order):
            assert phi[int(dq8.table[a, b])] == H.table[phi[a], phi[b]]


def test_generator_map_agrees_with_mapping(dic6):
    iso = find_isomorphism(dic6, dic6)
    assert iso is not None
    for g, image in iso.generator_map:
        assert iso.mapping[g] == image


def test_non_isomorphic_twists_of_c16():
    """The four twists of C16 x| C2 are pairwise non-isomorphic."""
    groups = [semidirect_cn_c2(16, k) for k in (1, 7, 9, 15)]
    for i, G in enumerate(groups):
        for H in groups[i + 1:]:
            assert not isomorphic(G, H), f"{G.name} ~ {H.name}"


def test_q16_is_dic8():
    assert isomorphic(dicyclic(8), parse_family_spec('Q16').build())


def test_isomorphism_bound():
    big = diquaternion(32)
    with pytest.raises(TooLarge):
        find_isomorphism(big, big)


# ===== PROPERTIES =====

@settings(max_examples=25, deadline=None)
@given(st.sampled_from(['Q8', 'Dic6', 'SD8', 'DQ8', 'C4xC2xC2']), st.randoms(use_true_random=False))
def test_relabelled_copy_is_isomorphic(spec, rng):
    """Verify a randomly relabelled table is recognised and the map is verified."""
    G = parse_family_spec(spec).build()
    perm = list(range(G.order))
    rng.shuffle(perm)
    H = relabel(G, perm)
    iso = find_isomorphism(G, H)
    assert iso is not None
    assert iso.mapping[G.identity] == H.identity
