# -*- coding: utf-8 -*-
"""
Shared test fixtures for grouplab tests.

Groups are built once per session; every constructor is deterministic,
so sharing them between tests is safe.
"""

import re

import numpy as np
import pytest

from grouplab.families import (
    abelian_cn_c2, dicyclic, dihedral, diquaternion, parse_family_spec,
    semiabelian, semidihedral
)
from grouplab.group import group_from_table


# ===== DOT SYNTAX =====

_ID = r'[A-Za-z_][A-Za-z0-9_]*'
# attribute list; quoted values may contain brackets (matrix labels)
_ATTRS = r'\[(?:[^\[\]"]|"(?:[^"\\]|\\.)*")*\]'
_HEADER = re.compile(r'^(di)?graph "(?:[^"\\]|\\.)*" \{$')
_DEFAULTS = re.compile(r'^(graph|node|edge) ' + _ATTRS + r';$')
_NODE = re.compile(r'^' + _ID + r'( ' + _ATTRS + r')?;$')
_RANK = re.compile(r'^\{rank=same;( ' + _ID + r';)+\}$')


def is_valid_dot(text):
    """Minimal DOT check for the subset the emitters write.

    One statement per line: a header, default attribute lists, node
    statements, rank groups and edges using the operator that matches the
    graph kind, closed by a single brace.
    """
    lines = text.rstrip('\n').split('\n')
    header = _HEADER.match(lines[0])
    if not header or lines[-1] != '}':
        return False
    op = '->' if header.group(1) else '--'
    edge = re.compile(r'^' + _ID + ' ' + re.escape(op) + ' ' + _ID + r'( ' + _ATTRS + r')?;$')
    for line in lines[1:-1]:
        if not (_DEFAULTS.match(line) or _RANK.match(line) or edge.match(line) or _NODE.match(line)):
            return False
    return True


def tampered_copy(G, row=1):
    """The same group with two entries of one row swapped."""
    table = np.array(G.table)
    table[row, 0], table[row, 1] = table[row, 1], table[row, 0]
    return group_from_table(
        table=table,
        labels=G.labels,
        generators=G.generators,
        name=f"tampered {G.name}",
    )


# ===== GROUP FIXTURES =====

@pytest.fixture(scope='session')
def q8():
    return dicyclic(4)


@pytest.fixture(scope='session')
def dic6():
    return dicyclic(6)


@pytest.fixture(scope='session')
def q16():
    return dicyclic(8)


@pytest.fixture(scope='session')
def d6():
    return dihedral(6)


@pytest.fixture(scope='session')
def d8():
    return dihedral(8)


@pytest.fixture(scope='session')
def dq8():
    return diquaternion(4)


@pytest.fixture(scope='session')
def sd8():
    return semidihedral(8)


@pytest.fixture(scope='session')
def sa8():
    return semiabelian(8)


@pytest.fixture(scope='session')
def c8xc2():
    return abelian_cn_c2(8)


@pytest.fixture(scope='session')
def c4xc2xc2():
    return parse_family_spec('C4xC2xC2').build()


@pytest.fixture
def klein_table():
    """Multiplication table of C2 x C2 on (1, a, b, ab)."""
    return [
        [0, 1, 2, 3],
        [1, 0, 3, 2],
        [2, 3, 0, 1],
        [3, 2, 1, 0],
    ]


@pytest.fixture
def klein_document(klein_table):
    """A valid schema-1 payload for C2 x C2."""
    return {
        'schema': 1,
        'name': 'V4',
        'order': 4,
        'labels': ['1', 'a', 'b', 'ab'],
        'table': klein_table,
        'generators': [1, 2],
        'provenance': 'custom',
    }
