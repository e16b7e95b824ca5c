# -*- coding: utf-8 -*-
"""Validation of group documents and multiplication tables.

A table is accepted only if it is a group table:
- Square, entries in range, one label per element
- Latin square (every row and column is a permutation)
- Identity row and column are the identity permutation
- Associative for all triples
- The designated generators generate the whole group

Functions:
- validate_group_document(): Main entry point for JSON payloads; returns a FiniteGroup
- validate_group(): Same checks on an in-memory FiniteGroup
- _check_*(): Individual validation functions
"""

from typing import Any, Dict, Mapping
import sys

import numpy as np

from .config import STATIC_CONFIG
from .errors import DocumentError
from .group import FiniteGroup, generated_subgroup, group_from_table

REQUIRED_FIELDS = ('schema', 'name', 'order', 'labels', 'table', 'generators', 'provenance')


def _progress(message: str) -> None:
    print(f'\t Validating {message}', file=sys.stderr)


# Validation

def _check_fields(payload: Mapping[str, Any]) -> None:
    if not isinstance(payload, Mapping):
        raise DocumentError(f"Group document must be a JSON object, got {type(payload).__name__}")
    missing = [f for f in REQUIRED_FIELDS if f not in payload]
    if missing:
        raise DocumentError(f"Group document is missing fields: {missing}")
    if payload['schema'] != STATIC_CONFIG['schema_version']:
        raise DocumentError(
            f"Unsupported schema {payload['schema']!r}; expected {STATIC_CONFIG['schema_version']}"
        )


def _check_shape(table: np.ndarray, order: int, labels) -> None:
    if table.ndim != 2 or table.shape != (order, order):
        raise DocumentError(f"Table shape {table.shape} does not match order {order}")
    if order < 1:
        raise DocumentError("A group has at least one element")
    if len(labels) != order:
        raise DocumentError(f"Got {len(labels)} labels for {order} elements")
    if len(set(labels)) != order:
        raise DocumentError("Element labels are not unique")
    if table.min() < 0 or table.max() >= order:
        raise DocumentError(f"Table entries must lie in [0, {order})")


def _check_latin_square(table: np.ndarray) -> None:
    """Every row and every column should be a permutation of the elements."""
    expected = np.arange(table.shape[0])
    bad_rows = np.flatnonzero(~np.all(np.sort(table, axis=1) == expected, axis=1))
    if bad_rows.size:
        raise DocumentError(f"Table is not a Latin square: row {int(bad_rows[0])} repeats an element")
    bad_cols = np.flatnonzero(~np.all(np.sort(table, axis=0) == expected[:, None], axis=0))
    if bad_cols.size:
        raise DocumentError(f"Table is not a Latin square: column {int(bad_cols[0])} repeats an element")


def _check_identity(table: np.ndarray, identity: int) -> None:
    expected = np.arange(table.shape[0])
    if not np.array_equal(table[identity], expected) or not np.array_equal(table[:, identity], expected):
        raise DocumentError(f"Element {identity} does not act as the identity")


def _check_associativity(table: np.ndarray) -> None:
    """(ab)c == a(bc) for all triples, as two n x n x n gathers."""
    left = table[table]            # left[a, b, c] = (ab)c
    right = table[:, table]        # right[a, b, c] = a(bc)
    if not np.array_equal(left, right):
        a, b, c = (int(v[0]) for v in np.nonzero(left != right))
        raise DocumentError(f"Table is not associative: ({a}*{b})*{c} != {a}*({b}*{c})")


def _check_generators(G: FiniteGroup) -> None:
    bad = [g for g in G.generators if not 0 <= g < G.order]
    if bad:
        raise DocumentError(f"Generator indices out of range: {bad}")
    span = generated_subgroup(G, G.generators).size
    if span != G.order:
        raise DocumentError(f"Generators span {span} of {G.order} elements")


def _validate_table(G: FiniteGroup, verbose: bool) -> None:
    table = np.asarray(G.table)
    checks = (
        ('table shape', lambda: _check_shape(table, G.order, G.labels)),
        ('Latin square', lambda: _check_latin_square(table)),
        ('identity', lambda: _check_identity(table, G.identity)),
        ('associativity', lambda: _check_associativity(table)),
        ('generators', lambda: _check_generators(G)),
    )
    for name, check in checks:
        if verbose:
            _progress(name)
        check()


def validate_group(G: FiniteGroup, verbose: bool = False) -> None:
    """Run every table check on an in-memory group.

    Silent by default; pass verbose=True to print one progress line per check.

    Raises:
        DocumentError: On the first failed check
    """
    _validate_table(G, verbose)


def validate_group_document(payload: Dict[str, Any]) -> FiniteGroup:
    """Validate a schema-1 payload and build the group it describes.

    Progress lines for each check go to stderr.

    Raises:
        DocumentError: On the first failed check
    """
    _progress('fields')
    _check_fields(payload)
    try:
        table = np.array(payload['table'], dtype=np.int64)
        generators = [int(g) for g in payload['generators']]
        order = int(payload['order'])
    except (TypeError, ValueError) as e:
        raise DocumentError(f"Malformed table, order or generators: {e}") from e

    labels = [str(label) for label in payload['labels']]
    _check_shape(table, order, labels)

    provenance = payload['provenance']
    source = dict(provenance) if isinstance(provenance, Mapping) else {'family': 'custom'}
    G = group_from_table(
        table=table,
        labels=labels,
        generators=generators,
        name=str(payload['name']),
        source=source,
    )
    _validate_table(G, verbose=True)
    return G
