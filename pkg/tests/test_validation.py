# -*- coding: utf-8 -*-
"""
Tests for validation.py module.

Tests cover all validation functions:
- Field presence and schema version
- Table shape, entry range and label uniqueness
- Latin square, identity and associativity checks
- Generator span
- Progress output
"""

import numpy as np
import pytest

from grouplab.errors import DocumentError
from grouplab.families import parse_family_spec
from grouplab.group import group_from_table
from grouplab.validation import (
    REQUIRED_FIELDS,
    _check_associativity,
    _check_fields,
    _check_generators,
    _check_identity,
    _check_latin_square,
    _check_shape,
    validate_group,
    validate_group_document,
)
from tests.conftest import tampered_copy


# =============================================================================
# DOCUMENTS
# =============================================================================

def test_valid_document_builds_group(klein_document):
    """Verify a well-formed C2 x C2 document passes and yields the group.

    Failure indicates a check rejects valid input.
    """
    G = validate_group_document(klein_document)
    assert G.order == 4
    assert G.name == 'V4'
    assert G.labels == ('1', 'a', 'b', 'ab')
    assert G.generators == (1, 2)


@pytest.mark.parametrize('field', REQUIRED_FIELDS)
def test_missing_field(klein_document, field):
    del klein_document[field]
    with pytest.raises(DocumentError, match="missing fields"):
        validate_group_document(klein_document)


def test_unsupported_schema(klein_document):
    klein_document['schema'] = 2
    with pytest.raises(DocumentError, match="Unsupported schema"):
        validate_group_document(klein_document)


def test_non_object_payload():
    with pytest.raises(DocumentError, match="JSON object"):
        _check_fields([1, 2, 3])


def test_malformed_table(klein_document):
    klein_document['table'] = [[0, 1], [1]]
    with pytest.raises(DocumentError):
        validate_group_document(klein_document)


def test_order_mismatch(klein_document):
    klein_document['order'] = 5
    with pytest.raises(DocumentError, match="does not match order 5"):
        validate_group_document(klein_document)


def test_non_group_table_rejected(klein_document):
    """Verify a Latin square with identity that is not associative is rejected."""
    # Loop of order 5 with identity 0: a Latin square, but not a group
    klein_document.update({
        'order': 5,
        'labels': ['e', 'a', 'b', 'c', 'd'],
        'table': [
            [0, 1, 2, 3, 4],
            [1, 0, 3, 4, 2],
            [2, 4, 0, 1, 3],
            [3, 2, 4, 0, 1],
            [4, 3, 1, 2, 0],
        ],
        'generators': [1, 2],
    })
    with pytest.raises(DocumentError, match="not associative"):
        validate_group_document(klein_document)


def test_provenance_mapping_kept(klein_document):
    klein_document['provenance'] = {'family': 'Klein', 'note': 'hand-written'}
    G = validate_group_document(klein_document)
    assert G.source == {'family': 'Klein', 'note': 'hand-written'}


# =============================================================================
# TABLE CHECKS
# =============================================================================

def test_check_shape_accepts_klein(klein_table):
    _check_shape(np.array(klein_table), 4, ['1', 'a', 'b', 'ab'])


def test_check_shape_duplicate_labels(klein_table):
    with pytest.raises(DocumentError, match="not unique"):
        _check_shape(np.array(klein_table), 4, ['1', 'a', 'a', 'ab'])


def test_check_shape_entry_out_of_range():
    with pytest.raises(DocumentError, match=r"\[0, 2\)"):
        _check_shape(np.array([[0, 1], [1, 2]]), 2, ['1', 'a'])


def test_check_shape_label_count(klein_table):
    with pytest.raises(DocumentError, match="3 labels"):
        _check_shape(np.array(klein_table), 4, ['1', 'a', 'b'])


def test_latin_square_repeated_row():
    table = np.array([[0, 1], [1, 1]])
    with pytest.raises(DocumentError, match="row 1"):
        _check_latin_square(table)


def test_latin_square_repeated_column():
    table = np.array([[0, 1, 2], [1, 2, 0], [1, 0, 2]])
    with pytest.raises(DocumentError, match="column 0"):
        _check_latin_square(table)


def test_identity_check():
    table = np.array([[1, 0], [0, 1]])
    _check_identity(table, 1)
    with pytest.raises(DocumentError, match="identity"):
        _check_identity(table, 0)


def test_associativity_names_a_triple():
    table = np.array([
        [0, 1, 2, 3, 4],
        [1, 0, 3, 4, 2],
        [2, 4, 0, 1, 3],
        [3, 2, 4, 0, 1],
        [4, 3, 1, 2, 0],
    ])
    with pytest.raises(DocumentError, match=r"\(\d\*\d\)\*\d != \d\*\(\d\*\d\)"):
        _check_associativity(table)


def test_generators_must_span(klein_table):
    G = group_from_table(klein_table, ['1', 'a', 'b', 'ab'], [1], name='V4')
    with pytest.raises(DocumentError, match="span 2 of 4"):
        _check_generators(G)


def test_generator_out_of_range(klein_table):
    G = group_from_table(klein_table, ['1', 'a', 'b', 'ab'], [7], name='V4')
    with pytest.raises(DocumentError, match="out of range"):
        _check_generators(G)


# =============================================================================
# IN-MEMORY GROUPS
# =============================================================================

@pytest.mark.parametrize('spec', ['Q8', 'DQ8', 'sdp:16:7', 'pauli1', 'C4xC2xC2'])
def test_constructed_groups_validate(spec):
    validate_group(parse_family_spec(spec).build())


def test_tampered_table_rejected(q8):
    """Verify swapping two entries of one row is caught.

    Failure indicates the column permutation check is missing.
    """
    with pytest.raises(DocumentError, match="Latin square"):
        validate_group(tampered_copy(q8))


def test_progress_written_to_stderr(capsys, klein_document):
    validate_group_document(klein_document)
    err = capsys.readouterr().err
    assert '\t Validating fields' in err
    assert '\t Validating associativity' in err


def test_in_memory_validation_is_silent(capsys, q8):
    """Verify validate_group prints nothing unless asked to.

    Failure indicates internal checks leak progress lines into command output.
    """
    validate_group(q8)
    assert capsys.readouterr().err == ''
    validate_group(q8, verbose=True)
    assert '\t Validating generators' in capsys.readouterr().err
