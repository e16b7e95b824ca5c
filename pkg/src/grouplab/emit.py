# -*- coding: utf-8 -*-
"""Text artifacts: DOT graphs, group documents and analysis reports.

All output is deterministic for a fixed group and version. DOT files carry
position hints (polar layout of the cosets of the first generator) that
neato-style renderers may use and others ignore.

Functions:
- cayley_dot(), cycle_dot(), lattice_dot(): the three DOT emitters
- group_document(), document_to_json(), load_group_document(): schema-1 JSON
- analysis_report(): summary of the structure of one group
"""

from collections import Counter
from dataclasses import dataclass
from math import cos, pi, sin
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union
import json

from .catalog import identify
from .config import DOT_CONFIG, STATIC_CONFIG
from .errors import DocumentError
from .group import FiniteGroup, center, derived_series, is_abelian, subgroup_as_group
from .structure import (
    Decomposition, cayley_edges, central_product_decompositions, cycle_graph,
    semidirect_decompositions
)
from .subgroups import (
    hasse, normal_subgroups, subgroup_conjugacy_classes, unicorns
)
from .validation import validate_group_document


# =============================================================================
# DOT
# =============================================================================

def _quote(text: str) -> str:
    return '"' + text.replace('\\', '\\\\').replace('"', '\\"') + '"'


def _coordinate(value: float) -> str:
    return f"{round(value, 3) + 0.0:.3f}"


def polar_positions(G: FiniteGroup) -> List[Tuple[float, float]]:
    """Element c*g^j of the c-th coset of <g> sits at angle 2*pi*j/|g| on ring c.

    g is the first generator, so a rotation generator puts its powers on
    the inner circle at the angles of the corresponding roots of unity.
    """
    positions: List[Optional[Tuple[float, float]]] = [None] * G.order
    g = G.generators[0] if G.generators else G.identity
    k = G.element_orders[g]
    rows = G.rows
    ring = 0
    for rep in range(G.order):
        if positions[rep] is not None:
            continue
        radius = 1.0 + DOT_CONFIG['cayley_radius_step'] * ring
        x = rep
        for j in range(k):
            angle = 2 * pi * j / k
            positions[x] = (radius * cos(angle), radius * sin(angle))
            x = rows[x][g]
        ring += 1
    return positions


def cayley_dot(G: FiniteGroup, generators: Optional[Sequence[int]] = None) -> str:
    """Cayley graph with one edge colour per generator.

    Involutive generators are drawn once per pair with dir=none.
    """
    gens = G.generators if generators is None else tuple(generators)
    palette = DOT_CONFIG['palette']
    positions = polar_positions(G)

    lines = [f'digraph {_quote(G.name)} {{', 'graph [layout=neato];', 'node [shape=circle];']
    append = lines.append
    for x in range(G.order):
        px, py = positions[x]
        append(f'n{x} [label={_quote(G.labels[x])} pos="{_coordinate(px)},{_coordinate(py)}"];')

    seen_undirected = set()
    for x, y, pos in cayley_edges(G, gens):
        g = gens[pos]
        if g == G.identity:
            continue
        color = palette[pos % len(palette)]
        if G.element_orders[g] == 2:
            key = (pos, min(x, y), max(x, y))
            if key in seen_undirected:
                continue
            seen_undirected.add(key)
            append(f'n{x} -> n{y} [color={color} dir=none];')
        else:
            append(f'n{x} -> n{y} [color={color}];')

    append('}')
    return '\n'.join(lines) + '\n'


def cycle_dot(G: FiniteGroup) -> str:
    cg = cycle_graph(G)
    lines = [f'graph {_quote(G.name)} {{', 'node [shape=circle];']
    append = lines.append
    for x in range(G.order):
        append(f'n{x} [label={_quote(G.labels[x])}];')
    for a, b in sorted(cg.edges):
        append(f'n{a} -- n{b};')
    append('}')
    return '\n'.join(lines) + '\n'


def lattice_dot(G: FiniteGroup) -> str:
    """Top-down Hasse diagram; each cover edge is labelled by its index."""
    L = hasse(G)
    lines = [f'digraph {_quote(G.name + " subgroups")} {{', 'graph [rankdir=TB];', 'node [shape=box];']
    append = lines.append
    for i, H in enumerate(L.nodes):
        label = identify(subgroup_as_group(G, H))
        append(f's{i} [label={_quote(label)}];')

    by_size: Dict[int, List[int]] = {}
    for i, H in enumerate(L.nodes):
        by_size.setdefault(H.size, []).append(i)
    for size in sorted(by_size, reverse=True):
        append('{rank=same; ' + ' '.join(f's{i};' for i in by_size[size]) + '}')

    for lower, upper, index in sorted(L.covers, key=lambda c: (-c[1], c[0])):
        append(f's{upper} -> s{lower} [label="{index}"];')
    append('}')
    return '\n'.join(lines) + '\n'


# =============================================================================
# GROUP DOCUMENTS
# =============================================================================

@dataclass(frozen=True)
class GroupDocument:
    """Serializable group: schema 1."""
    name: str
    order: int
    labels: Tuple[str, ...]
    table: Tuple[Tuple[int, ...], ...]
    generators: Tuple[int, ...]
    provenance: Union[Dict[str, Any], str]
    schema: int = STATIC_CONFIG['schema_version']

    def to_payload(self) -> Dict[str, Any]:
        return {
            'schema': self.schema,
            'name': self.name,
            'order': self.order,
            'labels': list(self.labels),
            'generators': list(self.generators),
            'provenance': self.provenance,
            'table': [list(row) for row in self.table],
        }


def group_document(G: FiniteGroup) -> GroupDocument:
    provenance = dict(G.source) if G.source and G.source.get('family') != 'custom' else 'custom'
    return GroupDocument(
        name=G.name,
        order=G.order,
        labels=G.labels,
        table=tuple(tuple(row) for row in G.rows),
        generators=G.generators,
        provenance=provenance,
    )


def document_to_json(doc: GroupDocument) -> str:
    """Pretty JSON with one table row per line."""
    payload = doc.to_payload()
    lines = ['{']
    keys = list(payload)
    for i, key in enumerate(keys):
        comma = ',' if i < len(keys) - 1 else ''
        if key == 'table':
            rows = payload['table']
            lines.append('  "table": [')
            for j, row in enumerate(rows):
                row_comma = ',' if j < len(rows) - 1 else ''
                lines.append(f'    {json.dumps(row)}{row_comma}')
            lines.append(f'  ]{comma}')
        else:
            lines.append(f'  {json.dumps(key)}: {json.dumps(payload[key], sort_keys=True)}{comma}')
    lines.append('}')
    return '\n'.join(lines) + '\n'


def load_group_document(source: Union[str, Path]) -> FiniteGroup:
    """Read and validate a schema-1 document from a path.

    Raises:
        DocumentError: If the file cannot be read or fails validation
    """
    path = Path(source)
    try:
        payload = json.loads(path.read_text())
    except OSError as e:
        raise DocumentError(f"Cannot read group document {path}: {e}") from e
    except json.JSONDecodeError as e:
        raise DocumentError(f"Group document {path} is not valid JSON: {e}") from e
    return validate_group_document(payload)


# =============================================================================
# ANALYSIS
# =============================================================================

def _decomposition_payload(d: Decomposition) -> Dict[str, Any]:
    return {
        'kind': d.kind.value,
        'labels': list(d.labels),
        'parts': [list(d.parts[0].members), list(d.parts[1].members)],
        'intersection_order': d.intersection_order,
    }


def analysis_report(G: FiniteGroup) -> Dict[str, Any]:
    """Structure summary used by the analyze command."""
    L = hasse(G)
    classes = subgroup_conjugacy_classes(G)
    return {
        'schema': STATIC_CONFIG['schema_version'],
        'name': G.name,
        'label': identify(G),
        'order': G.order,
        'abelian': is_abelian(G),
        'center_order': center(G).size,
        'derived_length': len(derived_series(G)) - 1,
        'element_order_histogram': {
            str(k): v for k, v in sorted(Counter(G.element_orders).items())
        },
        'subgroup_count': len(L),
        'normal_count': len(normal_subgroups(G)),
        'unicorn_count': len(unicorns(L)),
        'subgroup_class_sizes': [len(c) for c in classes],
        'semidirect_decompositions': [_decomposition_payload(d) for d in semidirect_decompositions(G)],
        'central_decompositions': [_decomposition_payload(d) for d in central_product_decompositions(G)],
    }
