# -*- coding: utf-8 -*-
"""Command-line surface.

Usage:
    grouplab construct Q8 --format json
    grouplab construct SD8 --format dot-lattice --output sd8.dot
    grouplab construct D6 --format dot-cayley --generators 2,5
    grouplab analyze SA8
    grouplab compare C8xC2 SA8 --mode lattice
    grouplab verify --claim six-groups-order-32

A SPEC is a family string (Q8, D6, Dic6, Q16, DQ8, DQ16, SD8, SA8, C8xC2,
C4xC2xC2, sdp:8:3, pauli1; case-insensitive) or @path.json for a saved
group document.

Exit codes: 0 equivalent/pass, 1 not equivalent/fail, 2 unparseable spec,
3 parameter, document or size errors.
"""

from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence
import argparse
import json
import sys

from .claims import CLAIM_SPECS, run_verification
from .config import EXIT_CODES, get_package_version, get_runtime_config
from .emit import (
    analysis_report, cayley_dot, cycle_dot, document_to_json, group_document,
    lattice_dot, load_group_document
)
from .errors import GroupLabError, ParameterError, SpecParseError
from .families import parse_family_spec, with_generators
from .group import FiniteGroup
from .isomorphism import find_isomorphism
from .structure import cycle_graph, cycle_graph_isomorphism
from .subgroups import hasse, lattice_isomorphism


# =============================================================================
# HELPER FUNCTIONS
# =============================================================================

def resolve_group(text: str) -> FiniteGroup:
    """Build a group from a family spec string or load it from @path.json."""
    if text.startswith('@'):
        return load_group_document(text[1:])
    return parse_family_spec(text).build()


def _parse_generators(text: str) -> List[int]:
    try:
        return [int(part) for part in text.split(',') if part.strip()]
    except ValueError:
        raise ParameterError(f"--generators expects comma-separated element indices, got {text!r}") from None


def _emit(text: str, output: Optional[str]) -> None:
    if output:
        Path(output).write_text(text)
        print(f'Wrote {output}', file=sys.stderr)
    else:
        sys.stdout.write(text)


# =============================================================================
# COMMANDS
# =============================================================================

FORMATTERS: Dict[str, Callable[[FiniteGroup], str]] = {
    'json': lambda G: document_to_json(group_document(G)),
    'dot-cayley': cayley_dot,
    'dot-cycle': cycle_dot,
    'dot-lattice': lattice_dot,
}


def cmd_construct(args: argparse.Namespace) -> int:
    G = resolve_group(args.spec)
    if args.generators:
        G = with_generators(G, _parse_generators(args.generators))
    _emit(FORMATTERS[args.format](G), args.output)
    return EXIT_CODES['pass']


def cmd_analyze(args: argparse.Namespace) -> int:
    G = resolve_group(args.spec)
    _emit(json.dumps(analysis_report(G), indent=2) + '\n', args.output)
    return EXIT_CODES['pass']


def _compare_iso(A: FiniteGroup, B: FiniteGroup) -> Optional[Any]:
    iso = find_isomorphism(A, B)
    if iso is None:
        return None
    return {A.labels[x]: B.labels[y] for x, y in enumerate(iso.mapping)}


def _compare_lattice(A: FiniteGroup, B: FiniteGroup) -> Optional[Any]:
    LA, LB = hasse(A), hasse(B)
    mapping = lattice_isomorphism(LA, LB)
    if mapping is None:
        return None
    return [
        [list(LA.nodes[i].members), list(LB.nodes[j].members)] for i, j in mapping.items()
    ]


def _compare_cyclegraph(A: FiniteGroup, B: FiniteGroup) -> Optional[Any]:
    mapping = cycle_graph_isomorphism(cycle_graph(A), cycle_graph(B))
    if mapping is None:
        return None
    return {A.labels[x]: B.labels[y] for x, y in mapping.items()}


COMPARE_MODES: Dict[str, Callable[[FiniteGroup, FiniteGroup], Optional[Any]]] = {
    'iso': _compare_iso,
    'lattice': _compare_lattice,
    'cyclegraph': _compare_cyclegraph,
}


def cmd_compare(args: argparse.Namespace) -> int:
    A, B = resolve_group(args.spec_a), resolve_group(args.spec_b)
    witness = COMPARE_MODES[args.mode](A, B)
    payload = {
        'mode': args.mode,
        'a': A.name,
        'b': B.name,
        'equivalent': witness is not None,
        'witness': witness,
    }
    _emit(json.dumps(payload, indent=2) + '\n', args.output)
    return EXIT_CODES['equivalent'] if witness is not None else EXIT_CODES['not_equivalent']


def cmd_verify(args: argparse.Namespace) -> int:
    if args.list:
        text = ''.join(f"{spec.claim_id}\t{spec.anchor}\t{spec.statement}\n" for spec in CLAIM_SPECS.values())
        _emit(text, args.output)
        return EXIT_CODES['pass']

    report = run_verification(args.claim)
    if args.json:
        text = report.to_json()
    else:
        text = report.to_table(no_color=get_runtime_config()['no_color'] or bool(args.output))
    _emit(text, args.output)
    return EXIT_CODES['pass'] if report.passed else EXIT_CODES['fail']


# =============================================================================
# PARSER
# =============================================================================

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='grouplab',
        description='Construct and analyze small finite groups from exact 2x2 matrix representations',
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument('--version', action='version', version=f'%(prog)s {get_package_version()}')
    subparsers = parser.add_subparsers(dest='command', required=True)

    construct = subparsers.add_parser('construct', help='Emit a group as JSON or DOT')
    construct.add_argument('spec', help='Family spec (e.g. Q8, DQ16, sdp:8:3) or @path.json')
    construct.add_argument('--format', choices=sorted(FORMATTERS), default='json')
    construct.add_argument(
        '--generators',
        type=str,
        help='Comma-separated element indices to use as generators (Cayley graph colours)'
    )
    construct.add_argument('--output', type=str, default=None, help='Write to this path instead of stdout')
    construct.set_defaults(handler=cmd_construct)

    analyze = subparsers.add_parser('analyze', help='JSON structure report')
    analyze.add_argument('spec')
    analyze.add_argument('--output', type=str, default=None)
    analyze.set_defaults(handler=cmd_analyze)

    compare = subparsers.add_parser('compare', help='Compare two groups; exit 0 when equivalent')
    compare.add_argument('spec_a')
    compare.add_argument('spec_b')
    compare.add_argument('--mode', choices=sorted(COMPARE_MODES), default='iso')
    compare.add_argument('--output', type=str, default=None)
    compare.set_defaults(handler=cmd_compare)

    verify = subparsers.add_parser('verify', help='Run the verification suite')
    verify.add_argument(
        '--claim',
        action='append',
        default=None,
        help='Claim id to run (repeatable); all claims by default'
    )
    verify.add_argument('--list', action='store_true', help='List claim ids and exit')
    verify.add_argument('--json', action='store_true', help='JSON report instead of a table')
    verify.add_argument('--output', type=str, default=None)
    verify.set_defaults(handler=cmd_verify)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except SpecParseError as e:
        print(f'error: {e}', file=sys.stderr)
        return EXIT_CODES['parse_error']
    except GroupLabError as e:
        print(f'error: {e}', file=sys.stderr)
        return EXIT_CODES['parameter_error']


if __name__ == '__main__':
    sys.exit(main())
