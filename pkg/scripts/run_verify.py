#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""Run the grouplab verification suite from a source checkout.

It can be run from anywhere in the project, without installing the package.

Usage:
    # Every claim, coloured table
    python scripts/run_verify.py

    # A few claims only
    python scripts/run_verify.py --claim mystery-lattice --claim cycle-graphs

    # JSON report written to a file
    python scripts/run_verify.py --json --output verify.json
"""

import sys
import argparse
from pathlib import Path

# Add src directory to path so we can import the package
repo_root = Path(__file__).parent.parent
src_path = repo_root / "src"
if str(src_path) not in sys.path:
    sys.path.insert(0, str(src_path))

from grouplab.cli import main

if __name__ == '__main__':
    parser = argparse.ArgumentParser(
        description='Run the grouplab verification suite',
        formatter_class=argparse.RawDescriptionHelpFormatter
    )
    parser.add_argument(
        '--claim',
        action='append',
        default=[],
        help='Claim id to run (repeatable); all claims by default'
    )
    parser.add_argument(
        '--json',
        action='store_true',
        help='Write a JSON report instead of a table'
    )
    parser.add_argument(
        '--output',
        type=str,
        default=None,
        help='File to write the report to (default: stdout)'
    )
    args = parser.parse_args()

    argv = ['verify']
    for claim_id in args.claim:
        argv += ['--claim', claim_id]
    if args.json:
        argv.append('--json')
    if args.output:
        argv += ['--output', args.output]

    sys.exit(main(argv))
