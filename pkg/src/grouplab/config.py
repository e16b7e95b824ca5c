# -*- coding: utf-8 -*-
"""Configuration and constants for grouplab.

This module defines:
- Static configuration (true constants: bounds, schema version, palette)
- Runtime configuration (environment-derived switches such as NO_COLOR)
- Exit codes shared by the command-line surface
- Package version retrieval for report headers
"""

from datetime import datetime
from importlib import metadata
from typing import Any, Dict, Mapping, Optional
import os

# Static configuration (true constants)
STATIC_CONFIG = {
    'closure_cap': 256,
    'max_analysis_order': 64,
    'max_lattice_nodes': 128,
    'schema_version': 1,
    'catalog_max_order': 64,
    'unicorn_catalog_max_order': 32,
    'zeta_symbol': 'z',
    'no_color_env_var': 'NO_COLOR',
    'package_name': 'grouplab',
}

# Cayley graph edge colours, assigned to generators in order
DOT_CONFIG = {
    'palette': ('blue', 'red', 'darkgreen', 'orange', 'purple', 'brown'),
    'cayley_radius_step': 1.5,
}

EXIT_CODES = {
    'equivalent': 0,
    'pass': 0,
    'not_equivalent': 1,
    'fail': 1,
    'parse_error': 2,
    'parameter_error': 3,
}


def get_runtime_config(environ: Optional[Mapping[str, str]] = None) -> Dict[str, Any]:
    """Calculate runtime configuration from the process environment.

    Args:
        environ: Mapping to read instead of os.environ (tests pass a dict).

    Returns:
        Dict with 'no_color' and 'run_timestamp'. Does not include static config.
    """
    env = os.environ if environ is None else environ
    config = {}

    # Any value, including the empty string, disables colour (no-color.org)
    config['no_color'] = STATIC_CONFIG['no_color_env_var'] in env
    config['run_timestamp'] = datetime.now().replace(microsecond=0).isoformat()

    return config


def get_package_version() -> str:
    """Return the installed grouplab version, or the in-tree version when running from source."""
    try:
        return metadata.version(STATIC_CONFIG['package_name'])
    except metadata.PackageNotFoundError:
        from . import __version__
        return __version__
