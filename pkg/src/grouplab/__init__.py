"""grouplab: exact construction and structural analysis of small finite groups.

Groups are closed from 2x2 matrices over cyclotomic integers, turned into
multiplication tables, and analysed through their subgroup lattices, cycle
graphs and product decompositions.
"""
__version__ = "0.1.0"

from .families import parse_family_spec
from .claims import run_verification
from .cli import main

__all__ = ["main", "parse_family_spec", "run_verification", "__version__"]
