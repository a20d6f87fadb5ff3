"""Cluster seeds of double braid varieties from combinatorial data."""

from .braidword import compute_crossings, format_word, parse_word
from .rootsys import DynkinData, parse_type
from .seedbuild import build_seed, export_seed

__all__ = ["DynkinData", "parse_type", "parse_word", "format_word", "compute_crossings",
           "build_seed", "export_seed"]
