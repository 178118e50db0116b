"""Finite-Duality CLI Package"""

from .cli import cli, dual_of, flags_of, main
from .codec import build
from .report import EXIT_FAILED, EXIT_INPUT, EXIT_OK, Report, emit
from .schema import load_structure, parse_structure

__version__ = "0.1.0"
__all__ = [
    "EXIT_FAILED",
    "EXIT_INPUT",
    "EXIT_OK",
    "Report",
    "build",
    "cli",
    "dual_of",
    "emit",
    "flags_of",
    "load_structure",
    "main",
    "parse_structure",
]
