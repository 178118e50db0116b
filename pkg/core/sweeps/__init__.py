"""
Sweeps Module
Exhaustive agreement checks for every duality, bounded by DualityConfig.
"""

from .sweeps import (
    SUITES,
    SweepResult,
    run_all,
    sweep_birkhoff,
    sweep_catdual,
    sweep_correspondence_suite,
    sweep_monoids,
    sweep_operators,
    sweep_reglang,
    sweep_residuation,
    sweep_tensor,
)

__version__ = "0.1.0"
__all__ = [
    "SUITES",
    "SweepResult",
    "run_all",
    "sweep_birkhoff",
    "sweep_catdual",
    "sweep_correspondence_suite",
    "sweep_monoids",
    "sweep_operators",
    "sweep_reglang",
    "sweep_residuation",
    "sweep_tensor",
]
