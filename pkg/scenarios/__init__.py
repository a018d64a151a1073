"""Ready-made configurations.

This package provides:
- FigureScenario and the six built-in figure networks, each runnable in the
  three continuity modes
- create_theorem_config for randomized convergence-theorem checks
"""

from .figures import (
    FIGURE_MODES,
    FIGURE_SCENARIOS,
    MIROLLO_STROGATZ,
    PESKIN,
    PRC_ALL_TO_ALL,
    PRC_REFRACTORY,
    PRC_RING,
    RFA,
    FigureScenario,
)
from .factories import create_theorem_config

__all__ = [
    # Figure scenarios
    "FigureScenario",
    "FIGURE_SCENARIOS",
    "FIGURE_MODES",
    "PRC_ALL_TO_ALL",
    "PRC_REFRACTORY",
    "PRC_RING",
    "PESKIN",
    "MIROLLO_STROGATZ",
    "RFA",
    # Factory functions
    "create_theorem_config",
]
