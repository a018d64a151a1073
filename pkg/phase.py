"""Circular phase arithmetic on the unit interval [0, 1).

This module provides:
- wrap_phase(): normalize raw phase arithmetic into [0, 1)
- gap(): forward arc from one phase to another
- cyclic_gaps(): the N forward arcs between phase-ordered neighbours
- containing_arc(): length of the smallest arc holding every phase
- order_by_phase(): 1-based oscillator indices sorted by phase

Comparisons are exact; tolerances belong to the metrics module.
"""

import math
from typing import List, Sequence

import numpy as np


# A phase is a plain float in [0, 1); vectors are indexed by oscillator 1..N
Phase = float
PhaseVector = Sequence[float]


class PhaseCorruptionError(ValueError):
    """Raised when phase arithmetic produces a non-finite value."""

    def __init__(self, value: float, context: str = "") -> None:
        """Create a PhaseCorruptionError.

        Args:
            value: The offending value.
            context: Optional description of where the value came from.
        """
        where = f" ({context})" if context else ""
        super().__init__(f"Non-finite phase value {value!r}{where}")
        self.value = value


def wrap_phase(x: float) -> Phase:
    """Return x modulo 1, in [0, 1).

    Raises:
        PhaseCorruptionError: If x is NaN or infinite.
    """
    if not math.isfinite(x):
        raise PhaseCorruptionError(x)
    wrapped = x % 1.0
    # tiny negative inputs round up to exactly 1.0
    if wrapped >= 1.0:
        return 0.0
    return wrapped


def gap(theta_a: Phase, theta_b: Phase) -> float:
    """Forward arc travelled from theta_a to theta_b; zero for equal phases."""
    if theta_b > theta_a:
        return theta_b - theta_a
    if theta_a > theta_b:
        return 1.0 - (theta_a - theta_b)
    return 0.0


def _as_phase_array(phases: PhaseVector) -> np.ndarray:
    values = np.asarray(phases, dtype=float)
    if values.ndim != 1 or values.size == 0:
        raise ValueError("phase vector must be a non-empty one-dimensional sequence")
    if not np.all(np.isfinite(values)):
        bad = values[~np.isfinite(values)][0]
        raise PhaseCorruptionError(float(bad), "phase vector")
    return values


def order_by_phase(phases: PhaseVector) -> List[int]:
    """Return 1-based oscillator indices in ascending phase order.

    Ties are broken by ascending oscillator index.

    Example:
        >>> order_by_phase([0.9, 0.1])
        [2, 1]
    """
    values = _as_phase_array(phases)
    # stable sort keeps index order among equal phases
    return [int(i) + 1 for i in np.argsort(values, kind="stable")]


def cyclic_gaps(phases: PhaseVector) -> List[float]:
    """Forward gaps between cyclically adjacent oscillators in phase order.

    The last oscillator in phase order wraps around to the first one.
    """
    values = _as_phase_array(phases)
    order = [i - 1 for i in order_by_phase(values)]
    count = len(order)
    return [
        gap(float(values[order[k]]), float(values[order[(k + 1) % count]]))
        for k in range(count)
    ]


def containing_arc(phases: PhaseVector) -> float:
    """Length of the smallest circular arc containing every phase.

    Computed as one minus the largest cyclic gap. A single oscillator, or a
    vector of identical phases, is synchronized and yields 0.

    Raises:
        ValueError: If the vector is empty.
        PhaseCorruptionError: If any phase is not finite.
    """
    values = np.sort(_as_phase_array(phases))
    if values[0] == values[-1]:
        return 0.0
    wrap_gap = 1.0 - (values[-1] - values[0])
    largest = max(float(np.diff(values).max(initial=0.0)), float(wrap_gap))
    return 1.0 - largest
