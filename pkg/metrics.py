"""Convergence analysis over recorded traces."""

import bisect
from dataclasses import dataclass
from typing import TYPE_CHECKING, Dict, List, Optional, Sequence, Tuple

import numpy as np

from .phase import containing_arc

if TYPE_CHECKING:
    from .engine import Trace


# Boundary-to-boundary increases smaller than this are rounding noise
MONOTONICITY_TOLERANCE = 1e-12


@dataclass(frozen=True)
class ArcSeries:
    """Containing arc over time.

    Attributes:
        times: Strictly increasing times.
        values: Containing arc at each time, in [0, 1).
    """
    times: Tuple[float, ...]
    values: Tuple[float, ...]

    def __post_init__(self) -> None:
        if len(self.times) != len(self.values):
            raise ValueError("times and values must have the same length")
        for earlier, later in zip(self.times, self.times[1:]):
            if not later > earlier:
                raise ValueError(f"times must be strictly increasing, got {earlier} then {later}")

    @classmethod
    def from_points(cls, points: Sequence[Tuple[float, float]]) -> "ArcSeries":
        return cls(
            times=tuple(float(t) for t, _ in points),
            values=tuple(float(v) for _, v in points),
        )

    @property
    def points(self) -> List[Tuple[float, float]]:
        return list(zip(self.times, self.values))

    def value_at(self, time: float) -> float:
        """Arc at a recorded time.

        Raises:
            KeyError: If nothing was recorded at that time.
        """
        index = bisect.bisect_left(self.times, time)
        if index < len(self.times) and self.times[index] == time:
            return self.values[index]
        raise KeyError(time)

    @property
    def final(self) -> float:
        return self.values[-1] if self.values else 0.0

    def __len__(self) -> int:
        return len(self.times)


@dataclass(frozen=True)
class SyncReport:
    """Whether and when a series synchronized.

    Attributes:
        synced: True when the arc stayed below tolerance for the hold time.
        sync_time: Start of the first such stretch.
        tolerance: Arc tolerance used.
        cycles_to_sync: Cycle boundaries strictly before sync_time, when known.
    """
    synced: bool
    sync_time: Optional[float]
    tolerance: float
    cycles_to_sync: Optional[int] = None


@dataclass(frozen=True)
class MonotonicityReport:
    """Containing arc at cycle boundaries.

    Attributes:
        monotone: True when no boundary arc exceeds the previous one.
        boundaries: (time, arc) at every cycle boundary, starting at t = 0.
        violations: (time, previous arc, arc) for every increase.
    """
    monotone: bool
    boundaries: Tuple[Tuple[float, float], ...]
    violations: Tuple[Tuple[float, float, float], ...]


@dataclass(frozen=True)
class CouplingSummary:
    """Statistics of the effective coupling log. Empty logs leave the values None."""
    count: int
    min: Optional[float] = None
    max: Optional[float] = None
    mean: Optional[float] = None
    interrupted_fraction: Optional[float] = None

    @property
    def is_empty(self) -> bool:
        return self.count == 0


class SyncMonitor:
    """Incremental synchronization detection over (time, arc) observations.

    The network counts as synchronized at the first time the arc drops below
    tolerance and stays there for hold seconds. Dips shorter than the hold
    window are forgotten.

    Example:
        >>> monitor = SyncMonitor(tolerance=1e-6, hold=1.0)
        >>> monitor.observe(0.0, 0.0)
        False
        >>> monitor.observe(1.0, 0.0)
        True
        >>> monitor.sync_time
        0.0
    """

    def __init__(self, tolerance: float = 1e-6, hold: float = 1.0) -> None:
        if not tolerance > 0:
            raise ValueError(f"tolerance must be positive, got {tolerance}")
        if hold < 0:
            raise ValueError(f"hold must be non-negative, got {hold}")
        self.tolerance = tolerance
        self.hold = hold
        self._candidate: Optional[float] = None
        self._sync_time: Optional[float] = None

    @property
    def synced(self) -> bool:
        return self._sync_time is not None

    @property
    def sync_time(self) -> Optional[float]:
        return self._sync_time

    def observe(self, time: float, arc: float) -> bool:
        """Feed one observation. Returns True once synchronization is established."""
        if self._sync_time is not None:
            return True
        if arc < self.tolerance:
            if self._candidate is None:
                self._candidate = time
            if time - self._candidate >= self.hold:
                self._sync_time = self._candidate
                return True
        else:
            self._candidate = None
        return False


def arc_series(trace: "Trace") -> ArcSeries:
    """Containing arc at every sample and after every firing instant.

    Samples and snapshots taken at the same time hold the same phases; one
    point is kept per time.
    """
    recorded: Dict[float, Tuple[float, ...]] = {}
    for sample in trace.samples:
        recorded[sample.time] = sample.phases
    for time, phases in trace.snapshots:
        recorded[time] = phases
    times = sorted(recorded)
    return ArcSeries(
        times=tuple(times),
        values=tuple(containing_arc(recorded[t]) for t in times),
    )


def cycle_boundaries(firings: Sequence[Tuple[float, int]], n: int) -> List[float]:
    """Instants at which every oscillator has fired since the previous boundary.

    Time 0 is the first boundary.
    """
    boundaries = [0.0]
    seen: set = set()
    for time, oscillator in firings:
        seen.add(oscillator)
        if len(seen) == n:
            if time > boundaries[-1]:
                boundaries.append(time)
            seen = set()
    return boundaries


def sync_time(
    series: ArcSeries,
    tolerance: float = 1e-6,
    hold: float = 1.0,
    *,
    boundaries: Optional[Sequence[float]] = None,
) -> SyncReport:
    """First time the arc drops below tolerance and stays there for hold seconds.

    Args:
        series: Containing arc over time.
        tolerance: Arc below which the network counts as synchronized.
        hold: Seconds the arc must stay below tolerance.
        boundaries: Cycle boundary times; when given, the report counts the
            cycles completed before synchronization.

    Raises:
        ValueError: If tolerance is not positive or hold is negative.
    """
    monitor = SyncMonitor(tolerance, hold)
    for time, value in zip(series.times, series.values):
        if monitor.observe(time, value):
            break
    found = monitor.sync_time
    cycles: Optional[int] = None
    if found is not None and boundaries is not None:
        # time 0 starts the first cycle
        cycles = max(bisect.bisect_left(list(boundaries), found) - 1, 0)
    return SyncReport(synced=found is not None, sync_time=found, tolerance=tolerance, cycles_to_sync=cycles)


def cycle_monotonicity(
    series: ArcSeries,
    firings: Sequence[Tuple[float, int]],
    n: int,
    tolerance: float = MONOTONICITY_TOLERANCE,
) -> MonotonicityReport:
    """Check that the arc never grows from one cycle boundary to the next.

    Boundary arcs are read from the series; boundaries missing from it are skipped.
    """
    points: List[Tuple[float, float]] = []
    for time in cycle_boundaries(firings, n):
        try:
            points.append((time, series.value_at(time)))
        except KeyError:
            continue
    violations = [
        (time, previous, value)
        for (_, previous), (time, value) in zip(points, points[1:])
        if value > previous + tolerance
    ]
    return MonotonicityReport(
        monotone=not violations,
        boundaries=tuple(points),
        violations=tuple(violations),
    )


def coupling_summary(trace: "Trace") -> CouplingSummary:
    """Min, max and mean effective coupling plus the share of interrupted adjustments."""
    records = trace.couplings
    if not records:
        return CouplingSummary(count=0)
    values = np.array([record.alpha_effective for record in records], dtype=float)
    interrupted = sum(1 for record in records if record.interrupted)
    return CouplingSummary(
        count=len(records),
        min=float(values.min()),
        max=float(values.max()),
        mean=float(values.mean()),
        interrupted_fraction=interrupted / len(records),
    )
