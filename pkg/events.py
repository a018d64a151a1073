"""Simulation events and the time-ordered event queue."""

import heapq
from dataclasses import dataclass
from enum import Enum
from typing import Callable, List, Optional, Tuple


# Events closer than this (in seconds) belong to the same instant
TIME_TOLERANCE = 1e-12


class SimulationError(RuntimeError):
    """Raised when the simulation reaches a state it must never reach."""

    def __init__(self, message: str, time: Optional[float] = None) -> None:
        where = f" at t={time!r}" if time is not None else ""
        super().__init__(f"{message}{where}")
        self.time = time


class EventKind(Enum):
    """Event kinds, valued by processing order within one instant."""
    PLAN_EXPIRY = 0
    FIRE = 1
    SAMPLE = 2


@dataclass(frozen=True)
class Event:
    """A timestamped simulation event.

    Attributes:
        time: Simulation time in seconds.
        kind: What happens.
        oscillator: 1-based oscillator index, None for samples.
        generation: Oscillator state version the event was computed from.
            Events from an older generation are stale and skipped.
    """
    time: float
    kind: EventKind
    oscillator: Optional[int] = None
    generation: int = 0


class EventQueue:
    """Priority queue ordered by time, then kind, then oscillator index."""

    def __init__(self) -> None:
        self._queue: List[Tuple[float, int, int, int, Event]] = []
        self._counter = 0
        self._now = 0.0

    @property
    def now(self) -> float:
        """Time of the last popped batch."""
        return self._now

    def push(self, event: Event) -> None:
        """Schedule an event.

        Raises:
            SimulationError: If the event lies before the current time.
        """
        if event.time < self._now - TIME_TOLERANCE:
            raise SimulationError(f"event {event.kind.name} scheduled in the past", event.time)
        heapq.heappush(
            self._queue,
            (event.time, event.kind.value, event.oscillator or 0, self._counter, event),
        )
        self._counter += 1

    def peek(self) -> Optional[Event]:
        if self._queue:
            return self._queue[0][4]
        return None

    def pop_batch(
        self,
        is_current: Callable[[Event], bool] = lambda event: True,
        tolerance: float = TIME_TOLERANCE,
    ) -> List[Event]:
        """Pop every current event of the earliest instant.

        Stale events (is_current returns False) are dropped on the way.

        Raises:
            SimulationError: If the earliest event lies before the previous batch.
        """
        first: Optional[Event] = None
        while self._queue:
            candidate = heapq.heappop(self._queue)[4]
            if is_current(candidate):
                first = candidate
                break
        if first is None:
            return []
        if first.time < self._now - tolerance:
            raise SimulationError("non-monotone event time", first.time)
        batch = [first]
        while self._queue and self._queue[0][0] <= first.time + tolerance:
            candidate = heapq.heappop(self._queue)[4]
            if is_current(candidate):
                batch.append(candidate)
        self._now = max(self._now, first.time)
        batch.sort(key=lambda event: (event.kind.value, event.oscillator or 0))
        return batch

    def is_empty(self) -> bool:
        return not self._queue

    def clear(self) -> None:
        self._queue.clear()
        self._counter = 0

    def __len__(self) -> int:
        return len(self._queue)

    def __repr__(self) -> str:
        return f"EventQueue(size={len(self._queue)}, now={self._now})"
