"""Continuous phase adjustment planning.

Instead of jumping by psi, an oscillator may run at a modified frequency for a
while until psi has been realized:
- constant frequency: offset omega_a fixed, duration |psi| / omega_a
- constant time: duration tau fixed, frequency omega0 + psi / tau
- jump: the instantaneous limit of both

An interrupted adjustment only realizes part of psi, which is accounted for as
a reduced effective coupling strength.
"""

import math
from dataclasses import dataclass
from enum import Enum
from typing import Tuple, Union

from .phase import PhaseCorruptionError


class ContinuityMode(str, Enum):
    """How a desired phase change is realized."""
    JUMP = "jump"
    CONSTANT_FREQUENCY = "constant_frequency"
    CONSTANT_TIME = "constant_time"


@dataclass(frozen=True)
class ContinuityConfig:
    """Continuity parameters. Rates are in cycles/s, tau_fixed in seconds.

    Attributes:
        mode: Adjustment method.
        omega_a_up: Frequency boost used for positive psi (constant frequency).
        omega_a_down: Frequency cut used for negative psi (constant frequency).
        tau_fixed: Adjustment duration (constant time).
        omega0: Fundamental frequency.
    """
    mode: ContinuityMode = ContinuityMode.JUMP
    omega_a_up: float = 0.3
    omega_a_down: float = 0.3
    tau_fixed: float = 0.3
    omega0: float = 1.0

    def __post_init__(self) -> None:
        # accept plain strings from configuration files
        object.__setattr__(self, "mode", ContinuityMode(self.mode))
        for name in ("omega_a_up", "omega_a_down", "tau_fixed", "omega0"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value > 0):
                raise ValueError(f"{name} must be a positive finite number, got {value}")

    @classmethod
    def symmetric(
        cls,
        mode: Union[ContinuityMode, str],
        omega_a: float = 0.3,
        tau: float = 0.3,
        omega0: float = 1.0,
    ) -> "ContinuityConfig":
        """Same frequency offset for speeding up and slowing down."""
        return cls(
            mode=ContinuityMode(mode),
            omega_a_up=omega_a,
            omega_a_down=omega_a,
            tau_fixed=tau,
            omega0=omega0,
        )


@dataclass(frozen=True)
class AdjustmentPlan:
    """An in-flight phase correction.

    Attributes:
        omega_i: Current evolution rate (may be negative).
        remaining: Time left at omega_i. Zero means the oscillator runs at omega0.
        psi_total: The phase change this plan realizes.
        started_at: Simulation time the plan was made.
        duration: Full duration tau_i of the plan.
        alpha: Coupling strength that scaled psi_total.
    """
    omega_i: float
    remaining: float
    psi_total: float
    started_at: float
    duration: float = 0.0
    alpha: float = 1.0

    @property
    def is_active(self) -> bool:
        """True while the oscillator still runs at omega_i."""
        return self.remaining > 0.0

    @classmethod
    def null(cls, omega0: float, now: float = 0.0) -> "AdjustmentPlan":
        """A plan that leaves the oscillator at its fundamental frequency."""
        return cls(omega_i=omega0, remaining=0.0, psi_total=0.0, started_at=now)

    def advanced(self, dt: float, omega0: float) -> "AdjustmentPlan":
        """The same plan observed dt seconds later."""
        remaining = self.remaining - dt
        if remaining <= 0.0:
            return AdjustmentPlan(
                omega_i=omega0,
                remaining=0.0,
                psi_total=self.psi_total,
                started_at=self.started_at,
                duration=self.duration,
                alpha=self.alpha,
            )
        return AdjustmentPlan(
            omega_i=self.omega_i,
            remaining=remaining,
            psi_total=self.psi_total,
            started_at=self.started_at,
            duration=self.duration,
            alpha=self.alpha,
        )


@dataclass(frozen=True)
class CouplingRecord:
    """Effective coupling realized by one adjustment.

    Attributes:
        oscillator: 1-based oscillator index.
        fire_time: Time the adjustment ended (or was applied, for jumps).
        t0: Time the adjustment actually ran.
        tau_i: Planned duration (0 for jumps).
        alpha_effective: Realized coupling, (t0 / tau_i) * alpha capped at alpha.
        alpha: Coupling strength the adjustment was planned with.
        reason: "jump", "interrupted", "cancelled" or "completed".
    """
    oscillator: int
    fire_time: float
    t0: float
    tau_i: float
    alpha_effective: float
    alpha: float
    reason: str

    @property
    def interrupted(self) -> bool:
        return self.t0 < self.tau_i


def plan(psi: float, cfg: ContinuityConfig, now: float, alpha: float = 1.0) -> AdjustmentPlan:
    """Turn a desired phase change into an adjustment plan.

    Jump mode returns a zero-length plan carrying psi; the caller applies it
    instantaneously. A zero psi yields the null plan in every mode.

    Raises:
        PhaseCorruptionError: If psi is not finite.
    """
    if not math.isfinite(psi):
        raise PhaseCorruptionError(psi, "desired phase change")
    if psi == 0.0:
        return AdjustmentPlan.null(cfg.omega0, now)
    if cfg.mode is ContinuityMode.JUMP:
        return AdjustmentPlan(
            omega_i=cfg.omega0, remaining=0.0, psi_total=psi, started_at=now, alpha=alpha,
        )
    if cfg.mode is ContinuityMode.CONSTANT_FREQUENCY:
        rate = cfg.omega_a_up if psi > 0 else cfg.omega_a_down
        duration = abs(psi) / rate
        omega_i = cfg.omega0 + rate if psi > 0 else cfg.omega0 - rate
    else:
        duration = cfg.tau_fixed
        omega_i = cfg.omega0 + psi / cfg.tau_fixed
    return AdjustmentPlan(
        omega_i=omega_i,
        remaining=duration,
        psi_total=psi,
        started_at=now,
        duration=duration,
        alpha=alpha,
    )


def realized_fraction(old: AdjustmentPlan, elapsed: float) -> float:
    """Share of old.psi_total realized after running for elapsed seconds."""
    if elapsed < 0:
        raise ValueError(f"elapsed must be non-negative, got {elapsed}")
    if old.duration <= 0.0 or elapsed >= old.duration:
        return 1.0
    return elapsed / old.duration


def replan(
    old: AdjustmentPlan,
    elapsed: float,
    new_psi: float,
    cfg: ContinuityConfig,
    now: float,
    alpha: float = 1.0,
) -> Tuple[AdjustmentPlan, float]:
    """Discard the rest of old and plan new_psi from the current phase.

    Args:
        old: The plan being replaced.
        elapsed: Seconds old has been running.
        new_psi: Phase change computed from the current, partially adjusted phase.
        cfg: Continuity parameters.
        now: Current simulation time.
        alpha: Coupling strength used for new_psi.

    Returns:
        The new plan and the fraction of old.psi_total that was realized.

    Raises:
        ValueError: If elapsed is negative.
    """
    fraction = realized_fraction(old, elapsed)
    return plan(new_psi, cfg, now, alpha), fraction


def effective_coupling(t0: float, tau_i: float, alpha: float) -> float:
    """Coupling strength an adjustment effectively applied: min(t0/tau_i, 1) * alpha.

    An adjustment that never ran (t0 = 0) realizes nothing. A zero-length
    adjustment (tau_i = 0) that did run is a jump and realizes alpha.
    """
    if t0 < 0:
        raise ValueError(f"t0 must be non-negative, got {t0}")
    if t0 == 0.0:
        return 0.0
    if tau_i <= 0.0:
        return alpha
    return min(t0 / tau_i, 1.0) * alpha


def phase_at(active: AdjustmentPlan, theta_start: float, dt: float, omega0: float) -> float:
    """Unwrapped phase dt seconds after theta_start under a plan.

    Piecewise linear: omega_i for the plan's remaining time, omega0 afterwards.
    Threshold handling is left to the caller.
    """
    if dt < 0:
        raise ValueError(f"dt must be non-negative, got {dt}")
    in_plan = min(dt, active.remaining)
    after_plan = max(dt - active.remaining, 0.0)
    return theta_start + active.omega_i * in_plan + omega0 * after_plan


def min_frequency(cfg: ContinuityConfig, psi_bound: float = 0.5) -> float:
    """Lowest evolution rate a plan can use for delays of at most psi_bound."""
    if psi_bound <= 0.0:
        return cfg.omega0
    if cfg.mode is ContinuityMode.CONSTANT_FREQUENCY:
        return cfg.omega0 - cfg.omega_a_down
    if cfg.mode is ContinuityMode.CONSTANT_TIME:
        return cfg.omega0 - psi_bound / cfg.tau_fixed
    return cfg.omega0


def allows_negative_frequency(cfg: ContinuityConfig, psi_bound: float = 0.5) -> bool:
    """True when some plan could make an oscillator evolve backwards."""
    return min_frequency(cfg, psi_bound) < 0.0
