"""Pulse response algorithms.

Every algorithm answers the same question: an oscillator at phase theta has
just received a pulse, how much does it want its phase to change? The answer
is a PulseResponse carrying the desired change phi, or an absorption flag for
the state-map algorithms (the oscillator fires immediately).

This module provides:
- prc_delay_advance(): delay-advance PRC with a refractory region [0, D)
- StateCurve subclasses (PeskinCurve, MirolloStrogatzCurve, RfaCurve) with
  their forward map f and inverse g
- state_forward(), state_inverse(), state_map_jump(): state-variable updates
- rfa_record(), rfa_flush(): the reachback accumulator
- PulseAlgorithm subclasses bundling the above behind respond()
- equivalent_prc(): tabulate any algorithm's phase response curve
"""

import math
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

import numpy as np


class StateMapDomainError(ValueError):
    """Raised when a state-map value falls outside the valid domain.

    For the inverse map this means the state has reached the image of the
    firing phase and the caller must absorb instead of mapping back.
    """

    def __init__(self, curve: str, value: float, reason: str) -> None:
        super().__init__(f"{curve}: value {value!r} outside domain ({reason})")
        self.curve = curve
        self.value = value


@dataclass(frozen=True)
class PulseResponse:
    """Desired reaction to one received pulse.

    Attributes:
        phi: Desired phase change (before coupling is applied).
        absorb: True when the oscillator must fire immediately. phi is unused then.
        refractory: True when the pulse was ignored because of the refractory region.
    """
    phi: float
    absorb: bool = False
    refractory: bool = False


# =============================================================================
# Delay-advance PRC
# =============================================================================


@dataclass(frozen=True)
class DelayAdvanceParams:
    """Delay-advance PRC parameters: the refractory bound D in [0, 1)."""
    refractory: float = 0.0

    def __post_init__(self) -> None:
        if not 0.0 <= self.refractory < 1.0:
            raise ValueError(f"refractory must be in [0, 1), got {self.refractory}")


def prc_delay_advance(theta: float, params: DelayAdvanceParams) -> PulseResponse:
    """Delay-advance PRC: pull towards the nearest threshold crossing.

    Phases up to 1/2 are delayed back towards 0, phases above 1/2 advanced
    towards 1. Pulses received inside [0, D) are ignored.
    """
    if theta < params.refractory:
        return PulseResponse(phi=0.0, refractory=True)
    if theta <= 0.5:
        return PulseResponse(phi=-theta)
    return PulseResponse(phi=1.0 - theta)


# =============================================================================
# State-variable curves
# =============================================================================


class StateCurve(ABC):
    """A smooth increasing map f from phase to state, with inverse g."""

    name: str = ""
    # whether reaching f(1) makes the receiver fire on the spot
    absorbs: bool = True

    @abstractmethod
    def forward(self, theta: float) -> float:
        """f(theta)."""
        ...

    @abstractmethod
    def inverse(self, x: float) -> float:
        """g(x) = f^-1(x), without domain checks."""
        ...

    @property
    def threshold_state(self) -> float:
        """State value of the firing phase, f(1)."""
        return self.forward(1.0)

    @property
    def floor_state(self) -> float:
        """State value of phase 0, f(0)."""
        return self.forward(0.0)


class PeskinCurve(StateCurve):
    """f(θ) = (1 - e^-γ)(1 - e^-γθ)."""

    name = "peskin"

    def __init__(self, gamma: float) -> None:
        if not gamma > 0:
            raise ValueError(f"gamma must be positive, got {gamma}")
        self.gamma = gamma
        self._scale = -math.expm1(-gamma)

    def forward(self, theta: float) -> float:
        return self._scale * -math.expm1(-self.gamma * theta)

    def inverse(self, x: float) -> float:
        if x >= self._scale:
            raise StateMapDomainError(self.name, x, "logarithm argument is not positive")
        return -math.log1p(-x / self._scale) / self.gamma

    def __repr__(self) -> str:
        return f"PeskinCurve(gamma={self.gamma})"


class MirolloStrogatzCurve(StateCurve):
    """f(θ) = ln(1 + (e^b - 1)θ) / b."""

    name = "mirollo_strogatz"

    def __init__(self, b: float) -> None:
        if not b > 0:
            raise ValueError(f"b must be positive, got {b}")
        self.b = b
        self._span = math.expm1(b)

    def forward(self, theta: float) -> float:
        return math.log1p(self._span * theta) / self.b

    def inverse(self, x: float) -> float:
        return math.expm1(self.b * x) / self._span

    def __repr__(self) -> str:
        return f"MirolloStrogatzCurve(b={self.b})"


class RfaCurve(StateCurve):
    """f(θ) = ln θ. Reachback never absorbs; it records the jump instead."""

    name = "rfa"
    absorbs = False

    def forward(self, theta: float) -> float:
        if theta <= 0.0:
            raise StateMapDomainError(self.name, theta, "logarithm of zero")
        return math.log(theta)

    def inverse(self, x: float) -> float:
        return math.exp(x)

    @property
    def floor_state(self) -> float:
        return -math.inf

    def __repr__(self) -> str:
        return "RfaCurve()"


@dataclass(frozen=True)
class StateMapParams:
    """State increment epsilon plus the curve it is applied on."""
    epsilon: float
    curve: StateCurve

    def __post_init__(self) -> None:
        if not self.epsilon > 0:
            raise ValueError(f"epsilon must be positive, got {self.epsilon}")


def _check_phase(theta: float, curve: StateCurve) -> None:
    if not 0.0 <= theta <= 1.0:
        raise StateMapDomainError(curve.name, theta, "phase outside [0, 1]")


def state_forward(theta: float, curve: StateCurve) -> float:
    """Map a phase to the state variable, x = f(theta).

    Raises:
        StateMapDomainError: If theta is outside [0, 1], or 0 for RFA.
    """
    _check_phase(theta, curve)
    return curve.forward(theta)


def state_inverse(x: float, curve: StateCurve) -> float:
    """Map a state back to a phase, theta = g(x).

    Raises:
        StateMapDomainError: If x lies outside f's image over [0, 1]. For the
            absorbing curves this signals that the caller must absorb.
    """
    if not math.isfinite(x):
        raise StateMapDomainError(curve.name, x, "not finite")
    if x > curve.threshold_state:
        raise StateMapDomainError(curve.name, x, "beyond the firing state, absorb instead")
    if x < curve.floor_state:
        raise StateMapDomainError(curve.name, x, "below the state of phase 0")
    return curve.inverse(x)


def state_map_jump(theta: float, params: StateMapParams) -> PulseResponse:
    """Increment the state by epsilon and map back to a phase change.

    For absorbing curves, reaching f(1) returns absorb=True. RFA evaluates the
    closed form theta * (e^epsilon - 1), which needs no domain check.
    """
    curve = params.curve
    x = state_forward(theta, curve) + params.epsilon
    if not curve.absorbs:
        return PulseResponse(phi=curve.inverse(x) - theta)
    if x >= curve.threshold_state:
        return PulseResponse(phi=0.0, absorb=True)
    return PulseResponse(phi=max(state_inverse(x, curve) - theta, 0.0))


# =============================================================================
# Reachback accumulator
# =============================================================================


@dataclass(frozen=True)
class RfaAccumulator:
    """Jump amounts recorded since the last firing."""
    pending: float = 0.0


def rfa_record(acc: RfaAccumulator, theta: float, params: StateMapParams) -> RfaAccumulator:
    """Record the jump a pulse at theta would cause, without moving the phase.

    A pulse at theta = 0 records nothing (the jump vanishes as theta -> 0).
    The recorded total never exceeds 1 - theta: an oscillator that would have
    reached the threshold fires together with the sender, so at its own firing
    it lands on the sender's phase instead of overtaking it.
    """
    if not isinstance(params.curve, RfaCurve):
        raise ValueError("rfa_record requires the rfa curve")
    if theta <= 0.0:
        return acc
    total = acc.pending + state_map_jump(theta, params).phi
    return RfaAccumulator(pending=min(total, 1.0 - theta))


def rfa_flush(acc: RfaAccumulator) -> Tuple[float, RfaAccumulator]:
    """Release the recorded total at firing and reset the accumulator."""
    return acc.pending, RfaAccumulator()


# =============================================================================
# Algorithms
# =============================================================================


class PulseAlgorithm(ABC):
    """Common interface the engine drives.

    Subclasses implement respond(theta). State-map algorithms run with a fixed
    coupling of 1; reachback algorithms record on reception and jump on firing.
    """

    name: str = ""
    fixed_coupling: bool = False
    reachback: bool = False

    @abstractmethod
    def respond(self, theta: float) -> PulseResponse:
        """Return the response to a pulse received at phase theta."""
        ...


class DelayAdvanceAlgorithm(PulseAlgorithm):
    """Delay-advance PRC synchronization with optional refractory period."""

    name = "prc"

    def __init__(self, params: DelayAdvanceParams) -> None:
        self.params = params

    @property
    def refractory(self) -> float:
        return self.params.refractory

    def respond(self, theta: float) -> PulseResponse:
        return prc_delay_advance(theta, self.params)


class StateMapAlgorithm(PulseAlgorithm):
    """Peskin or Mirollo-Strogatz state-variable synchronization."""

    fixed_coupling = True

    def __init__(self, params: StateMapParams) -> None:
        if not params.curve.absorbs:
            raise ValueError("use ReachbackAlgorithm for the rfa curve")
        self.params = params
        self.name = params.curve.name

    def respond(self, theta: float) -> PulseResponse:
        return state_map_jump(theta, self.params)


class ReachbackAlgorithm(PulseAlgorithm):
    """Reachback firefly: record jumps during the cycle, apply them at firing."""

    name = "rfa"
    fixed_coupling = True
    reachback = True

    def __init__(self, epsilon: float) -> None:
        self.params = StateMapParams(epsilon=epsilon, curve=RfaCurve())

    def respond(self, theta: float) -> PulseResponse:
        """The jump that would be recorded at theta."""
        if theta <= 0.0:
            return PulseResponse(phi=0.0)
        return state_map_jump(theta, self.params)

    def record(self, acc: RfaAccumulator, theta: float) -> RfaAccumulator:
        return rfa_record(acc, theta, self.params)


@dataclass
class AlgorithmState:
    """Per-oscillator algorithm data. Only reachback carries mutable data."""
    algorithm: PulseAlgorithm
    accumulator: RfaAccumulator = field(default_factory=RfaAccumulator)


ALGORITHM_NAMES = ("prc", "peskin", "mirollo_strogatz", "rfa")


def create_algorithm(
    name: str,
    *,
    refractory: float = 0.0,
    epsilon: Optional[float] = None,
    gamma: Optional[float] = None,
    b: Optional[float] = None,
) -> PulseAlgorithm:
    """Build an algorithm from its configuration name.

    Raises:
        ValueError: For an unknown name or a missing parameter.
    """
    if name == "prc":
        return DelayAdvanceAlgorithm(DelayAdvanceParams(refractory=refractory))
    if name not in ALGORITHM_NAMES:
        raise ValueError(f"Unknown algorithm {name!r}. Choose one of: {', '.join(ALGORITHM_NAMES)}")
    if epsilon is None:
        raise ValueError(f"algorithm {name!r} requires epsilon")
    if name == "rfa":
        return ReachbackAlgorithm(epsilon)
    if name == "peskin":
        if gamma is None:
            raise ValueError("algorithm 'peskin' requires gamma")
        return StateMapAlgorithm(StateMapParams(epsilon=epsilon, curve=PeskinCurve(gamma)))
    if b is None:
        raise ValueError("algorithm 'mirollo_strogatz' requires b")
    return StateMapAlgorithm(StateMapParams(epsilon=epsilon, curve=MirolloStrogatzCurve(b)))


def equivalent_prc(theta_grid: Sequence[float], algorithm: PulseAlgorithm) -> List[float]:
    """Tabulate an algorithm's phase response curve.

    Absorption points report the jump to threshold, 1 - theta.
    """
    values: List[float] = []
    for theta in np.asarray(theta_grid, dtype=float):
        response = algorithm.respond(float(theta))
        values.append(1.0 - float(theta) if response.absorb else response.phi)
    return values
