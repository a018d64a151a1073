"""Deterministic discrete-event simulation of a pulse-coupled oscillator network.

Oscillators evolve piecewise linearly (see continuity.phase_at), so every
event time is solved in closed form; there is no fixed-step integration.

Processing order at one instant:
1. plan expiries
2. firings, in ascending oscillator index; each firer resets to 0 and
   (reachback only) flushes its recorded jumps. A running plan carries on
   across the reset and only ends when it expires or another pulse replans it
3. pulse receptions, recipients in ascending index, each recipient handling
   its senders in ascending index at its updated phase
4. oscillators absorbed (or pushed to threshold) in step 3 fire in a new
   round; nobody fires twice in one instant, and an oscillator that already
   fired ignores the remaining pulses of that instant
5. the phase sample, if one is due

Usage:
    from pco_sync import SimConfig, all_to_all, create_algorithm, run

    trace = run(SimConfig(graph=all_to_all(6), algorithm=create_algorithm("prc")))
"""

import math
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Set, Tuple

import numpy as np

from .accessors import get_logger
from .continuity import (
    AdjustmentPlan,
    ContinuityConfig,
    ContinuityMode,
    CouplingRecord,
    allows_negative_frequency,
    effective_coupling,
    phase_at,
    replan,
)
from .events import TIME_TOLERANCE, Event, EventKind, EventQueue, SimulationError
from .metrics import SyncMonitor
from .phase import containing_arc, wrap_phase
from .prc import AlgorithmState, DelayAdvanceAlgorithm, PulseAlgorithm, rfa_flush
from .topology import Graph, TopologyError, is_strongly_connected

# Phases this far below zero are rounding noise; anything lower is a crossing
ZERO_CROSSING_TOLERANCE = 1e-12


class SimulationConfigError(ValueError):
    """Raised when a SimConfig combination cannot be simulated."""


@dataclass(frozen=True)
class InitialPhases:
    """Initial phases: an explicit list, or random phases inside an arc.

    Attributes:
        phases: Explicit phases, one per oscillator. Takes precedence.
        seed: Seed of the random phases.
        arc_length: Random phases are drawn from [arc_offset, arc_offset + arc_length).
        arc_offset: Start of the random arc (wrapped).
    """
    phases: Optional[Tuple[float, ...]] = None
    seed: int = 0
    arc_length: float = 0.45
    arc_offset: float = 0.0

    def generate(self, n: int) -> List[float]:
        if self.phases is not None:
            return [float(theta) for theta in self.phases]
        rng = np.random.default_rng(self.seed)
        return [wrap_phase(self.arc_offset + self.arc_length * u) for u in rng.random(n)]

    def arc_bound(self, n: int) -> float:
        """Upper bound of the initial containing arc."""
        if self.phases is not None:
            return containing_arc(self.phases)
        return self.arc_length


@dataclass(frozen=True)
class AlphaSchedule:
    """Where the coupling strength of each firing instant comes from.

    "constant" uses SimConfig.alpha; "random" draws uniformly from (low, high],
    from a generator seeded with seed, once per oscillator and firing instant.
    Pulses an oscillator handles at one instant share that draw.
    """
    kind: str = "constant"
    low: float = 0.05
    high: float = 1.0
    seed: int = 0

    def __post_init__(self) -> None:
        if self.kind not in ("constant", "random"):
            raise SimulationConfigError(f"alpha schedule must be 'constant' or 'random', got {self.kind!r}")
        if self.kind == "random" and not 0.0 <= self.low < self.high <= 1.0:
            raise SimulationConfigError(
                f"random alpha bounds must satisfy 0 <= low < high <= 1, got ({self.low}, {self.high}]"
            )

    def sampler(self, alpha: float) -> Callable[[], float]:
        if self.kind == "constant":
            return lambda: alpha
        rng = np.random.default_rng(self.seed)
        span = self.high - self.low
        # high - span * [0, 1) lies in (low, high]
        return lambda: self.high - span * float(rng.random())


@dataclass(frozen=True)
class SimConfig:
    """Everything a run needs.

    Attributes:
        graph: Pulse delivery topology; n is graph.n.
        algorithm: Pulse response algorithm.
        alpha: Coupling strength in (0, 1]; must be 1 for state-map algorithms.
        continuity: Continuity method and parameters (also holds omega0).
        initial: Initial phases.
        horizon: Simulated seconds.
        sample_dt: Seconds between phase samples.
        alpha_schedule: Optional per-firing coupling source.
        theorem_check: Enforce the convergence-theorem preconditions and
            report oscillators firing twice in one cycle.
        arc_bound: Initial containing-arc bound used by theorem_check, in (0, 1/2].
        allow_disconnected: Run even if the graph is not strongly connected.
        stop_on_sync: Stop as soon as synchronization is detected.
        sync_tolerance: Containing arc below which the network counts as synchronized.
        sync_hold: Seconds the arc must stay below tolerance (default one period).
    """
    graph: Graph
    algorithm: PulseAlgorithm
    alpha: float = 0.5
    continuity: ContinuityConfig = field(default_factory=ContinuityConfig)
    initial: InitialPhases = field(default_factory=InitialPhases)
    horizon: float = 60.0
    sample_dt: float = 0.01
    alpha_schedule: Optional[AlphaSchedule] = None
    theorem_check: bool = False
    arc_bound: float = 0.5
    allow_disconnected: bool = False
    stop_on_sync: bool = False
    sync_tolerance: float = 1e-6
    sync_hold: Optional[float] = None

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def omega0(self) -> float:
        return self.continuity.omega0

    @property
    def hold(self) -> float:
        return self.sync_hold if self.sync_hold is not None else 1.0 / self.omega0

    def validate(self) -> None:
        """Check the configuration as a whole.

        Raises:
            SimulationConfigError: For an invalid parameter combination.
            TopologyError: For a graph that is not strongly connected
                (unless allow_disconnected is set).
        """
        if not 0.0 < self.alpha <= 1.0:
            raise SimulationConfigError(f"alpha must be in (0, 1], got {self.alpha}")
        if self.algorithm.fixed_coupling:
            if self.alpha != 1.0:
                raise SimulationConfigError(
                    f"algorithm {self.algorithm.name!r} runs with coupling 1, got alpha={self.alpha}"
                )
            if self.alpha_schedule is not None and self.alpha_schedule.kind != "constant":
                raise SimulationConfigError(
                    f"algorithm {self.algorithm.name!r} does not support a random alpha schedule"
                )
        if not (math.isfinite(self.horizon) and self.horizon >= 0):
            raise SimulationConfigError(f"horizon must be a non-negative number, got {self.horizon}")
        if not self.sample_dt > 0:
            raise SimulationConfigError(f"sample_dt must be positive, got {self.sample_dt}")
        if not self.sync_tolerance > 0:
            raise SimulationConfigError(f"sync_tolerance must be positive, got {self.sync_tolerance}")
        if self.hold < 0:
            raise SimulationConfigError(f"sync_hold must be non-negative, got {self.sync_hold}")
        if not self.allow_disconnected and not is_strongly_connected(self.graph):
            raise TopologyError("graph is not strongly connected; set allow_disconnected to run anyway")
        self._validate_initial()
        if self.theorem_check:
            self._validate_theorem_preconditions()

    def _validate_initial(self) -> None:
        initial = self.initial
        if initial.phases is not None:
            if len(initial.phases) != self.n:
                raise SimulationConfigError(
                    f"expected {self.n} initial phases, got {len(initial.phases)}"
                )
            for theta in initial.phases:
                if not 0.0 <= theta < 1.0:
                    raise SimulationConfigError(f"initial phase {theta} outside [0, 1)")
        elif not 0.0 <= initial.arc_length < 1.0:
            raise SimulationConfigError(f"initial arc must be in [0, 1), got {initial.arc_length}")

    def _validate_theorem_preconditions(self) -> None:
        if not isinstance(self.algorithm, DelayAdvanceAlgorithm):
            raise SimulationConfigError("theorem_check applies to the delay-advance PRC only")
        if not 0.0 < self.arc_bound <= 0.5:
            raise SimulationConfigError(f"arc_bound must be in (0, 1/2], got {self.arc_bound}")
        initial_arc = self.initial.arc_bound(self.n)
        if not initial_arc < self.arc_bound:
            raise SimulationConfigError(
                f"initial containing arc {initial_arc} must be below arc_bound {self.arc_bound}"
            )
        if self.algorithm.refractory > 1.0 - self.arc_bound:
            raise SimulationConfigError(
                f"refractory {self.algorithm.refractory} exceeds 1 - arc_bound = {1.0 - self.arc_bound}"
            )


@dataclass
class OscillatorState:
    """Mutable state of one oscillator, valid at the simulation's current time.

    Attributes:
        index: 1-based oscillator index.
        theta: Phase in [0, 1).
        plan: In-flight adjustment (null plan when idle).
        alg_state: Algorithm data (reachback accumulator).
        last_fire_time: Time of the last firing, None before the first one.
        last_adjust_time: Time of the last pulse-driven adjustment.
        generation: Bumped whenever scheduled events become stale.
    """
    index: int
    theta: float
    plan: AdjustmentPlan
    alg_state: AlgorithmState
    last_fire_time: Optional[float] = None
    last_adjust_time: float = 0.0
    generation: int = 0

    def omega(self, omega0: float) -> float:
        """Current evolution rate."""
        return self.plan.omega_i if self.plan.is_active else omega0


@dataclass(frozen=True)
class TraceSample:
    """Phases and evolution rates of every oscillator at one time."""
    time: float
    phases: Tuple[float, ...]
    omegas: Tuple[float, ...]


@dataclass
class Trace:
    """Recorded run.

    Attributes:
        n: Number of oscillators.
        horizon: Configured horizon.
        samples: Regular phase samples (strictly increasing times).
        firings: (time, oscillator) for every firing (non-decreasing times).
        couplings: Effective coupling of every finished adjustment.
        snapshots: Phases right after every firing instant.
        pulses_delivered: (time, count) for every firing instant.
        cycle_violations: (time, oscillator) firing twice in one cycle (theorem_check runs).
        end_time: Time the run stopped.
        stopped_early: True when the run stopped on synchronization.
    """
    n: int
    horizon: float
    samples: List[TraceSample] = field(default_factory=list)
    firings: List[Tuple[float, int]] = field(default_factory=list)
    couplings: List[CouplingRecord] = field(default_factory=list)
    snapshots: List[Tuple[float, Tuple[float, ...]]] = field(default_factory=list)
    pulses_delivered: List[Tuple[float, int]] = field(default_factory=list)
    cycle_violations: List[Tuple[float, int]] = field(default_factory=list)
    end_time: float = 0.0
    stopped_early: bool = False

    @property
    def initial_phases(self) -> Tuple[float, ...]:
        return self.samples[0].phases


@dataclass
class StepResult:
    """What one step did."""
    time: float
    fired: List[int] = field(default_factory=list)
    couplings: List[CouplingRecord] = field(default_factory=list)
    sampled: bool = False


def _largest_delay(cfg: SimConfig) -> float:
    """Largest phase delay a plan can ask for.

    Only the delay-advance PRC delays; pulses arriving together can stack up
    to the full phase, which is at most 1/2 in the delay region.
    """
    if not isinstance(cfg.algorithm, DelayAdvanceAlgorithm):
        return 0.0
    return 0.5


def time_to_threshold(osc: OscillatorState, omega0: float) -> Optional[float]:
    """Time until the oscillator's phase reaches 1.

    Solved piecewise: first the plan segment at omega_i, then omega0.

    Raises:
        SimulationError: If the plan drives the phase below zero.
    """
    theta = osc.theta
    active = osc.plan
    if theta >= 1.0:
        return 0.0
    if active.is_active:
        end = theta + active.omega_i * active.remaining
        if active.omega_i > 0 and end >= 1.0:
            return (1.0 - theta) / active.omega_i
        if end < -ZERO_CROSSING_TOLERANCE:
            raise SimulationError(
                f"oscillator {osc.index} would cross zero downwards "
                f"(theta={theta}, omega_i={active.omega_i}, remaining={active.remaining})"
            )
        if omega0 <= 0:
            return None
        return active.remaining + (1.0 - end) / omega0
    if omega0 <= 0:
        return None
    return (1.0 - theta) / omega0


class Simulation:
    """One simulation run, advanced event by event.

    Example:
        >>> simulation = Simulation(config)
        >>> while simulation.step() is not None:
        ...     pass
        >>> simulation.trace
    """

    def __init__(self, cfg: SimConfig) -> None:
        """Validate the configuration and set up oscillators at time 0.

        Raises:
            SimulationConfigError: For an invalid configuration.
            TopologyError: For a disconnected graph without override.
        """
        cfg.validate()
        self.cfg = cfg
        self.now = 0.0
        self.trace = Trace(n=cfg.n, horizon=cfg.horizon)
        self._logger = get_logger()
        self._queue = EventQueue()
        self._draw_alpha = (cfg.alpha_schedule or AlphaSchedule()).sampler(cfg.alpha)
        self._monitor = SyncMonitor(cfg.sync_tolerance, cfg.hold)
        self._fired_this_cycle: Set[int] = set()
        self._instant_alpha: Dict[int, float] = {}
        self._sample_index = 0
        self._finished = False

        omega0 = cfg.omega0
        self.oscillators: List[OscillatorState] = [
            OscillatorState(
                index=i,
                theta=theta,
                plan=AdjustmentPlan.null(omega0),
                alg_state=AlgorithmState(cfg.algorithm),
            )
            for i, theta in enumerate(cfg.initial.generate(cfg.n), start=1)
        ]
        if allows_negative_frequency(cfg.continuity, _largest_delay(cfg)):
            self._logger.warning(
                "negative_frequency_possible mode=%s omega0=%.4f",
                cfg.continuity.mode.value, omega0,
            )
        for osc in self.oscillators:
            self._schedule(osc)
        self._record_sample()
        self._monitor.observe(0.0, self.containing_arc())
        self._schedule_next_sample()
        self._logger.info(
            "simulation_initialized n=%d algorithm=%s mode=%s alpha=%.4f horizon=%.3f",
            cfg.n, cfg.algorithm.name, cfg.continuity.mode.value, cfg.alpha, cfg.horizon,
        )

    # ------------------------------------------------------------------
    # Observation
    # ------------------------------------------------------------------

    def phases(self) -> Tuple[float, ...]:
        return tuple(osc.theta for osc in self.oscillators)

    def containing_arc(self) -> float:
        return containing_arc(self.phases())

    @property
    def synced(self) -> bool:
        return self._monitor.synced

    # ------------------------------------------------------------------
    # Scheduling
    # ------------------------------------------------------------------

    def _schedule(self, osc: OscillatorState) -> None:
        osc.generation += 1
        dt = time_to_threshold(osc, self.cfg.omega0)
        if dt is not None:
            self._queue.push(Event(self.now + dt, EventKind.FIRE, osc.index, osc.generation))
        if osc.plan.is_active:
            self._queue.push(
                Event(self.now + osc.plan.remaining, EventKind.PLAN_EXPIRY, osc.index, osc.generation)
            )

    def _schedule_next_sample(self) -> None:
        self._sample_index += 1
        sample_time = self._sample_index * self.cfg.sample_dt
        if sample_time <= self.cfg.horizon + TIME_TOLERANCE:
            self._queue.push(Event(sample_time, EventKind.SAMPLE))

    def _is_current(self, event: Event) -> bool:
        if event.oscillator is None:
            return True
        return event.generation == self.oscillators[event.oscillator - 1].generation

    # ------------------------------------------------------------------
    # Stepping
    # ------------------------------------------------------------------

    def step(self) -> Optional[StepResult]:
        """Process the next instant. Returns None once the run is over.

        Raises:
            SimulationError: On non-monotone event times or a downward zero crossing.
        """
        if self._finished:
            return None
        upcoming = self._queue.peek()
        if upcoming is None or upcoming.time > self.cfg.horizon + TIME_TOLERANCE:
            self._finish(stopped_early=False)
            return None
        batch = self._queue.pop_batch(self._is_current)
        if not batch:
            self._finish(stopped_early=False)
            return None
        time = batch[0].time
        if time > self.cfg.horizon + TIME_TOLERANCE:
            self._finish(stopped_early=False)
            return None
        if time < self.now - TIME_TOLERANCE:
            raise SimulationError("event queue went back in time", time)

        self._advance_to(time)
        result = StepResult(time=time)
        touched: Set[int] = set()

        firers: Set[int] = set()
        for event in batch:
            if event.kind is EventKind.PLAN_EXPIRY and event.oscillator is not None:
                self._complete_plan(self.oscillators[event.oscillator - 1], result)
                touched.add(event.oscillator)
            elif event.kind is EventKind.FIRE and event.oscillator is not None:
                firers.add(event.oscillator)
        # rounding can leave an oscillator on the threshold just before its event
        firers.update(osc.index for osc in self.oscillators if osc.theta >= 1.0)

        if firers:
            self._firing_instant(sorted(firers), result, touched)
            self.trace.snapshots.append((time, self.phases()))

        for index in sorted(touched):
            self._schedule(self.oscillators[index - 1])

        if any(event.kind is EventKind.SAMPLE for event in batch):
            self._record_sample()
            self._schedule_next_sample()
            result.sampled = True

        if firers or result.sampled:
            if self._monitor.observe(time, self.containing_arc()) and self.cfg.stop_on_sync:
                self._logger.info("sync_detected time=%.6f sync_time=%.6f", time, self._monitor.sync_time)
                self._finish(stopped_early=True)
        return result

    def run(self) -> Trace:
        """Step until the horizon (or synchronization, with stop_on_sync)."""
        while self.step() is not None:
            pass
        return self.trace

    def _finish(self, stopped_early: bool) -> None:
        self._finished = True
        self.trace.stopped_early = stopped_early
        self.trace.end_time = self.now if stopped_early else self.cfg.horizon
        self._logger.info(
            "simulation_finished end_time=%.6f firings=%d couplings=%d stopped_early=%s",
            self.trace.end_time, len(self.trace.firings), len(self.trace.couplings), stopped_early,
        )

    def _advance_to(self, time: float) -> None:
        dt = time - self.now
        if dt < 0:
            dt = 0.0
        omega0 = self.cfg.omega0
        for osc in self.oscillators:
            theta = phase_at(osc.plan, osc.theta, dt, omega0)
            if theta < 0.0:
                if theta < -ZERO_CROSSING_TOLERANCE:
                    raise SimulationError(f"oscillator {osc.index} crossed zero downwards", time)
                theta = 0.0
            osc.theta = theta
            osc.plan = osc.plan.advanced(dt, omega0)
        self.now = time

    def _record_sample(self) -> None:
        omega0 = self.cfg.omega0
        self.trace.samples.append(TraceSample(
            time=self.now,
            phases=self.phases(),
            omegas=tuple(osc.omega(omega0) for osc in self.oscillators),
        ))

    # ------------------------------------------------------------------
    # Instant processing
    # ------------------------------------------------------------------

    def _firing_instant(self, firers: List[int], result: StepResult, touched: Set[int]) -> None:
        graph = self.cfg.graph
        fired: Set[int] = set()
        queued: Set[int] = set()
        delivered = 0
        self._instant_alpha.clear()
        round_firers = firers
        while round_firers:
            for index in round_firers:
                self._fire(self.oscillators[index - 1], result)
                fired.add(index)
                touched.add(index)
            inbox: Dict[int, List[int]] = {}
            for sender in round_firers:
                for recipient in graph.neighbors(sender):
                    inbox.setdefault(recipient, []).append(sender)
                    delivered += 1
            next_round: List[int] = []
            for recipient in sorted(inbox):
                for sender in sorted(inbox[recipient]):
                    if recipient in fired or recipient in queued:
                        continue
                    touched.add(recipient)
                    if self._receive(self.oscillators[recipient - 1], sender, result):
                        queued.add(recipient)
                        next_round.append(recipient)
            round_firers = sorted(next_round)
        self.trace.pulses_delivered.append((self.now, delivered))

    def _fire(self, osc: OscillatorState, result: StepResult) -> None:
        osc.theta = 0.0
        osc.last_fire_time = self.now
        self.trace.firings.append((self.now, osc.index))
        result.fired.append(osc.index)
        self._logger.debug("oscillator_fired index=%d time=%.9f", osc.index, self.now)
        if self.cfg.theorem_check:
            self._track_cycle(osc.index)
        if self.cfg.algorithm.reachback:
            phi, osc.alg_state.accumulator = rfa_flush(osc.alg_state.accumulator)
            if phi > 0.0 and self._apply(osc, phi, 1.0, result, reason="cancelled"):
                # already fired at this instant; keep the phase on the circle
                osc.theta = wrap_phase(osc.theta)
                self._logger.warning("reachback_jump_wrapped index=%d phi=%.6f", osc.index, phi)

    def _receive(self, osc: OscillatorState, sender: int, result: StepResult) -> bool:
        """Handle one pulse. Returns True when the recipient must fire now."""
        algorithm = self.cfg.algorithm
        if algorithm.reachback:
            osc.alg_state.accumulator = algorithm.record(osc.alg_state.accumulator, osc.theta)  # type: ignore[attr-defined]
            self._logger.debug(
                "pulse_recorded index=%d sender=%d pending=%.9f",
                osc.index, sender, osc.alg_state.accumulator.pending,
            )
            return False
        pending = self._unstarted_change(osc)
        theta = min(osc.theta + pending, 1.0)
        response = algorithm.respond(theta)
        if response.refractory:
            return False
        if response.absorb:
            self._logger.debug("pulse_absorbed index=%d sender=%d", osc.index, sender)
            return True
        alpha = 1.0 if algorithm.fixed_coupling else self._instant_alpha_for(osc.index)
        self._logger.debug(
            "pulse_received index=%d sender=%d theta=%.9f phi=%.9f alpha=%.4f",
            osc.index, sender, theta, response.phi, alpha,
        )
        return self._apply(osc, pending + alpha * response.phi, alpha, result)

    def _instant_alpha_for(self, index: int) -> float:
        if index not in self._instant_alpha:
            self._instant_alpha[index] = self._draw_alpha()
        return self._instant_alpha[index]

    def _unstarted_change(self, osc: OscillatorState) -> float:
        """Phase change planned at this very instant and not yet realized.

        Pulses arriving together are handled one after the other, each at the
        phase the previous ones lead to; in the continuous modes that phase
        is the target of the plan made a moment ago.
        """
        active = osc.plan
        if self.cfg.continuity.mode is ContinuityMode.JUMP or not active.is_active:
            return 0.0
        if self.now - active.started_at > 0.0:
            return 0.0
        return active.psi_total

    def _apply(
        self,
        osc: OscillatorState,
        psi: float,
        alpha: float,
        result: StepResult,
        reason: str = "interrupted",
    ) -> bool:
        """Realize psi through the continuity method. True if threshold was reached.

        A running plan is replaced; its record carries reason.
        """
        self._end_plan(osc, reason, result)
        new_plan, _ = replan(osc.plan, self.now - osc.plan.started_at, psi, self.cfg.continuity, self.now, alpha)
        previous_adjust = osc.last_adjust_time
        osc.last_adjust_time = self.now
        if self.cfg.continuity.mode is not ContinuityMode.JUMP:
            osc.plan = new_plan
            return False
        osc.plan = AdjustmentPlan.null(self.cfg.omega0, self.now)
        # t0 runs from the previous adjustment (or the start of the run); a
        # second jump at the same instant has t0 = 0 and is not recorded
        t0 = self.now - previous_adjust
        if psi != 0.0 and t0 > 0.0:
            self._log_coupling(CouplingRecord(
                oscillator=osc.index,
                fire_time=self.now,
                t0=t0,
                tau_i=0.0,
                alpha_effective=effective_coupling(t0, 0.0, alpha),
                alpha=alpha,
                reason="jump",
            ), result)
        theta = osc.theta + psi
        if theta < -ZERO_CROSSING_TOLERANCE:
            raise SimulationError(f"oscillator {osc.index} jumped below zero", self.now)
        osc.theta = max(theta, 0.0)
        return osc.theta >= 1.0

    def _end_plan(self, osc: OscillatorState, reason: str, result: StepResult) -> None:
        active = osc.plan
        if not active.is_active or active.psi_total == 0.0:
            return
        elapsed = min(self.now - active.started_at, active.duration)
        # superseded at the instant it was made: it never evolved
        if elapsed <= 0.0:
            return
        self._log_coupling(CouplingRecord(
            oscillator=osc.index,
            fire_time=self.now,
            t0=elapsed,
            tau_i=active.duration,
            alpha_effective=effective_coupling(elapsed, active.duration, active.alpha),
            alpha=active.alpha,
            reason=reason,
        ), result)

    def _complete_plan(self, osc: OscillatorState, result: StepResult) -> None:
        active = osc.plan
        if active.psi_total != 0.0 and active.duration > 0.0:
            self._log_coupling(CouplingRecord(
                oscillator=osc.index,
                fire_time=self.now,
                t0=active.duration,
                tau_i=active.duration,
                alpha_effective=effective_coupling(active.duration, active.duration, active.alpha),
                alpha=active.alpha,
                reason="completed",
            ), result)
        osc.plan = AdjustmentPlan.null(self.cfg.omega0, self.now)

    def _log_coupling(self, record: CouplingRecord, result: StepResult) -> None:
        self.trace.couplings.append(record)
        result.couplings.append(record)

    def _track_cycle(self, index: int) -> None:
        if index in self._fired_this_cycle:
            self.trace.cycle_violations.append((self.now, index))
            self._logger.warning("second_firing_in_cycle index=%d time=%.6f", index, self.now)
        self._fired_this_cycle.add(index)
        if len(self._fired_this_cycle) == self.cfg.n:
            self._fired_this_cycle.clear()


def init(cfg: SimConfig) -> Simulation:
    """Set up a simulation at time 0."""
    return Simulation(cfg)


def run(cfg: SimConfig) -> Trace:
    """Run a configuration to its horizon (or to synchronization)."""
    return Simulation(cfg).run()
