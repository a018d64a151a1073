"""pco-sync - A discrete-event simulator for pulse-coupled oscillator networks.

Oscillators evolve on the unit circle, fire at phase 1 and nudge their
neighbors through a pulse response algorithm (delay-advance PRC, Peskin,
Mirollo-Strogatz or reachback firefly). Phase changes are applied as jumps or
continuously, at a constant frequency offset or over a constant time.

Usage:
    from pco_sync import ContinuityConfig, SimConfig, all_to_all, create_algorithm, run
    from pco_sync import arc_series, sync_time

    cfg = SimConfig(
        graph=all_to_all(6),
        algorithm=create_algorithm("prc"),
        alpha=0.5,
        continuity=ContinuityConfig.symmetric("constant_frequency", omega_a=0.3),
    )
    trace = run(cfg)
    print(sync_time(arc_series(trace)))
"""

from .accessors import (
    get_logger,
    set_logger,
)
from .phase import (
    Phase,
    PhaseVector,
    PhaseCorruptionError,
    wrap_phase,
    gap,
    order_by_phase,
    cyclic_gaps,
    containing_arc,
)
from .prc import (
    PulseResponse,
    DelayAdvanceParams,
    StateMapParams,
    StateMapDomainError,
    StateCurve,
    PeskinCurve,
    MirolloStrogatzCurve,
    RfaCurve,
    RfaAccumulator,
    PulseAlgorithm,
    DelayAdvanceAlgorithm,
    StateMapAlgorithm,
    ReachbackAlgorithm,
    ALGORITHM_NAMES,
    prc_delay_advance,
    state_forward,
    state_inverse,
    state_map_jump,
    rfa_record,
    rfa_flush,
    create_algorithm,
    equivalent_prc,
)
from .continuity import (
    ContinuityMode,
    ContinuityConfig,
    AdjustmentPlan,
    CouplingRecord,
    plan,
    replan,
    realized_fraction,
    effective_coupling,
    phase_at,
    min_frequency,
    allows_negative_frequency,
)
from .topology import (
    Graph,
    TopologyError,
    from_edges,
    all_to_all,
    ring,
    is_strongly_connected,
    parse_edge_list,
    read_edge_list,
    random_strongly_connected,
)
from .events import (
    Event,
    EventKind,
    EventQueue,
    SimulationError,
)
from .engine import (
    SimConfig,
    SimulationConfigError,
    InitialPhases,
    AlphaSchedule,
    OscillatorState,
    Trace,
    TraceSample,
    Simulation,
    init,
    time_to_threshold,
    run,
)
from .metrics import (
    ArcSeries,
    SyncReport,
    SyncMonitor,
    MonotonicityReport,
    CouplingSummary,
    arc_series,
    sync_time,
    cycle_boundaries,
    cycle_monotonicity,
    coupling_summary,
)
from .settings import (
    ConfigField,
    ConfigSchema,
)
from .config import (
    ScenarioFileError,
    OutputOptions,
    SweepSpec,
    SweepTemplate,
    parse_config,
    parse_sweep_template,
)
from .runner import (
    RunResult,
    run_scenario,
    reproduce_figures,
    sweep,
    export_prc_curves,
)
from .scenarios import (
    FigureScenario,
    FIGURE_SCENARIOS,
    create_theorem_config,
)

__all__ = [
    # Logging
    "get_logger",
    "set_logger",
    # Phases
    "Phase",
    "PhaseVector",
    "PhaseCorruptionError",
    "wrap_phase",
    "gap",
    "order_by_phase",
    "cyclic_gaps",
    "containing_arc",
    # Pulse response algorithms
    "PulseResponse",
    "DelayAdvanceParams",
    "StateMapParams",
    "StateMapDomainError",
    "StateCurve",
    "PeskinCurve",
    "MirolloStrogatzCurve",
    "RfaCurve",
    "RfaAccumulator",
    "PulseAlgorithm",
    "DelayAdvanceAlgorithm",
    "StateMapAlgorithm",
    "ReachbackAlgorithm",
    "ALGORITHM_NAMES",
    "prc_delay_advance",
    "state_forward",
    "state_inverse",
    "state_map_jump",
    "rfa_record",
    "rfa_flush",
    "create_algorithm",
    "equivalent_prc",
    # Continuity
    "ContinuityMode",
    "ContinuityConfig",
    "AdjustmentPlan",
    "CouplingRecord",
    "plan",
    "replan",
    "realized_fraction",
    "effective_coupling",
    "phase_at",
    "min_frequency",
    "allows_negative_frequency",
    # Topology
    "Graph",
    "TopologyError",
    "from_edges",
    "all_to_all",
    "ring",
    "is_strongly_connected",
    "parse_edge_list",
    "read_edge_list",
    "random_strongly_connected",
    # Engine
    "Event",
    "EventKind",
    "EventQueue",
    "SimulationError",
    "SimConfig",
    "SimulationConfigError",
    "InitialPhases",
    "AlphaSchedule",
    "OscillatorState",
    "Trace",
    "TraceSample",
    "Simulation",
    "init",
    "time_to_threshold",
    "run",
    # Metrics
    "ArcSeries",
    "SyncReport",
    "SyncMonitor",
    "MonotonicityReport",
    "CouplingSummary",
    "arc_series",
    "sync_time",
    "cycle_boundaries",
    "cycle_monotonicity",
    "coupling_summary",
    # Scenario files
    "ConfigField",
    "ConfigSchema",
    "ScenarioFileError",
    "OutputOptions",
    "SweepSpec",
    "SweepTemplate",
    "parse_config",
    "parse_sweep_template",
    # Batch execution
    "RunResult",
    "run_scenario",
    "reproduce_figures",
    "sweep",
    "export_prc_curves",
    # Ready-made configurations
    "FigureScenario",
    "FIGURE_SCENARIOS",
    "create_theorem_config",
]
