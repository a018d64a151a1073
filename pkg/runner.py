"""Batch execution: single runs, the figure set, parameter sweeps and PRC tables.

Independent runs can be spread over worker processes. Jobs are fanned out as
asyncio tasks over a ProcessPoolExecutor and gathered in submission order,
so results never depend on the number of workers.
"""

import asyncio
import statistics
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple, TypeVar, Union

import numpy as np

from .accessors import get_logger
from .config import SweepTemplate, build_config
from .continuity import ContinuityMode
from .engine import SimConfig, Trace, run
from .metrics import (
    ArcSeries,
    CouplingSummary,
    MonotonicityReport,
    SyncReport,
    arc_series,
    coupling_summary,
    cycle_boundaries,
    cycle_monotonicity,
    sync_time,
)
from .output import (
    ARC_FILE,
    COUPLING_FILE,
    FIRINGS_FILE,
    PHASES_FILE,
    PLOT_FILE,
    REPORT_FILE,
    format_float,
    plot_script,
    report_text,
    write_arc_csv,
    write_coupling_csv,
    write_csv,
    write_firings_csv,
    write_phases_csv,
    write_prc_curves_csv,
)
from .prc import create_algorithm, equivalent_prc
from .scenarios import FIGURE_MODES, FIGURE_SCENARIOS
from .topology import describe

PathLike = Union[str, Path]
T = TypeVar("T")
R = TypeVar("R")

PRC_CURVES_FILE = "prc_curves.csv"
SWEEP_FILE = "sweep.csv"


@dataclass(frozen=True)
class Analysis:
    """Metrics of one trace."""
    series: ArcSeries
    sync: SyncReport
    monotonicity: MonotonicityReport
    coupling: CouplingSummary


@dataclass
class RunResult:
    """A finished run and the files it wrote."""
    label: str
    trace: Trace
    analysis: Analysis
    files: List[Path] = field(default_factory=list)


def analyze(trace: Trace, cfg: SimConfig) -> Analysis:
    """Containing-arc series, sync report, cycle monotonicity and coupling summary."""
    series = arc_series(trace)
    return Analysis(
        series=series,
        sync=sync_time(
            series, cfg.sync_tolerance, cfg.hold, boundaries=cycle_boundaries(trace.firings, trace.n),
        ),
        monotonicity=cycle_monotonicity(series, trace.firings, trace.n),
        coupling=coupling_summary(trace),
    )


def describe_config(cfg: SimConfig, label: str) -> List[Tuple[str, str]]:
    """Key facts of a configuration, for reports."""
    algorithm = cfg.algorithm
    pairs = [
        ("label", label),
        ("network", describe(cfg.graph)),
        ("algorithm", algorithm.name),
        ("alpha", format_float(cfg.alpha)),
        ("alpha_schedule", cfg.alpha_schedule.kind if cfg.alpha_schedule else "constant"),
        ("mode", cfg.continuity.mode.value),
        ("omega0", format_float(cfg.omega0)),
    ]
    if cfg.continuity.mode is ContinuityMode.CONSTANT_FREQUENCY:
        pairs.append(("omega_a_up", format_float(cfg.continuity.omega_a_up)))
        pairs.append(("omega_a_down", format_float(cfg.continuity.omega_a_down)))
    elif cfg.continuity.mode is ContinuityMode.CONSTANT_TIME:
        pairs.append(("tau", format_float(cfg.continuity.tau_fixed)))
    refractory = getattr(algorithm, "refractory", None)
    if refractory is not None:
        pairs.append(("refractory", format_float(refractory)))
    pairs += [
        ("horizon", format_float(cfg.horizon)),
        ("sample_dt", format_float(cfg.sample_dt)),
        ("theorem_check", str(cfg.theorem_check)),
    ]
    return pairs


def write_run(
    trace: Trace,
    cfg: SimConfig,
    out_dir: PathLike,
    *,
    label: str = "scenario",
    write_plot: bool = True,
) -> RunResult:
    """Write the CSV tables, report and plot script of a finished run.

    Raises:
        OSError: If the directory cannot be created or written.
    """
    directory = Path(out_dir)
    directory.mkdir(parents=True, exist_ok=True)
    analysis = analyze(trace, cfg)
    files = [
        write_phases_csv(directory / PHASES_FILE, trace),
        write_firings_csv(directory / FIRINGS_FILE, trace),
        write_arc_csv(directory / ARC_FILE, analysis.series),
        write_coupling_csv(directory / COUPLING_FILE, trace.couplings),
    ]
    report = directory / REPORT_FILE
    report.write_text(
        report_text(
            label, trace, describe_config(cfg, label), analysis.sync, analysis.monotonicity, analysis.coupling,
        ),
        encoding="utf-8",
    )
    files.append(report)
    if write_plot:
        script = directory / PLOT_FILE
        script.write_text(plot_script(label), encoding="utf-8")
        files.append(script)
    get_logger().info(
        "run_written label=%s dir=%s synced=%s sync_time=%s files=%d",
        label, directory, analysis.sync.synced, analysis.sync.sync_time, len(files),
    )
    return RunResult(label=label, trace=trace, analysis=analysis, files=files)


def run_scenario(
    cfg: SimConfig,
    out_dir: PathLike,
    *,
    label: str = "scenario",
    write_plot: bool = True,
) -> RunResult:
    """Simulate a configuration and write its output set into out_dir.

    Example:
        >>> cfg, options = parse_config("configs/prc_all_to_all.yaml")
        >>> result = run_scenario(cfg, "out/prc", label=options.label)
        >>> result.analysis.sync.synced
        True
    """
    return write_run(run(cfg), cfg, out_dir, label=label, write_plot=write_plot)


# =============================================================================
# Concurrent jobs
# =============================================================================


async def _gather_in_pool(function: Callable[[T], R], jobs: Sequence[T], workers: int) -> List[R]:
    loop = asyncio.get_running_loop()
    with ProcessPoolExecutor(max_workers=workers) as executor:
        tasks = [asyncio.ensure_future(loop.run_in_executor(executor, function, job)) for job in jobs]
        return list(await asyncio.gather(*tasks))


def run_jobs(function: Callable[[T], R], jobs: Sequence[T], workers: int = 1) -> List[R]:
    """Apply a picklable function to every job, in order.

    workers <= 1 runs inline; otherwise jobs run in that many processes.
    """
    if workers <= 1 or len(jobs) <= 1:
        return [function(job) for job in jobs]
    return asyncio.run(_gather_in_pool(function, jobs, workers))


# =============================================================================
# Figures
# =============================================================================


def reproduce_figures(out_dir: PathLike, *, workers: int = 1) -> List[RunResult]:
    """Run every built-in scenario in every continuity mode.

    Writes one output set per (scenario, mode) under out_dir/<scenario>/<mode>/.
    """
    root = Path(out_dir)
    jobs: List[Tuple[str, SimConfig]] = [
        (f"{scenario.name}/{mode.value}", scenario.config(mode))
        for scenario in FIGURE_SCENARIOS
        for mode in FIGURE_MODES
    ]
    logger = get_logger()
    logger.info("figures_started runs=%d workers=%d out_dir=%s", len(jobs), workers, root)
    traces = run_jobs(run, [cfg for _, cfg in jobs], workers)
    results = [
        write_run(trace, cfg, root / label, label=label)
        for (label, cfg), trace in zip(jobs, traces)
    ]
    for result in results:
        if not result.analysis.sync.synced:
            logger.warning("figure_not_synced label=%s final_arc=%.3e", result.label, result.analysis.series.final)
    return results


# =============================================================================
# Sweeps
# =============================================================================


@dataclass(frozen=True)
class SweepRow:
    """Outcome of one (parameter point, seed) run."""
    point: Dict[str, Any]
    seed: int
    synced: bool
    sync_time: Optional[float]
    min_alpha_effective: Optional[float]
    monotone: bool
    final_arc: float


def _sweep_job(job: Tuple[Dict[str, Any], int, SimConfig]) -> SweepRow:
    point, seed, cfg = job
    trace = run(cfg)
    analysis = analyze(trace, cfg)
    return SweepRow(
        point=point,
        seed=seed,
        synced=analysis.sync.synced,
        sync_time=analysis.sync.sync_time,
        min_alpha_effective=analysis.coupling.min,
        monotone=analysis.monotonicity.monotone,
        final_arc=analysis.series.final,
    )


def sweep_jobs(template: SweepTemplate) -> List[Tuple[Dict[str, Any], int, SimConfig]]:
    """One validated SimConfig per (grid point, seed), in row order.

    Raises:
        ScenarioFileError: If a grid point does not yield a valid configuration.
    """
    document = template.document
    sweep_line = document.line_of("sweep")
    jobs = []
    for point in template.sweep.points():
        point_document = document.with_values(point, line=sweep_line)
        for seed in template.sweep.seeds:
            cfg, _ = build_config(point_document, seed=seed)
            jobs.append((point, seed, cfg))
    return jobs


def sweep(template: SweepTemplate, out_path: PathLike, *, workers: int = 1) -> Path:
    """Run a sweep and write its summary CSV.

    Columns: the grid keys, seed, synced, sync_time, min_alpha_effective,
    monotone, final_arc. One row per (grid point, seed); an empty grid
    writes the header only.
    """
    keys = list(template.sweep.grid)
    jobs = sweep_jobs(template)
    logger = get_logger()
    logger.info("sweep_started points=%d seeds=%d workers=%d", len(template.sweep.points()), len(template.sweep.seeds), workers)
    rows = run_jobs(_sweep_job, jobs, workers)
    for row in rows:
        if not row.synced:
            logger.warning("sweep_point_not_synced point=%s seed=%d final_arc=%.3e", row.point, row.seed, row.final_arc)

    target = Path(out_path)
    target.parent.mkdir(parents=True, exist_ok=True)
    header = keys + ["seed", "synced", "sync_time", "min_alpha_effective", "monotone", "final_arc"]
    write_csv(target, header, (
        [*(row.point[key] for key in keys), row.seed, row.synced,
         "" if row.sync_time is None else row.sync_time,
         "" if row.min_alpha_effective is None else row.min_alpha_effective,
         row.monotone, row.final_arc]
        for row in rows
    ))
    logger.info("sweep_written path=%s rows=%d", target, len(rows))
    return target


def median_sync_times(rows: Sequence[SweepRow], key: str) -> Dict[Any, Optional[float]]:
    """Median sync time per value of one grid key, over synced rows."""
    grouped: Dict[Any, List[float]] = {}
    for row in rows:
        grouped.setdefault(row.point[key], [])
        if row.sync_time is not None:
            grouped[row.point[key]].append(row.sync_time)
    return {value: statistics.median(times) if times else None for value, times in grouped.items()}


# =============================================================================
# PRC tables
# =============================================================================


def export_prc_curves(
    out_dir: PathLike,
    *,
    points: int = 201,
    epsilon: float = 0.002,
    gamma: float = 3.0,
    b: float = 5.0,
) -> Path:
    """Tabulate the delay-advance PRC (D = 0 and D = 0.4) and the state-map equivalents.

    Writes out_dir/prc_curves.csv with columns theta, prc, prc_refractory,
    peskin, mirollo_strogatz, rfa.
    """
    if points < 2:
        raise ValueError(f"points must be at least 2, got {points}")
    directory = Path(out_dir)
    directory.mkdir(parents=True, exist_ok=True)
    grid = [float(theta) for theta in np.linspace(0.0, 1.0, points)]
    curves = [
        ("prc", equivalent_prc(grid, create_algorithm("prc"))),
        ("prc_refractory", equivalent_prc(grid, create_algorithm("prc", refractory=0.4))),
        ("peskin", equivalent_prc(grid, create_algorithm("peskin", epsilon=epsilon, gamma=gamma))),
        ("mirollo_strogatz", equivalent_prc(grid, create_algorithm("mirollo_strogatz", epsilon=epsilon, b=b))),
        ("rfa", equivalent_prc(grid, create_algorithm("rfa", epsilon=epsilon))),
    ]
    target = write_prc_curves_csv(directory / PRC_CURVES_FILE, grid, curves)
    get_logger().info("prc_curves_written path=%s points=%d", target, points)
    return target
