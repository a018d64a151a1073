"""Result files: CSV tables, plain-text reports and the plot script.

CSV files are UTF-8 with LF line endings and a header row. Floats are written
as the shortest decimal (at most 17 significant digits) that reads back to
the identical value, so parsing a file reproduces the in-memory values exactly.
"""

import csv
from pathlib import Path
from typing import Any, Iterable, List, Optional, Sequence, Tuple, Union

from .continuity import CouplingRecord
from .engine import Trace, TraceSample
from .metrics import ArcSeries, CouplingSummary, MonotonicityReport, SyncReport

PathLike = Union[str, Path]

PHASES_FILE = "phases.csv"
FIRINGS_FILE = "firings.csv"
ARC_FILE = "arc.csv"
COUPLING_FILE = "coupling.csv"
REPORT_FILE = "report.txt"
PLOT_FILE = "plot.py"

COUPLING_COLUMNS = ["oscillator", "fire_time", "t0", "tau_i", "alpha_effective", "alpha", "reason"]


def format_float(value: float) -> str:
    """Shortest decimal text that parses back to exactly the same float."""
    return repr(float(value))


def format_key_value_pairs(pairs: Sequence[Tuple[str, str]], separator: str = ": ") -> str:
    """Format key-value pairs one per line, keys padded to a common width.

    Example:
        >>> format_key_value_pairs([("synced", "True"), ("sync_time", "12.5")])
        'synced   : True\\nsync_time: 12.5'
    """
    if not pairs:
        return ""
    width = max(len(key) for key, _ in pairs)
    return "\n".join(f"{key.ljust(width)}{separator}{value}" for key, value in pairs)


def format_bullet_list(items: Sequence[str], bullet: str = "-") -> str:
    """Format items as a bullet list, or an empty string for no items."""
    if not items:
        return ""
    return "\n".join(f"{bullet} {item}" for item in items)


def write_csv(path: PathLike, header: Sequence[str], rows: Iterable[Sequence[Any]]) -> Path:
    """Write a CSV file. Float cells are written at full precision."""
    target = Path(path)
    with target.open("w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([format_float(cell) if isinstance(cell, float) else cell for cell in row])
    return target


def read_csv(path: PathLike) -> Tuple[List[str], List[List[str]]]:
    """Read a CSV file into its header and rows of strings."""
    with Path(path).open("r", encoding="utf-8", newline="") as handle:
        reader = csv.reader(handle)
        header = next(reader, [])
        return header, [row for row in reader]


# =============================================================================
# Trace tables
# =============================================================================


def phases_header(n: int) -> List[str]:
    return ["time"] + [f"theta_{i}" for i in range(1, n + 1)] + [f"omega_{i}" for i in range(1, n + 1)]


def write_phases_csv(path: PathLike, trace: Trace) -> Path:
    """time, theta_1..theta_N, omega_1..omega_N for every sample."""
    return write_csv(
        path,
        phases_header(trace.n),
        ([sample.time, *sample.phases, *sample.omegas] for sample in trace.samples),
    )


def read_phases_csv(path: PathLike) -> List[TraceSample]:
    """Read phases.csv back into samples.

    Raises:
        ValueError: If the header does not describe a phases table.
    """
    header, rows = read_csv(path)
    if not header or header[0] != "time" or (len(header) - 1) % 2:
        raise ValueError(f"{path}: not a phases table")
    n = (len(header) - 1) // 2
    if header != phases_header(n):
        raise ValueError(f"{path}: unexpected columns {header}")
    samples: List[TraceSample] = []
    for row in rows:
        values = [float(cell) for cell in row]
        samples.append(TraceSample(
            time=values[0],
            phases=tuple(values[1 : n + 1]),
            omegas=tuple(values[n + 1 :]),
        ))
    return samples


def write_firings_csv(path: PathLike, trace: Trace) -> Path:
    return write_csv(path, ["time", "oscillator"], trace.firings)


def write_arc_csv(path: PathLike, series: ArcSeries) -> Path:
    return write_csv(path, ["time", "lambda"], series.points)


def read_arc_csv(path: PathLike) -> ArcSeries:
    _, rows = read_csv(path)
    return ArcSeries.from_points([(float(t), float(v)) for t, v in rows])


def write_coupling_csv(path: PathLike, records: Sequence[CouplingRecord]) -> Path:
    return write_csv(
        path,
        COUPLING_COLUMNS,
        (
            [r.oscillator, r.fire_time, r.t0, r.tau_i, r.alpha_effective, r.alpha, r.reason]
            for r in records
        ),
    )


def write_prc_curves_csv(path: PathLike, grid: Sequence[float], curves: Sequence[Tuple[str, Sequence[float]]]) -> Path:
    """theta followed by one column per named curve."""
    return write_csv(
        path,
        ["theta"] + [name for name, _ in curves],
        ([float(theta), *(float(values[k]) for _, values in curves)] for k, theta in enumerate(grid)),
    )


# =============================================================================
# Report
# =============================================================================


def _optional(value: Optional[float]) -> str:
    return "none" if value is None else format_float(value)


def report_text(
    label: str,
    trace: Trace,
    description: Sequence[Tuple[str, str]],
    sync: SyncReport,
    monotonicity: MonotonicityReport,
    coupling: CouplingSummary,
) -> str:
    """Plain-text summary of one run."""
    run_pairs = list(description) + [
        ("end_time", format_float(trace.end_time)),
        ("stopped_early", str(trace.stopped_early)),
        ("firings", str(len(trace.firings))),
        ("pulses_delivered", str(sum(count for _, count in trace.pulses_delivered))),
    ]
    sync_pairs = [
        ("synced", str(sync.synced)),
        ("sync_time", _optional(sync.sync_time)),
        ("tolerance", format_float(sync.tolerance)),
        ("cycles_to_sync", "none" if sync.cycles_to_sync is None else str(sync.cycles_to_sync)),
    ]
    monotone_pairs = [
        ("monotone", str(monotonicity.monotone)),
        ("cycle_boundaries", str(len(monotonicity.boundaries))),
        ("violations", str(len(monotonicity.violations))),
    ]
    coupling_pairs = [
        ("records", str(coupling.count)),
        ("min_alpha_effective", _optional(coupling.min)),
        ("max_alpha_effective", _optional(coupling.max)),
        ("mean_alpha_effective", _optional(coupling.mean)),
        ("interrupted_fraction", _optional(coupling.interrupted_fraction)),
    ]
    sections = [
        f"# {label}",
        format_key_value_pairs(run_pairs),
        "\n[synchronization]",
        format_key_value_pairs(sync_pairs),
        "\n[cycle monotonicity]",
        format_key_value_pairs(monotone_pairs),
    ]
    if monotonicity.violations:
        sections.append(format_bullet_list([
            f"t={format_float(t)} arc {format_float(before)} -> {format_float(after)}"
            for t, before, after in monotonicity.violations
        ]))
    if trace.cycle_violations:
        sections.append("\n[second firings within a cycle]")
        sections.append(format_bullet_list([
            f"t={format_float(t)} oscillator {index}" for t, index in trace.cycle_violations
        ]))
    sections += ["\n[effective coupling]", format_key_value_pairs(coupling_pairs)]
    return "\n".join(sections) + "\n"


# =============================================================================
# Plot script
# =============================================================================


_PLOT_TEMPLATE = '''"""Phase evolution and containing arc of {label}.

Generated next to the CSV files it reads; run it from anywhere:
    python plot.py
"""

import csv
from pathlib import Path

import matplotlib.pyplot as plt

HERE = Path(__file__).resolve().parent


def read(name):
    with (HERE / name).open(encoding="utf-8", newline="") as handle:
        rows = list(csv.reader(handle))
    return rows[0], [[float(cell) for cell in row] for row in rows[1:]]


def main():
    header, phases = read("{phases}")
    n = (len(header) - 1) // 2
    _, arc = read("{arc}")

    fig, (top, bottom) = plt.subplots(2, 1, figsize=(8, 7), sharex=True)
    times = [row[0] for row in phases]
    for i in range(1, n + 1):
        top.plot(times, [row[i] for row in phases], lw=0.8, label=header[i])
    top.set_ylabel("phase")
    top.set_ylim(0.0, 1.0)
    top.set_title("{label}")
    if n <= 10:
        top.legend(loc="upper right", fontsize="small")

    bottom.plot([row[0] for row in arc], [row[1] for row in arc], color="black", lw=1.0)
    bottom.set_xlabel("time (s)")
    bottom.set_ylabel("containing arc")
    fig.tight_layout()
    fig.savefig(HERE / "plot.png", dpi=150)
    plt.show()


if __name__ == "__main__":
    main()
'''


def plot_script(label: str) -> str:
    """Source of a matplotlib script rendering phases.csv and arc.csv."""
    safe_label = label.replace("\\", "/").replace('"', "'")
    return _PLOT_TEMPLATE.format(label=safe_label, phases=PHASES_FILE, arc=ARC_FILE)
