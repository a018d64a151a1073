"""Scenario files: YAML documents describing one simulation run.

A scenario file is a flat mapping of the keys declared in SCENARIO_SCHEMA.
Sweep templates add a `sweep:` mapping with a parameter `grid:` and `seeds:`.

Example:
    algorithm: prc
    n: 6
    topology: all_to_all
    alpha: 0.5
    mode: constant_frequency
    omega_a: 0.3        # multiple of omega0
    initial_arc: 0.45
    horizon: 60

Every error is raised as ScenarioFileError carrying the file, the line of the
offending key and the key itself.
"""

import itertools
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple, Union

import yaml

from .continuity import ContinuityConfig, ContinuityMode
from .engine import AlphaSchedule, InitialPhases, SimConfig, SimulationConfigError
from .prc import ALGORITHM_NAMES, create_algorithm
from .settings import ConfigField, ConfigSchema
from .topology import Graph, TopologyError, all_to_all, from_edges, read_edge_list, ring
from .validators import (
    validate_all,
    validate_coupling,
    validate_non_negative,
    validate_phase_list,
    validate_positive,
    validate_range,
)


TOPOLOGIES = ("all_to_all", "ring", "edges")
MODES = tuple(mode.value for mode in ContinuityMode)

SCENARIO_SCHEMA = ConfigSchema([
    ConfigField.int("n", None, min_val=1, description="number of oscillators"),
    ConfigField.str("topology", "all_to_all", choices=TOPOLOGIES, description="pulse delivery graph"),
    ConfigField.edge_list("edges", description="[i, j] pairs for topology: edges"),
    ConfigField.str("edge_file", None, description="edge-list file (one 'i j' per line)"),
    ConfigField.bool("allow_disconnected", False, description="run on graphs that are not strongly connected"),
    ConfigField.str("algorithm", "prc", choices=ALGORITHM_NAMES, description="pulse response algorithm"),
    ConfigField.float("refractory", 0.0, validator=validate_range(0.0, 1.0, max_inclusive=False),
                      description="refractory bound D of the delay-advance PRC"),
    ConfigField.float("epsilon", None, validator=validate_positive, description="state increment"),
    ConfigField.float("gamma", None, validator=validate_positive, description="Peskin dissipation"),
    ConfigField.float("b", None, validator=validate_positive, description="Mirollo-Strogatz concavity"),
    ConfigField.float("alpha", None, validator=validate_coupling, description="coupling strength in (0, 1]"),
    ConfigField.str("alpha_schedule", "constant", choices=("constant", "random"),
                    description="fixed alpha or a fresh draw per reception"),
    ConfigField.float("alpha_low", 0.05, validator=validate_range(0.0, 1.0, max_inclusive=False)),
    ConfigField.float("alpha_high", 1.0, validator=validate_coupling),
    ConfigField.int("alpha_seed", 0),
    ConfigField.str("mode", "jump", choices=MODES, description="continuity method"),
    ConfigField.float("omega_a", None, validator=validate_positive, description="frequency offset, in units of omega0"),
    ConfigField.float("omega_a_up", None, validator=validate_positive),
    ConfigField.float("omega_a_down", None, validator=validate_positive),
    ConfigField.float("tau", None, validator=validate_positive, description="adjustment duration in seconds"),
    ConfigField.float("omega0", 1.0, validator=validate_positive, description="fundamental frequency"),
    ConfigField.float_list("initial_phases", None, validator=validate_phase_list),
    ConfigField.int("seed", 0, description="seed of the random initial phases"),
    ConfigField.float("initial_arc", 0.45, validator=validate_range(0.0, 1.0, max_inclusive=False)),
    ConfigField.float("arc_offset", 0.0, validator=validate_range(0.0, 1.0, max_inclusive=False)),
    ConfigField.float("horizon", 60.0, validator=validate_non_negative, description="simulated seconds"),
    ConfigField.float("sample_dt", 0.01, validator=validate_positive),
    ConfigField.bool("theorem_check", False),
    ConfigField.float("arc_bound", 0.5, validator=validate_range(0.0, 0.5, min_inclusive=False)),
    ConfigField.bool("stop_on_sync", False),
    ConfigField.float("sync_tolerance", 1e-6, validator=validate_positive),
    ConfigField.float("sync_hold", None, validator=validate_non_negative),
    ConfigField.str("label", None),
    ConfigField.str("output_dir", None),
    ConfigField.bool("write_plot", True, description="emit plot.py next to the CSVs"),
])


class ScenarioFileError(ValueError):
    """Raised for unreadable, malformed or invalid scenario files."""

    def __init__(
        self,
        message: str,
        path: Optional[Union[str, Path]] = None,
        line: Optional[int] = None,
        key: Optional[str] = None,
    ) -> None:
        location = str(path) if path is not None else "<scenario>"
        if line is not None:
            location = f"{location}:{line}"
        subject = f" {key}:" if key else ""
        super().__init__(f"{location}:{subject} {message}")
        self.path = path
        self.line = line
        self.key = key


@dataclass(frozen=True)
class OutputOptions:
    """Where and how a run's files are written."""
    output_dir: Optional[Path] = None
    label: str = "scenario"
    write_plot: bool = True


@dataclass(frozen=True)
class SweepSpec:
    """Parameter grid and seeds of a sweep template.

    Attributes:
        grid: Key -> values; points are the cartesian product in key order.
        seeds: Initial-phase seeds run at every point.
    """
    grid: Dict[str, List[Any]] = field(default_factory=dict)
    seeds: Tuple[int, ...] = (0,)

    def points(self) -> List[Dict[str, Any]]:
        """Grid points in row order. An empty grid has no points."""
        if not self.grid:
            return []
        keys = list(self.grid)
        return [dict(zip(keys, combination)) for combination in itertools.product(*self.grid.values())]


@dataclass(frozen=True)
class ScenarioDocument:
    """Raw scenario values with the line each key was written on."""
    values: Dict[str, Any]
    lines: Dict[str, int]
    path: Optional[Path] = None

    def line_of(self, key: str) -> Optional[int]:
        return self.lines.get(key)

    def error(self, message: str, key: Optional[str] = None) -> ScenarioFileError:
        return ScenarioFileError(message, self.path, self.line_of(key) if key else None, key)

    def with_values(self, overrides: Dict[str, Any], line: Optional[int] = None) -> "ScenarioDocument":
        """Copy with keys overridden; overridden keys report the given line."""
        lines = dict(self.lines)
        for key in overrides:
            if line is not None:
                lines[key] = line
        return replace(self, values={**self.values, **overrides}, lines=lines)


@dataclass(frozen=True)
class SweepTemplate:
    """A scenario document plus its sweep section."""
    document: ScenarioDocument
    sweep: SweepSpec


# =============================================================================
# Loading
# =============================================================================


def load_document(text: str, path: Optional[Union[str, Path]] = None) -> ScenarioDocument:
    """Parse YAML text into a ScenarioDocument.

    Raises:
        ScenarioFileError: For malformed YAML, a non-mapping document or duplicate keys.
    """
    source = Path(path) if path is not None else None
    try:
        root = yaml.compose(text, Loader=yaml.SafeLoader)
        data = yaml.safe_load(text)
    except yaml.YAMLError as exc:
        mark = getattr(exc, "problem_mark", None)
        line = mark.line + 1 if mark is not None else None
        raise ScenarioFileError(f"malformed YAML ({getattr(exc, 'problem', None) or exc})", source, line)
    if root is None:
        return ScenarioDocument(values={}, lines={}, path=source)
    if not isinstance(root, yaml.MappingNode) or not isinstance(data, dict):
        raise ScenarioFileError("the document must be a mapping of settings", source, root.start_mark.line + 1)
    lines: Dict[str, int] = {}
    for key_node, _ in root.value:
        key = str(key_node.value)
        if key in lines:
            raise ScenarioFileError("duplicate key", source, key_node.start_mark.line + 1, key)
        lines[key] = key_node.start_mark.line + 1
    return ScenarioDocument(values={str(k): v for k, v in data.items()}, lines=lines, path=source)


def read_document(path: Union[str, Path]) -> ScenarioDocument:
    """Read and parse a scenario file.

    Raises:
        ScenarioFileError: If the file cannot be read or parsed.
    """
    source = Path(path)
    try:
        text = source.read_text(encoding="utf-8")
    except OSError as exc:
        raise ScenarioFileError(f"cannot read file ({exc.strerror or exc})", source)
    return load_document(text, source)


# =============================================================================
# Building
# =============================================================================


def _coerce(document: ScenarioDocument) -> Dict[str, Any]:
    values = SCENARIO_SCHEMA.defaults()
    for key, raw in document.values.items():
        if key == "sweep":
            continue
        if key not in SCENARIO_SCHEMA:
            raise document.error("unknown key", key)
        try:
            values[key] = SCENARIO_SCHEMA.get(key).coerce(raw)
        except (TypeError, ValueError) as exc:
            raise document.error(str(exc), key)
    return values


def _build_graph(document: ScenarioDocument, values: Dict[str, Any]) -> Graph:
    n = values["n"]
    if n is None:
        raise document.error("required key is missing", "n")
    topology = values["topology"]
    try:
        if topology == "all_to_all":
            return all_to_all(n)
        if topology == "ring":
            return ring(n)
        if values["edges"] is not None:
            return from_edges(n, values["edges"])
        if values["edge_file"] is not None:
            edge_path = Path(values["edge_file"])
            if not edge_path.is_absolute() and document.path is not None:
                edge_path = document.path.parent / edge_path
            return from_edges(n, read_edge_list(edge_path))
    except TopologyError as exc:
        key = "topology" if topology != "edges" else ("edges" if values["edges"] is not None else "edge_file")
        raise document.error(str(exc), key)
    except OSError as exc:
        raise document.error(f"cannot read edge file ({exc.strerror or exc})", "edge_file")
    raise document.error("topology 'edges' needs 'edges' or 'edge_file'", "topology")


def _build_continuity(document: ScenarioDocument, values: Dict[str, Any]) -> ContinuityConfig:
    mode = ContinuityMode(values["mode"])
    omega0 = values["omega0"]
    omega_a = values["omega_a"]
    up = values["omega_a_up"] if values["omega_a_up"] is not None else omega_a
    down = values["omega_a_down"] if values["omega_a_down"] is not None else omega_a
    tau = values["tau"]
    if mode is ContinuityMode.CONSTANT_FREQUENCY and (up is None or down is None):
        raise document.error("mode constant_frequency requires omega_a (or omega_a_up and omega_a_down)", "mode")
    if mode is ContinuityMode.CONSTANT_TIME and tau is None:
        raise document.error("mode constant_time requires tau", "mode")
    defaults = ContinuityConfig()
    return ContinuityConfig(
        mode=mode,
        omega_a_up=up * omega0 if up is not None else defaults.omega_a_up * omega0,
        omega_a_down=down * omega0 if down is not None else defaults.omega_a_down * omega0,
        tau_fixed=tau if tau is not None else defaults.tau_fixed,
        omega0=omega0,
    )


def build_config(
    document: ScenarioDocument,
    *,
    seed: Optional[int] = None,
    output_dir: Optional[Union[str, Path]] = None,
) -> Tuple[SimConfig, OutputOptions]:
    """Turn a scenario document into a validated SimConfig and output options.

    Args:
        document: Parsed scenario.
        seed: Overrides the initial-phase seed.
        output_dir: Overrides the output directory.

    Raises:
        ScenarioFileError: For unknown keys, invalid values or invalid combinations.
    """
    values = _coerce(document)
    graph = _build_graph(document, values)

    name = values["algorithm"]
    try:
        algorithm = create_algorithm(
            name,
            refractory=values["refractory"],
            epsilon=values["epsilon"],
            gamma=values["gamma"],
            b=values["b"],
        )
    except ValueError as exc:
        raise document.error(str(exc), "algorithm")

    alpha = values["alpha"]
    if alpha is None:
        alpha = 1.0 if algorithm.fixed_coupling else 0.5

    schedule = None
    if values["alpha_schedule"] == "random":
        try:
            schedule = AlphaSchedule(
                kind="random", low=values["alpha_low"], high=values["alpha_high"], seed=values["alpha_seed"],
            )
        except SimulationConfigError as exc:
            raise document.error(str(exc), "alpha_schedule")

    if values["initial_phases"] is not None:
        initial = InitialPhases(phases=tuple(values["initial_phases"]))
    else:
        initial = InitialPhases(
            seed=seed if seed is not None else values["seed"],
            arc_length=values["initial_arc"],
            arc_offset=values["arc_offset"],
        )

    cfg = SimConfig(
        graph=graph,
        algorithm=algorithm,
        alpha=alpha,
        continuity=_build_continuity(document, values),
        initial=initial,
        horizon=values["horizon"],
        sample_dt=values["sample_dt"],
        alpha_schedule=schedule,
        theorem_check=values["theorem_check"],
        arc_bound=values["arc_bound"],
        allow_disconnected=values["allow_disconnected"],
        stop_on_sync=values["stop_on_sync"],
        sync_tolerance=values["sync_tolerance"],
        sync_hold=values["sync_hold"],
    )
    try:
        cfg.validate()
    except (SimulationConfigError, TopologyError) as exc:
        raise document.error(str(exc), _blame(str(exc), document))

    directory = output_dir if output_dir is not None else values["output_dir"]
    label = values["label"] or (document.path.stem if document.path is not None else "scenario")
    options = OutputOptions(
        output_dir=Path(directory) if directory is not None else None,
        label=label,
        write_plot=values["write_plot"],
    )
    return cfg, options


_BLAME = (
    ("strongly connected", ("topology",)),
    ("theorem_check", ("theorem_check",)),
    ("initial containing arc", ("initial_phases", "initial_arc")),
    ("initial phase", ("initial_phases",)),
    ("initial arc", ("initial_arc",)),
    ("arc_bound", ("arc_bound",)),
    ("refractory", ("refractory",)),
    ("alpha", ("alpha", "algorithm")),
    ("horizon", ("horizon",)),
    ("sample_dt", ("sample_dt",)),
    ("sync_", ("sync_tolerance", "sync_hold")),
)


def _blame(message: str, document: ScenarioDocument) -> Optional[str]:
    """Best guess at the key a SimConfig error is about."""
    for fragment, keys in _BLAME:
        if fragment in message:
            for key in keys:
                if key in document.values:
                    return key
            return keys[0]
    return None


def parse_config(
    path: Union[str, Path],
    *,
    seed: Optional[int] = None,
    output_dir: Optional[Union[str, Path]] = None,
) -> Tuple[SimConfig, OutputOptions]:
    """Read a scenario file into a validated SimConfig plus output options.

    Example:
        >>> cfg, options = parse_config("configs/prc_all_to_all.yaml")

    Raises:
        ScenarioFileError: If the file cannot be read, parsed or validated.
    """
    document = read_document(path)
    if "sweep" in document.values:
        raise document.error("sweep sections belong in sweep templates", "sweep")
    return build_config(document, seed=seed, output_dir=output_dir)


def parse_sweep_template(path: Union[str, Path], *, base_seed: Optional[int] = None) -> SweepTemplate:
    """Read a sweep template: a scenario plus `sweep: {grid: ..., seeds: ...}`.

    `seeds` is either a count (seeds base_seed .. base_seed + count - 1) or an
    explicit list. Grid keys must be scenario keys.

    Raises:
        ScenarioFileError: For a missing or malformed sweep section.
    """
    document = read_document(path)
    raw = document.values.get("sweep")
    if not isinstance(raw, dict):
        raise document.error("a sweep template needs a 'sweep' mapping", "sweep")
    unknown = set(raw) - {"grid", "seeds"}
    if unknown:
        raise document.error(f"unknown sweep keys: {', '.join(sorted(map(str, unknown)))}", "sweep")

    grid_raw = raw.get("grid") or {}
    if not isinstance(grid_raw, dict):
        raise document.error("'grid' must map scenario keys to lists of values", "sweep")
    grid: Dict[str, List[Any]] = {}
    for key, candidates in grid_raw.items():
        if key not in SCENARIO_SCHEMA or key == "sweep":
            raise document.error(f"grid key {key!r} is not a scenario key", "sweep")
        if not isinstance(candidates, list) or not candidates:
            raise document.error(f"grid values for {key!r} must be a non-empty list", "sweep")
        grid[str(key)] = candidates

    seeds_raw = raw.get("seeds", 1)
    base = base_seed if base_seed is not None else 0
    if isinstance(seeds_raw, int) and not isinstance(seeds_raw, bool):
        if seeds_raw < 1:
            raise document.error("'seeds' must be a positive count or a list", "sweep")
        seeds = tuple(range(base, base + seeds_raw))
    elif isinstance(seeds_raw, list) and all(isinstance(s, int) and not isinstance(s, bool) for s in seeds_raw):
        seeds = tuple(seeds_raw)
    else:
        raise document.error("'seeds' must be a positive count or a list of integers", "sweep")

    values = {k: v for k, v in document.values.items() if k != "sweep"}
    return SweepTemplate(document=replace(document, values=values), sweep=SweepSpec(grid=grid, seeds=seeds))
