"""Command line interface.

Usage:
    python -m pco_sync [--out-dir DIR] [--seed N] [--workers N] [--quiet | --verbose] COMMAND

Commands:
    run <config>       simulate one scenario file
    figures            run the built-in figure scenarios in all three modes
    sweep <template>   run a parameter sweep and write sweep.csv
    prc                tabulate the phase response curves

Exit codes: 0 on success, 2 for configuration errors, 1 for runtime errors.
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

from .accessors import get_logger
from .config import SCENARIO_SCHEMA, ScenarioFileError, parse_config, parse_sweep_template
from .engine import SimulationConfigError
from .events import SimulationError
from .phase import PhaseCorruptionError
from .prc import StateMapDomainError
from .runner import SWEEP_FILE, export_prc_curves, reproduce_figures, run_scenario, sweep
from .settings import describe_fields
from .topology import TopologyError

PROG = "pco_sync"
DEFAULT_OUT_DIR = Path("out")

EXIT_OK = 0
EXIT_RUNTIME_ERROR = 1
EXIT_CONFIG_ERROR = 2


def _keys_epilog() -> str:
    lines = ["scenario keys:"]
    for name, description in describe_fields(SCENARIO_SCHEMA):
        lines.append(f"  {name:<20} {description or ''}".rstrip())
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=PROG,
        description="Simulate pulse-coupled oscillator networks with continuous phase adjustment.",
    )
    parser.add_argument("--out-dir", type=Path, default=None,
                        help="output directory (overrides output_dir in scenario files)")
    parser.add_argument("--seed", type=int, default=None,
                        help="initial-phase seed (base seed for sweeps)")
    parser.add_argument("--workers", type=int, default=1,
                        help="worker processes for figures and sweeps (default: 1, inline)")
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument("--quiet", action="store_true", help="only log warnings and errors")
    verbosity.add_argument("--verbose", action="store_true", help="log every firing and reception")

    commands = parser.add_subparsers(dest="command", required=True)
    run_parser = commands.add_parser(
        "run",
        help="simulate one scenario file",
        epilog=_keys_epilog(),
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    run_parser.add_argument("config", type=Path, help="scenario file (YAML)")
    commands.add_parser("figures", help="run the built-in figure scenarios")
    sweep_parser = commands.add_parser("sweep", help="run a parameter sweep")
    sweep_parser.add_argument("template", type=Path, help="sweep template (YAML with a 'sweep' section)")
    prc_parser = commands.add_parser("prc", help="tabulate the phase response curves")
    prc_parser.add_argument("--points", type=int, default=201, help="grid points over [0, 1]")
    return parser


def configure_logging(quiet: bool, verbose: bool) -> None:
    level = logging.WARNING if quiet else logging.DEBUG if verbose else logging.INFO
    logging.basicConfig(
        level=level,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )


def _run(args: argparse.Namespace) -> None:
    cfg, options = parse_config(args.config, seed=args.seed, output_dir=args.out_dir)
    out_dir = options.output_dir or DEFAULT_OUT_DIR / options.label
    result = run_scenario(cfg, out_dir, label=options.label, write_plot=options.write_plot)
    sync = result.analysis.sync
    print(f"{options.label}: synced={sync.synced} sync_time={sync.sync_time} -> {out_dir}")


def _figures(args: argparse.Namespace) -> None:
    out_dir = args.out_dir or DEFAULT_OUT_DIR / "figures"
    results = reproduce_figures(out_dir, workers=args.workers)
    for result in results:
        sync = result.analysis.sync
        print(f"{result.label}: synced={sync.synced} sync_time={sync.sync_time}")
    print(f"{len(results)} output sets -> {out_dir}")


def _sweep(args: argparse.Namespace) -> None:
    template = parse_sweep_template(args.template, base_seed=args.seed)
    out_dir = args.out_dir or DEFAULT_OUT_DIR / args.template.stem
    path = sweep(template, out_dir / SWEEP_FILE, workers=args.workers)
    print(f"sweep -> {path}")


def _prc(args: argparse.Namespace) -> None:
    path = export_prc_curves(args.out_dir or DEFAULT_OUT_DIR, points=args.points)
    print(f"prc curves -> {path}")


COMMANDS = {
    "run": _run,
    "figures": _figures,
    "sweep": _sweep,
    "prc": _prc,
}


def main(argv: Optional[List[str]] = None) -> int:
    """Parse arguments, run the command and return the exit code."""
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.quiet, args.verbose)
    logger = get_logger()
    if args.workers < 1:
        parser.error("--workers must be at least 1")
    try:
        COMMANDS[args.command](args)
    except (ScenarioFileError, SimulationConfigError, TopologyError) as exc:
        print(f"{PROG}: configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG_ERROR
    except (SimulationError, PhaseCorruptionError, StateMapDomainError, OSError, ValueError) as exc:
        logger.debug("command_failed command=%s", args.command, exc_info=True)
        print(f"{PROG}: error: {exc}", file=sys.stderr)
        return EXIT_RUNTIME_ERROR
    return EXIT_OK
