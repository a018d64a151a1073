from pathlib import Path

import pytest

from ..config import (
    ScenarioFileError,
    SweepSpec,
    build_config,
    load_document,
    parse_config,
    parse_sweep_template,
)
from ..continuity import ContinuityMode
from ..prc import DelayAdvanceAlgorithm, StateMapAlgorithm

MINIMAL = """\
algorithm: prc
n: 6
topology: all_to_all
alpha: 0.5
mode: jump
"""


def _write(tmp_path, text, name="scenario.yaml"):
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    return path


def test_minimal_file_is_valid(tmp_path):
    cfg, options = parse_config(_write(tmp_path, MINIMAL))
    assert cfg.n == 6
    assert isinstance(cfg.algorithm, DelayAdvanceAlgorithm)
    assert cfg.alpha == 0.5
    assert cfg.continuity.mode is ContinuityMode.JUMP
    assert cfg.omega0 == 1.0
    assert cfg.horizon == 60.0
    assert cfg.sample_dt == 0.01
    assert options.label == "scenario"
    assert options.output_dir is None
    assert options.write_plot


def test_alpha_outside_unit_interval_reports_line(tmp_path):
    path = _write(tmp_path, MINIMAL.replace("alpha: 0.5", "alpha: 1.5"))
    with pytest.raises(ScenarioFileError) as excinfo:
        parse_config(path)
    assert excinfo.value.line == 4
    assert excinfo.value.key == "alpha"
    assert f"{path}:4: alpha:" in str(excinfo.value)


def test_constant_frequency_requires_omega_a(tmp_path):
    path = _write(tmp_path, MINIMAL.replace("mode: jump", "mode: constant_frequency"))
    with pytest.raises(ScenarioFileError, match="requires omega_a") as excinfo:
        parse_config(path)
    assert excinfo.value.line == 5


def test_constant_time_requires_tau(tmp_path):
    with pytest.raises(ScenarioFileError, match="requires tau"):
        parse_config(_write(tmp_path, MINIMAL.replace("mode: jump", "mode: constant_time")))


def test_omega_a_is_relative_to_omega0(tmp_path):
    text = MINIMAL.replace("mode: jump", "mode: constant_frequency\nomega_a: 0.3\nomega0: 2.0")
    cfg, _ = parse_config(_write(tmp_path, text))
    assert cfg.continuity.omega_a_up == pytest.approx(0.6)
    assert cfg.continuity.omega_a_down == pytest.approx(0.6)
    assert cfg.continuity.omega0 == 2.0
    assert cfg.hold == 0.5


def test_asymmetric_offsets(tmp_path):
    text = MINIMAL.replace("mode: jump", "mode: constant_frequency\nomega_a_up: 0.5\nomega_a_down: 0.2")
    cfg, _ = parse_config(_write(tmp_path, text))
    assert cfg.continuity.omega_a_up == 0.5
    assert cfg.continuity.omega_a_down == 0.2


def test_unknown_key(tmp_path):
    with pytest.raises(ScenarioFileError) as excinfo:
        parse_config(_write(tmp_path, MINIMAL + "beta: 3\n"))
    assert excinfo.value.key == "beta"
    assert excinfo.value.line == 6


def test_duplicate_key(tmp_path):
    with pytest.raises(ScenarioFileError, match="duplicate key") as excinfo:
        parse_config(_write(tmp_path, MINIMAL + "n: 4\n"))
    assert excinfo.value.line == 6


def test_malformed_yaml_reports_line(tmp_path):
    with pytest.raises(ScenarioFileError, match="malformed YAML") as excinfo:
        parse_config(_write(tmp_path, "n: 6\nalpha: [0.5\n"))
    assert excinfo.value.line is not None


def test_document_must_be_mapping():
    with pytest.raises(ScenarioFileError):
        build_config(load_document("- 1\n- 2\n"))


def test_missing_file(tmp_path):
    with pytest.raises(ScenarioFileError, match="cannot read"):
        parse_config(tmp_path / "absent.yaml")


def test_missing_n():
    with pytest.raises(ScenarioFileError) as excinfo:
        build_config(load_document("algorithm: prc\n"))
    assert excinfo.value.key == "n"


def test_state_map_defaults_to_unit_coupling():
    cfg, _ = build_config(load_document("algorithm: peskin\nn: 4\nepsilon: 0.002\ngamma: 3\n"))
    assert isinstance(cfg.algorithm, StateMapAlgorithm)
    assert cfg.alpha == 1.0


def test_state_map_rejects_other_coupling():
    with pytest.raises(ScenarioFileError) as excinfo:
        build_config(load_document("algorithm: peskin\nn: 4\nepsilon: 0.002\ngamma: 3\nalpha: 0.5\n"))
    assert excinfo.value.key == "alpha"


def test_missing_algorithm_parameter():
    with pytest.raises(ScenarioFileError, match="requires gamma"):
        build_config(load_document("algorithm: peskin\nn: 4\nepsilon: 0.002\n"))


def test_explicit_edges_and_connectivity():
    text = "n: 3\ntopology: edges\nedges: [[1, 2], [2, 3]]\n"
    with pytest.raises(ScenarioFileError, match="strongly connected") as excinfo:
        build_config(load_document(text))
    assert excinfo.value.key == "topology"
    cfg, _ = build_config(load_document(text + "allow_disconnected: true\n"))
    assert cfg.graph.edges == [(1, 2), (2, 3)]


def test_edge_file_is_relative_to_scenario(tmp_path):
    (tmp_path / "ring.txt").write_text("1 2\n2 3\n3 1\n", encoding="utf-8")
    cfg, _ = parse_config(_write(tmp_path, "n: 3\ntopology: edges\nedge_file: ring.txt\n"))
    assert cfg.graph.neighbors(3) == (1,)


def test_theorem_check_rejects_wide_initial_phases():
    text = "n: 3\ninitial_phases: [0.0, 0.3, 0.6]\ntheorem_check: true\n"
    with pytest.raises(ScenarioFileError) as excinfo:
        build_config(load_document(text))
    assert excinfo.value.key == "initial_phases"


def test_overrides_and_label(tmp_path):
    path = _write(tmp_path, MINIMAL + "label: fig4\noutput_dir: somewhere\n", name="run.yaml")
    cfg, options = parse_config(path, seed=12, output_dir=tmp_path / "out")
    assert cfg.initial.seed == 12
    assert options.label == "fig4"
    assert options.output_dir == tmp_path / "out"
    _, default = parse_config(_write(tmp_path, MINIMAL, name="plain.yaml"))
    assert default.label == "plain"


def test_random_alpha_schedule():
    cfg, _ = build_config(load_document("n: 3\nalpha_schedule: random\nalpha_low: 0.1\nalpha_seed: 4\n"))
    assert cfg.alpha_schedule.kind == "random"
    assert cfg.alpha_schedule.low == 0.1
    assert cfg.alpha_schedule.seed == 4


def test_parse_config_rejects_sweep_section(tmp_path):
    with pytest.raises(ScenarioFileError, match="sweep"):
        parse_config(_write(tmp_path, MINIMAL + "sweep:\n  seeds: 2\n"))


# =============================================================================
# Sweep templates
# =============================================================================


def test_sweep_spec_points():
    spec = SweepSpec(grid={"omega_a": [0.1, 0.3], "alpha": [0.5, 1.0]}, seeds=(0, 1))
    assert spec.points() == [
        {"omega_a": 0.1, "alpha": 0.5},
        {"omega_a": 0.1, "alpha": 1.0},
        {"omega_a": 0.3, "alpha": 0.5},
        {"omega_a": 0.3, "alpha": 1.0},
    ]
    assert SweepSpec().points() == []


def test_parse_sweep_template(tmp_path):
    text = MINIMAL + "sweep:\n  grid:\n    omega_a: [0.1, 0.3, 0.9]\n  seeds: 20\n"
    template = parse_sweep_template(_write(tmp_path, text), base_seed=100)
    assert template.sweep.grid == {"omega_a": [0.1, 0.3, 0.9]}
    assert template.sweep.seeds == tuple(range(100, 120))
    assert "sweep" not in template.document.values
    assert template.document.line_of("sweep") == 6


def test_sweep_template_with_empty_grid(tmp_path):
    template = parse_sweep_template(_write(tmp_path, MINIMAL + "sweep:\n  grid: {}\n  seeds: [3, 5]\n"))
    assert template.sweep.points() == []
    assert template.sweep.seeds == (3, 5)


@pytest.mark.parametrize("section", [
    "sweep: 3\n",
    "sweep:\n  grid:\n    beta: [1]\n",
    "sweep:\n  grid:\n    alpha: []\n",
    "sweep:\n  seeds: 0\n",
    "sweep:\n  seeds: [a, b]\n",
    "sweep:\n  repeat: 2\n",
])
def test_malformed_sweep_sections(tmp_path, section):
    with pytest.raises(ScenarioFileError):
        parse_sweep_template(_write(tmp_path, MINIMAL + section))


def test_template_without_sweep(tmp_path):
    with pytest.raises(ScenarioFileError, match="needs a 'sweep' mapping"):
        parse_sweep_template(_write(tmp_path, MINIMAL))


CONFIG_DIR = Path(__file__).resolve().parent.parent / "configs"


@pytest.mark.parametrize("name", [
    "prc_all_to_all.yaml",
    "prc_ring_constant_time.yaml",
    "peskin.yaml",
    "directed_edges.yaml",
])
def test_shipped_scenarios_are_valid(name):
    cfg, options = parse_config(CONFIG_DIR / name)
    assert options.label == Path(name).stem
    cfg.validate()


def test_shipped_sweep_template_is_valid():
    template = parse_sweep_template(CONFIG_DIR / "omega_a_sweep.yaml")
    assert len(template.sweep.points()) * len(template.sweep.seeds) == 60
