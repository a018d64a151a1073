import math
from typing import List, Optional

import pytest

from ..settings import ConfigField, ConfigSchema, describe_fields
from ..validators import (
    validate_all,
    validate_choice,
    validate_coupling,
    validate_finite,
    validate_non_empty,
    validate_non_negative,
    validate_phase,
    validate_phase_list,
    validate_positive,
    validate_range,
)


# =============================================================================
# Validators
# =============================================================================


@pytest.mark.parametrize("validator, good, bad", [
    (validate_finite, 1.5, math.inf),
    (validate_positive, 0.1, 0.0),
    (validate_non_negative, 0.0, -0.1),
    (validate_coupling, 1.0, 0.0),
    (validate_coupling, 0.5, 1.5),
    (validate_phase, 0.0, 1.0),
    (validate_non_empty, "x", "  "),
])
def test_simple_validators(validator, good, bad):
    assert validator(good) == (True, "")
    is_valid, message = validator(bad)
    assert not is_valid
    assert message


def test_validate_phase_list_names_bad_entry():
    assert validate_phase_list([0.1, 0.5]) == (True, "")
    is_valid, message = validate_phase_list([0.1, 1.2])
    assert not is_valid
    assert "Entry 2" in message
    assert not validate_phase_list([])[0]


def test_validate_range_bounds():
    half_open = validate_range(0.0, 0.5, min_inclusive=False)
    assert not half_open(0.0)[0]
    assert half_open(0.5)[0]
    assert not half_open(0.6)[0]
    assert not half_open(math.nan)[0]
    assert "(0.0, 0.5]" in half_open(0.0)[1]
    unbounded = validate_range(min_val=1.0)
    assert unbounded(1e9)[0]


def test_validate_choice():
    validator = validate_choice(["jump", "constant_time"])
    assert validator("jump")[0]
    assert "constant_time" in validator("ramp")[1]


def test_validate_all_first_failure_wins():
    validator = validate_all(validate_finite, validate_coupling)
    assert validator(0.5) == (True, "")
    assert validator(math.nan) == validate_finite(math.nan)
    assert validator(2.0) == validate_coupling(2.0)


# =============================================================================
# ConfigField
# =============================================================================


def test_float_field_parses_numbers_and_strings():
    alpha = ConfigField.float("alpha", 0.5, validator=validate_coupling)
    assert alpha.coerce(1) == 1.0
    assert isinstance(alpha.coerce(1), float)
    assert alpha.coerce("0.25") == 0.25
    assert alpha.coerce("none") is None
    with pytest.raises(ValueError):
        alpha.coerce(1.5)
    with pytest.raises(ValueError):
        alpha.coerce(True)
    with pytest.raises(ValueError):
        alpha.coerce([0.5])


def test_int_field():
    n = ConfigField.int("n", None, min_val=1)
    assert n.coerce(6) == 6
    assert n.coerce("3") == 3
    with pytest.raises(ValueError, match=">= 1"):
        n.coerce(0)
    with pytest.raises(ValueError):
        n.coerce(2.5)
    with pytest.raises(ValueError):
        n.coerce(False)


@pytest.mark.parametrize("raw, expected", [
    (True, True), ("yes", True), ("on", True), ("0", False), ("False", False),
])
def test_bool_field(raw, expected):
    assert ConfigField.bool("stop_on_sync", False).coerce(raw) is expected


def test_bool_field_rejects_numbers():
    with pytest.raises(ValueError):
        ConfigField.bool("stop_on_sync", False).coerce(2)


def test_str_field_with_choices():
    mode = ConfigField.str("mode", "jump", choices=["jump", "constant_time"])
    assert mode.coerce(" jump ") == "jump"
    with pytest.raises(ValueError, match="Must be one of"):
        mode.coerce("ramp")
    with pytest.raises(ValueError):
        mode.coerce(3)


def test_float_list_field():
    phases = ConfigField.float_list("initial_phases", None, validator=validate_phase_list)
    assert phases.coerce([0, 0.5]) == [0.0, 0.5]
    with pytest.raises(ValueError, match="Entry 2"):
        phases.coerce([0.1, "x"])
    with pytest.raises(ValueError):
        phases.coerce(0.5)


def test_edge_list_field():
    edges = ConfigField.edge_list("edges")
    assert edges.coerce([[1, 2], (2, 1)]) == [(1, 2), (2, 1)]
    with pytest.raises(ValueError, match="Entry 1"):
        edges.coerce([[1, 2, 3]])
    with pytest.raises(ValueError):
        edges.coerce([[1, 2.5]])


@pytest.mark.parametrize("factory, parameter, expected", [
    (ConfigField.float, "default", Optional[float]),
    (ConfigField.int, "min_val", Optional[int]),
    (ConfigField.float_list, "default", Optional[List[float]]),
])
def test_factory_signatures_use_builtin_types(factory, parameter, expected):
    assert factory.__annotations__[parameter] == expected


def test_field_requires_name():
    with pytest.raises(ValueError):
        ConfigField("", None, float)


# =============================================================================
# ConfigSchema
# =============================================================================


def _schema():
    return ConfigSchema([
        ConfigField.int("n", None, min_val=1, description="Number of oscillators"),
        ConfigField.float("alpha", 0.5, validator=validate_coupling),
    ])


def test_schema_coerce_and_defaults():
    schema = _schema()
    assert schema.coerce({"n": 6, "alpha": "1"}) == {"n": 6, "alpha": 1.0}
    assert schema.defaults() == {"n": None, "alpha": 0.5}
    assert "n" in schema
    assert schema.names == ["n", "alpha"]


def test_schema_rejects_unknown_key():
    with pytest.raises(KeyError):
        _schema().coerce({"beta": 1})


def test_schema_rejects_duplicates():
    with pytest.raises(ValueError):
        ConfigSchema([ConfigField.int("n", None), ConfigField.int("n", 1)])
    with pytest.raises(TypeError):
        ConfigSchema(["n"])


def test_describe_fields():
    assert describe_fields(_schema()) == [("n", "Number of oscillators"), ("alpha", None)]
