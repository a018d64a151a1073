"""Typed, validated scenario settings.

This module provides:
- ConfigField: one scenario key with its type, default, parser and validator
- ConfigSchema: a named collection of fields that coerces raw mappings
"""

from typing import Any, Callable, Dict, Iterable, List, Optional, Sequence, Tuple, Union

from .validators import Validator, validate_choice

# Type aliases to avoid conflicts with the ConfigField factory methods
_Bool = bool
_Float = float
_Int = int
_Str = str


# =============================================================================
# Helper functions for factory methods
# =============================================================================


def _is_none_string(s: str) -> _Bool:
    """Check if a string spells None (none, null or empty)."""
    return s.strip().lower() in ("none", "null", "")


def _is_number(value: Any) -> _Bool:
    # YAML booleans are ints in Python; they never count as numbers here
    return isinstance(value, (int, float)) and not isinstance(value, _Bool)


class ConfigField:
    """One key of a scenario file.

    - `parse`: converts a raw value (as loaded from YAML, or a string from the
      command line) to the typed value, raising ValueError when it cannot
    - `validator`: optional function that receives the typed value and
      returns (is_valid, error_msg)

    Factory methods provide convenient constructors for common types:
    - ConfigField.float("alpha", 0.5, validator=validate_coupling)
    - ConfigField.int("n", None, min_val=1)
    - ConfigField.bool("theorem_check", False)
    - ConfigField.str("mode", "jump", choices=["jump", "constant_time"])
    - ConfigField.float_list("initial_phases", None)
    """

    def __init__(
        self,
        name: _Str,
        default: Any,
        parse: Callable[[Any], Any],
        validator: Optional[Validator] = None,
        description: _Str = "",
    ) -> None:
        """Initialize a field.

        Args:
            name: Key as written in the scenario file.
            default: Value used when the key is absent (None means unset).
            parse: Function converting a raw value to the typed value.
            validator: Optional function validating the typed value.
            description: One-line help text.
        """
        if not name:
            raise ValueError("ConfigField.name must be a non-empty string")
        self.name = name
        self.default = default
        self.parse = parse
        self.validator = validator
        self.description = description

    def validate(self, value: Any) -> Tuple[_Bool, _Str]:
        """Validate a typed value. Returns (is_valid, error_message)."""
        if value is None or self.validator is None:
            return True, ""
        return self.validator(value)

    def coerce(self, raw: Any) -> Any:
        """Parse and validate a raw value. Raises ValueError if invalid."""
        value = self.parse(raw)
        is_valid, error = self.validate(value)
        if not is_valid:
            raise ValueError(error)
        return value

    def __repr__(self) -> _Str:
        return f"ConfigField({self.name!r}, default={self.default!r})"

    # =========================================================================
    # Factory methods for common types
    # =========================================================================

    @classmethod
    def float(
        cls,
        name: _Str,
        default: Optional[_Float],
        *,
        validator: Optional[Validator] = None,
        description: _Str = "",
    ) -> "ConfigField":
        """Create a float field. Integers are accepted and widened.

        Examples:
            ConfigField.float("horizon", 60.0, validator=validate_non_negative)
            ConfigField.float("tau", None, validator=validate_positive)
        """
        def parse_float(raw: Any) -> Optional[float]:
            if raw is None:
                return None
            if isinstance(raw, _Str):
                if _is_none_string(raw):
                    return None
                return float(raw)
            if not _is_number(raw):
                raise ValueError(f"Expected a number, got {type(raw).__name__}")
            return float(raw)

        return cls(name, default, parse_float, validator, description)

    @classmethod
    def int(
        cls,
        name: _Str,
        default: Optional[_Int],
        *,
        min_val: Optional[_Int] = None,
        description: _Str = "",
    ) -> "ConfigField":
        """Create an int field with an optional lower bound.

        Examples:
            ConfigField.int("n", None, min_val=1)
            ConfigField.int("seed", 0)
        """
        def parse_int(raw: Any) -> Optional[int]:
            if raw is None:
                return None
            if isinstance(raw, _Str):
                if _is_none_string(raw):
                    return None
                return int(raw)
            if isinstance(raw, _Bool) or not isinstance(raw, int):
                raise ValueError(f"Expected an integer, got {type(raw).__name__}")
            return raw

        def validator(value: int) -> Tuple[_Bool, _Str]:
            if min_val is not None and value < min_val:
                return False, f"Must be >= {min_val}"
            return True, ""

        return cls(name, default, parse_int, validator, description)

    @classmethod
    def bool(
        cls,
        name: _Str,
        default: Optional[_Bool],
        *,
        description: _Str = "",
    ) -> "ConfigField":
        """Create a boolean field.

        Parses common boolean strings: true/false, yes/no, 1/0, on/off.

        Examples:
            ConfigField.bool("stop_on_sync", False)
        """
        def parse_bool(raw: Any) -> Optional[_Bool]:
            if raw is None:
                return None
            if isinstance(raw, _Bool):
                return raw
            if isinstance(raw, _Str):
                lowered = raw.strip().lower()
                if lowered in ("true", "yes", "1", "on"):
                    return True
                if lowered in ("false", "no", "0", "off"):
                    return False
            raise ValueError(f"Cannot parse {raw!r} as boolean")

        return cls(name, default, parse_bool, None, description)

    @classmethod
    def str(
        cls,
        name: _Str,
        default: Optional[_Str],
        *,
        choices: Optional[Sequence[_Str]] = None,
        description: _Str = "",
    ) -> "ConfigField":
        """Create a string field with optional choices validation.

        Examples:
            ConfigField.str("topology", "all_to_all", choices=["all_to_all", "ring", "edges"])
            ConfigField.str("label", None)
        """
        def parse_str(raw: Any) -> Optional[_Str]:
            if raw is None:
                return None
            if not isinstance(raw, _Str):
                raise ValueError(f"Expected a string, got {type(raw).__name__}")
            return raw.strip()

        validator = validate_choice(list(choices)) if choices is not None else None
        return cls(name, default, parse_str, validator, description)

    @classmethod
    def float_list(
        cls,
        name: _Str,
        default: Optional[List[_Float]],
        *,
        validator: Optional[Validator] = None,
        description: _Str = "",
    ) -> "ConfigField":
        """Create a field holding a list of numbers.

        Examples:
            ConfigField.float_list("initial_phases", None, validator=validate_phase_list)
        """
        def parse_list(raw: Any) -> Optional[List[float]]:
            if raw is None:
                return None
            if not isinstance(raw, (list, tuple)):
                raise ValueError(f"Expected a list of numbers, got {type(raw).__name__}")
            values: List[float] = []
            for position, item in enumerate(raw, start=1):
                if not _is_number(item):
                    raise ValueError(f"Entry {position} ({item!r}) is not a number")
                values.append(float(item))
            return values

        return cls(name, default, parse_list, validator, description)

    @classmethod
    def edge_list(cls, name: _Str, *, description: _Str = "") -> "ConfigField":
        """Create a field holding directed edges written as [i, j] pairs."""
        def parse_edges(raw: Any) -> Optional[List[Tuple[int, int]]]:
            if raw is None:
                return None
            if not isinstance(raw, (list, tuple)):
                raise ValueError(f"Expected a list of [i, j] pairs, got {type(raw).__name__}")
            edges: List[Tuple[int, int]] = []
            for position, item in enumerate(raw, start=1):
                if (
                    not isinstance(item, (list, tuple))
                    or len(item) != 2
                    or not all(isinstance(i, int) and not isinstance(i, _Bool) for i in item)
                ):
                    raise ValueError(f"Entry {position} ({item!r}) must be a pair of integers")
                edges.append((item[0], item[1]))
            return edges

        return cls(name, None, parse_edges, None, description)


class ConfigSchema:
    """Named collection of fields.

    Example:
        >>> schema = ConfigSchema([ConfigField.int("n", None, min_val=1)])
        >>> schema.coerce({"n": 6})
        {'n': 6}
    """

    def __init__(self, fields: Iterable[ConfigField]) -> None:
        """Store fields by name (fail fast on duplicates)."""
        mapping: Dict[_Str, ConfigField] = {}
        for config_field in fields:
            if not isinstance(config_field, ConfigField):
                raise TypeError("All fields must be ConfigField instances")
            if config_field.name in mapping:
                raise ValueError(f"Duplicate ConfigField name: {config_field.name}")
            mapping[config_field.name] = config_field
        self._fields = mapping

    @property
    def names(self) -> List[_Str]:
        return list(self._fields)

    def __contains__(self, name: object) -> _Bool:
        return name in self._fields

    def get(self, name: _Str) -> ConfigField:
        """Get a field by name (fail fast if missing)."""
        if name not in self._fields:
            raise KeyError(f"Unknown setting: {name}")
        return self._fields[name]

    def defaults(self) -> Dict[_Str, Any]:
        return {name: config_field.default for name, config_field in self._fields.items()}

    def coerce(self, raw: Dict[_Str, Any]) -> Dict[_Str, Any]:
        """Coerce every given key. Raises KeyError for unknown keys, ValueError for bad values."""
        values: Dict[_Str, Any] = {}
        for name, value in raw.items():
            values[name] = self.get(name).coerce(value)
        return values


def describe_fields(schema: ConfigSchema) -> List[Tuple[_Str, Union[_Str, None]]]:
    """(name, description) pairs, for help output."""
    return [(name, schema.get(name).description or None) for name in schema.names]
