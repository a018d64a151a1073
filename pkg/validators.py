"""Reusable validation functions for scenario settings.

All validators follow the pattern:
    validator(value) -> tuple[bool, str]
where the tuple contains (is_valid, error_message). They receive values that
have already been parsed into their Python type.

Example:
    from pco_sync.settings import ConfigField
    from pco_sync.validators import validate_coupling

    alpha = ConfigField.float("alpha", 0.5, validator=validate_coupling)
"""

import math
from typing import Any, Callable, Optional, Sequence, Tuple


# Type alias for validator functions
Validator = Callable[[Any], Tuple[bool, str]]


def validate_finite(value: float) -> Tuple[bool, str]:
    """Validate that a number is neither NaN nor infinite."""
    if not math.isfinite(value):
        return False, "Value must be a finite number."
    return True, ""


def validate_positive(value: float) -> Tuple[bool, str]:
    """Validate that a number is strictly positive and finite."""
    if not math.isfinite(value) or value <= 0:
        return False, "Value must be positive."
    return True, ""


def validate_non_negative(value: float) -> Tuple[bool, str]:
    """Validate that a number is zero or positive and finite."""
    if not math.isfinite(value) or value < 0:
        return False, "Value must be zero or positive."
    return True, ""


def validate_coupling(value: float) -> Tuple[bool, str]:
    """Validate a coupling strength, which lies in (0, 1]."""
    if not 0.0 < value <= 1.0:
        return False, "Value must be in (0, 1]."
    return True, ""


def validate_phase(value: float) -> Tuple[bool, str]:
    """Validate a phase, which lies in [0, 1)."""
    if not 0.0 <= value < 1.0:
        return False, "Value must be in [0, 1)."
    return True, ""


def validate_phase_list(values: Sequence[float]) -> Tuple[bool, str]:
    """Validate a non-empty list of phases."""
    if not values:
        return False, "List cannot be empty."
    for position, value in enumerate(values, start=1):
        if not 0.0 <= value < 1.0:
            return False, f"Entry {position} ({value}) must be in [0, 1)."
    return True, ""


def validate_range(
    min_val: Optional[float] = None,
    max_val: Optional[float] = None,
    *,
    min_inclusive: bool = True,
    max_inclusive: bool = True,
) -> Validator:
    """Create a validator for numbers within a range.

    Args:
        min_val: Lower bound, None for unbounded.
        max_val: Upper bound, None for unbounded.
        min_inclusive: Whether min_val itself is allowed.
        max_inclusive: Whether max_val itself is allowed.

    Returns:
        A validator function that checks the bounds.

    Example:
        validator = validate_range(0.0, 0.5, min_inclusive=False)
    """
    low = "[" if min_inclusive else "("
    high = "]" if max_inclusive else ")"
    interval = f"{low}{'-inf' if min_val is None else min_val}, {'inf' if max_val is None else max_val}{high}"

    def validator(value: float) -> Tuple[bool, str]:
        """Validate number is within the interval."""
        if math.isnan(value):
            return False, f"Value must be in {interval}."
        if min_val is not None and (value < min_val or (not min_inclusive and value == min_val)):
            return False, f"Value must be in {interval}."
        if max_val is not None and (value > max_val or (not max_inclusive and value == max_val)):
            return False, f"Value must be in {interval}."
        return True, ""
    return validator


def validate_choice(choices: Sequence[str]) -> Validator:
    """Create a validator accepting only the given strings.

    Example:
        validator = validate_choice(["jump", "constant_frequency", "constant_time"])
    """
    def validator(value: str) -> Tuple[bool, str]:
        """Validate string is one of the choices."""
        if value not in choices:
            return False, f"Must be one of: {', '.join(choices)}."
        return True, ""
    return validator


def validate_non_empty(value: str) -> Tuple[bool, str]:
    """Validate that a string is non-empty after stripping whitespace."""
    if not value.strip():
        return False, "Value cannot be empty."
    return True, ""


def validate_all(*validators: Validator) -> Validator:
    """Chain validators; the first failure wins."""
    def validator(value: Any) -> Tuple[bool, str]:
        for check in validators:
            is_valid, error = check(value)
            if not is_valid:
                return is_valid, error
        return True, ""
    return validator
