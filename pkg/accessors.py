"""Package-wide logger accessor.

This module exists as a separate module so every other module can fetch the
logger without importing the CLI or the runner. An embedding application may
inject its own logger with set_logger(); otherwise the "pco_sync" logger is used.
"""

import logging
from typing import Optional


LOGGER_NAME = "pco_sync"

# The injected logger, set by set_logger()
_logger: Optional[logging.Logger] = None


def set_logger(logger: Optional[logging.Logger]) -> None:
    """Inject the logger used by the package. Pass None to restore the default."""
    global _logger
    _logger = logger


def get_logger() -> logging.Logger:
    """Get the package logger."""
    if _logger is None:
        return logging.getLogger(LOGGER_NAME)
    return _logger
