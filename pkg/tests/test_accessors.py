import logging

from ..accessors import LOGGER_NAME, get_logger, set_logger


def test_default_logger_is_package_logger():
    assert get_logger().name == LOGGER_NAME


def test_injected_logger_is_used_until_reset():
    custom = logging.getLogger("embedding_app")
    set_logger(custom)
    try:
        assert get_logger() is custom
    finally:
        set_logger(None)
    assert get_logger().name == LOGGER_NAME
