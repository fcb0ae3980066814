"""Logging setup shared by the library, the suite runner and the CLI."""

from __future__ import annotations

import logging
import os
import sys
from typing import TextIO

LOGGER_NAME = "clifford_rqm"

DEFAULT_FORMAT = "%(asctime)s %(levelname)-7s %(name)s: %(message)s"
DEFAULT_DATE_FORMAT = "%H:%M:%S"


def get_logger(name: str | None = None) -> logging.Logger:
    """Return the package logger, or a child such as ``clifford_rqm.algebra``.

    Module code passes ``__name__``; a name already under the package prefix is
    used as is, anything else is nested below it.
    """
    if not name:
        return logging.getLogger(LOGGER_NAME)
    if name == LOGGER_NAME or name.startswith(f"{LOGGER_NAME}."):
        return logging.getLogger(name)
    return logging.getLogger(f"{LOGGER_NAME}.{name}")


def setup_logging(
    level: int = logging.INFO,
    format_string: str = DEFAULT_FORMAT,
    date_format: str = DEFAULT_DATE_FORMAT,
    stream: TextIO | None = None,
) -> logging.Logger:
    """Attach a stream handler to the package logger.

    Calling this twice only updates the level; handlers are never stacked.

    Args:
        level: Threshold for the package logger and its handler.
        format_string: Record format.
        date_format: Timestamp format.
        stream: Destination, stderr when omitted.

    Returns:
        The package logger.
    """
    logger = logging.getLogger(LOGGER_NAME)
    logger.setLevel(level)

    if logger.handlers:
        for handler in logger.handlers:
            handler.setLevel(level)
        return logger

    handler = logging.StreamHandler(stream or sys.stderr)
    handler.setLevel(level)
    handler.setFormatter(logging.Formatter(format_string, datefmt=date_format))
    logger.addHandler(handler)
    return logger


def level_from_name(level_name: str | None, default: int = logging.INFO) -> int:
    """Translate ``"debug"``/``"WARNING"``-style names; unknown names give ``default``."""
    if not level_name:
        return default
    level = logging.getLevelName(level_name.strip().upper())
    return level if isinstance(level, int) else default


def setup_logging_from_env() -> logging.Logger:
    """Configure the package logger from ``LOG_LEVEL`` (default INFO)."""
    return setup_logging(level=level_from_name(os.getenv("LOG_LEVEL")))
