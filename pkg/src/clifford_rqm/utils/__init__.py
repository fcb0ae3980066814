"""Configuration and logging helpers.

Example:
    >>> from clifford_rqm.utils import Settings
    >>> Settings.from_env().tolerance
    1e-10
"""

from .config import SUITE_DIR, TABLE_DIR, PresetName, Settings
from .logging import get_logger, level_from_name, setup_logging, setup_logging_from_env

__all__ = [
    "SUITE_DIR",
    "TABLE_DIR",
    "PresetName",
    "Settings",
    "get_logger",
    "level_from_name",
    "setup_logging",
    "setup_logging_from_env",
]
