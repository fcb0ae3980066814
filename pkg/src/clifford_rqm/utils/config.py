"""Runtime settings read from the environment."""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path

from clifford_rqm.exceptions import ConfigurationError

PACKAGE_ROOT = Path(__file__).resolve().parent.parent
TABLE_DIR = PACKAGE_ROOT / "tables"
SUITE_DIR = PACKAGE_ROOT / "shell" / "suites"

DEFAULT_TOLERANCE = 1e-10


class PresetName(str, Enum):
    """Built-in algebras with the basis orderings used by the packaged golden tables."""

    C3 = "c3"
    C4 = "c4"

    @classmethod
    def parse(cls, value: str) -> PresetName:
        try:
            return cls(value.strip().lower())
        except ValueError as e:
            choices = ", ".join(p.value for p in cls)
            raise ConfigurationError(f"unknown preset {value!r} (expected one of {choices})") from e


@dataclass(frozen=True)
class Settings:
    """Numeric tolerance and file locations.

    Attributes:
        tolerance: Absolute tolerance for dispersion defects and residuals.
        golden_dir: Directory holding the transcribed ``*.golden`` tables.
        report_dir: Where suite reports are written.
        log_level: Level name handed to the logging setup.
    """

    tolerance: float = DEFAULT_TOLERANCE
    golden_dir: Path = TABLE_DIR
    report_dir: Path = field(default_factory=lambda: Path("reports"))
    log_level: str = "INFO"

    @classmethod
    def from_env(cls) -> Settings:
        """Build settings from ``CLIFFORD_RQM_*`` variables and ``LOG_LEVEL``.

        Unset variables keep their defaults; a tolerance that is not a positive
        number raises ConfigurationError.
        """
        raw_tolerance = os.getenv("CLIFFORD_RQM_TOLERANCE")
        tolerance = DEFAULT_TOLERANCE
        if raw_tolerance:
            try:
                tolerance = float(raw_tolerance)
            except ValueError as e:
                raise ConfigurationError(
                    f"CLIFFORD_RQM_TOLERANCE must be a number, got {raw_tolerance!r}"
                ) from e
            if not tolerance > 0:
                raise ConfigurationError("CLIFFORD_RQM_TOLERANCE must be positive")

        golden_dir = os.getenv("CLIFFORD_RQM_GOLDEN_DIR")
        report_dir = os.getenv("CLIFFORD_RQM_REPORT_DIR")
        return cls(
            tolerance=tolerance,
            golden_dir=Path(golden_dir) if golden_dir else TABLE_DIR,
            report_dir=Path(report_dir) if report_dir else Path("reports"),
            log_level=os.getenv("LOG_LEVEL", "INFO"),
        )
