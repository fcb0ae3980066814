"""Data models for verification suites."""

from __future__ import annotations

import uuid
from dataclasses import dataclass, field
from datetime import datetime
from enum import Enum
from typing import Any


class CheckKind(str, Enum):
    """What a suite check compares."""

    GOLDEN = "golden"
    APPROXIMATION = "approximation"
    GAMMAS = "gammas"
    DISPERSION = "dispersion"
    AGREEMENT = "agreement"


@dataclass
class GoldenCheck:
    """Compare one transcribed golden table with the computed representation."""

    file: str
    expected_errata: list[str] = field(default_factory=list)
    basic: str = "21"


@dataclass
class ApproximationCheck:
    """Compare the images of an approximate map with a printed table.

    ``table`` maps a basis label to ``"<prefactor> <entry>"``, for example
    ``"+i -s1"`` for (−i)σ1 or ``"+a +I"`` for aI; a single token is an
    entry with prefactor +1.
    """

    map: str
    kind: str
    table: dict[str, str]
    expected_errata: list[str] = field(default_factory=list)


@dataclass
class GammaCheck:
    """Clifford relations and the γ dictionary of a conjugate representation."""

    map: str = "r1"


@dataclass
class DispersionCheck:
    """Dispersion relation of one named system over a (p, m) grid."""

    system: str
    relation: str
    masses: list[float]
    momenta: list[str]
    expect_failure: bool = False


@dataclass
class AgreementCheck:
    """Spectra of several systems agree with a reference system on a grid."""

    reference: str
    systems: list[str]
    masses: list[float]
    momenta: list[str]
    tolerance: float = 1e-12


@dataclass
class VerificationSuite:
    """A collection of checks loaded from YAML."""

    name: str
    golden: list[GoldenCheck] = field(default_factory=list)
    approximations: list[ApproximationCheck] = field(default_factory=list)
    gammas: list[GammaCheck] = field(default_factory=list)
    dispersion: list[DispersionCheck] = field(default_factory=list)
    agreement: list[AgreementCheck] = field(default_factory=list)
    metadata: dict[str, Any] = field(default_factory=dict)

    @property
    def check_count(self) -> int:
        return (
            len(self.golden)
            + len(self.approximations)
            + len(self.gammas)
            + len(self.dispersion)
            + len(self.agreement)
        )


@dataclass
class CheckResult:
    """Outcome of a single check."""

    name: str
    kind: CheckKind
    passed: bool
    errata: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    detail: str = ""
    elapsed: float = 0.0


@dataclass
class SuiteRun:
    """A single execution of a verification suite."""

    suite: str
    tolerance: float
    id: str = field(default_factory=lambda: str(uuid.uuid4()))
    timestamp: datetime = field(default_factory=datetime.now)
    results: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(result.passed for result in self.results)

    @property
    def failures(self) -> list[CheckResult]:
        return [result for result in self.results if not result.passed]
