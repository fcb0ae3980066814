"""Verification engine: golden tables, approximate maps, gammas and dispersion grids."""

from __future__ import annotations

import time
from collections.abc import Callable
from functools import cache

import numpy as np

from clifford_rqm.algebra.clifford import c4
from clifford_rqm.dispersion.spectrum import Momentum, check_dispersion, plane_wave_spectrum
from clifford_rqm.equations.lepton import (
    antilepton_assemble,
    assemble_free_lepton,
    decouple,
    generation_permute,
)
from clifford_rqm.equations.reductions import reduce_dirac, reduce_schrodinger
from clifford_rqm.equations.types import LinearPDESystem
from clifford_rqm.exceptions import CliffordError, ConfigurationError
from clifford_rqm.representations.approximate import approx_rep, correspondence_map, gamma_set
from clifford_rqm.representations.blocks import quaternion_units
from clifford_rqm.representations.matrices import ONE, UnitEntry, UnitMatrix
from clifford_rqm.representations.regular import (
    RegularRep,
    RepKind,
    conjugate_metric,
    regular_rep_conjugate,
    regular_rep_direct,
)
from clifford_rqm.representations.units import COMPLEX_ABI, REAL
from clifford_rqm.shell.verify import verify_golden_file
from clifford_rqm.utils.config import Settings
from clifford_rqm.utils.logging import get_logger

from .models import (
    AgreementCheck,
    ApproximationCheck,
    CheckKind,
    CheckResult,
    DispersionCheck,
    GammaCheck,
    GoldenCheck,
    SuiteRun,
    VerificationSuite,
)

logger = get_logger(__name__)


def _generation_sector(generation: int, sector: str) -> LinearPDESystem:
    decoupled = decouple(generation_permute(assemble_free_lepton(), generation))
    return decoupled.massive if sector == "massive" else decoupled.massless


SYSTEM_BUILDERS: dict[str, Callable[[], LinearPDESystem]] = {
    "free-lepton": assemble_free_lepton,
    "massive": lambda: decouple(assemble_free_lepton()).massive,
    "massless": lambda: decouple(assemble_free_lepton()).massless,
    "dirac": lambda: reduce_dirac(assemble_free_lepton()),
    "schrodinger": lambda: reduce_schrodinger(assemble_free_lepton()).system,
    "antilepton": antilepton_assemble,
    "antilepton-massive": lambda: decouple(antilepton_assemble()).massive,
    "antilepton-massless": lambda: decouple(antilepton_assemble()).massless,
    "antilepton-mirror": lambda: antilepton_assemble(impulse="mirror"),
    "antilepton-mirror-massive": lambda: decouple(antilepton_assemble(impulse="mirror")).massive,
    "gen2-massive": lambda: _generation_sector(2, "massive"),
    "gen3-massive": lambda: _generation_sector(3, "massive"),
    "gen2-massless": lambda: _generation_sector(2, "massless"),
    "gen3-massless": lambda: _generation_sector(3, "massless"),
}


@cache
def named_system(name: str) -> LinearPDESystem:
    """Build one of the preset systems by name (see ``SYSTEM_BUILDERS``).

    Raises:
        ConfigurationError: for an unknown name.
    """
    try:
        builder = SYSTEM_BUILDERS[name]
    except KeyError:
        raise ConfigurationError(
            f"unknown system {name!r} (known: {', '.join(SYSTEM_BUILDERS)})"
        ) from None
    return builder()


def parse_image(text: str, real_size: int, kind: RepKind) -> np.ndarray:
    """Real matrix of a printed image such as ``"+i -s1"``, ``"+a +I"`` or ``"-i"``."""
    tokens = text.split()
    if len(tokens) not in (1, 2):
        raise ConfigurationError(f"image {text!r} is '<prefactor> <entry>' or '<entry>'")
    prefactor = UnitEntry.parse(tokens[0]) if len(tokens) == 2 else ONE
    entry = UnitEntry.parse(tokens[-1])
    if prefactor is None or entry is None:
        raise ConfigurationError(f"image {text!r} cannot be zero")
    algebra = {1: REAL, 2: COMPLEX_ABI, 4: quaternion_units(kind)}.get(real_size)
    if algebra is None:
        raise ConfigurationError(f"no unit algebra for {real_size}x{real_size} images")
    return UnitMatrix(1, algebra, {(0, 0): entry}, prefactor).to_real()


def _base_rep(kind: RepKind) -> RegularRep:
    algebra = c4()
    return regular_rep_direct(algebra) if kind is RepKind.DIRECT else regular_rep_conjugate(algebra)


def run_golden_check(check: GoldenCheck, settings: Settings) -> CheckResult:
    report = verify_golden_file(settings.golden_dir / check.file, basic=check.basic)
    labels = report.labels
    for erratum in report.errata:
        logger.warning("%s: %s", check.file, erratum)
    return CheckResult(
        name=check.file,
        kind=CheckKind.GOLDEN,
        passed=sorted(labels) == sorted(check.expected_errata),
        errata=[str(e) for e in report.errata],
        notes=[str(n) for n in report.notes],
        detail=f"{len(report.errata)} cells differ in {len(labels)} matrices",
    )


def run_approximation_check(check: ApproximationCheck, settings: Settings) -> CheckResult:
    kind = RepKind.parse(check.kind)
    rep = approx_rep(_base_rep(kind), correspondence_map(check.map))
    errata = []
    for label, text in check.table.items():
        printed = parse_image(text, rep.size, kind)
        if not np.array_equal(rep.real(label), printed):
            errata.append(label)
            logger.warning("%s %s: image of %s differs from printed %s", check.map, kind.value, label, text)
    return CheckResult(
        name=f"{check.map}-{kind.value}",
        kind=CheckKind.APPROXIMATION,
        passed=sorted(errata) == sorted(check.expected_errata),
        errata=errata,
        detail=f"{len(check.table)} images compared",
    )


def run_gamma_check(check: GammaCheck, settings: Settings) -> CheckResult:
    rep = approx_rep(_base_rep(RepKind.CONJUGATE), correspondence_map(check.map))
    gammas = gamma_set(rep)
    squares = conjugate_metric(rep.algebra)
    problems = [f"{{γ{mu}, γ{nu}}} ≠ 2η" for mu, nu in gammas.clifford_defects()]
    problems += [f"𝓔^{i.target} ≠ {i.phase}·γ{i.word}" for i in gammas.dictionary_defects()]
    problems += [
        f"η{k} = {eta}, metric gives {-squares[rep.algebra.index(str(k))]}"
        for k, eta in gammas.eta.items()
        if eta != -squares[rep.algebra.index(str(k))]
    ]
    for problem in problems:
        logger.warning("gammas %s: %s", check.map, problem)
    return CheckResult(
        name=f"gammas-{check.map}",
        kind=CheckKind.GAMMAS,
        passed=not problems,
        errata=problems,
        detail="η = " + ", ".join(f"{k}:{v:+d}" for k, v in sorted(gammas.eta.items())),
    )


def run_dispersion_check(check: DispersionCheck, settings: Settings) -> CheckResult:
    report = check_dispersion(
        named_system(check.system),
        [Momentum.parse(p) for p in check.momenta],
        check.masses,
        check.relation,
        settings.tolerance,
    )
    failures = [
        f"p=({point.momentum}) m={point.mass:g}: defect {point.defect:.3e}" for point in report.failures
    ]
    if not check.expect_failure:
        for failure in failures:
            logger.warning("%s %s: %s", check.system, check.relation, failure)
    return CheckResult(
        name=f"{check.system}-{check.relation}",
        kind=CheckKind.DISPERSION,
        passed=report.passed != check.expect_failure,
        errata=failures,
        detail=f"{len(report.points)} grid points, max defect {report.max_defect:.3e}"
        + (" (failure expected)" if check.expect_failure else ""),
    )


def run_agreement_check(check: AgreementCheck, settings: Settings) -> CheckResult:
    reference = named_system(check.reference)
    worst = 0.0
    problems = []
    for mass in check.masses:
        for text in check.momenta:
            momentum = Momentum.parse(text)
            expected = plane_wave_spectrum(reference, momentum, mass).energies
            for name in check.systems:
                energies = plane_wave_spectrum(named_system(name), momentum, mass).energies
                if energies.shape != expected.shape:
                    problems.append(f"{name}: {energies.size} energies, reference has {expected.size}")
                    continue
                gap = float(np.max(np.abs(energies - expected)))
                worst = max(worst, gap)
                if gap >= check.tolerance:
                    problems.append(f"{name} at p=({momentum}) m={mass:g}: spectra differ by {gap:.3e}")
    for problem in problems:
        logger.warning("agreement with %s: %s", check.reference, problem)
    return CheckResult(
        name=f"agreement-{check.reference}",
        kind=CheckKind.AGREEMENT,
        passed=not problems,
        errata=problems,
        detail=f"{len(check.systems)} systems, max gap {worst:.3e}",
    )


def _run_one(runner: Callable[..., CheckResult], check: object, settings: Settings, kind: CheckKind) -> CheckResult:
    started = time.perf_counter()
    try:
        result = runner(check, settings)
    except CliffordError as e:
        logger.warning("%s check failed to run: %s", kind.value, e)
        result = CheckResult(name=getattr(check, "file", kind.value), kind=kind, passed=False, detail=str(e))
    result.elapsed = time.perf_counter() - started
    logger.info(
        "%s %s: %s (%.2fs)", kind.value, result.name, "pass" if result.passed else "FAIL", result.elapsed
    )
    return result


def run_suite(suite: VerificationSuite, settings: Settings | None = None) -> SuiteRun:
    """Run every check of ``suite`` in file order."""
    settings = settings or Settings.from_env()
    run = SuiteRun(suite=suite.name, tolerance=settings.tolerance)
    logger.info("Starting suite: %s (%d checks)", suite.name, suite.check_count)
    plan: list[tuple[Callable[..., CheckResult], list, CheckKind]] = [
        (run_golden_check, suite.golden, CheckKind.GOLDEN),
        (run_approximation_check, suite.approximations, CheckKind.APPROXIMATION),
        (run_gamma_check, suite.gammas, CheckKind.GAMMAS),
        (run_dispersion_check, suite.dispersion, CheckKind.DISPERSION),
        (run_agreement_check, suite.agreement, CheckKind.AGREEMENT),
    ]
    for runner, checks, kind in plan:
        for check in checks:
            run.results.append(_run_one(runner, check, settings, kind))
    logger.info("Suite %s: %d/%d passed", suite.name, len(run.results) - len(run.failures), len(run.results))
    return run
