"""YAML verification suite loader and validation."""

from __future__ import annotations

from pathlib import Path
from typing import Any

import yaml

from clifford_rqm.exceptions import CliffordError

from .models import (
    AgreementCheck,
    ApproximationCheck,
    DispersionCheck,
    GammaCheck,
    GoldenCheck,
    VerificationSuite,
)

RELATIONS = ("massive", "massless")
KINDS = ("direct", "conjugate")
MAPS = ("r1", "r2", "r3")


class ValidationError(CliffordError):
    """Raised when a YAML suite definition is invalid."""


def load_suite(path: str | Path) -> VerificationSuite:
    """Load a suite from a YAML file or a directory of YAML files.

    Raises:
        FileNotFoundError: If path does not exist.
        ValidationError: If the YAML structure is invalid.
    """
    p = Path(path)
    if not p.exists():
        raise FileNotFoundError(f"Suite path not found: {path}")
    if p.is_file():
        return _load_single_file(p)
    if p.is_dir():
        return _load_directory(p)
    raise ValidationError(f"Path is neither a file nor directory: {path}")


def _load_directory(directory: Path) -> VerificationSuite:
    """Load and merge all YAML files in a directory."""
    yaml_files = sorted(directory.glob("*.yaml")) + sorted(directory.glob("*.yml"))
    if not yaml_files:
        raise ValidationError(f"No YAML files found in directory: {directory}")

    merged = VerificationSuite(name=directory.name)
    for yaml_file in yaml_files:
        suite = _load_single_file(yaml_file)
        merged.golden.extend(suite.golden)
        merged.approximations.extend(suite.approximations)
        merged.gammas.extend(suite.gammas)
        merged.dispersion.extend(suite.dispersion)
        merged.agreement.extend(suite.agreement)
        merged.metadata.update(suite.metadata)
        if suite.name != "unnamed":
            merged.name = suite.name
    return merged


def _load_single_file(filepath: Path) -> VerificationSuite:
    try:
        with open(filepath, encoding="utf-8") as f:
            data = yaml.safe_load(f)
    except yaml.YAMLError as e:
        raise ValidationError(f"Invalid YAML in {filepath}: {e}") from e

    if not isinstance(data, dict):
        raise ValidationError(f"YAML root must be a mapping in {filepath}")

    suite_data = data.get("suite") or {}
    suite = VerificationSuite(
        name=suite_data.get("name", "unnamed"),
        metadata=dict(suite_data.get("defaults") or {}),
    )
    suite.golden = [_parse_golden(raw, filepath) for raw in _list(data, "golden", filepath)]
    suite.approximations = [
        _parse_approximation(raw, filepath) for raw in _list(data, "approximations", filepath)
    ]
    suite.gammas = [_parse_gammas(raw, filepath) for raw in _list(data, "gammas", filepath)]
    suite.dispersion = [_parse_dispersion(raw, filepath) for raw in _list(data, "dispersion", filepath)]
    suite.agreement = [_parse_agreement(raw, filepath) for raw in _list(data, "agreement", filepath)]
    if not suite.check_count:
        raise ValidationError(f"No checks defined in {filepath}")
    return suite


def _list(data: dict[str, Any], key: str, filepath: Path) -> list[Any]:
    value = data.get(key) or []
    if not isinstance(value, list):
        raise ValidationError(f"'{key}' must be a list in {filepath}")
    return value


def _mapping(raw: Any, what: str, filepath: Path) -> dict[str, Any]:
    if not isinstance(raw, dict):
        raise ValidationError(f"{what} entry must be a mapping in {filepath}")
    return raw


def _choice(raw: dict[str, Any], key: str, choices: tuple[str, ...], what: str, filepath: Path) -> str:
    value = str(raw.get(key, "")).lower()
    if value not in choices:
        raise ValidationError(
            f"{what} has invalid '{key}' {raw.get(key)!r} in {filepath}. Valid: {', '.join(choices)}"
        )
    return value


def _labels(raw: dict[str, Any], key: str) -> list[str]:
    return [str(v) for v in raw.get(key) or []]


def _grid(raw: dict[str, Any], what: str, filepath: Path) -> tuple[list[float], list[str]]:
    masses = raw.get("masses")
    momenta = raw.get("momenta")
    if not masses or not isinstance(masses, list):
        raise ValidationError(f"{what} missing 'masses' list in {filepath}")
    if not momenta or not isinstance(momenta, list):
        raise ValidationError(f"{what} missing 'momenta' list in {filepath}")
    try:
        return [float(m) for m in masses], [str(p) for p in momenta]
    except (TypeError, ValueError) as e:
        raise ValidationError(f"{what} has a non-numeric mass in {filepath}") from e


def _parse_golden(raw: Any, filepath: Path) -> GoldenCheck:
    if isinstance(raw, str):
        return GoldenCheck(file=raw)
    raw = _mapping(raw, "golden", filepath)
    file = raw.get("file")
    if not file:
        raise ValidationError(f"golden entry missing 'file' in {filepath}")
    return GoldenCheck(
        file=str(file),
        expected_errata=_labels(raw, "expected_errata"),
        basic=str(raw.get("basic", "21")),
    )


def _parse_approximation(raw: Any, filepath: Path) -> ApproximationCheck:
    raw = _mapping(raw, "approximation", filepath)
    cmap = _choice(raw, "map", MAPS, "approximation", filepath)
    kind = _choice(raw, "kind", KINDS, f"approximation {cmap}", filepath)
    table = raw.get("table")
    if not table or not isinstance(table, dict):
        raise ValidationError(f"approximation {cmap} missing 'table' mapping in {filepath}")
    return ApproximationCheck(
        map=cmap,
        kind=kind,
        table={str(k): str(v) for k, v in table.items()},
        expected_errata=_labels(raw, "expected_errata"),
    )


def _parse_gammas(raw: Any, filepath: Path) -> GammaCheck:
    raw = _mapping(raw, "gammas", filepath)
    return GammaCheck(map=_choice(raw, "map", MAPS, "gammas", filepath))


def _parse_dispersion(raw: Any, filepath: Path) -> DispersionCheck:
    raw = _mapping(raw, "dispersion", filepath)
    system = raw.get("system")
    if not system:
        raise ValidationError(f"dispersion entry missing 'system' in {filepath}")
    masses, momenta = _grid(raw, f"dispersion '{system}'", filepath)
    return DispersionCheck(
        system=str(system),
        relation=_choice(raw, "relation", RELATIONS, f"dispersion '{system}'", filepath),
        masses=masses,
        momenta=momenta,
        expect_failure=bool(raw.get("expect_failure", False)),
    )


def _parse_agreement(raw: Any, filepath: Path) -> AgreementCheck:
    raw = _mapping(raw, "agreement", filepath)
    reference = raw.get("reference")
    systems = raw.get("systems")
    if not reference:
        raise ValidationError(f"agreement entry missing 'reference' in {filepath}")
    if not systems or not isinstance(systems, list):
        raise ValidationError(f"agreement '{reference}' missing 'systems' list in {filepath}")
    masses, momenta = _grid(raw, f"agreement '{reference}'", filepath)
    return AgreementCheck(
        reference=str(reference),
        systems=[str(s) for s in systems],
        masses=masses,
        momenta=momenta,
        tolerance=float(raw.get("tolerance", 1e-12)),
    )
