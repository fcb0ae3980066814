"""Cell-by-cell comparison of computed representations with golden documents."""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from clifford_rqm.algebra.clifford import preset
from clifford_rqm.exceptions import ConfigurationError, ShapeMismatchError
from clifford_rqm.representations.blocks import block_decompose, display_labels
from clifford_rqm.representations.matrices import UnitMatrix
from clifford_rqm.representations.regular import (
    RegularRep,
    RepForm,
    RepKind,
    regular_rep_conjugate,
    regular_rep_direct,
)
from clifford_rqm.shell.golden import GoldenFile, load_golden
from clifford_rqm.utils.logging import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class Erratum:
    """One display cell where the golden document and the computation disagree."""

    label: str
    row: str
    col: str
    fixture: str
    computed: str

    def __str__(self) -> str:
        return f"{self.label}[{self.row}, {self.col}]: golden {self.fixture}, computed {self.computed}"


@dataclass(frozen=True)
class PresentationNote:
    """Same real matrix, written with a different prefactor."""

    label: str
    fixture_prefactor: str
    computed_prefactor: str

    def __str__(self) -> str:
        return (
            f"{self.label}: golden prefactor {self.fixture_prefactor}, "
            f"computed {self.computed_prefactor} (same matrix)"
        )


@dataclass
class ErrataReport:
    """Mismatches of one comparison; empty ``errata`` means a perfect match."""

    source: str
    errata: list[Erratum] = field(default_factory=list)
    notes: list[PresentationNote] = field(default_factory=list)

    @property
    def is_empty(self) -> bool:
        return not self.errata

    @property
    def labels(self) -> list[str]:
        """Matrix labels with at least one erratum, in report order."""
        return list(dict.fromkeys(e.label for e in self.errata))

    def __len__(self) -> int:
        return len(self.errata)


def computed_rep(algebra_name: str, kind: RepKind, form: RepForm, basic: str = "21") -> RegularRep:
    """Regular representation of a preset algebra in the requested form."""
    algebra = preset(algebra_name)
    rep = regular_rep_direct(algebra) if kind is RepKind.DIRECT else regular_rep_conjugate(algebra)
    if form is RepForm.REAL and basic == "21":
        return rep
    return block_decompose(rep, form, basic=basic)


def _value(matrix: UnitMatrix, row: int, col: int, alias: dict[str, str]) -> str:
    token = matrix.token(row, col, alias)
    prefactor = matrix.prefactor.token(alias)
    if prefactor == "+1" or token == ".":
        return token
    return f"({prefactor}){token}"


def _check_header(rep: RegularRep, golden: GoldenFile) -> None:
    for name, expected, actual in (
        ("algebra", rep.algebra.name, golden.algebra),
        ("kind", rep.kind, golden.kind),
        ("form", rep.form, golden.form),
        ("order", rep.order, golden.order),
    ):
        if expected != actual:
            raise ShapeMismatchError(name, expected, actual)
    if set(rep.matrices) != set(golden.matrices):
        raise ShapeMismatchError("labels", sorted(rep.matrices), sorted(golden.matrices))


def verify_against_golden(rep: RegularRep, golden: GoldenFile, source: str = "") -> ErrataReport:
    """Compare every display cell through its real block.

    A matrix whose cells all agree in value but whose prefactor is written
    differently gives a presentation note instead of errata.

    Raises:
        ShapeMismatchError: if algebra, kind, form, order or label set differ.
    """
    _check_header(rep, golden)
    report = ErrataReport(source=source or f"{golden.algebra}-{golden.kind.value}-{golden.form.value}")
    names = display_labels(golden.order, golden.form)
    block = golden.unit_algebra.block
    for label in rep.algebra.labels:
        computed, fixture = rep[label], golden.matrices[label]
        if computed == fixture:
            continue
        ours, theirs = computed.to_real(), fixture.to_real()
        if np.array_equal(ours, theirs):
            report.notes.append(
                PresentationNote(label, fixture.prefactor.token(golden.alias), computed.prefactor.token(rep.alias))
            )
            continue
        for r, row in enumerate(names):
            for c, col in enumerate(names):
                cell = (slice(r * block, (r + 1) * block), slice(c * block, (c + 1) * block))
                if not np.array_equal(ours[cell], theirs[cell]):
                    report.errata.append(
                        Erratum(
                            label,
                            row,
                            col,
                            _value(fixture, r, c, golden.alias),
                            _value(computed, r, c, dict(rep.alias)),
                        )
                    )
    logger.debug("%s: %d errata, %d notes", report.source, len(report.errata), len(report.notes))
    return report


def verify_golden_file(path: str | Path, basic: str = "21") -> ErrataReport:
    """Load a golden file, compute the matching representation and compare."""
    golden = load_golden(path)
    if golden.alias and basic == "21":
        basic = {"j": "13", "k": "32"}.get(golden.alias.get("i", "i"), "21")
    rep = computed_rep(golden.algebra, golden.kind, golden.form, basic)
    return verify_against_golden(rep, golden, source=Path(path).name)


def resolve_golden_paths(name: str | Path, golden_dir: Path) -> list[Path]:
    """Find golden files for a CLI argument.

    Tries the path itself, then ``golden_dir/name``, then every
    ``golden_dir/<stem>_*.golden`` so ``c3_direct.golden`` covers all three forms.

    Raises:
        ConfigurationError: if nothing matches.
    """
    path = Path(name)
    if path.is_file():
        return [path]
    packaged = golden_dir / path.name
    if packaged.is_file():
        return [packaged]
    forms = sorted(golden_dir.glob(f"{path.stem}_*.golden"))
    if forms:
        return forms
    raise ConfigurationError(f"no golden file matches {str(name)!r} (looked in {golden_dir})")
