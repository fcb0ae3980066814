"""Line-oriented golden documents for regular representations.

A document is a four-line header followed by one block per basis label::

    algebra c3
    kind direct
    form complex
    order 32 13 21 0 1 2 3 123
    matrix 0 prefactor +1
    +1 . . .
    ...

Entries are ``.`` for zero or a sign followed by a unit symbol. An optional
``units i=j`` line after the header renames the imaginary unit.
"""

from __future__ import annotations

import json
from collections.abc import Mapping
from dataclasses import dataclass, field
from pathlib import Path
from typing import Literal

from clifford_rqm.exceptions import ConfigurationError, DomainError, GoldenFormatError
from clifford_rqm.representations.matrices import UnitEntry, UnitMatrix
from clifford_rqm.representations.regular import RegularRep, RepForm, RepKind
from clifford_rqm.representations.blocks import quaternion_units
from clifford_rqm.representations.units import COMPLEX_ABI, REAL, UnitAlgebra

BLOCK_WIDTH = {RepForm.REAL: 1, RepForm.COMPLEX: 2, RepForm.QUATERNION: 4}


@dataclass(frozen=True, eq=False)
class GoldenFile:
    """Parsed golden document.

    Attributes:
        algebra: Algebra name (``c3``, ``c4``).
        kind: Direct or conjugate.
        form: Real, complex or quaternion.
        order: Real row labels.
        matrices: Basis label -> matrix, in document order.
        alias: Unit renaming shown in the tokens.
    """

    algebra: str
    kind: RepKind
    form: RepForm
    order: tuple[str, ...]
    matrices: dict[str, UnitMatrix]
    alias: dict[str, str] = field(default_factory=dict)

    @property
    def size(self) -> int:
        return len(self.order) // BLOCK_WIDTH[self.form]

    @property
    def unit_algebra(self) -> UnitAlgebra:
        return next(iter(self.matrices.values())).algebra if self.matrices else REAL


def golden_from_rep(rep: RegularRep) -> GoldenFile:
    """Golden view of a computed representation, labels in the algebra's basis order."""
    return GoldenFile(
        algebra=rep.algebra.name,
        kind=rep.kind,
        form=rep.form,
        order=rep.order,
        matrices={label: rep[label] for label in rep},
        alias=dict(rep.alias),
    )


def dump_golden(golden: GoldenFile) -> str:
    lines = [
        f"algebra {golden.algebra}",
        f"kind {golden.kind.value}",
        f"form {golden.form.value}",
        f"order {' '.join(golden.order)}",
    ]
    if golden.alias:
        lines.append("units " + " ".join(f"{k}={v}" for k, v in sorted(golden.alias.items())))
    for label, matrix in golden.matrices.items():
        lines.append(f"matrix {label} prefactor {matrix.prefactor.token(golden.alias)}")
        lines.extend(" ".join(row) for row in matrix.rows(golden.alias))
    return "\n".join(lines) + "\n"


def _matrix_document(matrix: UnitMatrix, alias: Mapping[str, str]) -> dict[str, object]:
    return {"prefactor": matrix.prefactor.token(alias), "entries": matrix.rows(alias)}


def rep_document(rep: RegularRep) -> dict[str, object]:
    """JSON-ready mapping with ``labels``, ``unit_algebra`` and one entry per matrix."""
    first = next(iter(rep.matrices.values()))
    return {
        "algebra": rep.algebra.name,
        "kind": rep.kind.value,
        "form": rep.form.value,
        "source": rep.source,
        "unit_algebra": first.algebra.name,
        "labels": list(rep.order),
        "matrices": {label: _matrix_document(rep[label], rep.alias) for label in rep},
    }


def dump_rep(rep: RegularRep, fmt: Literal["golden", "json"] = "golden") -> str:
    """Serialize a representation deterministically.

    Raises:
        DomainError: for an unknown format.
    """
    if fmt == "golden":
        return dump_golden(golden_from_rep(rep))
    if fmt == "json":
        return json.dumps(rep_document(rep), indent=2, ensure_ascii=False) + "\n"
    raise DomainError(fmt, "format is 'golden' or 'json'")


def _header_value(lines: list[tuple[int, str]], index: int, name: str) -> str:
    if index >= len(lines):
        raise GoldenFormatError(f"missing '{name}' header line")
    number, line = lines[index]
    key, _, value = line.partition(" ")
    if key != name or not value.strip():
        raise GoldenFormatError(f"expected '{name} <value>', got {line!r}", number)
    return value.strip()


def _parse_alias(value: str, number: int) -> dict[str, str]:
    alias = {}
    for pair in value.split():
        source, sep, target = pair.partition("=")
        if not sep or not source or not target:
            raise GoldenFormatError(f"unit renaming looks like i=j, got {pair!r}", number)
        alias[source] = target
    return alias


def _pick_unit_algebra(form: RepForm, kind: RepKind) -> UnitAlgebra:
    if form is RepForm.REAL:
        return REAL
    if form is RepForm.COMPLEX:
        return COMPLEX_ABI
    return quaternion_units(kind)


def parse_golden(text: str) -> GoldenFile:
    """Parse a golden document.

    Raises:
        GoldenFormatError: on a malformed header, block or row.
    """
    lines = [(n, line.strip()) for n, line in enumerate(text.splitlines(), start=1) if line.strip()]
    algebra = _header_value(lines, 0, "algebra")
    raw_kind = _header_value(lines, 1, "kind")
    raw_form = _header_value(lines, 2, "form")
    try:
        kind = RepKind.parse(raw_kind)
    except ConfigurationError as e:
        raise GoldenFormatError(str(e), lines[1][0]) from e
    try:
        form = RepForm.parse(raw_form)
    except ConfigurationError as e:
        raise GoldenFormatError(str(e), lines[2][0]) from e
    order = tuple(_header_value(lines, 3, "order").split())
    width = BLOCK_WIDTH[form]
    if len(order) % width:
        raise GoldenFormatError(f"{len(order)} labels do not split into {form.value} groups", lines[3][0])
    size = len(order) // width

    cursor = 4
    alias: dict[str, str] = {}
    if cursor < len(lines) and lines[cursor][1].startswith("units "):
        alias = _parse_alias(lines[cursor][1][len("units ") :], lines[cursor][0])
        cursor += 1

    raw: list[tuple[int, str, UnitEntry, dict[tuple[int, int], UnitEntry]]] = []
    while cursor < len(lines):
        number, line = lines[cursor]
        parts = line.split()
        if len(parts) != 4 or parts[0] != "matrix" or parts[2] != "prefactor":
            raise GoldenFormatError(f"expected 'matrix <label> prefactor <unit>', got {line!r}", number)
        label = parts[1]
        try:
            prefactor = UnitEntry.parse(parts[3], alias)
        except DomainError as e:
            raise GoldenFormatError(str(e), number) from e
        if prefactor is None:
            raise GoldenFormatError("prefactor cannot be zero", number)
        entries: dict[tuple[int, int], UnitEntry] = {}
        for row in range(size):
            cursor += 1
            if cursor >= len(lines):
                raise GoldenFormatError(f"matrix {label} ends after {row} of {size} rows", number)
            row_number, row_line = lines[cursor]
            tokens = row_line.split()
            if len(tokens) != size:
                raise GoldenFormatError(f"row has {len(tokens)} entries, expected {size}", row_number)
            for col, token in enumerate(tokens):
                try:
                    entry = UnitEntry.parse(token, alias)
                except DomainError as e:
                    raise GoldenFormatError(str(e), row_number) from e
                if entry is not None:
                    entries[(row, col)] = entry
        if any(label == seen for _, seen, _, _ in raw):
            raise GoldenFormatError(f"matrix {label} appears twice", number)
        raw.append((number, label, prefactor, entries))
        cursor += 1

    unit_algebra = _pick_unit_algebra(form, kind)
    matrices = {}
    for number, label, prefactor, entries in raw:
        try:
            matrices[label] = UnitMatrix(size, unit_algebra, entries, prefactor)
        except DomainError as e:
            raise GoldenFormatError(f"matrix {label}: {e}", number) from e
    return GoldenFile(algebra, kind, form, order, matrices, alias)


def load_golden(path: str | Path) -> GoldenFile:
    """Read and parse a golden file.

    Raises:
        FileNotFoundError: if the path does not exist.
        GoldenFormatError: if the content is malformed.
    """
    return parse_golden(Path(path).read_text(encoding="utf-8"))
