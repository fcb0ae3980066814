"""Matrices whose entries are signed unit symbols, with a global prefactor."""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from clifford_rqm.exceptions import DomainError
from clifford_rqm.representations.units import (
    COMPLEX_ABI,
    QUATERNION_CELLS,
    REAL,
    UnitAlgebra,
)
from clifford_rqm.utils.logging import get_logger

logger = get_logger(__name__)

ZERO_TOKEN = "."


class UnitEntry(NamedTuple):
    """coefficient · unit with coefficient ±1."""

    coefficient: int
    unit: str

    def token(self, alias: Mapping[str, str] | None = None) -> str:
        unit = alias.get(self.unit, self.unit) if alias else self.unit
        return f"{'+' if self.coefficient > 0 else '-'}{unit}"

    @classmethod
    def parse(cls, token: str, alias: Mapping[str, str] | None = None) -> UnitEntry | None:
        """``"+i"`` -> (1, "i"); ``"."`` -> None."""
        if token == ZERO_TOKEN:
            return None
        if len(token) < 2 or token[0] not in "+-":
            raise DomainError(token, "entry tokens look like +1, -i, +s2 or '.'")
        unit = token[1:]
        if alias:
            unit = {v: k for k, v in alias.items()}.get(unit, unit)
        return cls(1 if token[0] == "+" else -1, unit)


ONE = UnitEntry(1, "1")


@dataclass(frozen=True, eq=False)
class UnitMatrix:
    """A size×size matrix over a unit algebra; zero entries are not stored.

    The real value is ``prefactor · Σ entry`` where every entry is expanded
    through the unit algebra's real images.
    """

    size: int
    algebra: UnitAlgebra
    entries: Mapping[tuple[int, int], UnitEntry] = field(default_factory=dict)
    prefactor: UnitEntry = ONE

    def __post_init__(self) -> None:
        for (row, col), entry in self.entries.items():
            if not (0 <= row < self.size and 0 <= col < self.size):
                raise DomainError((row, col), f"entry outside a {self.size}x{self.size} matrix")
            if entry.coefficient not in (1, -1):
                raise DomainError(entry.coefficient, "entry coefficients must be +1 or -1")
            self.algebra.image(entry.unit)
        if self.prefactor.coefficient not in (1, -1):
            raise DomainError(self.prefactor.coefficient, "prefactor sign must be +1 or -1")
        self.algebra.scalar_image(self.prefactor.unit)

    @classmethod
    def real(cls, matrix: np.ndarray, sign: int = 1) -> UnitMatrix:
        """Wrap an integer matrix whose entries are sign·(±1 or 0)."""
        body = np.asarray(matrix, dtype=np.int64) * sign
        entries = {
            (int(r), int(c)): UnitEntry(int(body[r, c]), "1") for r, c in zip(*np.nonzero(body), strict=True)
        }
        return cls(body.shape[0], REAL, entries, UnitEntry(sign, "1"))

    @property
    def real_size(self) -> int:
        return self.size * self.algebra.block

    def to_real(self) -> np.ndarray:
        block = self.algebra.block
        out = np.zeros((self.real_size, self.real_size), dtype=np.int64)
        p = self.prefactor
        for (row, col), entry in self.entries.items():
            out[row * block : (row + 1) * block, col * block : (col + 1) * block] = (
                p.coefficient * self.algebra.entry_image(entry.coefficient, entry.unit, p.unit)
            )
        return out

    def token(self, row: int, col: int, alias: Mapping[str, str] | None = None) -> str:
        entry = self.entries.get((row, col))
        return ZERO_TOKEN if entry is None else entry.token(alias)

    def rows(self, alias: Mapping[str, str] | None = None) -> list[list[str]]:
        return [[self.token(r, c, alias) for c in range(self.size)] for r in range(self.size)]

    def expand(self) -> UnitMatrix:
        """Write a quaternion-level matrix out over the complex level, same prefactor."""
        if self.algebra.block != 4:
            raise DomainError(self.algebra.name, "only quaternion-level matrices expand")
        entries: dict[tuple[int, int], UnitEntry] = {}
        for (row, col), entry in self.entries.items():
            for (j, k), (coef, unit) in QUATERNION_CELLS[entry.unit].items():
                entries[(2 * row + j, 2 * col + k)] = UnitEntry(entry.coefficient * coef, unit)
        return UnitMatrix(2 * self.size, COMPLEX_ABI, entries, self.prefactor)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, UnitMatrix):
            return NotImplemented
        return (
            self.size == other.size
            and self.algebra.name == other.algebra.name
            and dict(self.entries) == dict(other.entries)
            and self.prefactor == other.prefactor
        )

    __hash__ = None  # type: ignore[assignment]


def decompose(
    matrix: np.ndarray,
    algebra: UnitAlgebra,
    candidates: tuple[str, ...] | None = None,
    prefactors: tuple[str, ...] | None = None,
) -> UnitMatrix | None:
    """Write a real matrix as p·(±u blocks), trying prefactors in order.

    Returns None when no prefactor makes every nonzero block a signed unit
    from ``candidates`` (all units of the algebra by default).
    """
    if algebra.block == 1:
        return UnitMatrix.real(matrix)
    block = algebra.block
    if matrix.shape[0] % block:
        return None
    size = matrix.shape[0] // block
    cells = {
        (r, c): matrix[r * block : (r + 1) * block, c * block : (c + 1) * block]
        for r in range(size)
        for c in range(size)
    }
    nonzero = {key: cell for key, cell in cells.items() if np.any(cell)}

    for p in prefactors or algebra.prefactors:
        entries: dict[tuple[int, int], UnitEntry] = {}
        for key, cell in nonzero.items():
            found = algebra.match(cell, p, candidates)
            if found is None:
                break
            entries[key] = UnitEntry(*found)
        else:
            return UnitMatrix(size, algebra, entries, UnitEntry(1, p))
    return None
