"""Unit algebras used to compress real matrices into complex or quaternion form.

Every unit is stored as its real image; multiplication tables are derived from
the images, so all unit algebras share one evaluation path.

Complex level (2×2 real images)::

    1 = [[1, 0], [0, 1]]    i = [[0, 1], [-1, 0]]
    a = [[0, 1], [1, 0]]    b = [[-1, 0], [0, 1]]

Quaternion level (2×2 over the complex level, 4×4 real)::

    I  = [[0, 1], [-1, 0]]     σ1 = [[0, 1], [1, 0]]
    σ2 = [[0, -i], [i, 0]]     σ3 = [[-1, 0], [0, 1]]

σ3 carries the sign used by the published tables, which flips the usual
orientation: σ1σ2 = -iσ3.
"""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from clifford_rqm.exceptions import DomainError

COMPLEX_IMAGES: dict[str, np.ndarray] = {
    "1": np.array([[1, 0], [0, 1]], dtype=np.int64),
    "i": np.array([[0, 1], [-1, 0]], dtype=np.int64),
    "a": np.array([[0, 1], [1, 0]], dtype=np.int64),
    "b": np.array([[-1, 0], [0, 1]], dtype=np.int64),
}

# quaternion units as 2×2 arrays of (coefficient, complex unit)
QUATERNION_CELLS: dict[str, dict[tuple[int, int], tuple[int, str]]] = {
    "1": {(0, 0): (1, "1"), (1, 1): (1, "1")},
    "I": {(0, 1): (1, "1"), (1, 0): (-1, "1")},
    "s1": {(0, 1): (1, "1"), (1, 0): (1, "1")},
    "s2": {(0, 1): (-1, "i"), (1, 0): (1, "i")},
    "s3": {(0, 0): (-1, "1"), (1, 1): (1, "1")},
}

PREFACTOR_UNITS: tuple[str, ...] = ("1", "i", "a", "b")


class UnitProduct(NamedTuple):
    """u∘v = sign · scalar · unit, ``scalar`` being a complex-level unit."""

    sign: int
    scalar: str
    unit: str


def _quaternion_image(unit: str) -> np.ndarray:
    image = np.zeros((4, 4), dtype=np.int64)
    for (j, k), (coef, complex_unit) in QUATERNION_CELLS[unit].items():
        image[2 * j : 2 * j + 2, 2 * k : 2 * k + 2] = coef * COMPLEX_IMAGES[complex_unit]
    return image


@dataclass(frozen=True, eq=False)
class UnitAlgebra:
    """A named set of unit symbols with real images of size ``block``.

    Attributes:
        name: Identifier used in documents (``real``, ``complex``, ``quaternion``, ``pauli``).
        units: Unit symbols in display order.
        images: Real image of each unit.
        block: Edge length of the real images.
        prefactors: Complex-level units allowed as a matrix prefactor.
    """

    name: str
    units: tuple[str, ...]
    images: Mapping[str, np.ndarray] = field(repr=False)
    block: int
    prefactors: tuple[str, ...] = ("1",)

    def image(self, unit: str) -> np.ndarray:
        try:
            return self.images[unit]
        except KeyError:
            raise DomainError(unit, f"not a unit of the {self.name} algebra") from None

    def scalar_image(self, unit: str) -> np.ndarray:
        """Real image of a complex-level prefactor acting inside every 2×2 cell."""
        if self.block == 1:
            if unit != "1":
                raise DomainError(unit, "real matrices only take a sign as prefactor")
            return np.ones((1, 1), dtype=np.int64)
        try:
            complex_image = COMPLEX_IMAGES[unit]
        except KeyError:
            raise DomainError(unit, "prefactor must be one of 1, i, a, b") from None
        return np.kron(np.eye(self.block // 2, dtype=np.int64), complex_image)

    def entry_image(self, coefficient: int, unit: str, prefactor: str = "1") -> np.ndarray:
        return coefficient * (self.scalar_image(prefactor) @ self.image(unit))

    def match(
        self,
        block: np.ndarray,
        prefactor: str = "1",
        candidates: tuple[str, ...] | None = None,
    ) -> tuple[int, str] | None:
        """Find (c, u) with c·p·u equal to ``block``, or None."""
        scaled = self.scalar_image(prefactor)
        for unit in candidates or self.units:
            candidate = scaled @ self.image(unit)
            if np.array_equal(block, candidate):
                return 1, unit
            if np.array_equal(block, -candidate):
                return -1, unit
        return None

    def multiply(self, left: str, right: str) -> UnitProduct:
        """Product of two units as sign · complex scalar · unit.

        Raises:
            DomainError: if the product leaves the algebra even up to a scalar.
        """
        product = self.image(left) @ self.image(right)
        scalars = ("1",) if self.block == 1 else PREFACTOR_UNITS
        for scalar in scalars:
            found = self.match(product, scalar)
            if found is not None:
                return UnitProduct(found[0], scalar, found[1])
        raise DomainError(f"{left}*{right}", f"product leaves the {self.name} algebra")

    def table(self) -> dict[tuple[str, str], UnitProduct]:
        return {(u, v): self.multiply(u, v) for u in self.units for v in self.units}

    def is_closed(self) -> bool:
        """True when every product is ± a unit without a complex scalar."""
        return all(p.scalar == "1" for p in self.table().values())


REAL = UnitAlgebra("real", ("1",), {"1": np.ones((1, 1), dtype=np.int64)}, block=1)

COMPLEX_ABI = UnitAlgebra(
    "complex", PREFACTOR_UNITS, COMPLEX_IMAGES, block=2, prefactors=PREFACTOR_UNITS
)

DIRECT_QUATERNION = UnitAlgebra(
    "quaternion",
    ("1", "I"),
    {u: _quaternion_image(u) for u in ("1", "I")},
    block=4,
    prefactors=PREFACTOR_UNITS,
)

PAULI = UnitAlgebra(
    "pauli",
    ("1", "s1", "s2", "s3"),
    {u: _quaternion_image(u) for u in ("1", "s1", "s2", "s3")},
    block=4,
    prefactors=PREFACTOR_UNITS,
)

UNIT_ALGEBRAS: dict[str, UnitAlgebra] = {
    algebra.name: algebra for algebra in (REAL, COMPLEX_ABI, DIRECT_QUATERNION, PAULI)
}


def unit_algebra(name: str) -> UnitAlgebra:
    try:
        return UNIT_ALGEBRAS[name]
    except KeyError:
        raise DomainError(name, f"unknown unit algebra (known: {', '.join(UNIT_ALGEBRAS)})") from None

