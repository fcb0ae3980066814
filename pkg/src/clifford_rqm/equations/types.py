"""Data types for the assembled first-order equation systems."""

from __future__ import annotations

import math
from collections.abc import Mapping
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce

import numpy as np
import sympy

from clifford_rqm.algebra.clifford import (
    CYCLIC_INDEX_MAPS,
    CliffordAlgebra,
    SignedPermutation,
    index_automorphism,
)
from clifford_rqm.exceptions import DomainError, SystemShapeError
from clifford_rqm.representations.blocks import BASIC_DIRECTIONS, present
from clifford_rqm.representations.matrices import UnitMatrix
from clifford_rqm.representations.regular import RepForm, RepKind

MASS, SPEED, HBAR = sympy.symbols("m c hbar", positive=True)


@dataclass(frozen=True)
class PhysicalParams:
    """Mass m, action unit S⁰ and speed c; symbolic by default."""

    mass: sympy.Expr | float | Fraction = MASS
    hbar: sympy.Expr | float | Fraction = HBAR
    speed: sympy.Expr | float | Fraction = SPEED

    def __post_init__(self) -> None:
        for name, value, strict in (("mass", self.mass, False), ("hbar", self.hbar, True), ("speed", self.speed, True)):
            if isinstance(value, sympy.Basic) and not value.is_number:
                continue
            number = float(value)
            if not math.isfinite(number) or number < 0 or (strict and number == 0):
                bound = "positive" if strict else "non-negative"
                raise DomainError(value, f"{name} must be finite and {bound}")

    @classmethod
    def natural(cls, mass: float | Fraction = 1) -> PhysicalParams:
        """ħ = c = 1 with the given mass."""
        return cls(mass=mass, hbar=1, speed=1)

    @property
    def is_numeric(self) -> bool:
        return all(
            not isinstance(v, sympy.Basic) or v.is_number for v in (self.mass, self.hbar, self.speed)
        )

    def substitutions(self) -> dict[sympy.Symbol, object]:
        return {MASS: self.mass, HBAR: self.hbar, SPEED: self.speed}


@dataclass(frozen=True)
class ImpulseField:
    """Generalized impulse p^R_M in units of m·c, keyed by (upper R, lower M)."""

    components: Mapping[tuple[str, str], Fraction] = field(default_factory=dict)

    def __post_init__(self) -> None:
        cleaned = {key: Fraction(value) for key, value in self.components.items() if value != 0}
        object.__setattr__(self, "components", cleaned)

    @classmethod
    def free_lepton(cls) -> ImpulseField:
        """p⁰₀ = p³⁴₀ = mc/2."""
        return cls({("0", "0"): Fraction(1, 2), ("34", "0"): Fraction(1, 2)})

    @classmethod
    def antilepton(cls) -> ImpulseField:
        """p̃¹³²⁴₁₃₂₄ = p̃⁰₁₂₃ = mc/2."""
        return cls({("1324", "1324"): Fraction(1, 2), ("0", "123"): Fraction(1, 2)})

    @property
    def directions(self) -> tuple[str, ...]:
        return tuple(dict.fromkeys(lower for _, lower in self.components))

    def along(self, direction: str) -> dict[str, Fraction]:
        """Σ_R p^R_M ε_R for one lower label M, as label -> coefficient."""
        return {upper: v for (upper, lower), v in self.components.items() if lower == direction}

    def permuted(self, permutation: SignedPermutation) -> ImpulseField:
        moved = {}
        for (upper, lower), value in self.components.items():
            s_upper, new_upper = permutation.apply(upper)
            s_lower, new_lower = permutation.apply(lower)
            moved[(new_upper, new_lower)] = value * s_upper * s_lower
        return ImpulseField(moved)


@dataclass(frozen=True)
class WaveFunctionLayout:
    """How the real components ψ^A fold into complex or quaternion components.

    ``names[k]`` is the display name of ``groups[k]`` and ``weights[k]`` the
    hypernumber multiplying it in the folded component.
    """

    name: str
    groups: tuple[tuple[str, ...], ...]
    names: tuple[str, ...]
    weights: tuple[str, ...]

    def group_of(self, name: str) -> tuple[str, ...]:
        try:
            return self.groups[self.names.index(name)]
        except ValueError:
            raise DomainError(name, f"no component of that name in layout {self.name}") from None


_C4_QUADS = (
    ("32", "13", "21", "0"),
    ("42", "14", "1324", "34"),
    ("1", "2", "3", "123"),
    ("134", "234", "4", "124"),
)

LEPTON_COMPLEX = WaveFunctionLayout(
    "lepton-complex",
    tuple(quad[k : k + 2] for quad in _C4_QUADS for k in (0, 2)),
    tuple(quad[k + 1] for quad in _C4_QUADS for k in (0, 2)),
    ("i", "1") * 4,
)

LEPTON_QUATERNION = WaveFunctionLayout(
    "lepton-quaternion", _C4_QUADS, ("0", "34", "123", "124"), ("aI", "bI", "i", "1")
)

ANTILEPTON_QUATERNION = WaveFunctionLayout(
    "antilepton-quaternion", _C4_QUADS, ("0", "34", "123", "124"), ("is1", "is2", "is3", "1")
)

# lepton components as ± combinations of quaternion components
LEPTON_TAGS: dict[str, dict[str, int]] = {
    "e_L": {"0": 1, "34": 1},
    "e_R": {"123": 1, "124": 1},
    "nu_L": {"123": 1, "124": -1},
    "nu_R": {"0": 1, "34": -1},
}

GENERATION_NAMES = {1: "e", 2: "mu", 3: "tau"}


def tag_name(tag: str, generation: int = 1) -> str:
    """``("e_L", 2)`` -> ``"mu_L"``; ``("nu_R", 3)`` -> ``"nu_tau_R"``."""
    if tag not in LEPTON_TAGS:
        raise DomainError(tag, f"lepton tags are {', '.join(LEPTON_TAGS)}")
    if generation not in GENERATION_NAMES:
        raise DomainError(generation, "generation must be 1, 2 or 3")
    particle, chirality = tag.split("_")
    flavour = GENERATION_NAMES[generation]
    if particle == "e":
        return f"{flavour}_{chirality}"
    return f"nu_{flavour}_{chirality}"


def normalise_mass(matrix: np.ndarray, factor: sympy.Expr) -> tuple[np.ndarray, sympy.Expr]:
    """Split an exact matrix into an integer matrix and its common factor.

    The zero matrix keeps ``factor`` as coupling.
    """
    values = [Fraction(v) for v in matrix.flat if v != 0]
    if not values:
        return np.zeros(matrix.shape, dtype=np.int64), factor
    numerator = reduce(math.gcd, (v.numerator for v in values))
    denominator = reduce(math.lcm, (v.denominator for v in values))
    common = Fraction(numerator, denominator)
    scaled = np.array([[Fraction(v) / common for v in row] for row in matrix], dtype=object)
    ints = np.array([[int(v) for v in row] for row in scaled], dtype=np.int64)
    return ints, factor * sympy.Rational(common.numerator, common.denominator)


@dataclass(frozen=True)
class PresentedSystem:
    """A system written over a unit algebra for display."""

    form: RepForm
    order: tuple[str, ...]
    derivatives: dict[int, UnitMatrix]
    mass: UnitMatrix
    coupling: sympy.Expr
    alias: dict[str, str]


@dataclass(frozen=True, eq=False)
class LinearPDESystem:
    """Σ_m A^m ∂_m Ψ = coupling · mass · Ψ over real components.

    Attributes:
        name: Short identifier (``free-lepton``, ``massive``, ``dirac``, …).
        labels: Unknowns ψ^K in row order.
        derivatives: Direction m (1..4) -> integer matrix A^m.
        mass: Integer mass matrix.
        coupling: Symbolic factor in m, c, ħ in front of the mass matrix.
        derivative_kind: Unit policy for presenting A^m.
        mass_kind: Unit policy for presenting the mass matrix.
        algebra: Source algebra, when the system was assembled from one.
        impulse: Generalized impulse it was assembled from, if any.
        layout: Component grouping for display.
        params: Physical parameters the system was built with.
    """

    name: str
    labels: tuple[str, ...]
    derivatives: dict[int, np.ndarray]
    mass: np.ndarray
    coupling: sympy.Expr
    derivative_kind: RepKind = RepKind.CONJUGATE
    mass_kind: RepKind = RepKind.DIRECT
    algebra: CliffordAlgebra | None = None
    impulse: ImpulseField | None = None
    layout: WaveFunctionLayout | None = None
    params: PhysicalParams = field(default_factory=PhysicalParams)

    def __post_init__(self) -> None:
        dim = len(self.labels)
        for direction, matrix in self.derivatives.items():
            if matrix.shape != (dim, dim):
                raise SystemShapeError(f"{self.name}: A^{direction} is {matrix.shape}, expected {dim}x{dim}")
        if self.mass.shape != (dim, dim):
            raise SystemShapeError(f"{self.name}: mass matrix is {self.mass.shape}, expected {dim}x{dim}")

    @property
    def dim(self) -> int:
        return len(self.labels)

    @property
    def directions(self) -> tuple[int, ...]:
        return tuple(sorted(self.derivatives))

    @property
    def is_massless(self) -> bool:
        return not np.any(self.mass)

    def effective_mass(self) -> sympy.Matrix:
        """coupling · mass as a sympy matrix."""
        return self.coupling * sympy.Matrix(self.mass.tolist())

    def coupling_value(self, params: PhysicalParams | None = None) -> float:
        """Numeric coupling; parameters default to the system's own."""
        params = params or self.params
        value = self.coupling.subs(params.substitutions())
        if not value.is_number:
            raise DomainError(str(value), "coupling still depends on symbols; pass numeric parameters")
        return float(value)

    def same_as(self, other: LinearPDESystem) -> bool:
        """Equal derivative matrices and equal effective mass, coefficient for coefficient."""
        if self.labels != other.labels or self.directions != other.directions:
            return False
        if any(not np.array_equal(self.derivatives[m], other.derivatives[m]) for m in self.directions):
            return False
        difference = self.effective_mass() - other.effective_mass()
        return all(sympy.simplify(entry) == 0 for entry in difference)

    def presented(self, form: RepForm | str = RepForm.QUATERNION, basic: str = "21") -> PresentedSystem:
        """Write every matrix in ``form``.

        With ``basic`` other than 21 the matrices are first carried back along
        the cyclic index permutation, so a second-generation system shows the
        first-generation blocks with the unit renamed.

        Raises:
            DecompositionError: if a matrix does not fit the unit policy.
        """
        form = RepForm.parse(form) if isinstance(form, str) else form
        derivatives = dict(self.derivatives)
        mass = self.mass
        alias: dict[str, str] = {}
        if basic != "21":
            if basic not in BASIC_DIRECTIONS or self.algebra is None or self.labels != self.algebra.labels:
                raise SystemShapeError(f"{self.name}: basic {basic} needs a system over the full basis")
            unit_name, generation = BASIC_DIRECTIONS[basic]
            permutation = index_automorphism(self.algebra, CYCLIC_INDEX_MAPS[generation])
            derivatives = {m: permutation.conjugate(a) for m, a in derivatives.items()}
            mass = permutation.conjugate(mass)
            alias = {"i": unit_name}
        return PresentedSystem(
            form=form,
            order=self.labels,
            derivatives={
                m: present(a, form, self.derivative_kind, f"A{m}") for m, a in sorted(derivatives.items())
            },
            mass=present(mass, form, self.mass_kind, "mass"),
            coupling=self.coupling,
            alias=alias,
        )
