"""Plane-wave spectra of first-order systems.

A plane wave Ψ = u·exp(j(p·x − E·x⁴)) turns Σ A^m ∂_m Ψ = κ·M·Ψ into

    E·A⁴·u = (Σ_a p_a A^a + jκM)·u,

with j a numeric imaginary unit that commutes with every real matrix. The
energies are the eigenvalues of (A⁴)⁻¹(p·A + jκM) in natural units (ħ = c = 1).
Reversing the sign convention of the exponent only reflects the spectrum.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from clifford_rqm.equations.assembly import contract_postulates, quantum_postulate_rhs
from clifford_rqm.equations.types import ImpulseField, LinearPDESystem, PhysicalParams
from clifford_rqm.exceptions import DispersionError, DomainError, SystemShapeError
from clifford_rqm.representations.regular import RepKind, regular_rep_conjugate
from clifford_rqm.utils.config import DEFAULT_TOLERANCE
from clifford_rqm.utils.logging import get_logger

logger = get_logger(__name__)

TIME_DIRECTION = 4


@dataclass(frozen=True)
class Momentum:
    """Spatial momentum (p1, p2, p3) in natural units."""

    components: tuple[float, float, float] = (0.0, 0.0, 0.0)

    def __post_init__(self) -> None:
        values = tuple(float(v) for v in self.components)
        if len(values) != 3:
            raise DomainError(self.components, "momentum has three components")
        if not all(math.isfinite(v) for v in values):
            raise DomainError(self.components, "momentum components must be finite")
        object.__setattr__(self, "components", values)

    @classmethod
    def parse(cls, text: str) -> Momentum:
        """``"0.3,-1.2,2"`` -> Momentum((0.3, -1.2, 2.0))."""
        parts = [part.strip() for part in text.split(",")]
        try:
            values = tuple(float(part) for part in parts)
        except ValueError:
            raise DomainError(text, "momentum is written as x,y,z") from None
        return cls(values)  # type: ignore[arg-type]

    @property
    def squared(self) -> float:
        return sum(v * v for v in self.components)

    def along(self, direction: int) -> float:
        return self.components[direction - 1]

    def __str__(self) -> str:
        return ",".join(f"{v:g}" for v in self.components)


class DispersionRelation(str, Enum):
    """E² = p² + m² (massive) or E² = p² (massless)."""

    MASSIVE = "massive"
    MASSLESS = "massless"

    @classmethod
    def parse(cls, value: str) -> DispersionRelation:
        try:
            return cls(value.strip().lower())
        except ValueError:
            raise DomainError(value, "relation is 'massive' or 'massless'") from None

    def target(self, momentum: Momentum, mass: float) -> float:
        if self is DispersionRelation.MASSIVE:
            return momentum.squared + mass * mass
        return momentum.squared


@dataclass(frozen=True, eq=False)
class DispersionResult:
    """Eigen-solution of one plane-wave problem.

    Attributes:
        momentum: Spatial momentum of the wave.
        mass: Mass substituted into the coupling.
        energies: All eigenvalues, sorted by real part then imaginary part.
        vectors: Matching eigenvectors as columns.
        residual: max ‖(p·A + jκM − E·A⁴)u‖∞ over the eigenpairs.
        tolerance: Bound used for :attr:`is_real`.
    """

    momentum: Momentum
    mass: float
    energies: np.ndarray
    vectors: np.ndarray = field(repr=False)
    residual: float
    tolerance: float = DEFAULT_TOLERANCE

    @property
    def max_imaginary(self) -> float:
        return float(np.max(np.abs(self.energies.imag))) if self.energies.size else 0.0

    @property
    def is_real(self) -> bool:
        return self.max_imaginary < self.tolerance

    @property
    def real_energies(self) -> list[float]:
        """Real parts of the energies.

        Raises:
            DispersionError: if an energy has an imaginary part above tolerance.
        """
        if not self.is_real:
            raise DispersionError(
                f"spectrum at p=({self.momentum}), m={self.mass:g} is not real "
                f"(max imaginary part {self.max_imaginary:.3e})"
            )
        return sorted(float(e.real) for e in self.energies)


def _natural_coupling(system: LinearPDESystem, mass: float | None) -> tuple[float, float]:
    if mass is None:
        if not system.params.is_numeric:
            raise DomainError(system.params.mass, "pass a numeric mass for the spectrum")
        mass = float(system.params.mass)
    params = PhysicalParams.natural(mass)
    return float(mass), system.coupling_value(params)


def _time_matrix(system: LinearPDESystem) -> np.ndarray:
    if TIME_DIRECTION not in system.derivatives:
        raise DispersionError(f"{system.name}: no ∂₄ term")
    a4 = system.derivatives[TIME_DIRECTION].astype(float)
    if np.linalg.matrix_rank(a4) < system.dim:
        raise DispersionError(f"{system.name}: time coefficient A⁴ is singular")
    return a4


def _spatial_operator(system: LinearPDESystem, momentum: Momentum) -> np.ndarray:
    operator = np.zeros((system.dim, system.dim), dtype=complex)
    for m, a in system.derivatives.items():
        if m != TIME_DIRECTION:
            operator += momentum.along(m) * a
    return operator


def _residual(operator: np.ndarray, a4: np.ndarray, energies: np.ndarray, vectors: np.ndarray) -> float:
    if not energies.size:
        return 0.0
    defects = operator @ vectors - a4 @ vectors * energies
    return float(np.max(np.abs(defects)))


def plane_wave_spectrum(
    system: LinearPDESystem,
    momentum: Momentum | Sequence[float],
    mass: float | None = None,
    tolerance: float = DEFAULT_TOLERANCE,
) -> DispersionResult:
    """Energies of the plane waves of ``system`` at one momentum.

    ``mass`` is substituted into the coupling with ħ = c = 1; without it the
    system's own parameters must be numeric.

    Raises:
        DispersionError: if A⁴ is missing or singular.
    """
    momentum = momentum if isinstance(momentum, Momentum) else Momentum(tuple(momentum))  # type: ignore[arg-type]
    mass, kappa = _natural_coupling(system, mass)
    a4 = _time_matrix(system)
    operator = _spatial_operator(system, momentum) + 1j * kappa * system.mass
    energies, vectors = np.linalg.eig(np.linalg.solve(a4, operator))
    order = np.lexsort((np.round(energies.imag, 12), np.round(energies.real, 12)))
    energies, vectors = energies[order], vectors[:, order]
    result = DispersionResult(
        momentum=momentum,
        mass=mass,
        energies=energies,
        vectors=vectors,
        residual=_residual(operator, a4, energies, vectors),
        tolerance=tolerance,
    )
    logger.debug(
        "%s at p=(%s), m=%g: residual %.2e, max imaginary %.2e",
        system.name,
        momentum,
        mass,
        result.residual,
        result.max_imaginary,
    )
    return result


@dataclass(frozen=True)
class DispersionPoint:
    """One (p, m) grid point of a dispersion check."""

    momentum: Momentum
    mass: float
    energies: tuple[complex, ...]
    defect: float
    residual: float
    passed: bool


@dataclass
class DispersionReport:
    """All grid points of :func:`check_dispersion`, with the failing ones listed."""

    system: str
    relation: DispersionRelation
    tolerance: float
    points: list[DispersionPoint] = field(default_factory=list)

    @property
    def failures(self) -> list[DispersionPoint]:
        return [point for point in self.points if not point.passed]

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def max_defect(self) -> float:
        return max((point.defect for point in self.points), default=0.0)


def check_dispersion(
    system: LinearPDESystem,
    momenta: Iterable[Momentum | Sequence[float]],
    masses: Iterable[float],
    relation: DispersionRelation | str = DispersionRelation.MASSIVE,
    tolerance: float = DEFAULT_TOLERANCE,
) -> DispersionReport:
    """Check |E² − p² − m²| (or |E² − p²|) below ``tolerance`` for every energy on the grid.

    Non-real energies fail through the same defect.

    Raises:
        DomainError: if ``tolerance`` is not positive.
    """
    if not tolerance > 0:
        raise DomainError(tolerance, "tolerance must be positive")
    relation = DispersionRelation.parse(relation) if isinstance(relation, str) else relation
    report = DispersionReport(system=system.name, relation=relation, tolerance=tolerance)
    momenta = [p if isinstance(p, Momentum) else Momentum(tuple(p)) for p in momenta]  # type: ignore[arg-type]
    for mass in masses:
        for momentum in momenta:
            result = plane_wave_spectrum(system, momentum, mass, tolerance)
            target = relation.target(momentum, result.mass)
            defect = float(np.max(np.abs(result.energies**2 - target))) if result.energies.size else 0.0
            passed = defect < tolerance and result.residual < tolerance
            report.points.append(
                DispersionPoint(
                    momentum=momentum,
                    mass=result.mass,
                    energies=tuple(complex(e) for e in result.energies),
                    defect=defect,
                    residual=result.residual,
                    passed=passed,
                )
            )
            if not passed:
                logger.debug(
                    "%s fails %s at p=(%s), m=%g: defect %.3e", system.name, relation.value, momentum, mass, defect
                )
    return report


def residual_of_postulate(
    system: LinearPDESystem,
    momentum: Momentum | Sequence[float],
    energy: complex,
    vector: np.ndarray,
    impulse: ImpulseField | None = None,
    mass: float | None = None,
) -> float:
    """Max-norm residual of the quantum postulates on one plane wave.

    Both sides are rebuilt from the algebra rather than read from the system:
    the derivative side from the conjugate matrices of 𝓔^1..𝓔^4, the mass side
    by contracting the postulate derivatives ∂_Mψ of the impulse. An eigenpair
    of a mis-assembled system leaves a nonzero residual.

    Raises:
        SystemShapeError: if the system was not assembled in Dirac form over an algebra.
    """
    impulse = impulse or system.impulse
    algebra = system.algebra
    if algebra is None or impulse is None or system.labels != algebra.labels:
        raise SystemShapeError(f"{system.name}: postulate residual needs the algebra and impulse of the system")
    if system.derivative_kind is not RepKind.CONJUGATE:
        raise SystemShapeError(f"{system.name}: postulate residual applies to Dirac-form systems")
    if algebra.n < TIME_DIRECTION:
        raise SystemShapeError(f"{system.name}: postulate residual needs a ∂₄ direction")
    momentum = momentum if isinstance(momentum, Momentum) else Momentum(tuple(momentum))  # type: ignore[arg-type]
    mass, _ = _natural_coupling(system, mass)
    vector = np.asarray(vector, dtype=complex)

    conjugate = regular_rep_conjugate(algebra)
    derivatives = {m: conjugate.real(str(m)).astype(float) for m in range(1, algebra.n + 1)}
    rhs = quantum_postulate_rhs([complex(v) for v in vector], impulse, algebra, PhysicalParams.natural(mass))
    mass_side = np.array([complex(v) for v in contract_postulates(rhs, algebra)], dtype=complex)

    defect = 1j * mass_side - energy * (derivatives[TIME_DIRECTION] @ vector)
    for m, a in derivatives.items():
        if m != TIME_DIRECTION:
            defect += momentum.along(m) * (a @ vector)
    return float(np.max(np.abs(defect))) if defect.size else 0.0
