"""Free lepton, antilepton and generation systems over C̃_4, and their decoupling."""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Literal

import numpy as np
import sympy

from clifford_rqm.algebra.blades import Blade
from clifford_rqm.algebra.clifford import (
    CYCLIC_INDEX_MAPS,
    CliffordAlgebra,
    c4,
    index_automorphism,
)
from clifford_rqm.equations.assembly import assemble_dirac_form, conjugate_matrix
from clifford_rqm.equations.types import (
    ANTILEPTON_QUATERNION,
    HBAR,
    LEPTON_COMPLEX,
    LEPTON_QUATERNION,
    MASS,
    SPEED,
    ImpulseField,
    LinearPDESystem,
    PhysicalParams,
)
from clifford_rqm.exceptions import DomainError, SystemShapeError
from clifford_rqm.representations.regular import RepForm, RepKind, conjugate_constants
from clifford_rqm.utils.logging import get_logger

logger = get_logger(__name__)


def assemble_free_lepton(
    params: PhysicalParams | None = None,
    representation: RepForm | str = RepForm.QUATERNION,
    algebra: CliffordAlgebra | None = None,
) -> LinearPDESystem:
    """The free-lepton system: A^m = conjugate matrix of 𝓔^m, mass I + R_34, coupling mc/2ħ.

    ``representation`` only picks the display layout; the matrices are real.
    """
    algebra = algebra or c4()
    form = RepForm.parse(representation) if isinstance(representation, str) else representation
    system = assemble_dirac_form(ImpulseField.free_lepton(), algebra, params=params)
    layout = LEPTON_QUATERNION if form is RepForm.QUATERNION else LEPTON_COMPLEX
    return replace(system, name="free-lepton", layout=layout)


@dataclass(frozen=True, eq=False)
class DecoupledSystems:
    """The massive and massless halves of a system, with the change of variables.

    ``plus`` and ``minus`` hold the column directions as columns: Ψ = ½(S₊φ + S₋χ).
    ``plus_rows`` and ``minus_rows`` hold the equation combinations the same way;
    for a mass involution they equal ``plus`` and ``minus``. ``leads`` labels
    the sector components.
    """

    massive: LinearPDESystem
    massless: LinearPDESystem
    plus: np.ndarray
    minus: np.ndarray
    leads: tuple[str, ...]
    source: LinearPDESystem
    plus_rows: np.ndarray
    minus_rows: np.ndarray

    def recombine(self) -> LinearPDESystem:
        """Undo the change of variables: A = ½(R₊ Ã₊ S₊ᵀ + R₋ Ã₋ S₋ᵀ)."""
        derivatives = {}
        for m in self.massive.directions:
            total = self.plus_rows @ self.massive.derivatives[m] @ self.plus.T
            total = total + self.minus_rows @ self.massless.derivatives[m] @ self.minus.T
            derivatives[m] = total // 2
        # κ₊·I on the plus sector is κ₊/2·R₊S₊ᵀ in the original variables
        mass = self.plus_rows @ self.massive.mass @ self.plus.T
        return replace(
            self.source,
            name=f"{self.source.name}-recombined",
            derivatives=derivatives,
            mass=mass,
            coupling=self.massive.coupling / 2,
        )


# leads, plus, minus, plus_rows, minus_rows
_Bases = tuple[list[int], np.ndarray, np.ndarray, np.ndarray, np.ndarray]


def _mass_involution(system: LinearPDESystem) -> np.ndarray:
    dim = system.dim
    q = system.mass - np.eye(dim, dtype=np.int64)
    if not np.all(np.isin(q, (-1, 0, 1))) or not np.all(np.count_nonzero(q, axis=1) == 1):
        raise SystemShapeError(f"{system.name}: mass matrix is not I plus a signed permutation")
    if np.any(np.diag(q)):
        raise SystemShapeError(f"{system.name}: mass involution has fixed points")
    if not np.array_equal(q @ q, np.eye(dim, dtype=np.int64)):
        raise SystemShapeError(f"{system.name}: mass matrix minus I is not an involution")
    for m, a in system.derivatives.items():
        if not np.array_equal(q @ a, a @ q):
            raise SystemShapeError(f"{system.name}: A^{m} does not commute with the mass involution")
    return q


def _is_involution_shaped(mass: np.ndarray) -> bool:
    q = mass - np.eye(mass.shape[0], dtype=np.int64)
    return bool(np.all(np.isin(q, (-1, 0, 1))) and np.all(np.count_nonzero(q, axis=1) == 1))


def _involution_bases(system: LinearPDESystem) -> _Bases:
    q = _mass_involution(system)
    dim = system.dim
    leads: list[int] = []
    seen: set[int] = set()
    for k in range(dim):
        if k in seen:
            continue
        partner = int(np.flatnonzero(q[:, k])[0])
        leads.append(k)
        seen.update((k, partner))

    identity = np.eye(dim, dtype=np.int64)
    plus = np.stack([identity[:, k] + q[:, k] for k in leads], axis=1)
    minus = np.stack([identity[:, k] - q[:, k] for k in leads], axis=1)
    return leads, plus, minus, plus, minus


def _paired_bases(system: LinearPDESystem) -> _Bases:
    """Bases for a mass matrix whose rows come in equal pairs ±(αΨ_a + βΨ_b).

    Column directions u = αβ·e_a + e_b (massive) and w = −αβ·e_a + e_b
    (massless); rows r, r' with M_r' = t·M_r combine as β(e_r + t·e_r') and
    e_r' − t·e_r. The lead of each pair is its later column b.
    """
    mass = system.mass
    dim = system.dim
    if not np.all(np.isin(mass, (-1, 0, 1))) or not np.all(np.count_nonzero(mass, axis=1) == 2):
        raise SystemShapeError(
            f"{system.name}: mass matrix is neither I plus a signed permutation nor paired rows"
        )
    rows_of: dict[tuple[int, int], list[int]] = {}
    for r in range(dim):
        a, b = (int(k) for k in np.flatnonzero(mass[r]))
        rows_of.setdefault((a, b), []).append(r)
    columns = [k for pair in rows_of for k in pair]
    if sorted(columns) != list(range(dim)) or any(len(rows) != 2 for rows in rows_of.values()):
        raise SystemShapeError(f"{system.name}: mass rows do not pair up the components")

    identity = np.eye(dim, dtype=np.int64)
    pairs = sorted(rows_of.items(), key=lambda item: item[0][1])
    leads, plus, minus, plus_rows, minus_rows = [], [], [], [], []
    for (a, b), (r, r_other) in pairs:
        alpha, beta = int(mass[r, a]), int(mass[r, b])
        t = int(mass[r_other, a]) * alpha
        if not np.array_equal(mass[r_other], t * mass[r]):
            raise SystemShapeError(f"{system.name}: mass rows {r} and {r_other} are not proportional")
        leads.append(b)
        plus.append(alpha * beta * identity[:, a] + identity[:, b])
        minus.append(-alpha * beta * identity[:, a] + identity[:, b])
        plus_rows.append(beta * (identity[:, r] + t * identity[:, r_other]))
        minus_rows.append(identity[:, r_other] - t * identity[:, r])
    return (
        leads,
        np.stack(plus, axis=1),
        np.stack(minus, axis=1),
        np.stack(plus_rows, axis=1),
        np.stack(minus_rows, axis=1),
    )


def decouple(system: LinearPDESystem) -> DecoupledSystems:
    """Split Σ A^m∂_mΨ = κMΨ into its massive and massless halves.

    Two mass shapes are recognised. For M = I + Q with Q a signed involution
    commuting with every A^m, φ = Ψ_K + QΨ_K doubles the mass side to 2κ·φ and
    χ = Ψ_K − QΨ_K drops it; the free lepton pairs Ψ⁰ with Ψ³⁴ and Ψ¹²³ with Ψ¹²⁴.
    For a mass whose rows repeat in pairs, adding paired equations gives 2κ·φ
    and subtracting them gives zero; the antilepton pairs Ψ⁰ with Ψ¹²³ and Ψ³⁴
    with Ψ¹²⁴, so φ = Ψ_123 − Ψ_0 and χ = Ψ_123 + Ψ_0.

    Raises:
        SystemShapeError: if the mass has neither shape, or the derivative
            matrices couple the two halves.
    """
    if _is_involution_shaped(system.mass):
        leads, plus, minus, plus_rows, minus_rows = _involution_bases(system)
    else:
        leads, plus, minus, plus_rows, minus_rows = _paired_bases(system)
    labels = tuple(system.labels[k] for k in leads)
    half = len(leads)

    def block(rows: np.ndarray, matrix: np.ndarray, columns: np.ndarray, name: str) -> np.ndarray:
        product = rows.T @ matrix @ columns
        if np.any(product % 2):
            raise SystemShapeError(f"{system.name}: {name} does not halve to integers")
        return product // 2

    for m, a in system.derivatives.items():
        if np.any(plus_rows.T @ a @ minus) or np.any(minus_rows.T @ a @ plus):
            raise SystemShapeError(f"{system.name}: A^{m} couples the massive and massless halves")
    if not np.array_equal(block(plus_rows, system.mass, plus, "mass"), 2 * np.eye(half, dtype=np.int64)):
        raise SystemShapeError(f"{system.name}: massive half does not carry the mass 2κ")
    if np.any(minus_rows.T @ system.mass @ minus):
        raise SystemShapeError(f"{system.name}: massless half keeps a mass term")

    def sector(name: str, rows: np.ndarray, basis: np.ndarray, mass: np.ndarray) -> LinearPDESystem:
        derivatives = {m: block(rows, a, basis, f"A^{m}") for m, a in system.derivatives.items()}
        return LinearPDESystem(
            name=name,
            labels=labels,
            derivatives=derivatives,
            mass=mass,
            coupling=2 * system.coupling,
            derivative_kind=system.derivative_kind,
            mass_kind=system.mass_kind,
            params=system.params,
        )

    massive = sector("massive", plus_rows, plus, np.eye(half, dtype=np.int64))
    massless = sector("massless", minus_rows, minus, np.zeros((half, half), dtype=np.int64))
    logger.debug("decoupled %s into %d + %d components", system.name, half, half)
    return DecoupledSystems(massive, massless, plus, minus, labels, system, plus_rows, minus_rows)


def reversion_matrix(algebra: CliffordAlgebra) -> np.ndarray:
    """Diagonal of reversion signs (-1)^(k(k-1)/2) over the basis order."""
    signs = []
    for label in algebra.labels:
        grade = Blade.parse(label).grade
        signs.append(-1 if (grade * (grade - 1) // 2) % 2 else 1)
    return np.diag(np.array(signs, dtype=np.int64))


def antilepton_assemble(
    params: PhysicalParams | None = None,
    representation: RepForm | str = RepForm.QUATERNION,
    impulse: Literal["literal", "mirror"] = "literal",
    algebra: CliffordAlgebra | None = None,
) -> LinearPDESystem:
    """Antilepton system over right multiplications.

    ``literal`` assembles the mass side exactly as C^{1324L}_I·C^I_{K1324} + C^{123L}_K.
    Its rows repeat in pairs (Ψ⁰ with Ψ¹²³, Ψ³⁴ with Ψ¹²⁴), so :func:`decouple` splits
    it into φ = Ψ_123 − Ψ_0 with mass mc/ħ and a massless χ = Ψ_123 + Ψ_0. The
    matrix is nilpotent and the φ half obeys E² = p² − m², so energies with
    |p| < m are not real.

    ``mirror`` is the reversion image of the lepton system,
    R_m∂_mΨ = (mc/2ħ)(I − L_34)Ψ, whose massive half obeys E² = p² + m².
    """
    algebra = algebra or c4()
    params = params or PhysicalParams()
    form = RepForm.parse(representation) if isinstance(representation, str) else representation
    c = algebra.structure.entries.astype(np.int64)
    derivatives = {k: c[:, :, algebra.index(str(k))].copy() for k in range(1, algebra.n + 1)}
    identity = np.eye(algebra.dim, dtype=np.int64)

    if impulse == "mirror":
        mass = identity - conjugate_matrix(algebra, "34")
        mass_kind = RepKind.CONJUGATE
    elif impulse == "literal":
        tilde = conjugate_constants(algebra).entries.astype(np.int64)
        top, pseudo = algebra.index("1324"), algebra.index("123")
        # [K, L] = Σ_I C̃^{1324 L}_I C^I_{K 1324} + C̃^{123 L}_K
        mass = np.einsum("il,ik->kl", tilde[:, top, :], c[:, :, top]) + tilde[:, pseudo, :]
        mass_kind = RepKind.DIRECT
    else:
        raise DomainError(impulse, "antilepton impulse reading is 'mirror' or 'literal'")

    return LinearPDESystem(
        name=f"antilepton-{impulse}",
        labels=algebra.labels,
        derivatives=derivatives,
        mass=mass,
        coupling=MASS * SPEED / (2 * HBAR),
        derivative_kind=RepKind.DIRECT,
        mass_kind=mass_kind,
        algebra=algebra,
        impulse=ImpulseField.antilepton(),
        layout=ANTILEPTON_QUATERNION if form is RepForm.QUATERNION else LEPTON_COMPLEX,
        params=params,
    )


def generation_permute(system: LinearPDESystem, generation: int) -> LinearPDESystem:
    """Relabel spatial indices cyclically (2: 3→2, 2→1, 1→3; 3: 3→1, 2→3, 1→2).

    A'^{π(m)} = P A^m Pᵀ and M' = P M Pᵀ; generation 1 is the identity and the
    generation-2 map applied three times returns the input.
    """
    if generation not in CYCLIC_INDEX_MAPS:
        raise DomainError(generation, "generation must be 1, 2 or 3")
    if system.algebra is None or system.labels != system.algebra.labels:
        raise SystemShapeError(f"{system.name}: generations act on systems over the full basis")
    mapping = CYCLIC_INDEX_MAPS[generation]
    if not mapping:
        return system
    permutation = index_automorphism(system.algebra, mapping)
    derivatives = {
        mapping.get(m, m): permutation.transport(a) for m, a in system.derivatives.items()
    }
    return replace(
        system,
        name=f"{system.name}-gen{generation}",
        derivatives=dict(sorted(derivatives.items())),
        mass=permutation.transport(system.mass),
        impulse=system.impulse.permuted(permutation) if system.impulse else None,
    )
