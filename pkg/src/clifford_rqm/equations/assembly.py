"""Quantum postulates and their contraction into first-order systems.

Derivative coordinates follow ∂_Mψ^I = (1/S⁰)·C^I_{LR}·p^R_M·ψ^L; contracting
with the conjugate constants C^{MK}_I turns them into Σ_m A^m ∂_m Ψ = κ·M·Ψ.
"""

from __future__ import annotations

from collections.abc import Mapping, Sequence
from fractions import Fraction

import numpy as np
import sympy

from clifford_rqm.algebra.blades import SCALAR_LABEL
from clifford_rqm.algebra.clifford import CliffordAlgebra, StructureTensor, inverse, multiply
from clifford_rqm.algebra.multivector import MultiVector
from clifford_rqm.equations.types import (
    HBAR,
    MASS,
    SPEED,
    ImpulseField,
    LinearPDESystem,
    PhysicalParams,
    normalise_mass,
)
from clifford_rqm.exceptions import DomainError
from clifford_rqm.representations.regular import conjugate_constants
from clifford_rqm.utils.logging import get_logger

logger = get_logger(__name__)


def _fraction_matrix(dim: int) -> np.ndarray:
    matrix = np.empty((dim, dim), dtype=object)
    matrix[:, :] = Fraction(0)
    return matrix


def right_action(algebra: CliffordAlgebra, x: Mapping[str, Fraction] | MultiVector) -> np.ndarray:
    """Matrix of y ↦ y∘x: entry [I, L] = Σ_R C^I_{LR} x^R (exact)."""
    coords = x.coords if isinstance(x, MultiVector) else x
    c = algebra.structure.entries
    matrix = _fraction_matrix(algebra.dim)
    for label, value in coords.items():
        matrix = matrix + c[:, :, algebra.index(label)].astype(object) * Fraction(value)
    return matrix


def conjugate_matrix(algebra: CliffordAlgebra, label: str, tilde: StructureTensor | None = None) -> np.ndarray:
    """Real conjugate matrix of 𝓔^M: entry (K, L) = (𝓔^M)²·C̃^{MK}_L."""
    tilde = tilde or conjugate_constants(algebra)
    m = algebra.index(label)
    zero = algebra.index(SCALAR_LABEL)
    square = int(tilde.entries[zero, m, m])
    return square * tilde.entries[:, m, :].T.astype(np.int64)


def _vector_labels(algebra: CliffordAlgebra) -> dict[int, str]:
    return {k: str(k) for k in range(1, algebra.n + 1)}


def _psi_vector(psi: Sequence[object] | MultiVector, algebra: CliffordAlgebra) -> sympy.Matrix:
    if isinstance(psi, MultiVector):
        values = psi.to_vector(algebra.labels)
    else:
        values = list(psi)
    if len(values) != algebra.dim:
        raise DomainError(len(values), f"wave function needs {algebra.dim} components")
    return sympy.Matrix(
        [sympy.Rational(v.numerator, v.denominator) if isinstance(v, Fraction) else sympy.sympify(v) for v in values]
    )


def _sympy(matrix: np.ndarray) -> sympy.Matrix:
    return sympy.Matrix(
        matrix.shape[0],
        matrix.shape[1],
        lambda r, c: sympy.Rational(Fraction(matrix[r, c]).numerator, Fraction(matrix[r, c]).denominator),
    )


def _unit_factor(params: PhysicalParams) -> sympy.Expr:
    return (MASS * SPEED / HBAR).subs(params.substitutions())


def quantum_postulate_rhs(
    psi: Sequence[object] | MultiVector,
    impulse: ImpulseField,
    algebra: CliffordAlgebra,
    params: PhysicalParams | None = None,
) -> dict[str, sympy.Matrix]:
    """∂_Mψ for every direction M carried by the impulse.

    Components of ``psi`` follow the algebra's basis order and may be numbers
    or sympy expressions.
    """
    params = params or PhysicalParams()
    vector = _psi_vector(psi, algebra)
    factor = _unit_factor(params)
    return {
        direction: factor * _sympy(right_action(algebra, impulse.along(direction))) * vector
        for direction in impulse.directions
    }


def _mass_from_weights(
    algebra: CliffordAlgebra,
    weights: Mapping[str, Mapping[str, Fraction] | MultiVector],
    tilde: StructureTensor,
) -> np.ndarray:
    mass = _fraction_matrix(algebra.dim)
    for direction, weight in weights.items():
        mass = mass + conjugate_matrix(algebra, direction, tilde).astype(object) @ right_action(algebra, weight)
    return mass


def postulate_mass_matrix(
    impulse: ImpulseField,
    algebra: CliffordAlgebra,
    conjugate: StructureTensor | None = None,
) -> np.ndarray:
    """Σ_M (𝓔^M conjugate matrix)·(right action of p_M), exact, in units of mc/ħ."""
    tilde = conjugate or conjugate_constants(algebra)
    weights = {direction: impulse.along(direction) for direction in impulse.directions}
    return _mass_from_weights(algebra, weights, tilde)


def _system(
    name: str,
    algebra: CliffordAlgebra,
    mass: np.ndarray,
    impulse: ImpulseField,
    params: PhysicalParams,
    tilde: StructureTensor,
) -> LinearPDESystem:
    integer_mass, coupling = normalise_mass(mass, MASS * SPEED / HBAR)
    derivatives = {
        k: conjugate_matrix(algebra, label, tilde) for k, label in _vector_labels(algebra).items()
    }
    return LinearPDESystem(
        name=name,
        labels=algebra.labels,
        derivatives=derivatives,
        mass=integer_mass,
        coupling=coupling,
        algebra=algebra,
        impulse=impulse,
        params=params,
    )


def assemble_dirac_form(
    impulse: ImpulseField,
    algebra: CliffordAlgebra,
    conjugate: StructureTensor | None = None,
    params: PhysicalParams | None = None,
) -> LinearPDESystem:
    """C^{MK}_I ∂_M ψ^I = (1/S⁰)·C^{MK}_I·C^I_{LR}·p^R_M·ψ^L.

    Derivative matrices are the conjugate matrices of the vectors 𝓔^1..𝓔^n;
    every impulse direction M contributes 𝓔^M-matrix · right action of p_M
    to the mass side.
    """
    tilde = conjugate or conjugate_constants(algebra)
    params = params or PhysicalParams()
    mass = postulate_mass_matrix(impulse, algebra, tilde)
    system = _system("dirac-form", algebra, mass, impulse, params, tilde)
    logger.debug("assembled %s over %s, coupling %s", system.name, algebra.name, system.coupling)
    return system


def arbitrary_action_assemble(
    action: MultiVector,
    impulse: ImpulseField,
    algebra: CliffordAlgebra,
    params: PhysicalParams | None = None,
) -> LinearPDESystem:
    """Mass side C^{MK}_I·C^I_{LP}·C^P_{QR}·p^R_M·(S⁻¹)^Q with S given in units of ħ.

    ``action = ε₀`` gives back :func:`assemble_dirac_form`.

    Raises:
        NotInvertibleError: if the action is a zero divisor.
    """
    params = params or PhysicalParams()
    tilde = conjugate_constants(algebra)
    action_inverse = inverse(action, algebra)
    weights = {
        direction: multiply(action_inverse, MultiVector(impulse.along(direction)), algebra)
        for direction in impulse.directions
    }
    system = _system("arbitrary-action", algebra, _mass_from_weights(algebra, weights, tilde), impulse, params, tilde)
    logger.debug("assembled %s for action %s", system.name, action)
    return system


def contract_postulates(
    rhs: Mapping[str, sympy.Matrix],
    algebra: CliffordAlgebra,
    conjugate: StructureTensor | None = None,
) -> sympy.Matrix:
    """Σ_M C^{MK}_I ∂_Mψ^I from postulate derivatives: the mass side of the system."""
    tilde = conjugate or conjugate_constants(algebra)
    total = sympy.zeros(algebra.dim, 1)
    for direction, derivative in rhs.items():
        total += _sympy(conjugate_matrix(algebra, direction, tilde)) * derivative
    return total
