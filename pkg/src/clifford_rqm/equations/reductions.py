"""Reductions of the free-lepton system to Dirac, Pauli and Schrödinger forms.

All three work on the massive sector of :func:`decouple`. Its unknowns are the
leads (32, 13, 21, 0, 1, 2, 3, 123), i.e. the quaternion components Ψ⁰ and
Ψ¹²³, or the complex components ψ13, ψ0, ψ2, ψ123.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import sympy

from clifford_rqm.algebra.clifford import CliffordAlgebra
from clifford_rqm.equations.lepton import DecoupledSystems, decouple
from clifford_rqm.equations.types import LinearPDESystem
from clifford_rqm.exceptions import SystemShapeError
from clifford_rqm.representations.approximate import R1, R2, R3, CorrespondenceMap, approx_rep
from clifford_rqm.representations.regular import RegularRep, RepKind, regular_rep_conjugate
from clifford_rqm.representations.units import COMPLEX_ABI
from clifford_rqm.utils.logging import get_logger

logger = get_logger(__name__)

DERIVATIVE_SYMBOLS: tuple[sympy.Symbol, ...] = sympy.symbols("d1:5")

COMPLEX_NUMBERS = {"1": sympy.Integer(1), "i": sympy.I}


def _massive(system: LinearPDESystem) -> tuple[CliffordAlgebra, DecoupledSystems]:
    if system.algebra is None:
        raise SystemShapeError(f"{system.name}: reductions need a system assembled over an algebra")
    if system.directions != (1, 2, 3, 4):
        raise SystemShapeError(f"{system.name}: reductions need the four directions 1..4")
    return system.algebra, decouple(system)


def _approximation(algebra: CliffordAlgebra, cmap: CorrespondenceMap) -> RegularRep:
    return approx_rep(regular_rep_conjugate(algebra), cmap)


def _d(m: int) -> sympy.Symbol:
    return DERIVATIVE_SYMBOLS[m - 1]


def reduce_dirac(system: LinearPDESystem) -> LinearPDESystem:
    """The massive sector written with the R̃1 images of 𝓔^m.

    With Ψ³⁴ = Ψ¹²⁴ = 0 the χ components coincide with φ, leaving the
    8-component system R̃1(𝓔^m)∂_mΨ = (mc/ħ)Ψ.

    Raises:
        SystemShapeError: if the R̃1 images do not reproduce the massive sector.
    """
    algebra, decoupled = _massive(system)
    r1 = _approximation(algebra, R1)
    dirac = LinearPDESystem(
        name="dirac",
        labels=r1.order,
        derivatives={m: r1.real(str(m)) for m in system.directions},
        mass=np.eye(r1.size, dtype=np.int64),
        coupling=decoupled.massive.coupling,
        derivative_kind=RepKind.CONJUGATE,
        mass_kind=RepKind.DIRECT,
        params=system.params,
    )
    if not dirac.same_as(decoupled.massive):
        raise SystemShapeError(f"{system.name}: R1 images differ from the massive sector")
    return dirac


@dataclass(frozen=True)
class PauliReduction:
    """First-order quaternion pair and its composition.

    ``upper`` acts on Ψ¹²³ and gives κΨ⁰, ``lower`` acts on Ψ⁰ and gives κΨ¹²³;
    both are 4×4 polynomials in d1..d4 built from the R̃2 images.
    ``operator = upper·lower`` equals ``wave_operator``·identity.
    """

    images: dict[int, np.ndarray]
    signs: dict[int, tuple[int, int]]
    upper: sympy.Matrix
    lower: sympy.Matrix
    operator: sympy.Matrix
    wave_operator: sympy.Expr
    coupling: sympy.Expr
    unpacking: dict[str, tuple[str, str]]


def _block_sign(block: np.ndarray, image: np.ndarray, where: str) -> int:
    if np.array_equal(block, image):
        return 1
    if np.array_equal(block, -image):
        return -1
    raise SystemShapeError(f"{where} is not ± the approximate image")


def reduce_pauli(system: LinearPDESystem) -> PauliReduction:
    """Read the R̃2 images out of the massive sector and compose the two first-order operators.

    Raises:
        SystemShapeError: if the massive sector does not have off-diagonal
            4×4 blocks equal to ±R̃2(𝓔^m), or the composition is not scalar.
    """
    algebra, decoupled = _massive(system)
    r2 = _approximation(algebra, R2)
    massive = decoupled.massive
    if massive.dim != 8:
        raise SystemShapeError(f"{system.name}: massive sector has {massive.dim} components, expected 8")

    images = {m: r2.real(str(m)) for m in massive.directions}
    signs = {}
    upper = sympy.zeros(4, 4)
    lower = sympy.zeros(4, 4)
    for m, a in massive.derivatives.items():
        if np.any(a[:4, :4]) or np.any(a[4:, 4:]):
            raise SystemShapeError(f"A^{m} of the massive sector couples a component to itself")
        s_up = _block_sign(a[:4, 4:], images[m], f"upper block of A^{m}")
        s_low = _block_sign(a[4:, :4], images[m], f"lower block of A^{m}")
        signs[m] = (s_up, s_low)
        upper += s_up * _d(m) * sympy.Matrix(images[m].tolist())
        lower += s_low * _d(m) * sympy.Matrix(images[m].tolist())

    operator = (upper * lower).applyfunc(sympy.expand)
    wave = operator[0, 0]
    if operator != wave * sympy.eye(4):
        raise SystemShapeError("composed operator is not a multiple of the identity")
    logger.debug("Pauli composition: %s", wave)
    return PauliReduction(
        images=images,
        signs=signs,
        upper=upper,
        lower=lower,
        operator=operator,
        wave_operator=wave,
        coupling=massive.coupling,
        unpacking={"0": ("13", "0"), "123": ("2", "123")},
    )


@dataclass(frozen=True)
class SchrodingerReduction:
    """Complex four-component system and the equation left for ψ0.

    ``units[m]`` is the R̃3 image of 𝓔^m as a complex number and ``signs[m]``
    the integer pattern S^m with the complex block of A^m equal to units[m]·S^m.
    ``first_order`` is Σ_m units[m]·S^m·d_m; ``operator`` is the ψ0 diagonal
    entry of its square, ``coefficients`` its d_m² coefficients and
    ``pattern`` those coefficients divided by units[m]².
    """

    names: tuple[str, ...]
    units: dict[int, sympy.Expr]
    signs: dict[int, np.ndarray]
    first_order: sympy.Matrix
    operator: sympy.Expr
    coefficients: dict[int, sympy.Expr]
    pattern: dict[int, int]
    system: LinearPDESystem


def reduce_schrodinger(system: LinearPDESystem) -> SchrodingerReduction:
    """Divide the complex massive sector by the R̃3 scalars and eliminate down to ψ0.

    Raises:
        SystemShapeError: if a 2×2 block is not ± the R̃3 image of its
            direction, or ψ0 does not decouple after squaring.
    """
    algebra, decoupled = _massive(system)
    r3 = _approximation(algebra, R3)
    massive = decoupled.massive
    names = tuple(massive.labels[k + 1] for k in range(0, massive.dim, 2))
    size = len(names)

    units: dict[int, sympy.Expr] = {}
    images: dict[int, np.ndarray] = {}
    signs: dict[int, np.ndarray] = {}
    for m, a in massive.derivatives.items():
        image = r3.real(str(m))
        found = COMPLEX_ABI.match(image, candidates=("1", "i"))
        if found is None:
            raise SystemShapeError(f"R3 image of 𝓔^{m} is not a complex number")
        units[m] = found[0] * COMPLEX_NUMBERS[found[1]]
        images[m] = image
        pattern = np.zeros((size, size), dtype=np.int64)
        for r in range(size):
            for c in range(size):
                block = a[2 * r : 2 * r + 2, 2 * c : 2 * c + 2]
                if np.any(block):
                    pattern[r, c] = _block_sign(block, image, f"block ({names[r]}, {names[c]}) of A^{m}")
        signs[m] = pattern

    first_order = sympy.zeros(size, size)
    for m in massive.directions:
        first_order += units[m] * _d(m) * sympy.Matrix(signs[m].tolist())
    square = (first_order * first_order).applyfunc(sympy.expand)
    row = names.index("0")
    for col in range(size):
        if col != row and square[row, col] != 0:
            raise SystemShapeError(f"ψ0 does not decouple: coefficient on ψ{names[col]} is {square[row, col]}")
    operator = square[row, row]
    coefficients = {m: operator.coeff(_d(m), 2) for m in massive.directions}
    pattern = {m: int(sympy.simplify(coefficients[m] / units[m] ** 2)) for m in massive.directions}

    rebuilt = LinearPDESystem(
        name="schrodinger",
        labels=massive.labels,
        derivatives={m: np.kron(signs[m], images[m]) for m in massive.directions},
        mass=massive.mass,
        coupling=massive.coupling,
        derivative_kind=massive.derivative_kind,
        mass_kind=massive.mass_kind,
        params=system.params,
    )
    logger.debug("Schrödinger elimination on ψ0: %s", operator)
    return SchrodingerReduction(names, units, signs, first_order, operator, coefficients, pattern, rebuilt)
