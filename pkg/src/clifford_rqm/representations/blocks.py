"""Complex and quaternion block forms of real representations.

The prefactor of a quaternion form is the first p in (1, i, a, b) for which
every 4×4 block is ±p·q, q drawn from {𝟙, I} for direct matrices and from
{𝟙, σ1, σ2, σ3} for conjugate ones. The complex form is the quaternion form
written out cell by cell. Dimensions without a quaternion level fall back to
a single complex prefactor, then to entries over all of {1, i, a, b}.
"""

from __future__ import annotations

from collections.abc import Sequence

import numpy as np

from clifford_rqm.algebra.clifford import CYCLIC_INDEX_MAPS, index_automorphism
from clifford_rqm.exceptions import ConfigurationError, DecompositionError
from clifford_rqm.representations.matrices import UnitMatrix, decompose
from clifford_rqm.representations.regular import RegularRep, RepForm, RepKind
from clifford_rqm.representations.units import (
    COMPLEX_ABI,
    DIRECT_QUATERNION,
    PAULI,
    PREFACTOR_UNITS,
    UnitAlgebra,
)
from clifford_rqm.utils.logging import get_logger

logger = get_logger(__name__)

# 2-blade playing the imaginary unit -> (display name, generation index map)
BASIC_DIRECTIONS: dict[str, tuple[str, int]] = {
    "21": ("i", 1),
    "13": ("j", 2),
    "32": ("k", 3),
}

GROUP_SIZES = {RepForm.REAL: (1,), RepForm.COMPLEX: (2, 4), RepForm.QUATERNION: (4,)}


def quaternion_units(kind: RepKind) -> UnitAlgebra:
    return DIRECT_QUATERNION if kind is RepKind.DIRECT else PAULI


def _failure(label: str, matrix: np.ndarray, algebra: UnitAlgebra) -> DecompositionError:
    block = algebra.block
    size = matrix.shape[0] // block
    first_prefactor = None
    for r in range(size):
        for c in range(size):
            cell = matrix[r * block : (r + 1) * block, c * block : (c + 1) * block]
            if not np.any(cell):
                continue
            fits = [p for p in PREFACTOR_UNITS if algebra.match(cell, p) is not None]
            if not fits:
                return DecompositionError(label, r, c, f"is not a signed {algebra.name} unit")
            if first_prefactor is None:
                first_prefactor = fits[0]
            elif first_prefactor not in fits:
                return DecompositionError(
                    label, r, c, f"needs a prefactor other than {first_prefactor}"
                )
    return DecompositionError(label, 0, 0, "has no common prefactor")


def present(matrix: np.ndarray, form: RepForm, kind: RepKind, label: str, sign: int = 1) -> UnitMatrix:
    """Write one real matrix in ``form``.

    Raises:
        DecompositionError: if the blocks do not fit the unit algebra.
    """
    if form is RepForm.REAL:
        return UnitMatrix.real(matrix, sign=sign)

    dim = matrix.shape[0]
    if dim % 2:
        raise ConfigurationError(f"a {dim}x{dim} matrix has no complex form")
    units = quaternion_units(kind)
    if dim % 4 == 0:
        quaternion = decompose(matrix, units)
        if quaternion is not None:
            return quaternion if form is RepForm.QUATERNION else quaternion.expand()
        if form is RepForm.QUATERNION:
            raise _failure(label, matrix, units)
    elif form is RepForm.QUATERNION:
        raise ConfigurationError(f"a {dim}x{dim} matrix has no quaternion form")

    scalar = decompose(matrix, COMPLEX_ABI, candidates=("1",))
    if scalar is not None:
        return scalar
    logger.debug("matrix %s: no common complex prefactor, using entries over 1,i,a,b", label)
    general = decompose(matrix, COMPLEX_ABI, prefactors=("1",))
    if general is None:
        raise _failure(label, matrix, COMPLEX_ABI)
    return general


def _check_grouping(grouping: Sequence[Sequence[str]], order: tuple[str, ...], form: RepForm) -> list[str]:
    flat = [label for group in grouping for label in group]
    if len(set(flat)) != len(flat) or set(flat) != set(order):
        raise ConfigurationError("grouping must partition the basis labels")
    allowed = GROUP_SIZES[form]
    for group in grouping:
        if len(group) not in allowed:
            raise ConfigurationError(
                f"group {tuple(group)} has {len(group)} labels; {form.value} form takes {allowed}"
            )
    return flat


def block_decompose(
    rep: RegularRep,
    form: RepForm | str,
    grouping: Sequence[Sequence[str]] | None = None,
    basic: str = "21",
) -> RegularRep:
    """Re-express every matrix of a real representation over a unit algebra.

    Args:
        rep: Representation in real form.
        form: Target presentation.
        grouping: Label groups (pairs for complex, quadruples for quaternion)
            in display order; consecutive labels of ``rep.order`` by default.
        basic: 2-blade playing the imaginary unit. ``"13"`` and ``"32"`` conjugate
            by the cyclic index permutation and show the unit as j or k.

    Raises:
        ConfigurationError: on a bad grouping, basic direction or non-real input.
        DecompositionError: if a matrix does not fit the unit algebra.
    """
    form = RepForm.parse(form) if isinstance(form, str) else form
    if rep.form is not RepForm.REAL:
        raise ConfigurationError("block decomposition starts from a real representation")
    if basic not in BASIC_DIRECTIONS:
        raise ConfigurationError(f"basic direction must be one of {', '.join(BASIC_DIRECTIONS)}")

    reals = {label: rep.real(label) for label in rep}
    order = rep.order
    alias: dict[str, str] = {}
    unit_name, generation = BASIC_DIRECTIONS[basic]
    if generation != 1:
        if order != rep.algebra.labels:
            raise ConfigurationError("alternate basic directions need the algebra's own basis order")
        permutation = index_automorphism(rep.algebra, CYCLIC_INDEX_MAPS[generation])
        reals = {label: permutation.conjugate(m) for label, m in reals.items()}
        order = tuple(permutation.apply(label)[1] for label in order)
        alias = {"i": unit_name}

    if grouping is not None:
        flat = _check_grouping(grouping, order, form)
        positions = [order.index(label) for label in flat]
        reals = {label: m[np.ix_(positions, positions)] for label, m in reals.items()}
        order = tuple(flat)

    matrices = {
        label: present(m, form, rep.kind, label, sign=rep[label].prefactor.coefficient)
        for label, m in reals.items()
    }
    logger.debug(
        "%s %s rep of %s in %s form (basic %s)", rep.source, rep.kind.value, rep.algebra.name, form.value, basic
    )
    return RegularRep(rep.kind, form, rep.algebra, order, matrices, alias, rep.source)


def complex_groups(order: Sequence[str]) -> list[tuple[str, str]]:
    """Consecutive label pairs; the display name of a pair is its second label."""
    return [tuple(order[k : k + 2]) for k in range(0, len(order), 2)]  # type: ignore[misc]


def quaternion_groups(order: Sequence[str]) -> list[tuple[str, str, str, str]]:
    """Consecutive label quadruples, named after their last label."""
    return [tuple(order[k : k + 4]) for k in range(0, len(order), 4)]  # type: ignore[misc]


def display_labels(order: Sequence[str], form: RepForm) -> tuple[str, ...]:
    """Row names of a presented matrix: the last label of each group."""
    width = {RepForm.REAL: 1, RepForm.COMPLEX: 2, RepForm.QUATERNION: 4}[form]
    return tuple(order[k + width - 1] for k in range(0, len(order), width))
