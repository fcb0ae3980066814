"""Direct and conjugate regular representations of a Clifford algebra."""

from __future__ import annotations

from collections.abc import Iterator, Mapping
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from clifford_rqm.algebra.blades import SCALAR_LABEL
from clifford_rqm.algebra.clifford import CliffordAlgebra, StructureTensor, metric
from clifford_rqm.exceptions import ConfigurationError, DomainError
from clifford_rqm.representations.matrices import UnitMatrix
from clifford_rqm.utils.logging import get_logger

logger = get_logger(__name__)


class RepKind(str, Enum):
    """Which multiplication the basis matrices represent."""

    DIRECT = "direct"  # right comultiplier, entry (L, K) = C^L_{KI}
    CONJUGATE = "conjugate"  # left comultiplier on the conjugate basis

    @classmethod
    def parse(cls, value: str) -> RepKind:
        try:
            return cls(value.lower())
        except ValueError:
            raise ConfigurationError(f"unknown representation kind {value!r}") from None


class RepForm(str, Enum):
    REAL = "real"
    COMPLEX = "complex"
    QUATERNION = "quaternion"

    @classmethod
    def parse(cls, value: str) -> RepForm:
        try:
            return cls(value.lower())
        except ValueError:
            raise ConfigurationError(f"unknown representation form {value!r}") from None


@dataclass(frozen=True, eq=False)
class RegularRep:
    """One UnitMatrix per basis label of ``algebra``.

    Attributes:
        kind: Direct or conjugate.
        form: Real, complex or quaternion presentation.
        algebra: Source algebra.
        order: Row/column labels of the real matrices (after any regrouping).
        matrices: Basis label -> matrix, in the algebra's basis order.
        alias: Display renaming of unit symbols (``{"i": "j"}`` for basic 13).
        source: Short tag of how the rep was made (``"regular"``, ``"r1"``, …).
    """

    kind: RepKind
    form: RepForm
    algebra: CliffordAlgebra
    order: tuple[str, ...]
    matrices: Mapping[str, UnitMatrix]
    alias: Mapping[str, str] = field(default_factory=dict)
    source: str = "regular"

    def __getitem__(self, label: str) -> UnitMatrix:
        try:
            return self.matrices[label]
        except KeyError:
            raise DomainError(label, "no matrix for this label") from None

    def __iter__(self) -> Iterator[str]:
        return iter(self.matrices)

    def real(self, label: str) -> np.ndarray:
        return self[label].to_real()

    @property
    def size(self) -> int:
        return len(self.order)


def regular_rep_direct(algebra: CliffordAlgebra) -> RegularRep:
    """Matrix of ε_I has entry (L, K) = C^L_{KI}: right multiplication by ε_I."""
    c = algebra.structure.entries
    matrices = {
        label: UnitMatrix.real(c[:, :, i]) for i, label in enumerate(algebra.labels)
    }
    logger.debug("direct regular representation of %s", algebra.name)
    return RegularRep(RepKind.DIRECT, RepForm.REAL, algebra, algebra.labels, matrices)


def conjugate_constants(algebra: CliffordAlgebra) -> StructureTensor:
    """Raise and lower indices with the metric: C̃^{RQ}_P = g^{RI} g^{QK} C^L_{KI} g_{LP}.

    The result is stored like any structure tensor, ``entries[P, R, Q]`` being
    the coefficient of 𝓔^P in 𝓔^R∘𝓔^Q.

    Raises:
        NotInvertibleError: if the metric is not a signed diagonal.
    """
    g = metric(algebra)
    c = algebra.structure.entries.astype(np.int64)
    raised = np.einsum("ri,qk,lki,lp->prq", g.g_inv, g.g_inv, c, g.g)
    return StructureTensor(raised.astype(np.int8))


def conjugate_metric(algebra: CliffordAlgebra) -> tuple[int, ...]:
    """Squares (𝓔^I)² over the basis order, read off C̃^{II}_0."""
    tilde = conjugate_constants(algebra)
    zero = algebra.index(SCALAR_LABEL)
    return tuple(int(tilde.entries[zero, i, i]) for i in range(algebra.dim))


def _conjugate_from_constants(algebra: CliffordAlgebra, tilde: np.ndarray) -> dict[str, UnitMatrix]:
    zero = algebra.index(SCALAR_LABEL)
    matrices = {}
    for i, label in enumerate(algebra.labels):
        square = int(tilde[zero, i, i])
        # row K, column L: C̃^{IK}_L, shown with the prefactor (𝓔^I)²
        raw = tilde[:, i, :].T.astype(np.int64)
        matrices[label] = UnitMatrix.real(square * raw, sign=square)
    return matrices


def regular_rep_conjugate(algebra: CliffordAlgebra) -> RegularRep:
    """Left-comultiplier matrices of the conjugate basis, entry (K, L) = (𝓔^I)²·C̃^{IK}_L.

    𝓔^I∘𝓔^K is evaluated from the blade products of the direct algebra, and
    the result is checked against the representation induced by the
    metric-conjugated constants.

    Raises:
        ConfigurationError: if the two constructions disagree.
    """
    # 𝓔^I∘𝓔^K multiplies like ε_I∘ε_K: C̃^{IK}_L = C^L_{IK}
    matrices = _conjugate_from_constants(algebra, algebra.structure.entries)

    induced = _conjugate_from_constants(algebra, conjugate_constants(algebra).entries)
    for label, matrix in matrices.items():
        if matrix != induced[label]:
            raise ConfigurationError(f"conjugation formula disagrees with the product rule at {label}")
    logger.debug("conjugate regular representation of %s", algebra.name)
    return RegularRep(RepKind.CONJUGATE, RepForm.REAL, algebra, algebra.labels, matrices)


def homomorphism_defect(rep: RegularRep) -> int:
    """Count label pairs where the matrix product breaks the multiplication rule.

    Direct matrices are right multiplications, so M(ε_I)M(ε_K) = M(ε_K∘ε_I).
    A conjugate matrix (𝓔^I)²·L_Iᵀ equals L_I itself, so M(𝓔^I)M(𝓔^K) = M(𝓔^I∘𝓔^K).
    """
    algebra = rep.algebra
    reals = {label: rep.real(label) for label in algebra.labels}
    defects = 0
    for first in algebra.labels:
        for second in algebra.labels:
            if rep.kind is RepKind.DIRECT:
                sign, target = algebra.product(second, first)
            else:
                sign, target = algebra.product(first, second)
            if not np.array_equal(reals[first] @ reals[second], sign * reals[target]):
                defects += 1
    return defects
