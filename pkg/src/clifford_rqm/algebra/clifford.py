"""Clifford algebras with a fixed basis order, their structure constants and arithmetic."""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

import numpy as np
import sympy

from clifford_rqm.algebra.blades import (
    C3_LABELS,
    C4_LABELS,
    SCALAR_LABEL,
    Blade,
    Signature,
    blade_square,
    canonicalize,
    default_labels,
    invert_label_map,
    label_map,
)
from clifford_rqm.algebra.multivector import MultiVector, Scalar, as_fraction
from clifford_rqm.exceptions import ConfigurationError, DomainError, NotInvertibleError
from clifford_rqm.utils.logging import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class BasisOrder:
    """An ordered list of 2^n printed labels."""

    labels: tuple[str, ...]
    _positions: dict[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "labels", tuple(self.labels))
        object.__setattr__(self, "_positions", {label: i for i, label in enumerate(self.labels)})

    @classmethod
    def default(cls, n: int) -> BasisOrder:
        return cls(default_labels(n))

    def index(self, label: str) -> int:
        try:
            return self._positions[label]
        except KeyError:
            raise DomainError(label, "label is not part of the basis order") from None

    def __contains__(self, label: object) -> bool:
        return label in self._positions

    def __iter__(self) -> Iterator[str]:
        return iter(self.labels)

    def __len__(self) -> int:
        return len(self.labels)


C3_ORDER = BasisOrder(C3_LABELS)
C4_ORDER = BasisOrder(C4_LABELS)


@dataclass(frozen=True, eq=False)
class StructureTensor:
    """Dense store of C^L_{KI} as ``entries[L, K, I]`` (coefficient of L in K∘I)."""

    entries: np.ndarray

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    def coefficient(self, lower: int, left: int, right: int) -> int:
        return int(self.entries[lower, left, right])

    def product(self, left: int, right: int) -> tuple[int, int]:
        """(sign, L) with K∘I = sign·e_L; Clifford products hit exactly one L."""
        column = self.entries[:, left, right]
        (hits,) = np.nonzero(column)
        if len(hits) != 1:
            raise ConfigurationError(f"product ({left}, {right}) is not a single signed blade")
        target = int(hits[0])
        return int(column[target]), target

    def nonzero(self) -> dict[tuple[int, int, int], int]:
        return {
            (int(l_), int(k), int(i)): int(self.entries[l_, k, i])
            for l_, k, i in zip(*np.nonzero(self.entries), strict=True)
        }


@dataclass(frozen=True, eq=False)
class Metric:
    """g_IK = C^0_IK and its inverse, both diagonal for Clifford bases."""

    g: np.ndarray
    g_inv: np.ndarray

    def diagonal(self) -> tuple[int, ...]:
        return tuple(int(v) for v in np.diag(self.g))


@dataclass(frozen=True, eq=False)
class CliffordAlgebra:
    """Generator count, signature, basis order and the structure tensor."""

    name: str
    signature: Signature
    order: BasisOrder
    structure: StructureTensor

    @property
    def n(self) -> int:
        return self.signature.n

    @property
    def dim(self) -> int:
        return len(self.order)

    @property
    def labels(self) -> tuple[str, ...]:
        return self.order.labels

    def index(self, label: str) -> int:
        return self.order.index(label)

    def product(self, left: str, right: str) -> tuple[int, str]:
        sign, target = self.structure.product(self.index(left), self.index(right))
        return sign, self.labels[target]

    def square(self, label: str) -> int:
        sign, target = self.product(label, label)
        if target != SCALAR_LABEL:
            raise ConfigurationError(f"square of {label} is not a scalar")
        return sign


def build(
    n: int,
    sig: Signature,
    order: BasisOrder | Sequence[str] | None = None,
    name: str | None = None,
) -> CliffordAlgebra:
    """Construct C_n with C^L_{KI} read off the blade product of labels K and I.

    Raises:
        ConfigurationError: if the order does not name every blade of C_n exactly once.
    """
    if sig.n != n:
        raise ConfigurationError(f"signature has {sig.n} entries for {n} generators")
    if order is None:
        order = BasisOrder.default(n)
    elif not isinstance(order, BasisOrder):
        order = BasisOrder(tuple(order))

    entries = label_map(order.labels)
    if len(order) != 2**n:
        raise ConfigurationError(f"basis order has {len(order)} labels, expected {2**n}")
    for label, entry in entries.items():
        if any(i > n for i in entry.blade.indices):
            raise ConfigurationError(f"label {label!r} uses a generator beyond {n}")

    names = invert_label_map(entries)
    dim = len(order)
    tensor = np.zeros((dim, dim, dim), dtype=np.int8)
    for k, left in enumerate(order.labels):
        left_entry = entries[left]
        for i, right in enumerate(order.labels):
            right_entry = entries[right]
            reduced = canonicalize(left_entry.blade.indices + right_entry.blade.indices, sig)
            target, target_sign = names[reduced.blade]
            sign = reduced.sign * left_entry.sign * right_entry.sign * target_sign
            tensor[order.index(target), k, i] = sign

    algebra = CliffordAlgebra(
        name=name or f"c{n}",
        signature=sig,
        order=order,
        structure=StructureTensor(tensor),
    )
    logger.debug("built %s: dim=%d signature=%s", algebra.name, dim, sig)
    return algebra


def c3() -> CliffordAlgebra:
    """C_3 with signature (+,+,+) in the printed C3 table order."""
    return build(3, Signature((1, 1, 1)), C3_ORDER, name="c3")


def c4() -> CliffordAlgebra:
    """C_4 with signature (+,+,+,-) in the printed C4 table order."""
    return build(4, Signature((1, 1, 1, -1)), C4_ORDER, name="c4")


def preset(name: str) -> CliffordAlgebra:
    builders = {"c3": c3, "c4": c4}
    try:
        return builders[name.lower()]()
    except KeyError:
        raise ConfigurationError(f"unknown algebra preset {name!r}") from None


def metric(algebra: CliffordAlgebra) -> Metric:
    """g_IK = C^0_IK; must be a signed diagonal, whose inverse is itself."""
    g = algebra.structure.entries[algebra.index(SCALAR_LABEL)].astype(np.int64)
    off_diagonal = g - np.diag(np.diag(g))
    if np.any(off_diagonal) or not np.all(np.isin(np.diag(g), (-1, 1))):
        raise NotInvertibleError(f"metric of {algebra.name}")
    return Metric(g=g, g_inv=g.copy())


def structure_identity_defect(algebra: CliffordAlgebra) -> int:
    """Number of (M, N, I, K) where C^M_LK C^L_NI differs from C^M_NL C^L_IK."""
    c = algebra.structure.entries.astype(np.int64)
    left = np.einsum("mlk,lni->mnik", c, c)
    right = np.einsum("mnl,lik->mnik", c, c)
    return int(np.count_nonzero(left - right))


def _check_support(x: MultiVector, algebra: CliffordAlgebra) -> None:
    for label in x.support:
        if label not in algebra.order:
            raise DomainError(label, f"not a basis label of {algebra.name}")


def multiply(x: MultiVector, y: MultiVector, algebra: CliffordAlgebra) -> MultiVector:
    """x∘y with coordinates x^K y^I C^L_{KI}."""
    _check_support(x, algebra)
    _check_support(y, algebra)
    result: dict[str, Fraction] = {}
    for left, a in x.coords.items():
        for right, b in y.coords.items():
            sign, target = algebra.product(left, right)
            result[target] = result.get(target, Fraction(0)) + sign * a * b
    return MultiVector(result)


def left_action(x: MultiVector, algebra: CliffordAlgebra) -> np.ndarray:
    """Matrix of y ↦ x∘y: entry [L, I] = Σ_K x^K C^L_{KI} (object dtype, exact)."""
    _check_support(x, algebra)
    matrix = np.zeros((algebra.dim, algebra.dim), dtype=object)
    matrix[:, :] = Fraction(0)
    c = algebra.structure.entries
    for label, value in x.coords.items():
        matrix = matrix + c[:, algebra.index(label), :].astype(object) * value
    return matrix


def inverse(x: MultiVector, algebra: CliffordAlgebra) -> MultiVector:
    """Two-sided inverse, solved from the left-regular action of x.

    Raises:
        NotInvertibleError: if x is zero or a zero divisor.
    """
    if x.is_zero:
        raise NotInvertibleError("the zero multivector")
    exact = left_action(x, algebra)
    action = sympy.Matrix(
        algebra.dim,
        algebra.dim,
        lambda r, c: sympy.Rational(exact[r, c].numerator, exact[r, c].denominator),
    )
    if action.det() == 0:
        raise NotInvertibleError(str(x))

    unit = sympy.zeros(algebra.dim, 1)
    unit[algebra.index(SCALAR_LABEL), 0] = 1
    solution = action.LUsolve(unit)
    candidate = MultiVector.from_vector(
        algebra.labels, (Fraction(int(v.p), int(v.q)) for v in solution)
    )

    one = MultiVector.scalar(1)
    if multiply(x, candidate, algebra) != one or multiply(candidate, x, algebra) != one:
        raise NotInvertibleError(f"{x} (left and right inverses differ)")
    return candidate


@dataclass(frozen=True)
class Classification:
    """Squares of the basis blades grouped by grade, grades in increasing order."""

    grades: tuple[tuple[int, ...], ...]

    def __str__(self) -> str:
        groups = ("".join("+" if s > 0 else "-" for s in grade) for grade in self.grades)
        return "(" + ", ".join(groups) + ")"


def classify(n: int, sig: Signature) -> Classification:
    """Square signs of all blades of C_n, grade by grade, colexicographic within a grade.

    For (+,+,+,-) this gives ``(+, +++-, ---+++, -+++, -)``.
    """
    if sig.n != n:
        raise ConfigurationError(f"signature has {sig.n} entries for {n} generators")
    grades = []
    for grade in range(n + 1):
        subsets = sorted(combinations(range(1, n + 1), grade), key=lambda s: tuple(reversed(s)))
        grades.append(tuple(blade_square(Blade(s), sig) for s in subsets))
    return Classification(tuple(grades))


def second_differential(dx1: MultiVector, dx2: MultiVector, algebra: CliffordAlgebra) -> MultiVector:
    """δ2δ1x = δ1x∘δ2x near the unit."""
    return multiply(dx1, dx2, algebra)


def nth_differential(differentials: Sequence[MultiVector], algebra: CliffordAlgebra) -> MultiVector:
    """d1∘d2∘…∘dn; the empty chain is the unit."""
    result = MultiVector.scalar(1)
    for d in differentials:
        result = multiply(result, d, algebra)
    return result


def general_structure_differential(
    dx1: MultiVector, dx2: MultiVector, x: MultiVector, algebra: CliffordAlgebra
) -> MultiVector:
    """δ2δ1x = δ1x∘x⁻¹∘δ2x at a general point x."""
    return multiply(multiply(dx1, inverse(x, algebra), algebra), dx2, algebra)


def general_nth_differential(
    differentials: Sequence[MultiVector], x: MultiVector, algebra: CliffordAlgebra
) -> MultiVector:
    """d1∘x⁻¹∘d2∘x⁻¹∘…∘dn."""
    if not differentials:
        return MultiVector.scalar(1)
    x_inv = inverse(x, algebra)
    result = differentials[0]
    for d in differentials[1:]:
        result = multiply(multiply(result, x_inv, algebra), d, algebra)
    return result


def action_product(
    s1: MultiVector, s2: MultiVector, algebra: CliffordAlgebra, s0: Scalar = 1
) -> MultiVector:
    """Product in the action algebra, S = -(1/S⁰)·S1∘S2."""
    return multiply(s1, s2, algebra).scaled(-1 / as_fraction(s0))


def action_structure_differential(
    d1: MultiVector, d2: MultiVector, algebra: CliffordAlgebra, s0: Scalar = 1
) -> MultiVector:
    """δ2δ1S = -(1/S⁰)·δ1S∘δ2S."""
    return action_product(d1, d2, algebra, s0)


# generator relabelings of the three spatial indices: 1 identity, 2 and 3 cyclic
CYCLIC_INDEX_MAPS: dict[int, dict[int, int]] = {
    1: {},
    2: {3: 2, 2: 1, 1: 3},
    3: {3: 1, 2: 3, 1: 2},
}


@dataclass(frozen=True, eq=False)
class SignedPermutation:
    """Basis map e_K -> s_K·e_{σK} induced by relabeling generators.

    ``matrix`` has column K equal to s_K at row σK; ``images`` maps each label
    to (s_K, σK).
    """

    matrix: np.ndarray
    images: dict[str, tuple[int, str]]

    def apply(self, label: str) -> tuple[int, str]:
        try:
            return self.images[label]
        except KeyError:
            raise DomainError(label, "label is not part of the permuted basis") from None

    def conjugate(self, m: np.ndarray) -> np.ndarray:
        """Pᵀ·m·P, the matrix of m in the permuted basis."""
        return self.matrix.T @ m @ self.matrix

    def transport(self, m: np.ndarray) -> np.ndarray:
        """P·m·Pᵀ, carrying an operator along the relabeling."""
        return self.matrix @ m @ self.matrix.T


def index_automorphism(algebra: CliffordAlgebra, mapping: dict[int, int]) -> SignedPermutation:
    """Extend a generator relabeling to the whole basis.

    Raises:
        ConfigurationError: if the relabeling is not a bijection of 1..n or
            moves a generator onto one with a different square.
    """
    full = {i: mapping.get(i, i) for i in range(1, algebra.n + 1)}
    if sorted(full.values()) != list(range(1, algebra.n + 1)):
        raise ConfigurationError(f"index map {mapping} is not a permutation of 1..{algebra.n}")
    sig = algebra.signature
    for source, target in full.items():
        if sig.square_of(source) != sig.square_of(target):
            raise ConfigurationError(f"index map sends e{source} to e{target} of different square")

    names = invert_label_map(label_map(algebra.labels))
    matrix = np.zeros((algebra.dim, algebra.dim), dtype=np.int64)
    images: dict[str, tuple[int, str]] = {}
    for k, label in enumerate(algebra.labels):
        word = [full[i] for i in Blade.parse(label).indices]
        reduced = canonicalize(word, sig)
        target, target_sign = names[reduced.blade]
        sign = reduced.sign * target_sign
        images[label] = (sign, target)
        matrix[algebra.index(target), k] = sign
    return SignedPermutation(matrix, images)
