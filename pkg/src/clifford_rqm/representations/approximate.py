"""Approximate representations: folding C_4 onto a closed subalgebra.

A correspondence map sends every replaced label to a kept one. For conjugate
matrices the rows are restricted to kept labels and the columns folded onto
their replacements; direct matrices fold rows and restrict columns. Each
level halves the matrix size (R1: 16→8, R2: →4, R3: →2).
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Mapping
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from clifford_rqm.algebra.blades import Blade, invert_label_map, label_map
from clifford_rqm.algebra.clifford import CliffordAlgebra
from clifford_rqm.exceptions import ConfigurationError
from clifford_rqm.representations.matrices import UnitMatrix
from clifford_rqm.representations.regular import RegularRep, RepForm, RepKind
from clifford_rqm.representations.units import COMPLEX_IMAGES
from clifford_rqm.utils.logging import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class CorrespondenceMap:
    """Relabeling of replaced basis labels onto a kept subalgebra (coefficient +1)."""

    name: str
    pairs: Mapping[str, str]
    kept: tuple[str, ...]

    def image(self, label: str) -> str:
        return label if label in self.kept else self.pairs[label]

    def validate(self, algebra: CliffordAlgebra) -> None:
        """Check coverage, uniform folding and closure of the kept labels.

        Raises:
            ConfigurationError: if any of the three fails.
        """
        kept = set(self.kept)
        replaced = set(self.pairs)
        if kept & replaced:
            raise ConfigurationError(f"{self.name}: labels both kept and replaced: {sorted(kept & replaced)}")
        if kept | replaced != set(algebra.labels):
            missing = sorted(set(algebra.labels) - kept - replaced)
            raise ConfigurationError(f"{self.name}: labels neither kept nor replaced: {missing}")
        stray = sorted(set(self.pairs.values()) - kept)
        if stray:
            raise ConfigurationError(f"{self.name}: replacements outside the kept labels: {stray}")
        fibres = Counter(self.pairs.values())
        if len(fibres) != len(kept) or len(set(fibres.values())) != 1:
            raise ConfigurationError(f"{self.name}: replaced labels do not fold evenly onto the kept ones")
        for left in self.kept:
            for right in self.kept:
                _, target = algebra.product(left, right)
                if target not in kept:
                    raise ConfigurationError(
                        f"{self.name}: kept labels not closed, {left}*{right} = {target}"
                    )


R1 = CorrespondenceMap(
    "r1",
    {"42": "32", "14": "13", "1324": "21", "34": "0", "134": "1", "234": "2", "4": "3", "124": "123"},
    ("32", "13", "21", "0", "1", "2", "3", "123"),
)

R2 = CorrespondenceMap(
    "r2",
    {
        "42": "32", "14": "13", "1324": "21", "34": "0",
        "134": "32", "234": "13", "4": "21", "124": "0",
        "1": "32", "2": "13", "3": "21", "123": "0",
    },
    ("32", "13", "21", "0"),
)

R3 = CorrespondenceMap(
    "r3",
    {
        "32": "21", "13": "0", "42": "21", "14": "0", "1324": "21", "34": "0",
        "1": "21", "2": "0", "3": "21", "123": "0",
        "134": "21", "234": "0", "4": "21", "124": "0",
    },
    ("21", "0"),
)

CORRESPONDENCE_MAPS: dict[str, CorrespondenceMap] = {m.name: m for m in (R1, R2, R3)}


def correspondence_map(name: str) -> CorrespondenceMap:
    try:
        return CORRESPONDENCE_MAPS[name.lower()]
    except KeyError:
        raise ConfigurationError(f"unknown correspondence map {name!r} (expected r1, r2 or r3)") from None


def approx_rep(rep: RegularRep, cmap: CorrespondenceMap) -> RegularRep:
    """Fold a real regular representation onto the kept labels of ``cmap``.

    Raises:
        ConfigurationError: for an invalid map or a representation that is not
            a real one over the algebra's own basis order.
    """
    algebra = rep.algebra
    cmap.validate(algebra)
    if rep.form is not RepForm.REAL or rep.order != algebra.labels:
        raise ConfigurationError("approximation starts from a real representation in basis order")

    kept = tuple(label for label in rep.order if label in cmap.kept)
    position = {label: k for k, label in enumerate(kept)}
    fold = np.zeros((len(kept), algebra.dim), dtype=np.int64)
    restrict = np.zeros((len(kept), algebra.dim), dtype=np.int64)
    for column, label in enumerate(rep.order):
        fold[position[cmap.image(label)], column] = 1
        if label in position:
            restrict[position[label], column] = 1

    matrices = {}
    for label in rep:
        value = rep.real(label)
        if rep.kind is RepKind.CONJUGATE:
            folded = restrict @ value @ fold.T
        else:
            folded = fold @ value @ restrict.T
        matrices[label] = UnitMatrix.real(folded, sign=rep[label].prefactor.coefficient)
    logger.debug("%s approximation of the %s rep: %d -> %d", cmap.name, rep.kind.value, algebra.dim, len(kept))
    return RegularRep(rep.kind, RepForm.REAL, algebra, kept, matrices, source=cmap.name)


class GammaIdentity(NamedTuple):
    """𝓔^target = phase · γ_word, ``target`` written as printed (314 = -134)."""

    target: str
    phase: str
    word: str


GAMMA_DICTIONARY: tuple[GammaIdentity, ...] = (
    GammaIdentity("21", "1", "12"),
    GammaIdentity("13", "1", "31"),
    GammaIdentity("32", "1", "23"),
    GammaIdentity("14", "1", "41"),
    GammaIdentity("42", "1", "24"),
    GammaIdentity("34", "1", "43"),
    GammaIdentity("123", "-i", "123"),
    GammaIdentity("124", "-i", "124"),
    GammaIdentity("234", "-i", "234"),
    GammaIdentity("314", "-i", "314"),
    GammaIdentity("1324", "1", "1324"),
)


@dataclass(frozen=True, eq=False)
class GammaSet:
    """Dirac matrices read off a conjugate approximate representation.

    Attributes:
        gammas: γ0 (identity) and γk = -i·𝓔^k for every generator present.
        complex_structure: Real image J of the scalar i.
        eta: γk² for k = 1..n, as computed.
        source: The representation the matrices came from.
    """

    gammas: dict[int, np.ndarray]
    complex_structure: np.ndarray
    eta: dict[int, int]
    source: RegularRep = field(repr=False)

    def word(self, indices: str) -> np.ndarray:
        """Product γ_{i1}γ_{i2}… for a digit string such as ``"314"``."""
        out = self.gammas[0].copy()
        for char in indices:
            out = out @ self.gammas[int(char)]
        return out

    def anticommutator(self, mu: int, nu: int) -> np.ndarray:
        a, b = self.gammas[mu], self.gammas[nu]
        return a @ b + b @ a

    def clifford_defects(self) -> list[tuple[int, int]]:
        """Index pairs (μ, ν), μ ≤ ν ≥ 1, where {γμ, γν} ≠ 2η_{μν}·identity."""
        identity = self.gammas[0]
        spatial = sorted(k for k in self.gammas if k)
        failures = []
        for mu in spatial:
            for nu in spatial:
                if nu < mu:
                    continue
                expected = 2 * self.eta[mu] * identity if mu == nu else 0 * identity
                if not np.array_equal(self.anticommutator(mu, nu), expected):
                    failures.append((mu, nu))
        return failures

    def phase_matrix(self, phase: str) -> np.ndarray:
        j = self.complex_structure
        return {"1": self.gammas[0], "-1": -self.gammas[0], "i": j, "-i": -j}[phase]

    def dictionary_defects(self) -> list[GammaIdentity]:
        """Entries of the γ dictionary that the representation does not satisfy.

        Identities naming generators absent from the set are skipped.
        """
        algebra = self.source.algebra
        names = invert_label_map(label_map(algebra.labels))
        failures = []
        for identity in GAMMA_DICTIONARY:
            if any(int(ch) not in self.gammas for ch in identity.word):
                continue
            canonical = Blade.parse(identity.target).canonical()
            label, label_sign = names[canonical.blade]
            lhs = canonical.sign * label_sign * self.source.real(label)
            rhs = self.phase_matrix(identity.phase) @ self.word(identity.word)
            if not np.array_equal(lhs, rhs):
                failures.append(identity)
        return failures


def gamma_set(rep: RegularRep) -> GammaSet:
    """γ0 = identity and γk = -i·𝓔^k from a conjugate real representation.

    Works on the R̃1 image of C̃_4 (full set) and on C̃_3 itself (γ1..γ3).

    Raises:
        ConfigurationError: if the rep is not conjugate and real, or i does
            not commute with the 𝓔^k.
    """
    if rep.kind is not RepKind.CONJUGATE or rep.form is not RepForm.REAL:
        raise ConfigurationError("gamma matrices come from a real conjugate representation")
    size = rep.size
    if size % 2:
        raise ConfigurationError("gamma matrices need an even-dimensional representation")
    j = np.kron(np.eye(size // 2, dtype=np.int64), COMPLEX_IMAGES["i"])
    identity = np.eye(size, dtype=np.int64)

    gammas = {0: identity}
    eta = {}
    for k in range(1, rep.algebra.n + 1):
        e_k = rep.real(str(k))
        if not np.array_equal(j @ e_k, e_k @ j):
            raise ConfigurationError(f"𝓔^{k} does not commute with the complex structure")
        gammas[k] = -(j @ e_k)
        square = gammas[k] @ gammas[k]
        eta[k] = int(square[0, 0])
    return GammaSet(gammas, j, eta, rep)
