"""Blade calculus: canonical forms and signed products of generator sequences.

A label such as ``"32"`` is read left to right as the product of generators,
so ``"32"`` is e3∘e2. Internally every blade is reduced to its strictly
increasing index sequence plus a sign; the printed labels of the basis orders
below are only a naming layer on top of that (see :func:`label_map`).
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from itertools import combinations
from typing import NamedTuple

from clifford_rqm.exceptions import ConfigurationError, DomainError

SCALAR_LABEL = "0"

C3_LABELS: tuple[str, ...] = ("32", "13", "21", "0", "1", "2", "3", "123")
C4_LABELS: tuple[str, ...] = (
    "32", "13", "21", "0", "42", "14", "1324", "34",
    "1", "2", "3", "123", "134", "234", "4", "124",
)


@dataclass(frozen=True)
class Signature:
    """Squares of the generators, ``squares[k - 1]`` being g_kk."""

    squares: tuple[int, ...]

    def __post_init__(self) -> None:
        for value in self.squares:
            if value not in (1, -1):
                raise DomainError(value, "signature entries must be +1 or -1")

    @classmethod
    def parse(cls, text: str) -> Signature:
        """Build a signature from a string such as ``"+++-"`` (empty for n = 0)."""
        squares = []
        for char in text.strip():
            if char == "+":
                squares.append(1)
            elif char == "-":
                squares.append(-1)
            else:
                raise DomainError(text, "signature must be written with '+' and '-' only")
        return cls(tuple(squares))

    @property
    def n(self) -> int:
        return len(self.squares)

    def square_of(self, index: int) -> int:
        self.check_index(index)
        return self.squares[index - 1]

    def check_index(self, index: int) -> None:
        if not 1 <= index <= self.n:
            raise DomainError(index, f"generator index must lie in 1..{self.n}")

    def __str__(self) -> str:
        return "".join("+" if s > 0 else "-" for s in self.squares)


@dataclass(frozen=True)
class Blade:
    """An ordered product of distinct generators; the empty tuple is the unit."""

    indices: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if len(set(self.indices)) != len(self.indices):
            raise DomainError(self.indices, "blade indices must be distinct")
        if any(i < 1 for i in self.indices):
            raise DomainError(self.indices, "blade indices start at 1")

    @classmethod
    def parse(cls, label: str) -> Blade:
        return cls(parse_sequence(label))

    @property
    def label(self) -> str:
        return format_label(self.indices)

    @property
    def grade(self) -> int:
        return len(self.indices)

    @property
    def is_scalar(self) -> bool:
        return not self.indices

    def canonical(self) -> SignedBlade:
        """Sort the indices, returning the permutation sign with the sorted blade."""
        return SignedBlade(permutation_sign(self.indices), Blade(tuple(sorted(self.indices))))

    def __str__(self) -> str:
        return self.label


@dataclass(frozen=True)
class SignedBlade:
    """A blade with a sign in {-1, 0, +1}; 0 only ever accompanies the unit blade."""

    sign: int
    blade: Blade

    def __post_init__(self) -> None:
        if self.sign not in (-1, 0, 1):
            raise DomainError(self.sign, "blade sign must be -1, 0 or +1")
        if self.sign == 0 and not self.blade.is_scalar:
            raise DomainError(self.blade.label, "a vanishing sign is only paired with the unit")

    @property
    def label(self) -> str:
        return self.blade.label

    def __str__(self) -> str:
        prefix = {1: "+", -1: "-", 0: "0*"}[self.sign]
        return f"{prefix}{self.blade.label}"


class LabelEntry(NamedTuple):
    """Canonical blade behind a printed label and the sign relating the two."""

    blade: Blade
    sign: int


def parse_sequence(seq: str | Sequence[int]) -> tuple[int, ...]:
    """Turn ``"43142"`` or ``[4, 3, 1, 4, 2]`` into an index tuple; ``"0"`` is empty."""
    if isinstance(seq, str):
        text = seq.strip()
        if text in ("", SCALAR_LABEL):
            return ()
        if not text.isdigit() or "0" in text:
            raise DomainError(seq, "labels are strings of generator digits 1..9 or '0'")
        return tuple(int(ch) for ch in text)
    return tuple(int(i) for i in seq)


def format_label(indices: Iterable[int]) -> str:
    text = "".join(str(i) for i in indices)
    return text or SCALAR_LABEL


def permutation_sign(indices: Sequence[int]) -> int:
    """Sign of the permutation sorting ``indices`` (distinct entries), by inversion count."""
    inversions = sum(
        1
        for a in range(len(indices))
        for b in range(a + 1, len(indices))
        if indices[a] > indices[b]
    )
    return -1 if inversions % 2 else 1


def canonicalize(seq: str | Sequence[int], sig: Signature) -> SignedBlade:
    """Reduce a generator sequence to its increasing blade and accumulated sign.

    Adjacent distinct generators are swapped at the cost of a factor -1 and an
    adjacent pair (k, k) contracts to g_kk. For example ``"43142"`` with
    signature ``+++-`` reduces to ``-e1e2e3``.

    Raises:
        DomainError: if an index lies outside 1..n.
    """
    word = list(parse_sequence(seq))
    for index in word:
        sig.check_index(index)

    sign = 1
    changed = True
    while changed:
        changed = False
        for pos in range(len(word) - 1):
            left, right = word[pos], word[pos + 1]
            if left == right:
                sign *= sig.square_of(left)
                del word[pos : pos + 2]
                changed = True
                break
            if left > right:
                word[pos], word[pos + 1] = right, left
                sign = -sign
                changed = True
                break
    return SignedBlade(sign, Blade(tuple(word)))


def blade_square(blade: Blade | str, sig: Signature) -> int:
    """Sign of blade∘blade: (-1)^(k(k-1)/2) times the product of its generator squares."""
    if isinstance(blade, str):
        blade = Blade.parse(blade)
    sign = -1 if (blade.grade * (blade.grade - 1) // 2) % 2 else 1
    for index in blade.indices:
        sign *= sig.square_of(index)
    return sign


def default_labels(n: int) -> tuple[str, ...]:
    """Printed basis order for ``n`` generators.

    n = 3 and n = 4 use the orders of the published tables; other sizes list
    the blades grade by grade, each grade in colexicographic order.
    """
    if n == 3:
        return C3_LABELS
    if n == 4:
        return C4_LABELS
    labels = [SCALAR_LABEL]
    for grade in range(1, n + 1):
        blades = sorted(combinations(range(1, n + 1), grade), key=lambda c: tuple(reversed(c)))
        labels.extend(format_label(c) for c in blades)
    return tuple(labels)


def label_map(labels: Iterable[str]) -> dict[str, LabelEntry]:
    """Map every printed label to its canonical blade and relative sign.

    ``"21"`` maps to (e1e2, -1) because e2e1 = -e1e2; ``"1324"`` maps to
    (e1e2e3e4, -1).

    Raises:
        ConfigurationError: on duplicate labels, or two labels naming one blade.
    """
    entries: dict[str, LabelEntry] = {}
    seen: dict[Blade, str] = {}
    for label in labels:
        if label in entries:
            raise ConfigurationError(f"duplicate basis label {label!r}")
        canonical = Blade.parse(label).canonical()
        if canonical.blade in seen:
            raise ConfigurationError(
                f"labels {seen[canonical.blade]!r} and {label!r} name the same blade"
            )
        seen[canonical.blade] = label
        entries[label] = LabelEntry(canonical.blade, canonical.sign)
    return entries


def invert_label_map(entries: Mapping[str, LabelEntry]) -> dict[Blade, tuple[str, int]]:
    """Canonical blade -> (printed label, sign of the label relative to the blade)."""
    return {entry.blade: (label, entry.sign) for label, entry in entries.items()}


def blade_product(
    a: str | Blade,
    b: str | Blade,
    sig: Signature,
    labels: Iterable[str] | None = None,
) -> SignedBlade:
    """Product of two labelled blades, expressed against the printed label of the result.

    With the three-generator table order, ``blade_product("13", "21", +++)``
    is ``+32``: e1e3e2e1 = -e2e3 and the label "32" is itself -e2e3.

    Args:
        a: Left factor, printed label or Blade.
        b: Right factor.
        sig: Generator squares.
        labels: Basis order naming the result; :func:`default_labels` when omitted.
    """
    left = a.indices if isinstance(a, Blade) else parse_sequence(a)
    right = b.indices if isinstance(b, Blade) else parse_sequence(b)
    reduced = canonicalize(left + right, sig)

    names = invert_label_map(label_map(labels if labels is not None else default_labels(sig.n)))
    if reduced.blade not in names:
        raise ConfigurationError(f"basis order has no label for blade {reduced.blade.label}")
    label, label_sign = names[reduced.blade]
    # label = label_sign * canonical, so canonical = label_sign * label
    return SignedBlade(reduced.sign * label_sign, Blade.parse(label))
