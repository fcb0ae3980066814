"""Exact multivectors: finitely supported maps from basis labels to rationals."""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational

from clifford_rqm.algebra.blades import SCALAR_LABEL

Scalar = int | Fraction


def as_fraction(value: Scalar | str) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, Rational | int | str):
        return Fraction(value)
    raise TypeError(f"exact coefficient expected, got {type(value).__name__}")


@dataclass(frozen=True)
class MultiVector:
    """Coordinates x^I over printed basis labels; zero coefficients are never stored."""

    coords: Mapping[str, Fraction] = field(default_factory=dict)

    def __post_init__(self) -> None:
        cleaned = {
            label: as_fraction(value) for label, value in self.coords.items() if value != 0
        }
        object.__setattr__(self, "coords", cleaned)

    @classmethod
    def zero(cls) -> MultiVector:
        return cls({})

    @classmethod
    def basis(cls, label: str, coefficient: Scalar = 1) -> MultiVector:
        return cls({label: as_fraction(coefficient)})

    @classmethod
    def scalar(cls, value: Scalar) -> MultiVector:
        return cls.basis(SCALAR_LABEL, value)

    @classmethod
    def from_vector(cls, labels: Sequence[str], values: Iterable[Scalar]) -> MultiVector:
        return cls(dict(zip(labels, (as_fraction(v) for v in values), strict=True)))

    def coefficient(self, label: str) -> Fraction:
        return self.coords.get(label, Fraction(0))

    def to_vector(self, labels: Sequence[str]) -> list[Fraction]:
        return [self.coefficient(label) for label in labels]

    @property
    def support(self) -> tuple[str, ...]:
        return tuple(self.coords)

    @property
    def is_zero(self) -> bool:
        return not self.coords

    def scaled(self, factor: Scalar) -> MultiVector:
        f = as_fraction(factor)
        return MultiVector({label: value * f for label, value in self.coords.items()})

    def __add__(self, other: MultiVector) -> MultiVector:
        total = dict(self.coords)
        for label, value in other.coords.items():
            total[label] = total.get(label, Fraction(0)) + value
        return MultiVector(total)

    def __neg__(self) -> MultiVector:
        return self.scaled(-1)

    def __sub__(self, other: MultiVector) -> MultiVector:
        return self + (-other)

    def __mul__(self, factor: Scalar) -> MultiVector:
        return self.scaled(factor)

    __rmul__ = __mul__

    def __str__(self) -> str:
        if not self.coords:
            return "0"
        terms = []
        for label, value in self.coords.items():
            sign = "-" if value < 0 else "+"
            magnitude = abs(value)
            coef = "" if magnitude == 1 else f"{magnitude}*"
            terms.append(f"{sign} {coef}e{label}")
        text = " ".join(terms)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]
