"""Exception hierarchy for clifford_rqm."""

from __future__ import annotations


class CliffordError(Exception):
    """Base exception for all library errors."""

    pass


class DomainError(CliffordError):
    """Raised when a value lies outside the domain an operation accepts.

    Examples are a generator index outside 1..n, a signature entry other
    than +1/-1, or an unknown unit symbol.

    Attributes:
        value: The offending value.
        detail: What was expected instead.
    """

    def __init__(self, value: object, detail: str):
        self.value = value
        self.detail = detail
        super().__init__(f"{value!r}: {detail}")


class ConfigurationError(CliffordError):
    """Raised for inconsistent construction input.

    Covers basis orders with duplicate or missing labels, correspondence maps
    that are not bijective onto a closed subalgebra, and bad settings.
    """


class NotInvertibleError(CliffordError):
    """Raised when an element has no two-sided inverse.

    Attributes:
        what: Description of the element (a multivector or a metric).
    """

    def __init__(self, what: str):
        self.what = what
        super().__init__(f"{what} is not invertible")


class DecompositionError(CliffordError):
    """Raised when a real matrix cannot be written over a unit algebra.

    Attributes:
        label: Basis label of the matrix being decomposed.
        row: Block row index (0-based) of the first offending block.
        col: Block column index (0-based) of the first offending block.
        reason: Short explanation.
    """

    def __init__(self, label: str, row: int, col: int, reason: str):
        self.label = label
        self.row = row
        self.col = col
        self.reason = reason
        super().__init__(f"matrix {label}: block ({row}, {col}) {reason}")


class GoldenFormatError(CliffordError):
    """Raised when a golden document cannot be parsed.

    Attributes:
        line_number: 1-based line of the problem, 0 when it concerns the whole document.
        message: Description of the problem.
    """

    def __init__(self, message: str, line_number: int = 0):
        self.line_number = line_number
        self.message = message
        where = f"line {line_number}: " if line_number else ""
        super().__init__(f"{where}{message}")


class ShapeMismatchError(CliffordError):
    """Raised when a golden document describes a different algebra, kind, form or order.

    Attributes:
        expected: Header value of the computed representation.
        actual: Header value found in the golden document.
    """

    def __init__(self, field_name: str, expected: object, actual: object):
        self.field_name = field_name
        self.expected = expected
        self.actual = actual
        super().__init__(f"{field_name} mismatch: computed {expected!r}, golden {actual!r}")


class SystemShapeError(CliffordError):
    """Raised when an equation system lacks the structure an operation needs."""


class DispersionError(CliffordError):
    """Raised when a plane-wave problem cannot be set up (singular time coefficient)."""
