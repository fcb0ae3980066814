"""Blade calculus and Clifford algebras with exact arithmetic.

Example:
    >>> from clifford_rqm.algebra import c3, MultiVector, multiply
    >>> algebra = c3()
    >>> str(multiply(MultiVector.basis("1"), MultiVector.basis("2"), algebra))
    '-e21'
"""

from .blades import (
    C3_LABELS,
    C4_LABELS,
    SCALAR_LABEL,
    Blade,
    LabelEntry,
    Signature,
    SignedBlade,
    blade_product,
    blade_square,
    canonicalize,
    default_labels,
    label_map,
    permutation_sign,
)
from .clifford import (
    C3_ORDER,
    C4_ORDER,
    CYCLIC_INDEX_MAPS,
    BasisOrder,
    Classification,
    CliffordAlgebra,
    Metric,
    SignedPermutation,
    StructureTensor,
    action_product,
    action_structure_differential,
    build,
    c3,
    c4,
    classify,
    general_nth_differential,
    general_structure_differential,
    index_automorphism,
    inverse,
    left_action,
    metric,
    multiply,
    nth_differential,
    preset,
    second_differential,
    structure_identity_defect,
)
from .multivector import MultiVector

__all__ = [
    "C3_LABELS",
    "C3_ORDER",
    "C4_LABELS",
    "C4_ORDER",
    "CYCLIC_INDEX_MAPS",
    "SCALAR_LABEL",
    "BasisOrder",
    "Blade",
    "Classification",
    "CliffordAlgebra",
    "LabelEntry",
    "Metric",
    "MultiVector",
    "SignedBlade",
    "SignedPermutation",
    "Signature",
    "StructureTensor",
    "action_product",
    "action_structure_differential",
    "blade_product",
    "blade_square",
    "build",
    "c3",
    "c4",
    "canonicalize",
    "classify",
    "default_labels",
    "general_nth_differential",
    "general_structure_differential",
    "index_automorphism",
    "inverse",
    "label_map",
    "left_action",
    "metric",
    "multiply",
    "nth_differential",
    "permutation_sign",
    "preset",
    "second_differential",
    "structure_identity_defect",
]
