"""Regular representations, block decompositions and approximate representations."""

from .approximate import (
    CORRESPONDENCE_MAPS,
    GAMMA_DICTIONARY,
    R1,
    R2,
    R3,
    CorrespondenceMap,
    GammaIdentity,
    GammaSet,
    approx_rep,
    correspondence_map,
    gamma_set,
)
from .blocks import BASIC_DIRECTIONS, block_decompose, display_labels, present, quaternion_units
from .matrices import UnitEntry, UnitMatrix, decompose
from .regular import (
    RegularRep,
    RepForm,
    RepKind,
    conjugate_constants,
    conjugate_metric,
    homomorphism_defect,
    regular_rep_conjugate,
    regular_rep_direct,
)
from .units import (
    COMPLEX_ABI,
    DIRECT_QUATERNION,
    PAULI,
    REAL,
    UnitAlgebra,
    UnitProduct,
    unit_algebra,
)

__all__ = [
    "BASIC_DIRECTIONS",
    "COMPLEX_ABI",
    "CORRESPONDENCE_MAPS",
    "DIRECT_QUATERNION",
    "GAMMA_DICTIONARY",
    "PAULI",
    "R1",
    "R2",
    "R3",
    "REAL",
    "CorrespondenceMap",
    "GammaIdentity",
    "GammaSet",
    "RegularRep",
    "RepForm",
    "RepKind",
    "UnitAlgebra",
    "UnitEntry",
    "UnitMatrix",
    "UnitProduct",
    "approx_rep",
    "block_decompose",
    "conjugate_constants",
    "conjugate_metric",
    "correspondence_map",
    "decompose",
    "display_labels",
    "gamma_set",
    "homomorphism_defect",
    "present",
    "quaternion_units",
    "regular_rep_conjugate",
    "regular_rep_direct",
    "unit_algebra",
]
