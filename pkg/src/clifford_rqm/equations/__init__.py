"""Quantum postulates, assembled first-order systems and their reductions."""

from .assembly import (
    arbitrary_action_assemble,
    assemble_dirac_form,
    conjugate_matrix,
    contract_postulates,
    postulate_mass_matrix,
    quantum_postulate_rhs,
    right_action,
)
from .lepton import (
    DecoupledSystems,
    antilepton_assemble,
    assemble_free_lepton,
    decouple,
    generation_permute,
    reversion_matrix,
)
from .reductions import (
    DERIVATIVE_SYMBOLS,
    PauliReduction,
    SchrodingerReduction,
    reduce_dirac,
    reduce_pauli,
    reduce_schrodinger,
)
from .types import (
    ANTILEPTON_QUATERNION,
    GENERATION_NAMES,
    HBAR,
    LEPTON_COMPLEX,
    LEPTON_QUATERNION,
    LEPTON_TAGS,
    MASS,
    SPEED,
    ImpulseField,
    LinearPDESystem,
    PhysicalParams,
    PresentedSystem,
    WaveFunctionLayout,
    normalise_mass,
    tag_name,
)

__all__ = [
    "ANTILEPTON_QUATERNION",
    "DERIVATIVE_SYMBOLS",
    "GENERATION_NAMES",
    "HBAR",
    "LEPTON_COMPLEX",
    "LEPTON_QUATERNION",
    "LEPTON_TAGS",
    "MASS",
    "SPEED",
    "DecoupledSystems",
    "ImpulseField",
    "LinearPDESystem",
    "PauliReduction",
    "PhysicalParams",
    "PresentedSystem",
    "SchrodingerReduction",
    "WaveFunctionLayout",
    "antilepton_assemble",
    "arbitrary_action_assemble",
    "assemble_dirac_form",
    "assemble_free_lepton",
    "conjugate_matrix",
    "contract_postulates",
    "decouple",
    "generation_permute",
    "normalise_mass",
    "postulate_mass_matrix",
    "quantum_postulate_rhs",
    "reduce_dirac",
    "reduce_pauli",
    "reduce_schrodinger",
    "reversion_matrix",
    "right_action",
    "tag_name",
]
