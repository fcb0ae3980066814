"""Unit tests for assembled equation systems and their reductions."""

from fractions import Fraction

import numpy as np
import pytest
import sympy

from clifford_rqm.algebra import CYCLIC_INDEX_MAPS, MultiVector
from clifford_rqm.equations import (
    DERIVATIVE_SYMBOLS,
    HBAR,
    MASS,
    SPEED,
    ImpulseField,
    LinearPDESystem,
    PhysicalParams,
    antilepton_assemble,
    arbitrary_action_assemble,
    assemble_dirac_form,
    assemble_free_lepton,
    conjugate_matrix,
    contract_postulates,
    decouple,
    generation_permute,
    normalise_mass,
    quantum_postulate_rhs,
    reduce_dirac,
    reduce_pauli,
    reduce_schrodinger,
    reversion_matrix,
    tag_name,
)
from clifford_rqm.exceptions import DomainError, SystemShapeError
from clifford_rqm.representations import DIRECT_QUATERNION, PAULI, RepForm, UnitEntry

d1, d2, d3, d4 = DERIVATIVE_SYMBOLS

# quaternion blocks of 𝓔^1..𝓔^4 (prefactor i), rows and columns Ψ⁰, Ψ³⁴, Ψ¹²³, Ψ¹²⁴
CONJUGATE_VECTOR_BLOCKS = {
    m: [[".", ".", f"-s{m}", "."], [".", ".", ".", f"-s{m}"], [f"+s{m}", ".", ".", "."], [".", f"+s{m}", ".", "."]]
    for m in (1, 2, 3)
} | {4: [[".", ".", ".", "+1"], [".", ".", "+1", "."], [".", "+1", ".", "."], ["+1", ".", ".", "."]]}

# quaternion blocks of ε_1..ε_4 as (prefactor, rows)
DIRECT_VECTOR_BLOCKS = {
    1: ("a", [[".", ".", "-I", "."], [".", ".", ".", "-I"], ["+I", ".", ".", "."], [".", "+I", ".", "."]]),
    2: ("b", [[".", ".", "-I", "."], [".", ".", ".", "-I"], ["+I", ".", ".", "."], [".", "+I", ".", "."]]),
    3: ("i", [[".", ".", "-1", "."], [".", ".", ".", "+1"], ["+1", ".", ".", "."], [".", "-1", ".", "."]]),
    4: ("i", [[".", ".", ".", "+1"], [".", ".", "-1", "."], [".", "-1", ".", "."], ["+1", ".", ".", "."]]),
}


@pytest.fixture(scope="module")
def free_lepton():
    return assemble_free_lepton()


@pytest.fixture(scope="module")
def decoupled(free_lepton):
    return decouple(free_lepton)


@pytest.mark.tier_a
class TestPhysicalParams:
    def test_symbolic_by_default(self):
        assert not PhysicalParams().is_numeric

    def test_natural_units(self):
        params = PhysicalParams.natural(2)
        assert params.is_numeric
        assert params.substitutions()[HBAR] == 1

    @pytest.mark.parametrize("kwargs", [{"mass": -1}, {"hbar": 0}, {"speed": float("inf")}])
    def test_rejects_bad_values(self, kwargs):
        with pytest.raises(DomainError):
            PhysicalParams(**kwargs)

    def test_zero_mass_allowed(self):
        assert PhysicalParams(mass=0).mass == 0


@pytest.mark.tier_a
class TestFreeLepton:
    def test_derivatives_are_conjugate_vector_matrices(self, free_lepton, algebra_c4):
        assert free_lepton.directions == (1, 2, 3, 4)
        for m in (1, 2, 3, 4):
            assert np.array_equal(free_lepton.derivatives[m], conjugate_matrix(algebra_c4, str(m)))

    def test_mass_is_identity_plus_right_34(self, free_lepton, algebra_c4):
        right_34 = algebra_c4.structure.entries[:, :, algebra_c4.index("34")]
        assert np.array_equal(free_lepton.mass, np.eye(16, dtype=np.int64) + right_34)
        assert sympy.simplify(free_lepton.coupling - MASS * SPEED / (2 * HBAR)) == 0

    def test_coupling_value(self, free_lepton):
        assert free_lepton.coupling_value(PhysicalParams.natural(2)) == pytest.approx(1.0)

    def test_symbolic_coupling_value_fails(self, free_lepton):
        with pytest.raises(DomainError):
            free_lepton.coupling_value()

    def test_postulates_contract_to_mass_side(self, free_lepton, algebra_c4):
        psi = sympy.symbols("psi0:16")
        rhs = quantum_postulate_rhs(psi, ImpulseField.free_lepton(), algebra_c4)
        assert set(rhs) == {"0"}
        contracted = contract_postulates(rhs, algebra_c4)
        difference = contracted - free_lepton.effective_mass() * sympy.Matrix(psi)
        assert difference.applyfunc(sympy.simplify) == sympy.zeros(16, 1)

    def test_quaternion_presentation(self, free_lepton):
        presented = free_lepton.presented(RepForm.QUATERNION)
        assert sorted(presented.derivatives) == [1, 2, 3, 4]
        assert presented.derivatives[1].algebra is PAULI
        for m, rows in CONJUGATE_VECTOR_BLOCKS.items():
            assert presented.derivatives[m].prefactor == UnitEntry(1, "i")
            assert presented.derivatives[m].rows() == rows
        assert presented.mass.prefactor == UnitEntry(1, "1")
        assert presented.mass.rows() == [
            ["+1", "+1", ".", "."],
            ["+1", "+1", ".", "."],
            [".", ".", "+1", "+1"],
            [".", ".", "+1", "+1"],
        ]

    def test_second_generation_shows_first_generation_blocks_in_j(self, free_lepton):
        first = free_lepton.presented(RepForm.QUATERNION)
        second = generation_permute(free_lepton, 2).presented(RepForm.QUATERNION, basic="13")
        assert second.alias == {"i": "j"}
        for m in (1, 2, 3, 4):
            assert second.derivatives[CYCLIC_INDEX_MAPS[2].get(m, m)] == first.derivatives[m]
        assert second.mass == first.mass
        assert second.derivatives[4].prefactor.token(second.alias) == "+j"


@pytest.mark.tier_a
class TestArbitraryAction:
    def test_unit_action_gives_dirac_form(self, algebra_c4):
        impulse = ImpulseField.free_lepton()
        plain = assemble_dirac_form(impulse, algebra_c4)
        assert arbitrary_action_assemble(MultiVector.scalar(1), impulse, algebra_c4).same_as(plain)

    def test_scalar_action_scales_mass(self, algebra_c4):
        impulse = ImpulseField.free_lepton()
        plain = assemble_dirac_form(impulse, algebra_c4)
        doubled = arbitrary_action_assemble(MultiVector.scalar(2), impulse, algebra_c4)
        difference = doubled.effective_mass() - plain.effective_mass() / 2
        assert difference.applyfunc(sympy.simplify) == sympy.zeros(16, 16)


@pytest.mark.tier_a
class TestDecouple:
    def test_sector_sizes(self, decoupled):
        assert decoupled.massive.dim == 8
        assert decoupled.massless.dim == 8
        assert decoupled.leads == ("32", "13", "21", "0", "1", "2", "3", "123")

    def test_massive_sector(self, decoupled):
        assert np.array_equal(decoupled.massive.mass, np.eye(8, dtype=np.int64))
        assert sympy.simplify(decoupled.massive.coupling - MASS * SPEED / HBAR) == 0

    def test_massless_sector(self, decoupled):
        assert decoupled.massless.is_massless

    def test_recombine_restores_system(self, decoupled, free_lepton):
        assert decoupled.recombine().same_as(free_lepton)

    def test_rejects_massless_system(self, decoupled):
        with pytest.raises(SystemShapeError):
            decouple(decoupled.massless)

    def test_rejects_unpaired_mass_rows(self):
        mass = np.array([[1, -1, 0, 0], [0, 0, 1, -1], [1, 0, -1, 0], [0, 1, 0, -1]], dtype=np.int64)
        system = LinearPDESystem("unpaired", ("a", "b", "c", "d"), {4: np.eye(4, dtype=np.int64)}, mass, MASS)
        with pytest.raises(SystemShapeError, match="pair"):
            decouple(system)

    def test_rejects_coupled_halves(self):
        mass = np.array([[1, -1], [1, -1]], dtype=np.int64)
        system = LinearPDESystem("coupled", ("a", "b"), {4: np.eye(2, dtype=np.int64)}, mass, MASS)
        with pytest.raises(SystemShapeError, match="couples"):
            decouple(system)


@pytest.mark.tier_a
class TestReductions:
    def test_dirac(self, free_lepton, decoupled):
        dirac = reduce_dirac(free_lepton)
        assert dirac.dim == 8
        assert dirac.labels == ("32", "13", "21", "0", "1", "2", "3", "123")
        assert dirac.same_as(decoupled.massive)

    def test_pauli_composes_to_wave_operator(self, free_lepton):
        pauli = reduce_pauli(free_lepton)
        assert sympy.expand(pauli.wave_operator - (d1**2 + d2**2 + d3**2 - d4**2)) == 0
        assert pauli.operator == pauli.wave_operator * sympy.eye(4)

    def test_schrodinger(self, free_lepton, decoupled):
        reduction = reduce_schrodinger(free_lepton)
        assert reduction.names == ("13", "0", "2", "123")
        assert reduction.units[2] == 1
        assert reduction.units[4] == sympy.I
        assert reduction.coefficients == {1: 1, 2: 1, 3: 1, 4: -1}
        for m in (1, 2, 3, 4):
            assert reduction.pattern[m] * reduction.units[m] ** 2 == reduction.coefficients[m]
        assert reduction.system.same_as(decoupled.massive)

    def test_needs_an_algebra(self, decoupled):
        with pytest.raises(SystemShapeError):
            reduce_dirac(decoupled.massive)


@pytest.mark.tier_a
class TestGenerations:
    def test_first_generation_is_identity(self, free_lepton):
        assert generation_permute(free_lepton, 1) is free_lepton

    def test_cycle_returns_input(self, free_lepton):
        system = free_lepton
        for _ in range(3):
            system = generation_permute(system, 2)
        assert system.same_as(free_lepton)

    def test_second_generation_differs(self, free_lepton):
        second = generation_permute(free_lepton, 2)
        assert second.name == "free-lepton-gen2"
        assert not second.same_as(free_lepton)

    def test_unknown_generation(self, free_lepton):
        with pytest.raises(DomainError):
            generation_permute(free_lepton, 4)

    @pytest.mark.parametrize(
        "tag,generation,name",
        [("e_L", 1, "e_L"), ("e_R", 2, "mu_R"), ("nu_R", 3, "nu_tau_R"), ("nu_L", 2, "nu_mu_L")],
    )
    def test_tag_names(self, tag, generation, name):
        assert tag_name(tag, generation) == name

    def test_unknown_tag(self):
        with pytest.raises(DomainError):
            tag_name("q_L")


@pytest.mark.tier_a
class TestAntilepton:
    @pytest.fixture(scope="class")
    def literal(self):
        return antilepton_assemble()

    @pytest.fixture(scope="class")
    def split(self, literal):
        return decouple(literal)

    def test_literal_is_default(self, literal, algebra_c4):
        c = algebra_c4.structure.entries
        assert literal.name == "antilepton-literal"
        for m in (1, 2, 3, 4):
            assert np.array_equal(literal.derivatives[m], c[:, :, algebra_c4.index(str(m))])

    def test_literal_mass_rows_repeat_in_pairs(self, literal, algebra_c4):
        def row(label):
            values = literal.mass[algebra_c4.index(label)]
            return {algebra_c4.labels[k]: int(values[k]) for k in np.flatnonzero(values)}

        assert row("0") == {"0": 1, "123": -1}
        assert row("34") == {"34": 1, "124": -1}
        assert row("123") == row("0")
        assert row("124") == row("34")

    def test_quaternion_presentation(self, literal):
        presented = literal.presented(RepForm.QUATERNION)
        assert presented.derivatives[1].algebra is DIRECT_QUATERNION
        for m, (prefactor, rows) in DIRECT_VECTOR_BLOCKS.items():
            assert presented.derivatives[m].prefactor == UnitEntry(1, prefactor)
            assert presented.derivatives[m].rows() == rows
        assert presented.mass.rows() == [
            ["+1", ".", "-1", "."],
            [".", "+1", ".", "-1"],
            ["+1", ".", "-1", "."],
            [".", "+1", ".", "-1"],
        ]

    def test_literal_mass_is_nilpotent(self, literal):
        assert np.any(literal.mass)
        assert not np.any(literal.mass @ literal.mass)

    def test_decouples_into_phi_and_chi(self, split, algebra_c4):
        assert split.leads == ("1", "2", "3", "123", "134", "234", "4", "124")
        lead = split.leads.index("123")
        phi = {algebra_c4.labels[k]: int(split.plus[k, lead]) for k in np.flatnonzero(split.plus[:, lead])}
        chi = {algebra_c4.labels[k]: int(split.minus[k, lead]) for k in np.flatnonzero(split.minus[:, lead])}
        assert phi == {"0": -1, "123": 1}
        assert chi == {"0": 1, "123": 1}

    def test_massive_half(self, split):
        assert np.array_equal(split.massive.mass, np.eye(8, dtype=np.int64))
        assert sympy.simplify(split.massive.coupling - MASS * SPEED / HBAR) == 0

    def test_massless_half(self, split):
        assert split.massless.is_massless

    def test_halves_share_derivatives(self, split):
        for m in (1, 2, 3, 4):
            assert np.array_equal(split.massive.derivatives[m], split.massless.derivatives[m])

    def test_recombine_restores_system(self, split, literal):
        assert split.recombine().same_as(literal)

    def test_second_generation_decouples(self, literal):
        split = decouple(generation_permute(literal, 2))
        assert np.array_equal(split.massive.mass, np.eye(8, dtype=np.int64))
        assert split.massless.is_massless

    def test_mirror_uses_right_multiplications(self, algebra_c4):
        system = antilepton_assemble(impulse="mirror")
        c = algebra_c4.structure.entries
        assert system.name == "antilepton-mirror"
        assert np.array_equal(system.derivatives[1], c[:, :, algebra_c4.index("1")])
        assert np.array_equal(system.mass, np.eye(16, dtype=np.int64) - conjugate_matrix(algebra_c4, "34"))

    def test_mirror_decouples(self):
        assert decouple(antilepton_assemble(impulse="mirror")).massive.dim == 8

    def test_unknown_reading(self):
        with pytest.raises(DomainError):
            antilepton_assemble(impulse="other")

    def test_reversion_signs(self, algebra_c3):
        signs = dict(zip(algebra_c3.labels, np.diag(reversion_matrix(algebra_c3)), strict=True))
        assert signs == {"32": -1, "13": -1, "21": -1, "0": 1, "1": 1, "2": 1, "3": 1, "123": -1}


@pytest.mark.tier_a
class TestSystemTypes:
    def test_shape_checked(self):
        with pytest.raises(SystemShapeError):
            LinearPDESystem("bad", ("0", "1"), {1: np.eye(3, dtype=np.int64)}, np.eye(2, dtype=np.int64), MASS)

    def test_normalise_mass(self):
        matrix = np.array([[Fraction(1, 2), 0], [0, Fraction(-1, 2)]], dtype=object)
        ints, factor = normalise_mass(matrix, MASS)
        assert np.array_equal(ints, np.array([[1, 0], [0, -1]]))
        assert factor == MASS / 2

    def test_normalise_zero_mass_keeps_factor(self):
        ints, factor = normalise_mass(np.zeros((2, 2), dtype=object), MASS)
        assert not np.any(ints)
        assert factor == MASS

    def test_impulse_directions(self):
        impulse = ImpulseField.antilepton()
        assert impulse.directions == ("1324", "123")
        assert impulse.along("123") == {"0": Fraction(1, 2)}
