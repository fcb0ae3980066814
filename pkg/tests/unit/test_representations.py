"""Unit tests for unit algebras, regular representations and their block forms."""

import numpy as np
import pytest

from clifford_rqm.algebra import MultiVector, left_action
from clifford_rqm.exceptions import ConfigurationError, DecompositionError, DomainError
from clifford_rqm.representations import (
    COMPLEX_ABI,
    DIRECT_QUATERNION,
    PAULI,
    R1,
    R2,
    R3,
    CorrespondenceMap,
    RepForm,
    RepKind,
    UnitEntry,
    UnitMatrix,
    approx_rep,
    block_decompose,
    conjugate_constants,
    conjugate_metric,
    display_labels,
    gamma_set,
    homomorphism_defect,
    present,
    regular_rep_conjugate,
    regular_rep_direct,
)
from clifford_rqm.representations.units import UnitProduct
from tests.fixtures import load_fixture


@pytest.mark.tier_a
class TestUnitAlgebras:
    @pytest.mark.parametrize(
        "left,right,expected",
        [
            ("a", "i", UnitProduct(1, "1", "b")),
            ("i", "a", UnitProduct(-1, "1", "b")),
            ("b", "i", UnitProduct(-1, "1", "a")),
            ("i", "b", UnitProduct(1, "1", "a")),
            ("i", "i", UnitProduct(-1, "1", "1")),
        ],
    )
    def test_complex_table(self, left, right, expected):
        assert COMPLEX_ABI.multiply(left, right) == expected

    def test_pauli_product_needs_imaginary_scalar(self):
        assert PAULI.multiply("s1", "s2") == UnitProduct(-1, "i", "s3")
        assert not PAULI.is_closed()

    def test_direct_quaternion_units_close(self):
        assert DIRECT_QUATERNION.is_closed()
        assert DIRECT_QUATERNION.multiply("I", "I") == UnitProduct(-1, "1", "1")

    def test_unknown_unit(self):
        with pytest.raises(DomainError):
            COMPLEX_ABI.image("s1")


@pytest.mark.tier_a
class TestUnitMatrix:
    def test_entry_tokens(self):
        assert UnitEntry.parse("+s2") == UnitEntry(1, "s2")
        assert UnitEntry.parse("-i") == UnitEntry(-1, "i")
        assert UnitEntry.parse(".") is None
        assert UnitEntry(-1, "i").token({"i": "j"}) == "-j"
        assert UnitEntry.parse("+k", {"i": "k"}) == UnitEntry(1, "i")

    def test_bad_token(self):
        with pytest.raises(DomainError):
            UnitEntry.parse("s2")

    def test_entry_outside_matrix(self):
        with pytest.raises(DomainError):
            UnitMatrix(2, COMPLEX_ABI, {(2, 0): UnitEntry(1, "1")})

    def test_expand_quaternion_to_complex(self):
        sigma2 = UnitMatrix(1, PAULI, {(0, 0): UnitEntry(1, "s2")}, UnitEntry(1, "i"))
        expanded = sigma2.expand()
        assert expanded.algebra is COMPLEX_ABI
        assert expanded.rows() == [[".", "-i"], ["+i", "."]]
        assert np.array_equal(expanded.to_real(), sigma2.to_real())


@pytest.mark.tier_a
class TestRegularRepresentations:
    def test_direct_unit_is_identity(self, algebra_c3):
        rep = regular_rep_direct(algebra_c3)
        assert np.array_equal(rep.real("0"), np.eye(8, dtype=np.int64))

    @pytest.mark.parametrize("kind", [RepKind.DIRECT, RepKind.CONJUGATE])
    def test_homomorphism(self, algebra_c3, algebra_c4, kind):
        build = regular_rep_direct if kind is RepKind.DIRECT else regular_rep_conjugate
        assert homomorphism_defect(build(algebra_c3)) == 0
        assert homomorphism_defect(build(algebra_c4)) == 0

    def test_conjugation_formula_matches_product_rule(self, algebra_c3, algebra_c4):
        for algebra in (algebra_c3, algebra_c4):
            tilde = conjugate_constants(algebra)
            assert np.array_equal(tilde.entries, algebra.structure.entries)

    def test_conjugate_metric_of_c3(self, algebra_c3):
        assert conjugate_metric(algebra_c3) == tuple(load_fixture("worked_examples.json")["metric"]["c3"])

    def test_conjugate_metric_of_c4(self, algebra_c4):
        assert conjugate_metric(algebra_c4) == tuple(load_fixture("worked_examples.json")["metric"]["c4"])

    def test_conjugate_prefactor_is_square(self, algebra_c4, conjugate_c4):
        squares = dict(zip(algebra_c4.labels, conjugate_metric(algebra_c4), strict=True))
        for label in algebra_c4.labels:
            assert conjugate_c4[label].prefactor == UnitEntry(squares[label], "1")

    def test_conjugate_matrix_is_left_multiplication(self, algebra_c4, conjugate_c4):
        for label in ("1", "4", "34", "1324"):
            assert np.array_equal(conjugate_c4.real(label), left_action(MultiVector.basis(label), algebra_c4))

    def test_unknown_label(self, direct_c4):
        with pytest.raises(DomainError):
            direct_c4["5"]


@pytest.mark.tier_a
class TestBlockDecompose:
    def test_complex_form_of_third_generator(self, algebra_c3):
        rep = block_decompose(regular_rep_direct(algebra_c3), RepForm.COMPLEX)
        matrix = rep["3"]
        assert matrix.prefactor == UnitEntry(1, "i")
        assert matrix.rows() == [
            [".", ".", "-1", "."],
            [".", ".", ".", "-1"],
            ["+1", ".", ".", "."],
            [".", "+1", ".", "."],
        ]

    @pytest.mark.parametrize("form", [RepForm.COMPLEX, RepForm.QUATERNION])
    def test_unit_is_identity_in_every_form(self, direct_c4, form):
        rep = block_decompose(direct_c4, form)
        matrix = rep["0"]
        assert matrix.prefactor == UnitEntry(1, "1")
        assert all(matrix.entries[(k, k)] == UnitEntry(1, "1") for k in range(matrix.size))

    @pytest.mark.parametrize("form", [RepForm.COMPLEX, RepForm.QUATERNION])
    def test_decomposition_preserves_real_matrices(self, conjugate_c4, form):
        rep = block_decompose(conjugate_c4, form)
        for label in rep:
            assert np.array_equal(rep.real(label), conjugate_c4.real(label))

    def test_conjugate_quaternion_uses_pauli_units(self, conjugate_c4):
        rep = block_decompose(conjugate_c4, RepForm.QUATERNION)
        assert rep["1"].algebra is PAULI

    def test_other_basic_direction_renames_unit(self, direct_c4):
        rep = block_decompose(direct_c4, RepForm.COMPLEX, basic="13")
        assert rep.alias == {"i": "j"}
        assert any(rep[label].prefactor.unit == "i" for label in rep)

    def test_unknown_basic_direction(self, direct_c4):
        with pytest.raises(ConfigurationError):
            block_decompose(direct_c4, RepForm.COMPLEX, basic="12")

    def test_grouping_must_partition(self, algebra_c3):
        rep = regular_rep_direct(algebra_c3)
        with pytest.raises(ConfigurationError):
            block_decompose(rep, RepForm.COMPLEX, grouping=[("32", "13"), ("21", "0")])

    def test_present_rejects_non_unit_blocks(self):
        matrix = np.zeros((4, 4), dtype=np.int64)
        matrix[0, 0] = 1
        with pytest.raises(DecompositionError):
            present(matrix, RepForm.QUATERNION, RepKind.CONJUGATE, "x")

    def test_display_labels(self, algebra_c3):
        assert display_labels(algebra_c3.labels, RepForm.COMPLEX) == ("13", "0", "2", "123")
        assert display_labels(algebra_c3.labels, RepForm.QUATERNION) == ("0", "123")


@pytest.mark.tier_a
class TestApproximations:
    @pytest.mark.parametrize("cmap,size", [(R1, 8), (R2, 4), (R3, 2)])
    def test_each_level_halves(self, conjugate_c4, cmap, size):
        assert approx_rep(conjugate_c4, cmap).size == size

    def test_r1_keeps_c3_labels(self, direct_c4):
        assert approx_rep(direct_c4, R1).order == ("32", "13", "21", "0", "1", "2", "3", "123")

    def test_r2_conjugate_generators(self, conjugate_c4):
        rep = approx_rep(conjugate_c4, R2)
        for k in (1, 2, 3):
            assert np.array_equal(rep.real(str(k)), PAULI.entry_image(-1, f"s{k}", "i"))
        assert np.array_equal(rep.real("4"), PAULI.entry_image(1, "1", "i"))

    def test_r3_conjugate_scalars(self, conjugate_c4):
        rep = approx_rep(conjugate_c4, R3)
        assert np.array_equal(rep.real("1"), COMPLEX_ABI.entry_image(-1, "i"))
        assert np.array_equal(rep.real("2"), COMPLEX_ABI.entry_image(1, "1"))
        assert np.array_equal(rep.real("4"), COMPLEX_ABI.entry_image(1, "i"))

    def test_invalid_map(self, conjugate_c4):
        broken = CorrespondenceMap("broken", {"1": "0"}, ("0",))
        with pytest.raises(ConfigurationError):
            approx_rep(conjugate_c4, broken)

    def test_requires_real_form(self, conjugate_c4):
        with pytest.raises(ConfigurationError):
            approx_rep(block_decompose(conjugate_c4, RepForm.COMPLEX), R1)


@pytest.mark.tier_a
class TestGammaSet:
    def test_clifford_relations(self, conjugate_c4):
        gammas = gamma_set(approx_rep(conjugate_c4, R1))
        assert gammas.clifford_defects() == []
        assert gammas.eta == {1: -1, 2: -1, 3: -1, 4: 1}

    def test_eta_is_negated_conjugate_metric(self, algebra_c4, conjugate_c4):
        metric = dict(zip(algebra_c4.labels, load_fixture("worked_examples.json")["metric"]["c4"], strict=True))
        gammas = gamma_set(approx_rep(conjugate_c4, R1))
        assert gammas.eta == {k: -metric[str(k)] for k in (1, 2, 3, 4)}

    def test_dictionary(self, conjugate_c4):
        gammas = gamma_set(approx_rep(conjugate_c4, R1))
        assert gammas.dictionary_defects() == []

    def test_three_generator_set(self, algebra_c3):
        gammas = gamma_set(regular_rep_conjugate(algebra_c3))
        assert sorted(gammas.gammas) == [0, 1, 2, 3]
        assert gammas.clifford_defects() == []

    def test_direct_rep_rejected(self, direct_c4):
        with pytest.raises(ConfigurationError):
            gamma_set(approx_rep(direct_c4, R1))
