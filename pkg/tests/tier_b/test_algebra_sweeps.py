"""Tier B: exhaustive sweeps over generator words and basis triples.

These walk every word up to length six and every triple of basis blades,
so they are slower than the Tier A checks. Set
CLIFFORD_RQM_SKIP_EXHAUSTIVE=true to skip them.
"""

from itertools import product

import numpy as np
import pytest

from clifford_rqm.algebra import MultiVector, Signature, blade_square, canonicalize, inverse, multiply
from clifford_rqm.algebra.blades import parse_sequence

MAX_WORD = 6


def reference_reduction(word, squares):
    """Right-multiply a sorted blade one generator at a time."""
    blade: list[int] = []
    sign = 1
    for g in word:
        if sum(1 for b in blade if b > g) % 2:
            sign = -sign
        if g in blade:
            sign *= squares[g - 1]
            blade.remove(g)
        else:
            blade = sorted([*blade, g])
    return sign, tuple(blade)


def all_signatures(max_n=4):
    for n in range(1, max_n + 1):
        for squares in product((1, -1), repeat=n):
            yield Signature(squares)


def e(label):
    return MultiVector.basis(label)


@pytest.mark.tier_b
class TestBladeOracle:
    def test_reference_reduction_agrees_on_worked_example(self):
        assert reference_reduction((4, 3, 1, 4, 2), (1, 1, 1, -1)) == (-1, (1, 2, 3))

    @pytest.mark.parametrize("sig", list(all_signatures()), ids=str)
    def test_every_word_reduces_like_the_reference(self, sig):
        mismatches = []
        for length in range(MAX_WORD + 1):
            for word in product(range(1, sig.n + 1), repeat=length):
                reduced = canonicalize(word, sig)
                expected = reference_reduction(word, sig.squares)
                if (reduced.sign, reduced.blade.indices) != expected:
                    mismatches.append(word)
        assert mismatches == []

    @pytest.mark.parametrize("sig", list(all_signatures()), ids=str)
    def test_blade_square_matches_reduction(self, sig):
        for length in range(sig.n + 1):
            for word in product(range(1, sig.n + 1), repeat=length):
                if len(set(word)) != len(word):
                    continue
                reduced = canonicalize(word + word, sig)
                assert reduced.blade.is_scalar
                assert blade_square("".join(map(str, word)) or "0", sig) == reduced.sign


@pytest.mark.tier_b
class TestStructureSweeps:
    @pytest.mark.parametrize("name", ["algebra_c3", "algebra_c4"])
    def test_products_match_word_reduction(self, name, request):
        algebra = request.getfixturevalue(name)
        names = {}
        for label in algebra.labels:
            reduced = canonicalize(parse_sequence(label), algebra.signature)
            names[reduced.blade.indices] = (label, reduced.sign)
        for left, right in product(algebra.labels, repeat=2):
            reduced = canonicalize(parse_sequence(left) + parse_sequence(right), algebra.signature)
            label, label_sign = names[reduced.blade.indices]
            assert algebra.product(left, right) == (reduced.sign * label_sign, label)

    @pytest.mark.parametrize("name", ["algebra_c3", "algebra_c4"])
    def test_associativity_on_basis_triples(self, name, request):
        algebra = request.getfixturevalue(name)
        structure = algebra.structure
        failures = []
        for a, b, c in product(range(algebra.dim), repeat=3):
            s_ab, ab = structure.product(a, b)
            s_left, left = structure.product(ab, c)
            s_bc, bc = structure.product(b, c)
            s_right, right = structure.product(a, bc)
            if (s_ab * s_left, left) != (s_bc * s_right, right):
                failures.append((a, b, c))
        assert failures == []

    @pytest.mark.parametrize("name", ["algebra_c3", "algebra_c4"])
    def test_every_blade_is_invertible(self, name, request):
        algebra = request.getfixturevalue(name)
        for label in algebra.labels:
            unit = multiply(e(label), inverse(e(label), algebra), algebra)
            assert unit.to_vector(algebra.labels) == MultiVector.scalar(1).to_vector(algebra.labels)

    def test_each_blade_squares_to_a_signed_unit(self, algebra_c4):
        squares = [algebra_c4.square(label) for label in algebra_c4.labels]
        assert set(squares) == {1, -1}
        assert squares.count(-1) == 6

    def test_left_regular_matrices_are_signed_permutations(self, algebra_c4):
        entries = algebra_c4.structure.entries
        for k in range(algebra_c4.dim):
            matrix = entries[:, k, :]
            assert np.array_equal(np.abs(matrix).sum(axis=0), np.ones(algebra_c4.dim))
            assert np.array_equal(np.abs(matrix).sum(axis=1), np.ones(algebra_c4.dim))
