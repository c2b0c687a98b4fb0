from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from glcdist.exactnum import (
    ExactMatrix,
    GQ_I,
    GQ_ONE,
    GaussianRational,
    rational_from_str,
    rational_to_str,
    real_rank,
)

rationals = st.fractions(
    min_value=-8, max_value=8, max_denominator=12
)
gaussians = st.builds(GaussianRational, rationals, rationals)
nonzero_gaussians = gaussians.filter(lambda z: not z.is_zero())


def gq(re, im=0):
    return GaussianRational(re, im)


class TestFieldOps:
    def test_norm_of_conjugate_pair(self):
        assert gq("1/2", 1) * gq("1/2", -1) == gq("5/4")

    def test_inverse_of_i(self):
        assert GQ_I.inv() == gq(0, -1)

    def test_conjugation(self):
        assert gq("3/4", -2).conj() == gq("3/4", 2)

    def test_zero_inverse_raises(self):
        with pytest.raises(ZeroDivisionError):
            gq(0).inv()

    def test_integer_powers(self):
        assert GQ_I ** 2 == gq(-1)
        assert GQ_I ** -1 == gq(0, -1)
        assert gq(2) ** -2 == gq("1/4")

    @given(gaussians, gaussians, gaussians)
    def test_associativity_and_distributivity(self, a, b, c):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c

    @given(nonzero_gaussians)
    def test_multiplicative_inverse(self, a):
        assert a * a.inv() == GQ_ONE

    @given(gaussians)
    def test_conj_is_involution(self, a):
        assert a.conj().conj() == a


class TestSerialization:
    def test_rational_strings(self):
        assert rational_to_str(Fraction(3, 4)) == "3/4"
        assert rational_to_str(Fraction(5)) == "5"
        assert rational_from_str("-7/2") == Fraction(-7, 2)

    @given(gaussians)
    def test_json_round_trip(self, a):
        assert GaussianRational.parse(a.to_json()) == a


def unit(n, i, j, value=GQ_ONE):
    return ExactMatrix.unit(n, i, j, value)


class TestRealRank:
    def test_single_identity(self):
        assert real_rank([ExactMatrix.identity(2)], 2) == 1

    def test_identity_and_i_identity(self):
        eye = ExactMatrix.identity(2)
        i_eye = ExactMatrix([[GQ_I, gq(0)], [gq(0), GQ_I]])
        assert real_rank([eye, i_eye], 2) == 2

    def test_upper_triangular_plus_real_matrices(self):
        vectors = []
        for i in range(2):
            for j in range(2):
                if i <= j:
                    vectors.append(unit(2, i, j))
                    vectors.append(unit(2, i, j, GQ_I))
        for i in range(2):
            for j in range(2):
                vectors.append(unit(2, i, j))
        assert real_rank(vectors, 2) == 7

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            real_rank([ExactMatrix.identity(3)], 2)

    @given(st.randoms(use_true_random=False))
    def test_invariant_under_permutation_and_rescaling(self, rng):
        vectors = [
            unit(2, rng.randrange(2), rng.randrange(2), gq(rng.randint(-3, 3), rng.randint(-3, 3)))
            for _ in range(5)
        ]
        base = real_rank(vectors, 2)
        shuffled = vectors[:]
        rng.shuffle(shuffled)
        scaled = [
            ExactMatrix([[x * gq(Fraction(3, 7)) for x in row] for row in m.entries])
            for m in shuffled
        ]
        assert real_rank(scaled, 2) == base

    def test_combinations_do_not_raise_rank(self):
        a = unit(3, 0, 1)
        b = unit(3, 1, 2, GQ_I)
        combo = ExactMatrix(
            [
                [a.entries[i][j] * gq(2) + b.entries[i][j] * gq("1/3") for j in range(3)]
                for i in range(3)
            ]
        )
        assert real_rank([a, b, combo], 3) == 2


class TestMatrix:
    def test_inverse(self):
        m = ExactMatrix([[gq(1), GQ_I], [GQ_I, gq(1)]])
        prod = m @ m.inverse()
        assert prod == ExactMatrix.identity(2)

    def test_singular_raises(self):
        m = ExactMatrix([[gq(1), gq(1)], [gq(1), gq(1)]])
        with pytest.raises(ZeroDivisionError):
            m.inverse()
