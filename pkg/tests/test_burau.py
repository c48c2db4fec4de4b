import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from torelli.core.burau import (
    BraidWord,
    Permutation,
    burau,
    burau_at,
    burau_generator,
    center_word,
    format_braid,
    in_Kn,
    is_pure,
    kernel_center_word,
    parse_braid,
    permutation,
    pure_generator,
    strands_for_genus,
)
from torelli.core.errors import IndexRangeError, RankMismatchError, WordSyntaxError
from torelli.core.laurent import ONE, T, ZERO, IntMatrix, LaurentMatrix, evaluate_at, mat_identity

from tests.strategies import braid_words


def s(n, *letters):
    return BraidWord(n, tuple(letters))


def sigma(n, i, sign=1):
    return BraidWord.generator(n, i, sign)


class TestGenerators:
    def test_first_generator_in_b3(self):
        assert burau_generator(3, 1) == LaurentMatrix(((-T, ONE), (ZERO, ONE)))

    def test_last_generator_in_b3(self):
        assert burau_generator(3, 2) == LaurentMatrix(((ONE, ZERO), (T, -T)))

    def test_b2_is_one_by_one(self):
        assert burau_generator(2, 1) == LaurentMatrix(((-T,),))

    @pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
    def test_inverse_generators(self, n):
        for i in range(1, n):
            assert burau(sigma(n, i) * sigma(n, i, -1)) == mat_identity(n - 1)
            assert burau_generator(n, i) @ burau_generator(n, i, -1) == mat_identity(n - 1)

    def test_out_of_range(self):
        with pytest.raises(IndexRangeError):
            burau_generator(3, 3)


class TestBraidRelations:
    @pytest.mark.parametrize("n", [3, 4, 5, 6])
    def test_adjacent(self, n):
        for i in range(1, n - 1):
            lhs = s(n, (i, 1), (i + 1, 1), (i, 1))
            rhs = s(n, (i + 1, 1), (i, 1), (i + 1, 1))
            assert burau(lhs) == burau(rhs)

    @pytest.mark.parametrize("n", [4, 5, 6])
    def test_far_commutation(self, n):
        for i in range(1, n):
            for j in range(i + 2, n):
                assert burau(s(n, (i, 1), (j, 1))) == burau(s(n, (j, 1), (i, 1)))

    @settings(max_examples=60)
    @given(st.integers(2, 6).flatmap(lambda n: st.tuples(braid_words(n), braid_words(n))))
    def test_representation_property(self, pair):
        u, v = pair
        assert burau(u * v) == burau(u) @ burau(v)


class TestKernel:
    def test_identity(self):
        assert burau(BraidWord(4)) == mat_identity(3)
        assert in_Kn(BraidWord(4))

    def test_half_power_of_twist_in_b3(self):
        w = s(3, (1, 1), (2, 1)) ** 3
        assert burau_at(w) == -IntMatrix.identity(2)
        assert is_pure(w)
        assert not in_Kn(w)

    def test_twist_squared_in_b3(self):
        assert in_Kn(s(3, (1, 1), (2, 1)) ** 6)

    def test_twist_squared_in_b4(self):
        assert in_Kn(s(4, (1, 1), (2, 1)) ** 6)

    def test_generator_square_not_in_kernel(self):
        w = sigma(3, 1) ** 2
        assert is_pure(w)
        assert not in_Kn(w)

    def test_non_pure(self):
        assert not in_Kn(sigma(3, 1))

    @pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
    def test_center_acts_as_scalar(self, n):
        image = burau(center_word(n))
        assert image == mat_identity(n - 1).scale(_t_power(n))

    @pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
    def test_kernel_center_word(self, n):
        w = kernel_center_word(n)
        assert in_Kn(w)
        assert (w == center_word(n)) is (n % 2 == 0)

    @pytest.mark.parametrize("n", [3, 4])
    def test_normality(self, n):
        k = kernel_center_word(n) * (s(n, (1, 1), (2, 1)) ** 6)
        conjugators = [sigma(n, 1), sigma(n, 2, -1) * sigma(n, 1), s(n, (2, 1), (1, -1), (2, 1))]
        for c in conjugators:
            assert in_Kn(k.conjugate(c))
        assert in_Kn(k.inverse())
        assert in_Kn(k * k.conjugate(sigma(n, 1)))

    def test_evaluation_at_one_is_permutation_like(self):
        assert burau_at(s(3, (1, 1), (2, 1)) ** 3, 1) == IntMatrix.identity(2)


def _t_power(n):
    result = ONE
    for _ in range(n):
        result = result * T
    return result


class TestPermutation:
    def test_transposition(self):
        assert str(permutation(sigma(3, 1))) == "(1 2)"

    def test_square_is_pure(self):
        assert is_pure(sigma(3, 1) ** 2)

    @pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
    def test_center_is_pure(self, n):
        assert permutation(center_word(n)).is_identity()

    def test_composition_order(self):
        u, v = sigma(3, 1), sigma(3, 2)
        assert permutation(u * v) == permutation(v).compose(permutation(u))
        assert permutation(u * v)(1) == 3

    @given(st.tuples(braid_words(5), braid_words(5)))
    def test_composition_law(self, pair):
        u, v = pair
        assert permutation(u * v) == permutation(v).compose(permutation(u))

    def test_cycles(self):
        assert Permutation((2, 3, 1)).cycles() == ((1, 2, 3),)
        assert str(Permutation.identity(3)) == "()"

    def test_invalid(self):
        with pytest.raises(IndexRangeError):
            Permutation((1, 1, 2))

    @pytest.mark.parametrize("n,i,j", [(3, 1, 2), (4, 1, 3), (5, 1, 5), (6, 2, 6)])
    def test_pure_generators(self, n, i, j):
        assert is_pure(pure_generator(n, i, j))

    def test_pure_generator_formula(self):
        assert pure_generator(3, 1, 2) == sigma(3, 1) ** 2
        assert pure_generator(4, 1, 3) == s(4, (2, 1), (1, 1), (1, 1), (2, -1))
        assert pure_generator(5, 1, 4) == s(5, (3, 1), (2, 1), (1, 1), (1, 1), (2, -1), (3, -1))


class TestText:
    def test_parse(self):
        assert parse_braid("s1 s2^-1", 3).letters == ((1, 1), (2, -1))

    def test_parse_reduces(self):
        assert len(parse_braid("s1 s1^-1", 3)) == 0

    def test_out_of_range(self):
        with pytest.raises(IndexRangeError):
            parse_braid("s3", 3)

    def test_malformed(self):
        with pytest.raises(WordSyntaxError):
            parse_braid("z1", 3)

    def test_non_ascii_digit(self):
        with pytest.raises(WordSyntaxError):
            parse_braid("s\u0661", 3)

    def test_format(self):
        assert format_braid(s(4, (3, -1), (1, 1))) == "s3^-1 s1"

    def test_strands_for_genus(self):
        assert strands_for_genus(2) == 5
        assert strands_for_genus(2, boundary=True) == 6

    def test_strand_mismatch(self):
        with pytest.raises(RankMismatchError):
            sigma(3, 1) * sigma(4, 1)

    def test_too_few_strands(self):
        with pytest.raises(IndexRangeError):
            BraidWord(1)


def random_braid(rng, strands, max_len=12):
    length = rng.randint(0, max_len)
    return BraidWord(
        strands, tuple((rng.randint(1, strands - 1), rng.choice((1, -1))) for _ in range(length))
    )


def test_random_pairs_are_homomorphic():
    rng = random.Random(5)
    for _ in range(1000):
        n = rng.randint(2, 6)
        u, v = random_braid(rng, n), random_braid(rng, n)
        image_u, image_v, image_uv = burau(u), burau(v), burau(u * v)
        assert image_uv == image_u @ image_v
        assert evaluate_at(image_uv, -1) == evaluate_at(image_u, -1) @ evaluate_at(image_v, -1)


@pytest.mark.parametrize("n", [3, 4])
def test_random_conjugates_stay_in_kernel(n):
    rng = random.Random(n)
    k = s(n, (1, 1), (2, 1)) ** 6
    for _ in range(100):
        c = random_braid(rng, n, max_len=6)
        d = random_braid(rng, n, max_len=6)
        assert in_Kn(k.conjugate(c))
        assert in_Kn(k.conjugate(c) * k.conjugate(d).inverse())
