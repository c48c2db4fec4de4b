import pytest
import sympy
from hypothesis import given, settings

from torelli.core.errors import DimensionMismatchError, SpecializationError
from torelli.core.laurent import (
    ONE,
    T,
    T_INV,
    ZERO,
    IntMatrix,
    LaurentMatrix,
    LaurentPoly,
    evaluate_at,
    mat_identity,
    mat_mul,
    poly_add,
    poly_mul,
    poly_neg,
)

from tests.strategies import laurent_matrices, laurent_polys

t = sympy.Symbol("t")


def to_sympy(p: LaurentPoly):
    return sum((c * t ** e for e, c in p.terms), sympy.Integer(0))


class TestLaurentPoly:
    def test_cancellation_to_zero(self):
        assert poly_add(T, -T) == ZERO
        assert (T - T).is_zero()

    def test_unit(self):
        assert poly_mul(T, T_INV) == ONE

    def test_normal_form(self):
        p = LaurentPoly(((2, 1), (0, 3), (2, -1), (-1, 0)))
        assert p.terms == ((0, 3),)

    def test_string(self):
        assert str(1 - T * T) == "1 - t^2"
        assert str(ZERO) == "0"
        assert str(-T_INV + 2) == "-t^-1 + 2"

    def test_evaluate(self):
        p = LaurentPoly.from_dict({1: 3, -2: -1, 0: 1})
        assert p.evaluate(1) == 3
        assert p.evaluate(-1) == -3

    def test_evaluate_rejects_other_points(self):
        with pytest.raises(SpecializationError):
            T.evaluate(2)

    def test_neg(self):
        assert poly_neg(T) == LaurentPoly.monomial(-1, 1)

    @given(laurent_polys(), laurent_polys())
    def test_ring_ops_agree_with_sympy(self, p, q):
        assert sympy.expand(to_sympy(p + q) - (to_sympy(p) + to_sympy(q))) == 0
        assert sympy.expand(to_sympy(p * q) - to_sympy(p) * to_sympy(q)) == 0

    @given(laurent_polys(), laurent_polys(), laurent_polys())
    def test_distributive(self, p, q, r):
        assert p * (q + r) == p * q + p * r

    @given(laurent_polys(), laurent_polys())
    def test_evaluation_is_a_ring_map(self, p, q):
        for t0 in (1, -1):
            assert (p * q).evaluate(t0) == p.evaluate(t0) * q.evaluate(t0)
            assert (p + q).evaluate(t0) == p.evaluate(t0) + q.evaluate(t0)

    @given(laurent_polys())
    def test_pairs_roundtrip(self, p):
        assert LaurentPoly.from_pairs(p.to_pairs()) == p


class TestLaurentMatrix:
    def test_identity_is_neutral(self):
        a = LaurentMatrix(((T, ONE), (ZERO, -T_INV)))
        assert mat_mul(a, mat_identity(2)) == a
        assert mat_identity(2) @ a == a

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            mat_mul(mat_identity(2), mat_identity(3))

    def test_not_square(self):
        with pytest.raises(DimensionMismatchError):
            LaurentMatrix(((ONE, ZERO),))

    def test_empty(self):
        with pytest.raises(DimensionMismatchError):
            LaurentMatrix(())

    def test_evaluate_identity(self):
        assert evaluate_at(mat_identity(3), -1) == IntMatrix.identity(3)

    def test_evaluate_rejects_other_points(self):
        with pytest.raises(SpecializationError):
            evaluate_at(mat_identity(2), 0)

    def test_json_shape(self):
        a = LaurentMatrix(((-T, ONE), (ZERO, ONE)))
        assert a.to_json() == {
            "dim": 2,
            "entries": [[[[1, -1]], [[0, 1]]], [[], [[0, 1]]]],
        }
        assert LaurentMatrix.from_json(a.to_json()) == a

    def test_json_dim_mismatch(self):
        payload = mat_identity(2).to_json()
        payload["dim"] = 3
        with pytest.raises(DimensionMismatchError):
            LaurentMatrix.from_json(payload)

    @settings(max_examples=40)
    @given(laurent_matrices(2), laurent_matrices(2), laurent_matrices(2))
    def test_associative(self, a, b, c):
        assert (a @ b) @ c == a @ (b @ c)

    @settings(max_examples=40)
    @given(laurent_matrices(3), laurent_matrices(3))
    def test_product_agrees_with_sympy(self, a, b):
        def sym(m):
            return sympy.Matrix([[to_sympy(x) for x in row] for row in m.rows])

        assert (sym(a @ b) - sym(a) * sym(b)).expand() == sympy.zeros(3, 3)

    @settings(max_examples=40)
    @given(laurent_matrices(2), laurent_matrices(2))
    def test_evaluation_is_multiplicative(self, a, b):
        for t0 in (1, -1):
            assert evaluate_at(a @ b, t0) == evaluate_at(a, t0) @ evaluate_at(b, t0)


class TestIntMatrix:
    def test_scalar_value(self):
        assert (-IntMatrix.identity(3)).scalar_value() == -1
        assert IntMatrix([[1, 1], [0, 1]]).scalar_value() is None

    def test_apply_and_column(self):
        m = IntMatrix([[1, 2], [3, 4]])
        assert m.apply([1, 0]) == (1, 3)
        assert m.column(1) == (2, 4)

    def test_determinant(self):
        assert IntMatrix([[2, 1], [7, 4]]).determinant() == 1

    def test_immutable(self):
        m = IntMatrix.identity(2)
        with pytest.raises(ValueError):
            m._data[0, 0] = 5

    def test_hash_and_equality(self):
        assert {IntMatrix.identity(2): "i"}[IntMatrix([[1, 0], [0, 1]])] == "i"
        assert IntMatrix.identity(2) != IntMatrix.identity(3)
