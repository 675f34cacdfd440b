import pytest
from hypothesis import given, strategies as st

from conftest import matrices, real_scalars
from tropcommute.matrix import (
    DimensionError,
    MatrixParseError,
    TropMatrix,
    TropVector,
    mat_eq,
    mat_oplus,
    mat_otimes,
    mat_vec,
    matrix_from_json,
    matrix_to_json,
    parse_matrix,
    vec_to_mat2,
)
from tropcommute.semiring import BOTTOM

B = BOTTOM


def M(*rows):
    return TropMatrix.from_rows(rows)


def test_construction_checks_length():
    with pytest.raises(DimensionError):
        TropMatrix(2, 2, (1.0, 2.0, 3.0))
    with pytest.raises(DimensionError):
        TropMatrix.from_rows([[1, 2], [3]])


def test_finite_predicate():
    assert M([0, 1], [2, 3]).is_finite()
    assert not M([0, B], [2, 3]).is_finite()


def test_mat_oplus_examples():
    assert mat_oplus(M([0, B], [B, 0]), M([B, 1], [2, B])) == M([0, 1], [2, 0])
    A = M([0.5, -1], [B, 3])
    assert mat_oplus(A, A) == A
    with pytest.raises(DimensionError):
        mat_oplus(A, TropMatrix.identity(3))


def test_beta2_plus_beta3_as_matrices():
    a1, a2 = -0.14, -1.621
    assert mat_oplus(vec_to_mat2((0, a1, B, 0)), vec_to_mat2((0, B, a2, 0))) == M([0, a1], [a2, 0])


def test_identity_and_beta1_products(example_a):
    I = TropMatrix.identity(2)
    assert mat_otimes(I, example_a) == example_a
    b1 = vec_to_mat2((0, B, B, 0))
    assert mat_otimes(example_a, b1) == example_a == mat_otimes(b1, example_a)


def test_product_with_beta4_matches_direct_evaluation():
    # (1,1) entry is (a11 + a11) max (a12 + a21), read off the componentwise max-plus formula
    a11, a12, a21, a22 = 2.0, 1.0, -1.0, 0.0
    A = M([a11, a12], [a21, a22])
    B4 = vec_to_mat2((a11, a12, a21, B))
    expected = M([max(2 * a11, a12 + a21), a11 + a12], [a11 + a21, a12 + a21])
    assert mat_eq(mat_otimes(A, B4), expected, 0)
    assert mat_eq(mat_otimes(B4, A), expected, 0)


def test_mat_otimes_shape_error():
    with pytest.raises(DimensionError):
        mat_otimes(TropMatrix.identity(2), TropMatrix.identity(3))


def test_mat_eq():
    A = M([1, 2], [3, 4])
    assert mat_eq(A, A, 0)
    assert not mat_eq(A, M([1, 2, 3], [4, 5, 6]), 1e-9)
    assert mat_eq(A, M([1 + 1e-12, 2], [3, 4]), 1e-9)


def test_vec_to_mat2():
    assert vec_to_mat2((0, B, B, 0)) == M([0, B], [B, 0])
    assert vec_to_mat2((1, 2, 3, 4)) == M([1, 2], [3, 4])
    assert vec_to_mat2((5.0, 6.0, 7.0, B)).to_rows() == [[5.0, 6.0], [7.0, B]]
    with pytest.raises(DimensionError):
        vec_to_mat2((1, 2, 3))


def test_mat_vec_matches_column_product():
    A = M([1, B, 2], [0, 3, B])
    x = TropVector((1, B, -1))
    col = TropMatrix(3, 1, tuple(x))
    assert tuple(mat_vec(A, x)) == mat_otimes(A, col).entries


@pytest.mark.parametrize(
    "text,expected",
    [
        ("0.166 0.861; -0.62 -0.76", [[0.166, 0.861], [-0.62, -0.76]]),
        ("0, -inf\n-INF, 0", [[0, B], [B, 0]]),
        ("[[0, null], [1.5, 2]]", [[0, B], [1.5, 2]]),
        ("1 2 3", [[1, 2, 3]]),
    ],
)
def test_parse_matrix(text, expected):
    assert parse_matrix(text) == M(*expected)


@pytest.mark.parametrize("text,row,col", [("0.1 x; 2 3", 1, 2), ("1 2; 3", 2, None), ("1 2; 3 nan", 2, 2)])
def test_parse_matrix_errors_carry_position(text, row, col):
    with pytest.raises(MatrixParseError) as info:
        parse_matrix(text)
    assert info.value.row == row
    assert info.value.col == col


def test_json_round_trip():
    A = M([0, B], [1.25, -3])
    assert matrix_to_json(A) == [[0, None], [1.25, -3]]
    assert matrix_from_json(matrix_to_json(A)) == A


@given(st.integers(1, 4).flatmap(lambda n: st.tuples(
    matrices(n, n, real_scalars), matrices(n, n, real_scalars), matrices(n, n, real_scalars))))
def test_product_associative_and_distributive(abc):
    A, Bm, C = abc
    assert mat_eq(mat_otimes(mat_otimes(A, Bm), C), mat_otimes(A, mat_otimes(Bm, C)), 1e-9)
    assert mat_eq(mat_otimes(A, mat_oplus(Bm, C)),
                  mat_oplus(mat_otimes(A, Bm), mat_otimes(A, C)), 1e-9)


@given(st.integers(1, 4).flatmap(lambda n: matrices(n, n, real_scalars)))
def test_identity_law(A):
    I = TropMatrix.identity(A.rows)
    assert mat_otimes(I, A) == A == mat_otimes(A, I)
