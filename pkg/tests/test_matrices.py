import random

import pytest

from ringmul import Matrix, ModularRing, ShapeError, ZZ, mat_add, matrix_from_ints, random_matrix


def test_row_major_layout():
    M = matrix_from_ints(ZZ, [[1, 2, 3], [4, 5, 6]])
    assert M.shape == (2, 3)
    assert M[0, 0] == 1 and M[0, 2] == 3 and M[1, 0] == 4
    assert M.row_list(1) == [4, 5, 6]
    assert M.to_rows() == [[1, 2, 3], [4, 5, 6]]
    assert M.data == [1, 2, 3, 4, 5, 6]


def test_constructor_validates_length():
    with pytest.raises(ShapeError):
        Matrix(ZZ, 2, 2, [1, 2, 3])
    with pytest.raises(ShapeError):
        Matrix(ZZ, 0, 2, [])
    with pytest.raises(ShapeError):
        Matrix(ZZ, 2, -1, [])


def test_from_rows_rejects_ragged():
    with pytest.raises(ShapeError):
        Matrix.from_rows(ZZ, [[1, 2], [3]])
    with pytest.raises(ShapeError):
        Matrix.from_rows(ZZ, [])


def test_identity_and_zeros():
    I = Matrix.identity(ZZ, 3)
    assert I.to_rows() == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    Z = Matrix.zeros(ZZ, 2, 3)
    assert Z.to_rows() == [[0, 0, 0], [0, 0, 0]]


def test_add_entrywise():
    X = matrix_from_ints(ZZ, [[1, 2], [3, 4]])
    Y = matrix_from_ints(ZZ, [[10, 20], [30, 40]])
    assert (X + Y).to_rows() == [[11, 22], [33, 44]]
    assert mat_add(X, Y) == X + Y


def test_add_identities():
    X = matrix_from_ints(ZZ, [[1, -2], [3, 4]])
    zero = Matrix.zeros(ZZ, 2, 2)
    assert X + zero == X
    assert X + X.map_entries(lambda v: -v) == zero


def test_add_shape_mismatch():
    X = matrix_from_ints(ZZ, [[1, 2]])
    Y = matrix_from_ints(ZZ, [[1], [2]])
    with pytest.raises(ShapeError):
        X + Y


def test_slices():
    M = matrix_from_ints(ZZ, [[1, 2, 3, 4], [5, 6, 7, 8], [9, 10, 11, 12]])
    assert M.slice_rows(1, 3).to_rows() == [[5, 6, 7, 8], [9, 10, 11, 12]]
    assert M.slice_cols(1, 3).to_rows() == [[2, 3], [6, 7], [10, 11]]
    with pytest.raises(ShapeError):
        M.slice_rows(2, 2)
    with pytest.raises(ShapeError):
        M.slice_cols(3, 5)


def test_equality_requires_shape_and_entries():
    X = matrix_from_ints(ZZ, [[1, 2], [3, 4]])
    assert X == matrix_from_ints(ZZ, [[1, 2], [3, 4]])
    assert X != matrix_from_ints(ZZ, [[1, 2, 3, 4]])
    assert X != matrix_from_ints(ZZ, [[1, 2], [3, 5]])


def test_matrix_from_ints_reduces_through_ring():
    ring = ModularRing(5)
    M = matrix_from_ints(ring, [[7, -1]])
    assert M[0, 0].value == 2
    assert M[0, 1].value == 4


def test_random_matrix_shape_and_determinism():
    a = random_matrix(ZZ, 3, 4, random.Random(11))
    b = random_matrix(ZZ, 3, 4, random.Random(11))
    assert a.shape == (3, 4)
    assert a == b
