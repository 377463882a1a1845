import pytest

from ringmul import IntMat2, Mat2Ring, Matrix

# Frozen regression fixture: 3x3 matrices over 2x2 integer matrices on
# which the 21-multiplication schedule disagrees with the textbook
# product (found by the seeded search in ringmul.verify, seed 0).
WITNESS_A = (
    ((1, 1, -2, 0), (2, 1, 1, 0), (1, 0, 2, -1)),
    ((2, -1, 0, -1), (-2, 2, 0, 2), (2, -1, 0, -2)),
    ((-2, 0, 1, 2), (-2, 0, 1, 0), (2, -1, 2, 1)),
)
WITNESS_B = (
    ((1, 2, 0, -2), (2, -2, -2, 1), (-2, 2, 1, 0)),
    ((-1, 0, -2, -1), (2, -1, -1, -1), (2, 1, -2, -2)),
    ((0, 2, 1, -2), (0, 2, 0, -2), (2, 0, 2, -1)),
)


def mat2_matrix(ring, rows):
    return Matrix.from_rows(ring, [[IntMat2(*e) for e in r] for r in rows])


@pytest.fixture
def frozen_noncommutative_pair():
    ring = Mat2Ring()
    return mat2_matrix(ring, WITNESS_A), mat2_matrix(ring, WITNESS_B)
