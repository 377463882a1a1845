import random

import pytest

from ringmul import (
    Matrix,
    ModularRing,
    ShapeError,
    Strategy,
    UnsupportedShape,
    ZZ,
    choose_strategy,
    matrix_from_ints,
    multiply,
    naive,
    predict_count,
    random_matrix,
)
from ringmul.dispatch import TIE_ORDER

CONCRETE = [s for s in Strategy if s is not Strategy.AUTO]


@pytest.mark.parametrize(
    "strategy,shape,expected",
    [
        (Strategy.GENERAL_ODD, (3, 3, 3), 21),
        (Strategy.GENERAL_ODD, (3, 3, 4), 28),
        (Strategy.GENERAL_ODD, (2, 5, 3), 25),
        (Strategy.GENERAL_ODD, (4, 5, 6), 84),
        (Strategy.WAKSMAN_ODD, (3, 3, 3), 23),
        (Strategy.WAKSMAN_ODD, (1, 1, 1), 1),
        (Strategy.WAKSMAN_EVEN, (2, 2, 2), 7),
        (Strategy.WINOGRAD_EVEN, (2, 2, 2), 8),
        (Strategy.CORE3, (5, 3, 3), 33),
        (Strategy.CORE3, (1, 3, 3), 9),
        (Strategy.NAIVE, (2, 2, 2), 8),
        (Strategy.NAIVE, (3, 4, 5), 60),
    ],
)
def test_predict_count_values(strategy, shape, expected):
    assert predict_count(strategy, *shape) == expected


@pytest.mark.parametrize(
    "strategy,shape",
    [
        (Strategy.WINOGRAD_EVEN, (2, 3, 2)),
        (Strategy.WAKSMAN_EVEN, (2, 5, 2)),
        (Strategy.WAKSMAN_ODD, (2, 4, 2)),
        (Strategy.CORE3, (2, 3, 4)),
        (Strategy.CORE3, (2, 5, 3)),
        (Strategy.GENERAL_ODD, (2, 4, 4)),
        (Strategy.GENERAL_ODD, (2, 1, 4)),
        (Strategy.GENERAL_ODD, (2, 5, 2)),
        (Strategy.AUTO, (2, 2, 2)),
        (Strategy.NAIVE, (0, 1, 1)),
    ],
)
def test_predict_count_domain(strategy, shape):
    with pytest.raises(UnsupportedShape):
        predict_count(strategy, *shape)


def test_predict_count_always_integral():
    # the closed forms divide exactly on their domains; a fractional
    # result would raise inside predict_count
    for strategy in CONCRETE:
        for l in range(1, 7):
            for n in range(1, 8):
                for m in range(1, 8):
                    try:
                        count = predict_count(strategy, l, n, m)
                    except UnsupportedShape:
                        continue
                    assert isinstance(count, int) and count >= 0


@pytest.mark.parametrize(
    "shape,halving,expected",
    [
        ((3, 3, 3), True, Strategy.GENERAL_ODD),
        ((3, 3, 3), False, Strategy.GENERAL_ODD),  # n = 3 never halves
        ((4, 4, 4), True, Strategy.WAKSMAN_EVEN),
        ((4, 4, 4), False, Strategy.WINOGRAD_EVEN),
        ((2, 5, 2), False, Strategy.NAIVE),
        ((2, 5, 2), True, Strategy.WAKSMAN_ODD),
        ((5, 1, 5), True, Strategy.NAIVE),
        ((2, 5, 4), True, Strategy.GENERAL_ODD),
        ((2, 5, 4), False, Strategy.NAIVE),  # odd n > 3 needs halving
        ((2, 4, 3), False, Strategy.WINOGRAD_EVEN),
        ((1, 2, 1), False, Strategy.NAIVE),  # winograd would cost n/2 extra here
        ((1, 4, 3), False, Strategy.NAIVE),
    ],
)
def test_choose_strategy_rules(shape, halving, expected):
    assert choose_strategy(*shape, supports_halving=halving) is expected


def test_choose_strategy_is_never_beaten():
    # the chosen strategy attains the minimum predicted count among all
    # strategies applicable to the shape and capability set
    for halving in (True, False):
        for l in range(1, 7):
            for n in range(1, 7):
                for m in range(1, 7):
                    chosen = choose_strategy(l, n, m, supports_halving=halving)
                    applicable = {}
                    for s in CONCRETE:
                        needs_halving = (
                            s is Strategy.WAKSMAN_EVEN
                            or (s is Strategy.WAKSMAN_ODD and n > 1)
                            or (s is Strategy.GENERAL_ODD and n > 3)
                        )
                        if needs_halving and not halving:
                            continue
                        try:
                            applicable[s] = predict_count(s, l, n, m)
                        except UnsupportedShape:
                            continue
                    best = min(applicable.values())
                    assert applicable[chosen] == best, (l, n, m, halving, chosen)
                    if n == 1:
                        # explicit rule: trivial inner dimension is naive,
                        # even though waksman-odd ties it
                        assert chosen is Strategy.NAIVE
                    else:
                        # among equally cheap strategies the fixed order wins
                        cheapest = [s for s in TIE_ORDER if applicable.get(s) == best]
                        assert chosen is cheapest[0]


def test_multiply_auto_3x3_identities():
    I = Matrix.identity(ZZ, 3)
    product, report = multiply(I, I)
    assert product == I
    assert report.strategy is Strategy.GENERAL_ODD
    assert report.predicted == report.observed == 21


def test_multiply_auto_row_times_3x3():
    a = matrix_from_ints(ZZ, [[1, 2, 3]])
    B = matrix_from_ints(ZZ, [[1, 2, 3], [4, 5, 6], [7, 8, 9]])
    product, report = multiply(a, B)
    assert product.to_rows() == [[30, 36, 42]]
    assert report.predicted == report.observed == 9


def test_multiply_auto_2x2():
    A = matrix_from_ints(ZZ, [[1, 2], [3, 4]])
    product, report = multiply(A, A)
    assert product == naive(A, A)
    assert report.strategy is Strategy.WAKSMAN_EVEN
    assert report.predicted == report.observed == 7


def test_multiply_explicit_strategies_match_naive():
    rng = random.Random(3)
    cases = [
        (Strategy.NAIVE, 2, 3, 2),
        (Strategy.WINOGRAD_EVEN, 3, 4, 2),
        (Strategy.WAKSMAN_EVEN, 2, 6, 3),
        (Strategy.WAKSMAN_ODD, 3, 5, 2),
        (Strategy.CORE3, 4, 3, 3),
        (Strategy.GENERAL_ODD, 2, 7, 5),
    ]
    for strategy, l, n, m in cases:
        A = random_matrix(ZZ, l, n, rng)
        B = random_matrix(ZZ, n, m, rng)
        product, report = multiply(A, B, strategy)
        assert product == naive(A, B)
        assert report.predicted == report.observed
        assert report.strategy is strategy


def test_multiply_auto_over_rings_without_halving():
    ring = ModularRing(6)
    rng = random.Random(4)
    for l, n, m in [(2, 4, 3), (2, 5, 2), (3, 3, 3), (2, 5, 4)]:
        A = random_matrix(ring, l, n, rng)
        B = random_matrix(ring, n, m, rng)
        product, report = multiply(A, B)
        assert product == naive(A, B)
        assert report.predicted == report.observed


def test_multiply_predicted_equals_observed_grid():
    rng = random.Random(5)
    for l in range(1, 6):
        for n in range(1, 7):
            for m in range(1, 6):
                A = random_matrix(ZZ, l, n, rng)
                B = random_matrix(ZZ, n, m, rng)
                product, report = multiply(A, B)
                assert report.predicted == report.observed, report
                assert product == naive(A, B)


def test_multiply_rejects_bad_explicit_strategy():
    A = matrix_from_ints(ZZ, [[1, 2], [3, 4]])
    with pytest.raises(UnsupportedShape):
        multiply(A, A, Strategy.CORE3)


def test_multiply_shape_and_ring_checks():
    A = matrix_from_ints(ZZ, [[1, 2]])
    with pytest.raises(ShapeError):
        multiply(A, A)
    B = matrix_from_ints(ModularRing(5), [[1], [2]])
    with pytest.raises(ValueError):
        multiply(A, B)
