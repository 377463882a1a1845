import random

import pytest

from ringmul import (
    Counted,
    CountedRing,
    ExactHalveUnavailable,
    IntegerRing,
    IntMat2,
    Mat2Ring,
    Mod,
    ModularRing,
    NotEvenlyDivisible,
    halve_exact,
    matrix_from_ints,
    mul_33_33,
    random_matrix,
    ring_axiom_check,
)


def test_halve_exact_integers():
    assert halve_exact(4) == 2
    assert halve_exact(-6) == -3
    assert halve_exact(0) == 0


def test_halve_exact_odd_integer_rejected():
    with pytest.raises(NotEvenlyDivisible):
        halve_exact(3)


def test_halve_exact_mod7_matches_brute_force():
    # oracle: the y in 0..6 with y + y = 3 (mod 7), found by enumeration
    candidates = [y for y in range(7) if (2 * y) % 7 == 3]
    assert candidates == [5]
    assert halve_exact(Mod(3, 7)) == Mod(5, 7)


def test_halve_exact_every_residue_odd_modulus():
    for p in (3, 7, 101):
        for v in range(p):
            y = halve_exact(Mod(v, p))
            assert y + y == Mod(v, p)


def test_halve_unavailable_even_modulus():
    with pytest.raises(ExactHalveUnavailable):
        halve_exact(Mod(2, 6))


def test_halving_capability_flags():
    assert IntegerRing().supports_halving
    assert ModularRing(7).supports_halving
    assert not ModularRing(6).supports_halving
    assert CountedRing(ModularRing(6)).supports_halving is False
    assert CountedRing(IntegerRing()).supports_halving is True


def test_mat2_halve():
    assert halve_exact(IntMat2(2, 4, -6, 0)) == IntMat2(1, 2, -3, 0)
    with pytest.raises(NotEvenlyDivisible):
        halve_exact(IntMat2(2, 3, 4, 6))


def test_mod_arithmetic_stays_reduced():
    assert Mod(10, 7) == Mod(3, 7)
    assert (Mod(5, 7) + Mod(4, 7)).value == 2
    assert (Mod(2, 7) - Mod(5, 7)).value == 4
    assert (Mod(3, 7) * Mod(5, 7)).value == 1
    assert (-Mod(1, 7)).value == 6


def test_mod_mixed_moduli_rejected():
    with pytest.raises(ValueError):
        Mod(1, 5) + Mod(1, 7)


def test_axioms_hold_for_integers():
    assert ring_axiom_check(IntegerRing(), samples=100, seed=1).ok


def test_axioms_hold_for_mod6_and_mod7():
    assert ring_axiom_check(ModularRing(6), samples=100, seed=2).ok
    assert ring_axiom_check(ModularRing(7), samples=100, seed=3).ok


def test_axioms_deterministic_given_seed():
    a = ring_axiom_check(IntegerRing(), samples=20, seed=9)
    b = ring_axiom_check(IntegerRing(), samples=20, seed=9)
    assert a.ok and b.ok and a.samples == b.samples


def test_axiom_check_rejects_noncommutative_ring():
    report = ring_axiom_check(Mat2Ring(), samples=50, seed=3)
    assert not report.ok
    laws = {f.law for f in report.failures}
    assert "mul_commutative" in laws
    witness = next(f for f in report.failures if f.law == "mul_commutative")
    x, y = witness.operands
    assert x * y != y * x
    assert "mul_commutative" in witness.describe()


def test_axiom_check_sample_count_validated():
    with pytest.raises(ValueError):
        ring_axiom_check(IntegerRing(), samples=0)


def test_counted_only_mul_bumps_tally():
    ctx = CountedRing(IntegerRing())
    x = Counted(ctx, 3, True)
    y = Counted(ctx, 4, True)
    _ = x + y
    _ = x - y
    _ = -x
    assert ctx.tally.count == 0
    z = x * y
    assert ctx.tally.count == 1
    assert z.value == 12
    _ = z.halve()
    assert ctx.tally.count == 1  # halving is free


def test_counted_taint_propagation():
    ctx = CountedRing(IntegerRing())
    inp = Counted(ctx, 5, True)
    const = ctx.from_int(7)
    assert inp.taint and not const.taint
    assert (inp + const).taint
    assert not (const + const).taint
    assert (inp * const).taint
    assert ctx.untainted_muls == 1  # the mul above consumed a constant
    _ = inp * inp
    assert ctx.untainted_muls == 1


def test_contexts_are_isolated():
    ctx1 = CountedRing(IntegerRing())
    ctx2 = CountedRing(IntegerRing())
    a = Counted(ctx1, 2, True)
    _ = a * a
    assert ctx1.tally.count == 1
    assert ctx2.tally.count == 0


def test_lift_unwrap_roundtrip():
    ring = IntegerRing()
    ctx = CountedRing(ring)
    M = matrix_from_ints(ring, [[1, 2], [3, 4]])
    lifted = ctx.lift(M)
    assert all(isinstance(e, Counted) and e.taint for e in lifted.data)
    assert ctx.unwrap(lifted) == M


def test_lift_rejects_foreign_ring():
    ctx = CountedRing(IntegerRing())
    M = matrix_from_ints(ModularRing(5), [[1]])
    with pytest.raises(ValueError):
        ctx.lift(M)


def test_tally_is_data_independent():
    # the same straight-line schedule on different inputs tallies equally
    rng = random.Random(0)
    counts = []
    for _ in range(3):
        ctx = CountedRing(IntegerRing())
        A = ctx.lift(random_matrix(IntegerRing(), 3, 3, rng))
        B = ctx.lift(random_matrix(IntegerRing(), 3, 3, rng))
        mul_33_33(A, B)
        counts.append(ctx.tally.count)
    assert counts == [21, 21, 21]
