"""Correctness machinery for the multiplication schedules.

Three independent routes:

  - randomized_check compares a strategy against the textbook product on
    seeded pseudorandom matrices over a concrete ring;
  - symbolic_verify runs a strategy over the free commutative ring
    (integer polynomials in one indeterminate per matrix entry) and
    checks that every output entry minus the generic product expands to
    the zero polynomial -- which proves the identity over every
    commutative ring at once;
  - count_audit asserts the observed multiplication tally equals the
    closed-form prediction and is independent of the input values.

noncommutative_witness demonstrates the flip side: over a ring where
multiplication does not commute (2x2 integer matrices) the 3x3 schedule
produces wrong answers, so commutativity is genuinely load-bearing.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import baseline, core3, dispatch
from .dispatch import CostReport, Strategy, kernel_for, predict_count
from .errors import CountMismatch, TermBudgetExceeded, WitnessNotFound
from .matrices import Matrix, random_matrix
from .polynomials import PolynomialRing
from .rings import CountedRing, IntegerRing, Mat2Ring


def entry_names(l, n, m):
    """Variable names a11..a_ln, b11..b_nm for an l x n times n x m product."""
    sep = "_" if max(l, n, m) > 9 else ""
    a = [f"a{i + 1}{sep}{j + 1}" for i in range(l) for j in range(n)]
    b = [f"b{j + 1}{sep}{k + 1}" for j in range(n) for k in range(m)]
    return a + b


@dataclass
class SymbolicReport:
    """Outcome of one symbolic identity check.

    On failure, entry is the (row, col) of the first wrong output entry
    and monomial/coefficient give one offending term of the difference.
    """

    strategy: object
    l: int
    n: int
    m: int
    ok: bool
    entry: tuple = None
    monomial: str = None
    coefficient: int = None

    def describe(self):
        if self.ok:
            return f"{self.strategy} ({self.l},{self.n},{self.m}): identity holds"
        return (
            f"{self.strategy} ({self.l},{self.n},{self.m}): entry {self.entry} "
            f"differs by {self.coefficient}*{self.monomial}"
        )


def symbolic_verify(strategy, l, n, m, kernel=None, max_terms=200_000):
    """Prove (or refute) a schedule over the free commutative ring.

    Builds matrices of distinct indeterminates, runs the strategy's
    kernel, subtracts the generic product sum_k a_ik*b_kj entrywise and
    reports the first nonzero difference, if any.  kernel overrides the
    strategy's own callable (used by the mutation tests).  max_terms
    bounds intermediate polynomial sizes via the ring's resource guard.
    """
    if kernel is None:
        kernel = kernel_for(strategy)
        predict_count(strategy, l, n, m)  # validates the shape
    ring = PolynomialRing(entry_names(l, n, m), max_terms=max_terms)
    vs = ring.variables()
    A = Matrix(ring, l, n, vs[: l * n])
    B = Matrix(ring, n, m, vs[l * n :])
    C = kernel(A, B)

    arows = A.to_rows()
    brows = B.to_rows()
    for i in range(l):
        for j in range(m):
            ref = arows[i][0] * brows[0][j]
            for k in range(1, n):
                ref = ref + arows[i][k] * brows[k][j]
            diff = C[i, j] - ref
            if len(diff.terms) > max_terms:
                raise TermBudgetExceeded(f"difference has {len(diff.terms)} terms")
            if not diff.is_zero():
                exps = min(diff.terms)
                return SymbolicReport(
                    strategy, l, n, m, False,
                    entry=(i, j),
                    monomial=ring.format_monomial(exps),
                    coefficient=diff.terms[exps],
                )
    return SymbolicReport(strategy, l, n, m, True)


@dataclass
class Mismatch:
    trial: int
    a_rows: list
    b_rows: list
    got_rows: list
    want_rows: list


@dataclass
class RandomCheckReport:
    strategy: object
    l: int
    n: int
    m: int
    trials: int
    agreements: int
    mismatch: Mismatch = None

    @property
    def ok(self):
        return self.mismatch is None and self.agreements == self.trials

    def describe(self):
        if self.ok:
            return f"{self.strategy} ({self.l},{self.n},{self.m}): {self.agreements}/{self.trials} equal"
        return (
            f"{self.strategy} ({self.l},{self.n},{self.m}): trial {self.mismatch.trial} "
            f"differs on A={self.mismatch.a_rows} B={self.mismatch.b_rows}"
        )


def randomized_check(strategy, l, n, m, ring=None, trials=100, seed=0):
    """Compare a strategy to the textbook product on seeded random inputs.

    Deterministic for a fixed seed; on the first mismatch the report
    carries the full inputs and both outputs.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    ring = ring if ring is not None else IntegerRing()
    kernel = kernel_for(strategy)
    rng = random.Random(seed)
    for t in range(trials):
        A = random_matrix(ring, l, n, rng)
        B = random_matrix(ring, n, m, rng)
        got = kernel(A, B)
        want = baseline.naive(A, B)
        if got != want:
            return RandomCheckReport(
                strategy, l, n, m, trials, t,
                Mismatch(t, A.to_rows(), B.to_rows(), got.to_rows(), want.to_rows()),
            )
    return RandomCheckReport(strategy, l, n, m, trials, trials)


def count_audit(strategy, l, n, m, trials=2, seed=0):
    """Assert the tally is the predicted count and input-independent.

    Runs the strategy on at least two distinct random inputs; raises
    CountMismatch if any tally differs from the closed-form prediction
    (they cannot differ from each other then).  Returns the CostReport.
    """
    trials = max(2, trials)
    predicted = predict_count(strategy, l, n, m)
    ring = IntegerRing()
    rng = random.Random(seed)
    report = None
    for _ in range(trials):
        A = random_matrix(ring, l, n, rng)
        B = random_matrix(ring, n, m, rng)
        _, report = dispatch.multiply(A, B, strategy)
        if report.observed != predicted:
            raise CountMismatch(
                f"{strategy} on ({l},{n},{m}): predicted {predicted}, observed {report.observed}",
                predicted=predicted,
                observed=report.observed,
            )
    return CostReport(strategy, l, n, m, predicted, report.observed)


def taint_audit(strategy, l, n, m, seed=0):
    """Count multiplications that consumed an operand not derived from
    the input matrices.  The schedules here never multiply by injected
    constants, so this is zero for every supported shape."""
    ring = IntegerRing()
    rng = random.Random(seed)
    ctx = CountedRing(ring)
    A = ctx.lift(random_matrix(ring, l, n, rng))
    B = ctx.lift(random_matrix(ring, n, m, rng))
    kernel_for(strategy)(A, B)
    return ctx.untainted_muls


@dataclass
class NoncommutativeWitness:
    """Inputs over 2x2 integer matrices where the 3x3 schedule fails.

    schedule_product comes from the 21-multiplication schedule,
    naive_product from the textbook formula (which is correct over any
    ring, commutative or not); they differ at differing_entries.
    """

    attempt: int
    a: Matrix
    b: Matrix
    schedule_product: Matrix
    naive_product: Matrix
    differing_entries: list


def noncommutative_witness(seed=0, attempts=64, sample_span=2):
    """Search for a pair of 3x3 matrices over 2x2 integer matrices where
    the fast 3x3 schedule disagrees with the textbook product.

    Seeded and deterministic.  Raises WitnessNotFound only if the budget
    is exhausted, which would mean the schedule does not actually exploit
    commutativity.
    """
    ring = Mat2Ring(sample_span=sample_span)
    rng = random.Random(seed)
    for attempt in range(attempts):
        A = random_matrix(ring, 3, 3, rng)
        B = random_matrix(ring, 3, 3, rng)
        got = core3.mul_33_33(A, B)
        want = baseline.naive(A, B)
        if got != want:
            diffs = [
                (i, j)
                for i in range(3)
                for j in range(3)
                if got[i, j] != want[i, j]
            ]
            return NoncommutativeWitness(attempt, A, B, got, want, diffs)
    raise WitnessNotFound(f"no disagreement in {attempts} seeded attempts")
