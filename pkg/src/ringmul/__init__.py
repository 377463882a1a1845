"""Exact matrix products over commutative rings with audited
multiplication counts.

The fast schedules here trade general ring multiplications for
additions: an n x 3 times 3 x 3 product costs 6n + 3 multiplications
(21 for two 3 x 3 matrices), and an l x n times n x m product for odd n
costs n(lm + l + m - 1)/2 (odd m) or (n(lm + l + m - 1) + l - 1)/2
(even m).  Everything is computed exactly, over integers, residues,
or polynomials; `ringmul.verify` proves each schedule over the free
commutative ring and audits the advertised counts.
"""

from .baseline import naive, waksman_even, waksman_odd, winograd_even
from .core3 import SharedBProducts, mul_33_33, mul_n3_33, row_times_3x3, shared_b_products
from .dispatch import CostReport, Strategy, choose_strategy, kernel_for, multiply, predict_count
from .errors import (
    CountMismatch,
    ExactHalveUnavailable,
    NotEvenlyDivisible,
    ShapeError,
    TermBudgetExceeded,
    UnsupportedShape,
    WitnessNotFound,
)
from .general import ColumnPairSchedule, core3_times_3xm, mat_add, mul_odd_n
from .matrices import Matrix, matrix_from_ints, random_matrix
from .polynomials import PolynomialRing, SparsePolynomial
from .rings import (
    Counted,
    CountedRing,
    IntegerRing,
    IntMat2,
    Mat2Ring,
    Mod,
    ModularRing,
    MulTally,
    Ring,
    ZZ,
    halve_exact,
    ring_axiom_check,
)
from .verify import (
    count_audit,
    noncommutative_witness,
    randomized_check,
    symbolic_verify,
    taint_audit,
)

__version__ = "0.1.0"

__all__ = [
    "ColumnPairSchedule",
    "CostReport",
    "Counted",
    "CountedRing",
    "CountMismatch",
    "ExactHalveUnavailable",
    "IntMat2",
    "IntegerRing",
    "Mat2Ring",
    "Matrix",
    "Mod",
    "ModularRing",
    "MulTally",
    "NotEvenlyDivisible",
    "PolynomialRing",
    "Ring",
    "ShapeError",
    "SharedBProducts",
    "SparsePolynomial",
    "Strategy",
    "TermBudgetExceeded",
    "UnsupportedShape",
    "WitnessNotFound",
    "ZZ",
    "choose_strategy",
    "core3_times_3xm",
    "count_audit",
    "halve_exact",
    "kernel_for",
    "mat_add",
    "matrix_from_ints",
    "mul_33_33",
    "mul_n3_33",
    "mul_odd_n",
    "multiply",
    "naive",
    "noncommutative_witness",
    "predict_count",
    "random_matrix",
    "randomized_check",
    "ring_axiom_check",
    "row_times_3x3",
    "shared_b_products",
    "symbolic_verify",
    "taint_audit",
    "waksman_even",
    "waksman_odd",
    "winograd_even",
]
