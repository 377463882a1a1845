"""General product for odd inner dimension.

mul_odd_n multiplies l x n by n x m (n odd >= 3, m >= 3) by splitting
A = [A1 | A2], B = [B1 over B2] with A1 l x 3, B1 3 x m, so that
AB = A1*B1 + A2*B2.  The 3-wide core block A1*B1 is computed by
core3_times_3xm below; the remainder A2*B2 has even inner dimension
n - 3 and goes to baseline.waksman_even (absent entirely when n = 3).

Multiplication counts:

    core3_times_3xm   3(lm + l + m - 1)/2           (m odd)
                      2(l - 1) + 3(lm + m)/2        (m even)
    mul_odd_n         n(lm + l + m - 1)/2           (m odd)
                      (n(lm + l + m - 1) + l - 1)/2 (m even)

The core block extends the 6-per-row schedule of `ringmul.core3` to the
columns beyond the third, two at a time: each column pair (j, j+1)
reuses the three row-level products shared with columns 1..3 and adds
exactly 3 new row-level products per row plus 3 products involving only
entries of B.  The B-only correction products are cached per pair, not
per row; that caching is what the count formulas price in.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import baseline
from .errors import ShapeError, UnsupportedShape
from .matrices import Matrix


@dataclass(frozen=True)
class ColumnPairSchedule:
    """Column pairs (1-based) processed together beyond the lead block.

    start is 4 for odd width, 5 for even width (column 4 is then handled
    by its own single-column correction); pairs tile start..m exactly and
    are empty for m in (3, 4).
    """

    start: int
    pairs: tuple

    @classmethod
    def for_width(cls, m):
        if m < 3:
            raise UnsupportedShape(f"width {m} must be >= 3")
        start = 4 if m % 2 else 5
        return cls(start, tuple((j, j + 1) for j in range(start, m, 2)))


def core3_times_3xm(A1, B1):
    """l x 3 times 3 x m (m >= 3) with row-shared and B-only products.

    Exactly 3(lm+l+m-1)/2 multiplications for odd m and
    2(l-1) + 3(lm+m)/2 for even m; the count does not depend on the
    entry values.
    """
    if A1.cols != 3:
        raise ShapeError(f"left factor must have 3 columns, got {A1.cols}")
    if B1.rows != 3:
        raise ShapeError(f"right factor must have 3 rows, got {B1.rows}")
    m = B1.cols
    if m < 3:
        raise UnsupportedShape(f"right factor width {m} must be >= 3")

    l = A1.rows
    b1, b2, b3 = B1.row_list(0), B1.row_list(1), B1.row_list(2)

    # B-only products, computed once and reused by every row.
    q12 = b1[1] * b2[0]  # b12*b21
    q13 = b1[2] * b3[0]  # b13*b31
    q23 = b2[2] * b3[1]  # b23*b32

    m_even = m % 2 == 0
    if m_even:
        v4 = (b2[0] - b2[3]) * (-b1[1] + b1[3])  # (b21-b24)(-b12+b14)

    sched = ColumnPairSchedule.for_width(m)
    pair_b = []
    for j, j1 in sched.pairs:
        J, J1 = j - 1, j1 - 1
        v1 = (b2[0] - b2[J]) * (-b1[1] + b1[J] - b1[J1])
        v2 = (b3[0] - b3[J]) * (-b1[2] + b1[J1])
        v3 = (b3[1] + b3[J] - b3[J1]) * (-b2[2] + b2[J1])
        pair_b.append((v1, v2, v3))

    out = []
    for i in range(l):
        a1, a2, a3 = A1.row_list(i)
        # Row-level products shared across every output column of row i.
        rp1 = (a1 + b2[0]) * (a2 + b1[1])  # (a_i1+b21)(a_i2+b12)
        rp2 = (a1 + b3[0]) * (a3 + b1[2])  # (a_i1+b31)(a_i3+b13)
        rp3 = (a2 + b3[1]) * (a3 + b2[2])  # (a_i2+b32)(a_i3+b23)
        p4 = a1 * (b1[0] - b1[1] - b1[2] - a2 - a3)
        p5 = a2 * (b2[1] - b2[0] - b2[2] - a1 - a3)
        p6 = a3 * (b3[2] - b3[0] - b3[1] - a1 - a2)

        row = [None] * m
        row[0] = rp1 + rp2 + p4 - q12 - q13
        row[1] = rp1 + rp3 + p5 - q12 - q23
        row[2] = rp2 + rp3 + p6 - q13 - q23
        if m_even:
            w = (a1 + b2[0] - b2[3]) * (-a2 - b1[1] + b1[3])
            row[3] = rp1 + w + a3 * b3[3] - q12 - v4

        for (j, j1), (v1, v2, v3) in zip(sched.pairs, pair_b):
            J, J1 = j - 1, j1 - 1
            u1 = (a1 + b2[0] - b2[J]) * (-a2 - b1[1] + b1[J] - b1[J1])
            u2 = (a1 + b3[0] - b3[J]) * (-a3 - b1[2] + b1[J1])
            u3 = (a2 + b3[1] + b3[J] - b3[J1]) * (-a3 - b2[2] + b2[J1])
            row[J] = rp1 + rp2 + u1 + u2 - q12 - q13 - v1 - v2
            row[J1] = rp2 + rp3 + u2 + u3 - q13 - q23 - v2 - v3
        out.extend(row)

    return Matrix(A1.ring, l, m, out)


def mul_odd_n(A, B):
    """l x n times n x m for odd n >= 3 and m >= 3.

    Exactly n(lm+l+m-1)/2 multiplications for odd m and
    (n(lm+l+m-1) + l - 1)/2 for even m.  For n > 3 the ring must support
    exact halving (the even remainder runs Waksman's scheme); for n = 3
    the remainder is absent and no halving is needed.
    """
    if A.cols != B.rows:
        raise ShapeError(f"inner dimensions disagree: {A.rows}x{A.cols} times {B.rows}x{B.cols}")
    n = A.cols
    m = B.cols
    if n % 2 == 0 or n < 3:
        raise UnsupportedShape(f"inner dimension {n} must be odd and >= 3")
    if m < 3:
        raise UnsupportedShape(f"output width {m} must be >= 3")
    lead = core3_times_3xm(A.slice_cols(0, 3), B.slice_rows(0, 3))
    if n == 3:
        return lead
    remainder = baseline.waksman_even(A.slice_cols(3, n), B.slice_rows(3, n))
    return mat_add(lead, remainder)


def mat_add(X, Y):
    """Entrywise sum; zero multiplications."""
    return X + Y
