"""Reference and comparator multiplication schedules.

naive is the textbook product and serves as the correctness oracle for
everything else.  winograd_even and waksman_even are the classical
commutative inner-product schemes for even inner dimension (Waksman's
saves the final n/2 products at the price of exact halvings);
waksman_odd extends the even scheme to odd inner dimension with a
rank-one update and is the comparator the count tables are measured
against.

Multiplication counts (l x n times n x m):

    naive          l*n*m
    winograd_even  n*(l*m + l + m)/2          (n even)
    waksman_even   n*(l*m + l + m - 1)/2      (n even, needs halving)
    waksman_odd    (n-1)*(l*m + l + m - 1)/2 + l*m   (n odd)
"""

from __future__ import annotations

from functools import reduce
from operator import add

from .errors import ExactHalveUnavailable, ShapeError, UnsupportedShape
from .matrices import Matrix
from .rings import halve_exact


def _check_inner(A, B):
    if A.cols != B.rows:
        raise ShapeError(f"inner dimensions disagree: {A.rows}x{A.cols} times {B.rows}x{B.cols}")


def naive(A, B):
    """Textbook product; exactly rows*inner*cols multiplications."""
    _check_inner(A, B)
    brows = B.to_rows()
    n = A.cols
    out = []
    for i in range(A.rows):
        arow = A.row_list(i)
        for j in range(B.cols):
            out.append(reduce(add, [arow[k] * brows[k][j] for k in range(n)]))
    return Matrix(A.ring, A.rows, B.cols, out)


def winograd_even(A, B):
    """Division-free paired inner products for even inner dimension.

    c_ij = sum_k (a_{i,2k-1} + b_{2k,j})(a_{i,2k} + b_{2k-1,j}) - r_i - s_j
    with r_i, s_j the row/column self-products.  Exactly n(lm+l+m)/2
    multiplications; no halving capability needed.
    """
    _check_inner(A, B)
    n = A.cols
    if n % 2:
        raise UnsupportedShape(f"inner dimension {n} must be even")
    h = n // 2
    arows = A.to_rows()
    brows = B.to_rows()
    l, m = A.rows, B.cols

    r = [reduce(add, [a[2 * k] * a[2 * k + 1] for k in range(h)]) for a in arows]
    s = [
        reduce(add, [brows[2 * k][j] * brows[2 * k + 1][j] for k in range(h)])
        for j in range(m)
    ]
    out = []
    for i in range(l):
        a = arows[i]
        ri = r[i]
        for j in range(m):
            acc = reduce(
                add,
                [(a[2 * k] + brows[2 * k + 1][j]) * (a[2 * k + 1] + brows[2 * k][j]) for k in range(h)],
            )
            out.append(acc - ri - s[j])
    return Matrix(A.ring, l, m, out)


def waksman_even(A, B):
    """Paired inner products with sign splitting, for even inner dimension.

    Column 1 is computed from both sign variants
    P(+/-) = (a_{i,2k-1} +/- b_{2k,1})(a_{i,2k} +/- b_{2k-1,1}): the halved
    difference gives c_{i1} and the halved sum gives t_i = r_i + s_1 as a
    free by-product.  Row 1 likewise yields c_{1j} and u_j = r_1 + s_j.
    Every remaining entry needs the plus-variant only:

        c_ij = sum_k (a_{i,2k-1}+b_{2k,j})(a_{i,2k}+b_{2k-1,j}) - t_i - u_j + t_1

    Total: l*n + (m-1)*n + (l-1)(m-1)n/2 = n(lm+l+m-1)/2 multiplications.
    Halved operands are sums/differences of matched parity, so halving is
    exact over any 2-torsion-free ring.
    """
    _check_inner(A, B)
    n = A.cols
    if n % 2:
        raise UnsupportedShape(f"inner dimension {n} must be even")
    if not A.ring.supports_halving:
        raise ExactHalveUnavailable(f"ring {A.ring.name} lacks exact halving")
    h = n // 2
    arows = A.to_rows()
    brows = B.to_rows()
    l, m = A.rows, B.cols

    c = [[None] * m for _ in range(l)]
    t = [None] * l
    for i in range(l):
        a = arows[i]
        cacc = None
        tacc = None
        for k in range(h):
            x, y = a[2 * k], a[2 * k + 1]
            u, v = brows[2 * k + 1][0], brows[2 * k][0]
            pp = (x + u) * (y + v)
            pm = (x - u) * (y - v)
            cterm = halve_exact(pp - pm)
            tterm = halve_exact(pp + pm)
            cacc = cterm if cacc is None else cacc + cterm
            tacc = tterm if tacc is None else tacc + tterm
        c[i][0] = cacc
        t[i] = tacc

    u_col = [None] * m
    a0 = arows[0]
    for j in range(1, m):
        cacc = None
        uacc = None
        for k in range(h):
            x, y = a0[2 * k], a0[2 * k + 1]
            u, v = brows[2 * k + 1][j], brows[2 * k][j]
            pp = (x + u) * (y + v)
            pm = (x - u) * (y - v)
            cterm = halve_exact(pp - pm)
            uterm = halve_exact(pp + pm)
            cacc = cterm if cacc is None else cacc + cterm
            uacc = uterm if uacc is None else uacc + uterm
        c[0][j] = cacc
        u_col[j] = uacc

    t1 = t[0]
    for i in range(1, l):
        a = arows[i]
        ti = t[i]
        for j in range(1, m):
            acc = reduce(
                add,
                [(a[2 * k] + brows[2 * k + 1][j]) * (a[2 * k + 1] + brows[2 * k][j]) for k in range(h)],
            )
            c[i][j] = acc - ti - u_col[j] + t1

    return Matrix(A.ring, l, m, [v for row in c for v in row])


def waksman_odd(A, B):
    """Odd inner dimension: even-part schedule plus a rank-one update.

    Splits n = (n-1) + 1, runs waksman_even on the even part and adds
    the outer product of A's last column with B's last row (l*m naive
    multiplications), for (n-1)(lm+l+m-1)/2 + lm in total.
    """
    _check_inner(A, B)
    n = A.cols
    if n % 2 == 0:
        raise UnsupportedShape(f"inner dimension {n} must be odd")
    l, m = A.rows, B.cols
    last_a = [A[i, n - 1] for i in range(l)]
    last_b = B.row_list(n - 1)
    rank1 = Matrix(A.ring, l, m, [last_a[i] * last_b[j] for i in range(l) for j in range(m)])
    if n == 1:
        return rank1
    return waksman_even(A.slice_cols(0, n - 1), B.slice_rows(0, n - 1)) + rank1
