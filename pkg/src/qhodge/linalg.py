"""Dense exact linear algebra over any field whose elements support
``+ - * /`` and truthiness (nonzero test).

Matrices are lists of rows.  Nothing here knows about q; the same routines
serve ``RatFunc`` matrices and their specializations to Gaussian rationals.
"""

from __future__ import annotations

from typing import Callable, Sequence

Matrix = list


def _weight(x) -> int:
    w = getattr(x, "degree_weight", None)
    return w() if w else 0


def zeros(rows: int, cols: int, zero) -> Matrix:
    return [[zero] * cols for _ in range(rows)]


def identity(n: int, zero, one) -> Matrix:
    m = zeros(n, n, zero)
    for i in range(n):
        m[i][i] = one
    return m


def matmul(a: Matrix, b: Matrix, zero) -> Matrix:
    cols = len(b[0]) if b else 0
    out = []
    for row in a:
        acc = [zero] * cols
        for k, x in enumerate(row):
            if not x:
                continue
            bk = b[k]
            for j in range(cols):
                y = bk[j]
                if y:
                    acc[j] = acc[j] + x * y
        out.append(acc)
    return out


def matvec(a: Matrix, v: Sequence, zero) -> list:
    out = []
    for row in a:
        acc = zero
        for x, y in zip(row, v):
            if x and y:
                acc = acc + x * y
        out.append(acc)
    return out


def add(a: Matrix, b: Matrix) -> Matrix:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def sub(a: Matrix, b: Matrix) -> Matrix:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def scale(a: Matrix, c) -> Matrix:
    return [[x * c if x else x for x in row] for row in a]


def transpose(a: Matrix) -> Matrix:
    return [list(col) for col in zip(*a)]


def kron(a: Matrix, b: Matrix, zero) -> Matrix:
    ra, ca, rb, cb = len(a), len(a[0]), len(b), len(b[0])
    out = zeros(ra * rb, ca * cb, zero)
    for i in range(ra):
        for j in range(ca):
            x = a[i][j]
            if not x:
                continue
            for k in range(rb):
                for l in range(cb):
                    y = b[k][l]
                    if y:
                        out[i * rb + k][j * cb + l] = x * y
    return out


def is_zero_matrix(a: Matrix) -> bool:
    return not any(x for row in a for x in row)


def equal(a: Matrix, b: Matrix) -> bool:
    return all(x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb))


def map_entries(a: Matrix, fn: Callable) -> Matrix:
    return [[fn(x) for x in row] for row in a]


def _pick_pivot(m: Matrix, col: int, start: int):
    best, best_w = None, None
    for r in range(start, len(m)):
        x = m[r][col]
        if x:
            w = _weight(x)
            if best is None or w < best_w:
                best, best_w = r, w
    return best


def bareiss_echelon(a: Matrix, one):
    """Fraction-free (Bareiss) forward elimination.

    Returns (echelon matrix, pivot columns, sign of the row permutation).
    Every division performed is exact in the underlying integral domain;
    over a field it is simply a division.
    """
    m = [list(r) for r in a]
    rows = len(m)
    cols = len(m[0]) if m else 0
    prev = one
    pivots = []
    sign = 1
    r = 0
    for c in range(cols):
        if r >= rows:
            break
        p = _pick_pivot(m, c, r)
        if p is None:
            continue
        if p != r:
            m[r], m[p] = m[p], m[r]
            sign = -sign
        piv = m[r][c]
        for i in range(r + 1, rows):
            mic = m[i][c]
            row_i = m[i]
            row_r = m[r]
            for j in range(c + 1, cols):
                v = piv * row_i[j]
                if mic and row_r[j]:
                    v = v - mic * row_r[j]
                row_i[j] = v / prev if v else v
            row_i[c] = mic - mic  # exact zero of the right type
        prev = piv
        pivots.append(c)
        r += 1
    return m, pivots, sign


def rank(a: Matrix, one) -> int:
    if not a or not a[0]:
        return 0
    return len(bareiss_echelon(a, one)[1])


def determinant(a: Matrix, one):
    n = len(a)
    if n == 0:
        return one
    m, pivots, sign = bareiss_echelon(a, one)
    if len(pivots) < n:
        return one - one
    d = m[n - 1][n - 1]
    return d if sign > 0 else -d


def rref(a: Matrix):
    """Reduced row echelon form by Gauss-Jordan; returns (matrix, pivots)."""
    m = [list(r) for r in a]
    rows = len(m)
    cols = len(m[0]) if m else 0
    pivots = []
    r = 0
    for c in range(cols):
        if r >= rows:
            break
        p = _pick_pivot(m, c, r)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c] if not hasattr(m[r][c], "inverse") else m[r][c].inverse()
        m[r] = [x * inv if x else x for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y if y else x for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m, pivots


def nullspace(a: Matrix, zero, one) -> list:
    """Basis of {v : a v = 0} as a list of column vectors."""
    cols = len(a[0])
    m, pivots = rref(a)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        v = [zero] * cols
        v[f] = one
        for i, p in enumerate(pivots):
            if m[i][f]:
                v[p] = -m[i][f]
        basis.append(v)
    return basis


def column_space(a: Matrix) -> list:
    """Basis of the column span (as a list of column vectors)."""
    _, pivots = rref(a)
    return [[row[c] for row in a] for c in pivots]


def solve(a: Matrix, b: Sequence, zero):
    """Solve a x = b; raises ValueError when inconsistent.  Free variables
    are set to zero."""
    aug = [list(row) + [rhs] for row, rhs in zip(a, b)]
    m, pivots = rref(aug)
    cols = len(a[0])
    if cols in pivots:
        raise ValueError("inconsistent linear system")
    x = [zero] * cols
    for i, p in enumerate(pivots):
        x[p] = m[i][cols]
    return x


def inverse(a: Matrix, zero, one) -> Matrix:
    n = len(a)
    aug = [list(row) + [one if i == j else zero for j in range(n)] for i, row in enumerate(a)]
    m, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return [row[n:] for row in m]


def same_span(u: list, v: list, one) -> bool:
    """Whether two lists of vectors span the same subspace."""
    if not u and not v:
        return True
    ru = rank(u, one) if u else 0
    rv = rank(v, one) if v else 0
    both = rank(list(u) + list(v), one)
    return ru == rv == both


def charpoly(a: Matrix, zero, one) -> list:
    """Characteristic polynomial det(x I - a) as ascending coefficients,
    by the Faddeev-LeVerrier recursion (needs division by integers)."""
    n = len(a)
    coeffs = [zero] * (n + 1)
    coeffs[n] = one
    m = zeros(n, n, zero)
    for k in range(1, n + 1):
        # M_k = A M_{k-1} + c_{n-k+1} I
        m = matmul(a, m, zero)
        for i in range(n):
            m[i][i] = m[i][i] + coeffs[n - k + 1]
        am = matmul(a, m, zero)
        tr = zero
        for i in range(n):
            tr = tr + am[i][i]
        coeffs[n - k] = -tr / k
    return coeffs
