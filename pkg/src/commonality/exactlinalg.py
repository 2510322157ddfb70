"""Dense exact linear algebra over the rationals.

Just enough for the certificate checks: ranks and unique solutions of
small systems, with every entry a Fraction so there is no tolerance to
argue about.  Pivoting picks the first nonzero entry in the column, which
keeps runs deterministic.
"""

from __future__ import annotations

from fractions import Fraction


def _copy(rows):
    out = [[Fraction(x) for x in row] for row in rows]
    if out:
        width = len(out[0])
        assert all(len(row) == width for row in out)
    return out


def rank(rows) -> int:
    """Rank of a matrix given as a list of rows."""
    a = _copy(rows)
    m = len(a)
    n = len(a[0]) if m else 0
    r = 0
    for col in range(n):
        if r == m:
            break
        piv = None
        for i in range(r, m):
            if a[i][col] != 0:
                piv = i
                break
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = a[r][col]
        for i in range(m):
            if i != r and a[i][col] != 0:
                f = a[i][col] / inv
                for j in range(col, n):
                    a[i][j] -= f * a[r][j]
        r += 1
    return r


def solve_unique(rows, rhs) -> list[Fraction]:
    """Solve A x = b exactly.

    Requires the solution to exist and be unique (A of full column rank);
    raises ValueError otherwise.  A may have more rows than columns.
    """
    a = _copy(rows)
    m = len(a)
    assert m == len(rhs)
    n = len(a[0]) if m else 0
    b = [Fraction(x) for x in rhs]
    pivots = []
    r = 0
    for col in range(n):
        if r == m:
            break
        piv = None
        for i in range(r, m):
            if a[i][col] != 0:
                piv = i
                break
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        b[r], b[piv] = b[piv], b[r]
        inv = a[r][col]
        for i in range(m):
            if i != r and a[i][col] != 0:
                f = a[i][col] / inv
                for j in range(col, n):
                    a[i][j] -= f * a[r][j]
                b[i] -= f * b[r]
        pivots.append(col)
        r += 1
    if len(pivots) < n:
        raise ValueError("solution is not unique: column rank %d < %d" % (len(pivots), n))
    for i in range(r, m):
        if b[i] != 0:
            raise ValueError("system is inconsistent")
    x = [Fraction(0)] * n
    for row_idx, col in enumerate(pivots):
        x[col] = b[row_idx] / a[row_idx][col]
    return x


def mat_vec(rows, x) -> list[Fraction]:
    """Exact matrix-vector product."""
    out = []
    for row in rows:
        assert len(row) == len(x)
        acc = Fraction(0)
        for a, b in zip(row, x):
            acc += Fraction(a) * Fraction(b)
        out.append(acc)
    return out
