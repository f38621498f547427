"""Exact linear algebra over the rationals and the integers.

Matrices are plain lists of rows (numbers are ints or Fractions); nothing
here ever touches floating point.  numpy object arrays used elsewhere in
the package are converted with ``.tolist()`` before calling in.
"""

from fractions import Fraction


def rref(rows):
    """Reduced row echelon form.

    Returns (reduced rows, pivot column list).  The input is not modified.
    """
    m = [[Fraction(x) for x in row] for row in rows]
    if not m:
        return m, []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = Fraction(1) / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(rows):
    return len(rref(rows)[1])


def nullspace(rows, ncols=None):
    """Basis of the right kernel, as a list of vectors of Fractions."""
    if ncols is None:
        if not rows:
            raise ValueError("ncols is required for an empty matrix")
        ncols = len(rows[0])
    if not rows:
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    red, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -red[r][fc]
        basis.append(v)
    return basis


def solve(rows, rhs):
    """One solution of ``rows @ x = rhs`` over Q, or None if inconsistent.

    When the columns are linearly independent the solution is unique.
    """
    if not rows:
        return [] if all(x == 0 for x in rhs) else None
    ncols = len(rows[0])
    aug = [list(row) + [b] for row, b in zip(rows, rhs)]
    red, pivots = rref(aug)
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for r, pc in enumerate(pivots):
        x[pc] = red[r][ncols]
    return x


def in_row_span(rows, vec):
    """Whether vec lies in the rational row span of rows."""
    if not rows:
        return all(x == 0 for x in vec)
    base = rank(rows)
    return rank(list(rows) + [list(vec)]) == base


def smith_diagonal(rows):
    """Diagonal of an integer diagonalization U @ M @ V with U, V unimodular.

    The entries are returned as nonnegative integers (the elementary
    divisors up to sign, without the divisibility normalization, which is
    enough to read off the cokernel being trivial).
    """
    m = [[int(x) for x in row] for row in rows]
    nr = len(m)
    nc = len(m[0]) if nr else 0
    diag = []
    t = 0
    while t < min(nr, nc):
        # locate a nonzero entry of minimal absolute value in the submatrix
        best = None
        for i in range(t, nr):
            for j in range(t, nc):
                if m[i][j] != 0 and (best is None or abs(m[i][j]) < abs(m[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        bi, bj = best
        m[t], m[bi] = m[bi], m[t]
        for row in m:
            row[t], row[bj] = row[bj], row[t]
        # reduce row and column against the pivot until both are clear
        dirty = True
        while dirty:
            dirty = False
            for i in range(t + 1, nr):
                if m[i][t] != 0:
                    q = m[i][t] // m[t][t]
                    for j in range(t, nc):
                        m[i][j] -= q * m[t][j]
                    if m[i][t] != 0:
                        m[t], m[i] = m[i], m[t]
                        dirty = True
            for j in range(t + 1, nc):
                if m[t][j] != 0:
                    q = m[t][j] // m[t][t]
                    for i in range(t, nr):
                        m[i][j] -= q * m[i][t]
                    if m[t][j] != 0:
                        for i in range(t, nr):
                            m[i][t], m[i][j] = m[i][j], m[i][t]
                        dirty = True
        diag.append(abs(m[t][t]))
        t += 1
    return diag


def is_surjective_over_z(rows, ncols):
    """Whether the integer matrix defines a surjection Z^ncols -> Z^nrows."""
    nrows = len(rows)
    if nrows == 0:
        return True
    if ncols < nrows:
        return False
    diag = smith_diagonal(rows)
    return len(diag) == nrows and all(x == 1 for x in diag)
