"""
Exact rational linear algebra for the fan verifier.

Vectors arrive as tuples of Fractions (or ints).  Every routine first
clears denominators column by column - scaling a generator by a positive
rational changes neither ranks, nor kernel dimensions, nor the signs of
dependence coefficients - and then works on Python integers with
fraction-free (Bareiss) elimination, so no precision is ever lost and no
intermediate gcd storms occur.

Also hosts the exact phase-1 simplex used for the open-cone disjointness
check (Bland's rule, guaranteed termination).
"""

from __future__ import annotations

from fractions import Fraction

__all__ = [
    "scale_to_int",
    "bareiss_det",
    "int_rank",
    "rank",
    "kernel",
    "solve_unique",
    "feasible_nonneg",
]


def scale_to_int(vec) -> tuple[int, ...]:
    """Positive rescale of a rational vector to a primitive integer vector
    (direction preserved).  The zero vector stays zero."""
    fracs = [Fraction(x) for x in vec]
    lcm = 1
    for f in fracs:
        d = f.denominator
        g = _gcd(lcm, d)
        lcm = lcm // g * d
    ints = [int(f * lcm) for f in fracs]
    g = 0
    for x in ints:
        g = _gcd(g, abs(x))
    if g > 1:
        ints = [x // g for x in ints]
    return tuple(ints)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def bareiss_det(rows: list[list[int]]) -> int:
    """Determinant of a square integer matrix by fraction-free elimination."""
    m = [row[:] for row in rows]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def _int_row_echelon(rows: list[list[int]]) -> tuple[list[list[int]], list[int]]:
    """Fraction-free row echelon form; returns (matrix, pivot column list)."""
    m = [row[:] for row in rows]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    pivots = []
    r = 0
    prev = 1
    for c in range(ncols):
        if r == nrows:
            break
        pr = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        pivot = m[r][c]
        for i in range(r + 1, nrows):
            for j in range(c + 1, ncols):
                m[i][j] = (m[i][j] * pivot - m[i][c] * m[r][j]) // prev
            m[i][c] = 0
        prev = pivot
        pivots.append(c)
        r += 1
    return m, pivots


def int_rank(rows: list[list[int]]) -> int:
    if not rows or not rows[0]:
        return 0
    _, pivots = _int_row_echelon(rows)
    return len(pivots)


def rank(vectors) -> int:
    """Rank of a family of rational vectors."""
    rows = [list(scale_to_int(v)) for v in vectors]
    rows = [r for r in rows if any(r)]
    if not rows:
        return 0
    return int_rank(rows)


def _scaled_with_factor(vec) -> tuple[tuple[int, ...], Fraction]:
    """Primitive integer rescale plus the positive factor t with
    ``ints = t * vec`` (t = 1 for the zero vector)."""
    fracs = [Fraction(x) for x in vec]
    lcm = 1
    for f in fracs:
        d = f.denominator
        g = _gcd(lcm, d)
        lcm = lcm // g * d
    ints = [int(f * lcm) for f in fracs]
    g = 0
    for x in ints:
        g = _gcd(g, abs(x))
    if g > 1:
        ints = [x // g for x in ints]
    else:
        g = 1
    return tuple(ints), Fraction(lcm, g)


def kernel(vectors) -> list[tuple[Fraction, ...]]:
    """Basis of the dependence space of the given vectors: all rational
    tuples c with sum c_i v_i = 0.  Empty list when independent.

    The vectors become the columns of a matrix; back substitution runs over
    Fractions on the integer echelon form, and the per-column rescaling is
    undone so the coefficients refer to the vectors as given.
    """
    scaled = [_scaled_with_factor(v) for v in vectors]
    vecs = [s[0] for s in scaled]
    factors = [s[1] for s in scaled]
    ncols = len(vecs)
    if ncols == 0:
        return []
    dim = len(vecs[0])
    for v in vecs:
        if len(v) != dim:
            raise ValueError("kernel: vectors of mixed dimension")
    rows = [[vecs[c][r] for c in range(ncols)] for r in range(dim)]
    if dim == 0:
        ech, pivots = [], []
    else:
        ech, pivots = _int_row_echelon(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        sol = [Fraction(0)] * ncols
        sol[fc] = Fraction(1)
        for r in range(len(pivots) - 1, -1, -1):
            pc = pivots[r]
            s = sum((Fraction(ech[r][c]) * sol[c] for c in range(pc + 1, ncols)), Fraction(0))
            sol[pc] = -s / ech[r][pc]
        basis.append(tuple(c * t for c, t in zip(sol, factors)))
    return basis


def solve_unique(matrix_cols, target) -> tuple[Fraction, ...]:
    """Solve ``sum_j c_j col_j = target`` for a square invertible system of
    rational column vectors.  Raises if the system is singular."""
    cols = [tuple(Fraction(x) for x in c) for c in matrix_cols]
    t = [Fraction(x) for x in target]
    n = len(cols)
    if n == 0 or any(len(c) != n for c in cols) or len(t) != n:
        raise ValueError("solve_unique: need a square system")
    aug = [[cols[j][i] for j in range(n)] + [t[i]] for i in range(n)]
    for k in range(n):
        pr = next((i for i in range(k, n) if aug[i][k] != 0), None)
        if pr is None:
            raise ValueError("solve_unique: singular matrix")
        aug[k], aug[pr] = aug[pr], aug[k]
        pk = aug[k][k]
        aug[k] = [x / pk for x in aug[k]]
        for i in range(n):
            if i != k and aug[i][k]:
                f = aug[i][k]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[k])]
    return tuple(aug[i][n] for i in range(n))


def feasible_nonneg(a_rows: list[list[Fraction]]) -> bool:
    """Exact feasibility of ``{mu >= 0 : A mu >= 1}`` (componentwise).

    Phase-1 simplex with Bland's rule on the equality form
    ``A mu - s = 1``, ``mu, s >= 0`` plus artificial variables.  Used for
    open-cone intersection: the open cones of two full-dimensional
    simplicial cones intersect iff this system is feasible for
    ``A = basis^-1 * generators``.
    """
    nrows = len(a_rows)
    if nrows == 0:
        return True
    ncols = len(a_rows[0])
    one = Fraction(1)
    # tableau columns: mu (ncols) | slack (nrows) | artificial (nrows) | rhs
    width = ncols + 2 * nrows + 1
    tab = []
    for i, row in enumerate(a_rows):
        t = [Fraction(x) for x in row] + [Fraction(0)] * (2 * nrows) + [one]
        t[ncols + i] = Fraction(-1)
        t[ncols + nrows + i] = one
        tab.append(t)
    basis = [ncols + nrows + i for i in range(nrows)]
    # objective: minimise the sum of artificials; reduced-cost row is
    # c - sum of tableau rows, with c the indicator of artificial columns
    cost = [Fraction(0)] * width
    for i in range(nrows):
        cost[ncols + nrows + i] = one
    for i in range(nrows):
        cost = [c - t for c, t in zip(cost, tab[i])]
    while True:
        enter = next((j for j in range(width - 1) if cost[j] < 0), None)
        if enter is None:
            break
        best = None
        for i in range(nrows):
            if tab[i][enter] > 0:
                ratio = tab[i][width - 1] / tab[i][enter]
                if best is None or ratio < best[0] or (
                    ratio == best[0] and basis[i] < basis[best[1]]
                ):
                    best = (ratio, i)
        if best is None:
            # unbounded phase-1 objective cannot happen (bounded below by 0)
            raise AssertionError("phase-1 simplex unbounded")
        _, leave = best
        piv = tab[leave][enter]
        tab[leave] = [x / piv for x in tab[leave]]
        for i in range(nrows):
            if i != leave and tab[i][enter]:
                f = tab[i][enter]
                tab[i] = [a - f * b for a, b in zip(tab[i], tab[leave])]
        f = cost[enter]
        if f:
            cost = [a - f * b for a, b in zip(cost, tab[leave])]
        basis[leave] = enter
    objective = -cost[width - 1]
    return objective == 0
