import random
from fractions import Fraction

import pytest

from multifan.exactla import (
    bareiss_det,
    feasible_nonneg,
    int_rank,
    kernel,
    rank,
    scale_to_int,
    solve_unique,
)


def test_scale_to_int():
    assert scale_to_int((Fraction(1, 2), Fraction(3, 4))) == (2, 3)
    assert scale_to_int((2, 4, 6)) == (1, 2, 3)
    assert scale_to_int((0, 0)) == (0, 0)


def test_bareiss_det():
    assert bareiss_det([[1, 2], [3, 4]]) == -2
    assert bareiss_det([[0, 1], [1, 0]]) == -1
    assert bareiss_det([[2, 0, 0], [0, 3, 0], [0, 0, 5]]) == 30
    assert bareiss_det([[1, 1], [2, 2]]) == 0


def test_kernel_examples():
    ker = kernel([(1, -1), (1, 1), (-1, 0)])
    assert len(ker) == 1
    c = ker[0]
    scaled = tuple(x / c[0] for x in c)
    assert scaled == (1, 1, 2)
    assert kernel([(1, 0, 0), (0, 1, 0), (0, 0, 1)]) == []
    # pigeonhole: five vectors in R^4
    vs = [(1, 2, 3, 4), (0, 1, 0, 1), (2, 0, 0, 1), (1, 1, 1, 1), (3, 1, 4, 1)]
    assert len(kernel(vs)) >= 1


def test_kernel_is_actual_dependence():
    rng = random.Random(5)
    for _ in range(200):
        dim = rng.randint(1, 6)
        ncols = rng.randint(1, 8)
        vs = [
            tuple(Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(dim))
            for _ in range(ncols)
        ]
        ker = kernel(vs)
        assert len(ker) == ncols - rank(vs)
        for coeffs in ker:
            for d in range(dim):
                assert sum(c * v[d] for c, v in zip(coeffs, vs)) == 0


def _rref(rows):
    """Reduced row echelon form over Fractions (for span comparison)."""
    m = [list(map(Fraction, r)) for r in rows]
    if not m:
        return []
    ncols = len(m[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        m[r] = [x / m[r][c] for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
    return [tuple(row) for row in m[:r]]


def _kernel_reversed(vectors):
    """Second, independent elimination: work on the reversed column order
    and map the coefficients back."""
    rev = kernel(list(reversed([tuple(v) for v in vectors])))
    return [tuple(reversed(c)) for c in rev]


def test_kernel_span_agrees_with_independent_elimination():
    rng = random.Random(11)
    for trial in range(1000):
        dim = rng.randint(1, 17) if trial % 10 == 0 else rng.randint(1, 6)
        ncols = rng.randint(1, min(dim + 3, 9))
        vs = [
            tuple(rng.randint(-4, 4) for _ in range(dim)) for _ in range(ncols)
        ]
        a = _rref(kernel(vs))
        b = _rref(_kernel_reversed(vs))
        assert a == b


def test_solve_unique():
    cols = [(1, 0), (1, 1)]
    assert solve_unique(cols, (3, 2)) == (1, 2)
    with pytest.raises(ValueError):
        solve_unique([(1, 1), (2, 2)], (1, 0))


def test_int_rank():
    assert int_rank([[1, 2], [2, 4]]) == 1
    assert int_rank([[1, 0], [0, 1]]) == 2


def test_feasible_nonneg():
    f = Fraction
    # opposite orthants: disjoint
    assert not feasible_nonneg([[f(-1), f(0)], [f(0), f(-1)]])
    # identical cones: intersect
    assert feasible_nonneg([[f(1), f(0)], [f(0), f(1)]])
    # cone straddling the first quadrant: intersects it
    assert feasible_nonneg([[f(1), f(1)], [f(1), f(-1)]])
    # cone in the half-plane x <= 0: disjoint from the open first quadrant
    assert not feasible_nonneg([[f(-1), f(0)], [f(1), f(1)]])
    # degenerate rows
    assert not feasible_nonneg([[f(0), f(0)], [f(1), f(1)]])
