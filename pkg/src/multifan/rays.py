"""
Exact rational ray coordinates for subword complexes.

Rays are built either by replaying fattening traces move by move (the
naive, fixed, linear, perturbed and loday constructions) or directly from
the closed diagonal-indexed formulas (the pattern construction).

Replay semantics per move:

* doubling at r with weights (alpha, beta), alpha*beta < 0: the ambient
  dimension grows by one, the two copies get the old ray with alpha resp.
  beta appended, everything else is padded with 0;
* braid at r with weights (a, b, eps), all positive: the new middle ray is
  a*rho_r + b*rho_{r+2} - eps*rho_{r+1} and the outer rays are exchanged;
* commutations just carry rays along.

In a first fattening (all staircase letters start at the zero ray) the
braid weights are the left/right coefficients of a scheme evaluated at the
grid parameters (i, j) read off the middle letter's label (i, j+1); a
second fattening uses constant weights (1, 1, 1).  Non-vertices always
carry the zero vector.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .words import Word, c_sorted_word, multiassociahedron_word
from .moves import MoveTrace, commutation_matching, fattening_sequence
from .polygon import polygon_size, position_to_diagonal

__all__ = [
    "RayVec",
    "RayAssignment",
    "CoefficientScheme",
    "double_transform",
    "braid_transform",
    "replay_fattening",
    "scheme_for",
    "build_rays",
    "pattern_ray",
    "CONSTRUCTIONS",
    "format_ray_file",
    "parse_ray_file",
]

RayVec = tuple[Fraction, ...]


def _vec(values) -> RayVec:
    return tuple(Fraction(x) for x in values)


def _zero(d: int) -> RayVec:
    return (Fraction(0),) * d


@dataclass(frozen=True)
class RayAssignment:
    """Exact rays, one per position of ``word``; dimension ``dim``."""

    word: Word
    rays: tuple[RayVec, ...]
    dim: int
    construction: str = ""
    seed: int | None = None

    def __post_init__(self):
        if len(self.rays) != len(self.word):
            raise ValueError("one ray per position required")
        for v in self.rays:
            if len(v) != self.dim:
                raise ValueError("ray of wrong dimension")


@dataclass(frozen=True)
class CoefficientScheme:
    """Braid weights for a first fattening: left and right coefficients as
    functions of the grid parameters (i, j), plus the constant weights of a
    second fattening.  All values must evaluate positive."""

    name: str
    left: Callable[[int, int], Fraction]
    right: Callable[[int, int], Fraction]
    second: tuple[Fraction, Fraction, Fraction] = (Fraction(1), Fraction(1), Fraction(1))


def double_transform(ra: RayAssignment, r: int, alpha, beta) -> RayAssignment:
    """Realise a doubling at r: dimension d -> d+1, the copies at r, r+1 of
    the doubled word get old ray + alpha resp. beta in the new coordinate."""
    alpha, beta = Fraction(alpha), Fraction(beta)
    if alpha * beta >= 0:
        raise ValueError("doubling weights must have opposite signs")
    letters = list(ra.word.letters)
    letters.insert(r, letters[r - 1])
    zero = Fraction(0)
    rays = []
    for q, v in enumerate(ra.rays, start=1):
        rays.append(v + (alpha if q == r else zero,))
        if q == r:
            rays.append(v + (beta,))
    return RayAssignment(Word(ra.word.rank, tuple(letters)), tuple(rays), ra.dim + 1,
                         ra.construction, ra.seed)


def braid_transform(ra: RayAssignment, r: int, a, b, eps) -> RayAssignment:
    """Realise a braid move at r: outer rays exchanged, middle replaced by
    a*rho_r + b*rho_{r+2} - eps*rho_{r+1}."""
    a, b, eps = Fraction(a), Fraction(b), Fraction(eps)
    if a <= 0 or b <= 0 or eps <= 0:
        raise ValueError("braid weights must be positive")
    x, y, z = ra.word.letters[r - 1 : r + 2]
    if x != z or abs(x - y) != 1:
        raise ValueError(f"no braid pattern at {r}")
    letters = list(ra.word.letters)
    letters[r - 1 : r + 2] = [y, x, y]
    lo, mid, hi = ra.rays[r - 1], ra.rays[r], ra.rays[r + 1]
    new_mid = tuple(a * u + b * w - eps * v for u, v, w in zip(lo, mid, hi))
    rays = list(ra.rays)
    rays[r - 1], rays[r], rays[r + 1] = hi, new_mid, lo
    return RayAssignment(Word(ra.word.rank, tuple(letters)), tuple(rays), ra.dim,
                         ra.construction, ra.seed)


def _commute_transform(ra: RayAssignment, r: int) -> RayAssignment:
    letters = list(ra.word.letters)
    letters[r - 1], letters[r] = letters[r], letters[r - 1]
    rays = list(ra.rays)
    rays[r - 1], rays[r] = rays[r], rays[r - 1]
    return RayAssignment(Word(ra.word.rank, tuple(letters)), tuple(rays), ra.dim,
                         ra.construction, ra.seed)


def replay_fattening(ra: RayAssignment, trace: MoveTrace,
                     scheme: CoefficientScheme, first: bool) -> RayAssignment:
    """Replay a fattening trace over an assignment on its initial word.

    ``first`` selects the scheme's left/right weights (with the middle ray
    checked to be zero); otherwise the constant second-fattening weights.
    """
    if ra.word != trace.initial:
        raise ValueError("assignment does not match the trace's initial word")
    cur = ra
    for s, event in enumerate(trace.events):
        if event.kind == "C":
            cur = _commute_transform(cur, event.r)
        elif event.kind == "D":
            cur = double_transform(cur, event.r, -1, 1)
        else:
            if first:
                lab = trace.labels[s][event.r]  # middle letter, label (i, j+1)
                assert lab is not None and lab.j >= 2 and not lab.primed
                i, j = lab.i, lab.j - 1
                a, b = scheme.left(i, j), scheme.right(i, j)
                eps = Fraction(1)
                assert not any(cur.rays[event.r]), "first-fattening middle ray not zero"
            else:
                a, b, eps = scheme.second
            cur = braid_transform(cur, event.r, a, b, eps)
        assert cur.word == trace.words[s + 1]
    return cur


def _transport(ra: RayAssignment, target: Word) -> RayAssignment:
    """Carry rays along commutations onto a commutation-equivalent word."""
    match = commutation_matching(ra.word, target)
    rays: list[RayVec] = [None] * len(target)  # type: ignore[list-item]
    for src, dst in enumerate(match):
        rays[dst - 1] = ra.rays[src]
    return RayAssignment(target, tuple(rays), ra.dim, ra.construction, ra.seed)


def _fatten_once(ra: RayAssignment, triangle_start: int,
                 scheme: CoefficientScheme, first: bool) -> RayAssignment:
    """One fattening of the staircase factor at ``triangle_start``,
    normalised by commutations onto c^(k+1) w0(c)."""
    trace = fattening_sequence(ra.word, triangle_start)
    out = replay_fattening(ra, trace, scheme, first)
    n = ra.word.rank
    k_before = triangle_start // n
    target = multiassociahedron_word(k_before + 1, n)
    return _transport(out, target)


def _perturbation_table(n: int, seed: int) -> dict[tuple[int, int, str], Fraction]:
    """Seeded noise terms, numerator uniform in [-1000, 1000] over 10^6,
    drawn in grid order (i ascending, then j), left before right."""
    rng = random.Random(seed)
    table = {}
    for i in range(1, n):
        for j in range(1, n + 1 - i):
            table[(i, j, "L")] = Fraction(rng.randint(-1000, 1000), 10 ** 6)
            table[(i, j, "R")] = Fraction(rng.randint(-1000, 1000), 10 ** 6)
    return table


def scheme_for(construction: str, n: int, seed: int | None = None) -> CoefficientScheme:
    """The braid-weight scheme of a named two-step construction."""
    if construction == "naive" or construction == "loday":
        one = Fraction(1)
        return CoefficientScheme(construction, lambda i, j: one, lambda i, j: one)
    if construction.startswith("fixed"):
        if ":" in construction:
            lam_l, lam_r = (Fraction(t) for t in construction.split(":", 1)[1].split(","))
        else:
            lam_l, lam_r = Fraction(5), Fraction(3)
        if lam_l <= 0 or lam_r <= 0:
            raise ValueError("fixed weights must be positive")
        return CoefficientScheme(construction, lambda i, j: lam_l, lambda i, j: lam_r)
    if construction == "linear":
        return CoefficientScheme(
            construction,
            lambda i, j: Fraction(2 * n + 4 - i - j),
            lambda i, j: Fraction(2 * n + 3 - i - j),
        )
    if construction == "perturbed":
        if seed is None:
            raise ValueError("perturbed construction requires a seed")
        noise = _perturbation_table(n, seed)
        return CoefficientScheme(
            construction,
            lambda i, j: Fraction(2 * n + 4 - i - j) + noise[(i, j, "L")],
            lambda i, j: Fraction(2 * n + 3 - i - j) + noise[(i, j, "R")],
        )
    raise ValueError(f"unknown construction {construction!r}")


# Pattern construction: closed formulas per 2-relevant diagonal of the
# (n+5)-gon, in coordinates e_1..e_n, f_1..f_n of R^{2n}.  The letter at a
# position of c^2 w0(c) receives the formula of its identified diagonal
# rotated by two polygon steps (the verified rotation correspondence).

def _basis(n: int, *terms) -> RayVec:
    v = [Fraction(0)] * (2 * n)
    for coef, axis, idx in terms:
        v[idx - 1 + (n if axis == "f" else 0)] += Fraction(coef)
    return tuple(v)


def pattern_ray(n: int, d: tuple[int, int], verbatim: bool = False) -> RayVec:
    """The closed-form ray of a 2-relevant diagonal of the (n+5)-gon.

    ``verbatim`` keeps the inner-diagonal coefficient 2n+4-i; the default
    2n+2-i is the reading consistent with the vendored integer table.
    """
    a, b = d
    if a == 1:
        if b == 4:
            return _basis(n, (1, "e", n), (-1, "f", n))
        j = b - 4
        return _basis(n, (2 * n + 2 - j, "e", j), (-(2 * n + 2 - j), "e", j + 1),
                      (1, "e", n), (1, "f", j), (-1, "f", n))
    if a == 2:
        if b == n + 4:
            return _basis(n, (1, "e", n), (1, "f", n))
        j = b - 4
        return _basis(n, (2 * n + 3 - j, "e", j), (-(2 * n + 2 - j), "e", j + 1),
                      (1, "f", j))
    if a == 3:
        j = b - 5
        return _basis(n, (-1, "e", j))
    if a == 4:
        j = b - 6
        return _basis(n, (2 * n + 3 - j, "e", j), (-(2 * n + 2 - j), "e", j + 1),
                      (-1, "f", j))
    i = a - 4
    j = b - a - 2
    x = (2 * n + 4 - i) if verbatim else (2 * n + 2 - i)
    return _basis(n, (j, "e", i),
                  (-(j - 1), "e", i + j), (-(j - 1), "e", i + j + 1),
                  (x, "e", i + j), (-x, "e", i + 1),
                  (1, "f", i), (-1, "f", i + j))


def _rotate_diagonal(n: int, d: tuple[int, int], steps: int) -> tuple[int, int]:
    m = polygon_size(2, n)
    a = (d[0] + steps - 1) % m + 1
    b = (d[1] + steps - 1) % m + 1
    return (a, b) if a < b else (b, a)


def _build_pattern(n: int, verbatim: bool = False) -> RayAssignment:
    word = multiassociahedron_word(2, n)
    rays = []
    for pos in range(1, len(word) + 1):
        d = _rotate_diagonal(n, position_to_diagonal(2, n, pos), 2)
        rays.append(pattern_ray(n, d, verbatim))
    name = "pattern-verbatim" if verbatim else "pattern"
    return RayAssignment(word, tuple(rays), 2 * n, name)


def _build_loday(n: int) -> RayAssignment:
    word = c_sorted_word(n)
    start = RayAssignment(word, (_zero(0),) * len(word), 0, "loday")
    return _fatten_once(start, 0, scheme_for("loday", n), first=True)


def _build_two_step(construction: str, n: int, seed: int | None) -> RayAssignment:
    scheme = scheme_for(construction, n, seed)
    word = c_sorted_word(n)
    ra = RayAssignment(word, (_zero(0),) * len(word), 0, construction, seed)
    ra = _fatten_once(ra, 0, scheme, first=True)
    ra = _fatten_once(ra, n, scheme, first=False)
    return ra


CONSTRUCTIONS = ("naive", "fixed", "linear", "perturbed", "pattern",
                 "pattern-verbatim", "loday")


def build_rays(construction: str, n: int, seed: int | None = None) -> RayAssignment:
    """Rays for a named construction.

    naive, fixed[:L,R], linear and perturbed fatten a staircase twice and
    live on c^2 w0(c) in dimension 2n; loday fattens once and lives on
    c w0(c) in dimension n; pattern evaluates the closed formulas on
    c^2 w0(c).

    >>> build_rays("pattern", 1).rays
    ((Fraction(-1, 1), Fraction(0, 1)), (Fraction(1, 1), Fraction(-1, 1)), (Fraction(1, 1), Fraction(1, 1)))
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if construction == "pattern":
        return _build_pattern(n)
    if construction == "pattern-verbatim":
        return _build_pattern(n, verbatim=True)
    if construction == "loday":
        return _build_loday(n)
    if construction != "perturbed":
        seed = None
    ra = _build_two_step(construction, n, seed)
    return ra


def _fmt_coord(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def format_ray_file(ra: RayAssignment) -> str:
    seed = "none" if ra.seed is None else str(ra.seed)
    lines = [f"# n={ra.word.rank} d={ra.dim} construction={ra.construction} seed={seed}"]
    for pos, v in enumerate(ra.rays, start=1):
        coords = " ".join(_fmt_coord(x) for x in v)
        lines.append(f"{pos} s{ra.word.letter(pos)} {coords}")
    return "\n".join(lines) + "\n"


def parse_ray_file(text: str) -> RayAssignment:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    head = lines[0]
    if not head.startswith("# "):
        raise ValueError("missing ray file header")
    fields = dict(tok.split("=", 1) for tok in head[2:].split())
    n, d = int(fields["n"]), int(fields["d"])
    construction = fields.get("construction", "")
    seed = None if fields.get("seed", "none") == "none" else int(fields["seed"])
    letters = []
    rays = []
    for pos, ln in enumerate(lines[1:], start=1):
        toks = ln.split()
        if int(toks[0]) != pos or not toks[1].startswith("s"):
            raise ValueError(f"bad ray line {ln!r}")
        letters.append(int(toks[1][1:]))
        rays.append(_vec(Fraction(t) for t in toks[2:]))
        if len(rays[-1]) != d:
            raise ValueError(f"ray of dimension {len(rays[-1])}, expected {d}")
    return RayAssignment(Word(n, tuple(letters)), tuple(rays), d, construction, seed)


if __name__ == "__main__":
    import doctest

    doctest.testmod()
