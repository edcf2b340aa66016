"""
Spherical type-A subword complexes: faces, facets, flips and the dual graph.

For a word Q containing a reduced expression of the longest element w0, the
faces of SC(Q) are the position sets J such that Q with J deleted still
contains a reduced expression of w0; the facets are the complements of the
reduced expressions of w0 inside Q.  Facets are stored as bitsets over
positions (bit r-1 set means position r belongs to the facet).

Two flip implementations are provided: a naive one that re-checks every
candidate with a 0-Hecke evaluation, and a production one driven by the
root configuration of a facet (constant work per candidate).  They are
required to agree; tests check this exhaustively for small ranks.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .words import (
    Word,
    contains_longest,
    demazure_product,
    identity,
    increases_length,
    longest_element,
    right_mult,
)

__all__ = [
    "Facet",
    "ComplexIndex",
    "bitset_of",
    "positions_of",
    "is_face",
    "greedy_facet",
    "naive_flip",
    "flip",
    "root_configuration",
    "all_facets",
    "vertex_status",
    "format_facet_file",
    "parse_facet_file",
]

# A facet as a bitset over 1-based positions: bit r-1 <-> position r.
Facet = int


def bitset_of(positions) -> Facet:
    b = 0
    for r in positions:
        b |= 1 << (r - 1)
    return b


def positions_of(facet: Facet) -> tuple[int, ...]:
    out = []
    r = 1
    b = facet
    while b:
        if b & 1:
            out.append(r)
        b >>= 1
        r += 1
    return tuple(out)


def is_face(w: Word, positions) -> bool:
    """Face test: deleting the positions must leave a word that still
    contains a reduced expression of w0."""
    return contains_longest(w.delete(positions))


def greedy_facet(w: Word) -> Facet:
    """Seed facet for the flip-graph traversal.

    Scan left to right keeping every letter that extends the 0-Hecke fold;
    the kept positions form the leftmost reduced expression of w0 and their
    complement is a facet.

    >>> from .words import Word
    >>> positions_of(greedy_facet(Word(1, (1, 1))))
    (2,)
    """
    pi = identity(w.rank)
    facet = 0
    for r, a in enumerate(w.letters, start=1):
        if increases_length(pi, a):
            pi = right_mult(pi, a)
        else:
            facet |= 1 << (r - 1)
    if pi != longest_element(w.rank):
        raise ValueError("word does not contain a reduced expression of w0")
    return facet


def naive_flip(w: Word, facet: Facet, r: int) -> tuple[int, Facet]:
    """Reference flip: try every complement position as the partner of r.

    Returns ``(r2, facet2)`` with ``facet2 = facet - {r} + {r2}``.
    """
    if not facet >> (r - 1) & 1:
        raise ValueError(f"position {r} not in facet")
    base = facet & ~(1 << (r - 1))
    partners = []
    for r2 in range(1, len(w) + 1):
        if r2 == r or base >> (r2 - 1) & 1 or facet >> (r2 - 1) & 1:
            continue
        cand = base | 1 << (r2 - 1)
        if demazure_product(w.delete(positions_of(cand))) == longest_element(w.rank):
            partners.append(r2)
    if len(partners) != 1:
        raise AssertionError(
            f"flip of {r} in {positions_of(facet)} has partners {partners}"
        )
    r2 = partners[0]
    return r2, base | 1 << (r2 - 1)


def root_configuration(w: Word, facet: Facet) -> list[tuple[int, int]]:
    """For every position q, the pair ``(pi(i), pi(i+1))`` where ``s_i`` is
    the letter at q and pi is the product of the complement letters before q.

    The complement positions carry each positive root exactly once (as the
    inversion sequence of a reduced word); a facet position carries the same
    unordered pair as its unique flip partner in the complement.
    """
    pi = list(identity(w.rank))
    roots = []
    for q, a in enumerate(w.letters, start=1):
        roots.append((pi[a - 1], pi[a]))
        if not facet >> (q - 1) & 1:
            pi[a - 1], pi[a] = pi[a], pi[a - 1]
    return roots


def flip(w: Word, facet: Facet, r: int, roots: list[tuple[int, int]] | None = None) -> tuple[int, Facet]:
    """Production flip: the partner of ``r`` is the unique complement
    position whose root is the same unordered pair as the root of ``r``.

    ``roots`` may be passed to reuse a precomputed root configuration.
    """
    if not facet >> (r - 1) & 1:
        raise ValueError(f"position {r} not in facet")
    if roots is None:
        roots = root_configuration(w, facet)
    a, b = roots[r - 1]
    key = (a, b) if a < b else (b, a)
    for q in range(1, len(w) + 1):
        if q == r or facet >> (q - 1) & 1:
            continue
        x, y = roots[q - 1]
        if (x, y) == key or (y, x) == key:
            return q, facet & ~(1 << (r - 1)) | 1 << (q - 1)
    raise AssertionError(f"no flip partner for {r} in {positions_of(facet)}")


@dataclass
class ComplexIndex:
    """The enumerated complex: facets in sorted bitset order, per-position
    vertex flags, and the dual graph with its ridges."""

    word: Word
    facets: list[Facet]
    facet_ids: dict[Facet, int] = field(repr=False)
    vertex_flags: list[bool]
    # (facet id, facet id, shared-positions bitset), ids sorted per edge
    dual_edges: list[tuple[int, int, Facet]]

    @property
    def n_facets(self) -> int:
        return len(self.facets)

    @property
    def n_ridges(self) -> int:
        return len(self.dual_edges)

    def facet_size(self) -> int:
        return len(self.word) - self.word.rank * (self.word.rank + 1) // 2


def all_facets(w: Word, use_naive_flips: bool = False) -> ComplexIndex:
    """Breadth-first traversal of the flip graph from the greedy facet.

    Deterministic: facets get ids in increasing bitset order, the dual edge
    list is sorted.  ``use_naive_flips`` switches to the reference flip (for
    cross-checking).
    """
    seed = greedy_facet(w)
    p = len(w)
    seen = {seed}
    frontier = [seed]
    edges_raw = set()
    while frontier:
        frontier.sort()
        next_frontier = []
        for f in frontier:
            roots = None if use_naive_flips else root_configuration(w, f)
            for r in positions_of(f):
                if use_naive_flips:
                    _, g = naive_flip(w, f, r)
                else:
                    _, g = flip(w, f, r, roots)
                edges_raw.add((f, g) if f < g else (g, f))
                if g not in seen:
                    seen.add(g)
                    next_frontier.append(g)
        frontier = next_frontier

    facets = sorted(seen)
    ids = {f: i for i, f in enumerate(facets)}
    dual_edges = sorted(
        (ids[f], ids[g], f & g) for f, g in edges_raw
    )
    covered = 0
    for f in facets:
        covered |= f
    flags = [bool(covered >> (r - 1) & 1) for r in range(1, p + 1)]
    return ComplexIndex(w, facets, ids, flags, dual_edges)


def vertex_status(w: Word) -> list[bool]:
    """Position r is a vertex iff the word with r deleted still contains a
    reduced expression of w0 (deletion test, independent of enumeration)."""
    if not contains_longest(w):
        raise ValueError("word does not contain a reduced expression of w0")
    return [is_face(w, (r,)) for r in range(1, len(w) + 1)]


def format_facet_file(index: ComplexIndex) -> str:
    from .words import format_word

    lines = [f"# word: {format_word(index.word)}; facets: {index.n_facets}"]
    for f in index.facets:
        lines.append(" ".join(str(r) for r in positions_of(f)))
    return "\n".join(lines) + "\n"


def parse_facet_file(text: str) -> tuple[Word, list[Facet]]:
    from .words import parse_word

    lines = text.splitlines()
    if not lines or not lines[0].startswith("# word: "):
        raise ValueError("missing facet file header")
    head, _, count = lines[0][len("# word: "):].rpartition("; facets: ")
    word = parse_word(head)
    body = lines[1 : 1 + int(count)]
    if len(body) != int(count):
        raise ValueError("facet count does not match the header")
    # a blank line is the empty facet (the complex of a reduced word)
    return word, [bitset_of(int(tok) for tok in ln.split()) for ln in body]
