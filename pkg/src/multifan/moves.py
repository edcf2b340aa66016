"""
Commutation, doubling (0-Hecke) and braid moves on words, with the letter
labeling that makes move sequences replayable.

A fattening sequence turns a staircase factor w0(c) into w0(c) followed by
the reversed c, by doubling every letter s_1 of the staircase and then
performing n(n-1)/2 braid moves, interlaced with commutations.  The trace
records every move at its exact position together with the evolving label
assignment, so that ray construction can replay it without re-deriving
anything.

Labels: the staircase letters start out labeled with their grid position
(i, j) (row i, column j).  Doubling a letter labeled (i, 1) labels the two
copies (i, 1) and (i, 1)'.  A braid move exchanges the labels of the outer
letters and keeps the middle one.  At the end of a fattening the labels of
the transformed factor form a fixed pattern (asserted): the c prefix reads
(1,1)..(n,1), the inner staircase letter (i, j) reads (i, j+1), and the
reversed-c suffix reads (1,1)'..(n,1)' left to right.
"""

from __future__ import annotations

from dataclasses import dataclass

from .words import Word, contains_longest
from .subword import is_face

__all__ = [
    "Label",
    "MoveEvent",
    "MoveTrace",
    "apply_move",
    "classify_braid",
    "insertion_sequence",
    "fattening_sequence",
    "commutation_matching",
    "final_label_pattern",
    "format_trace",
]


@dataclass(frozen=True)
class Label:
    i: int
    j: int
    primed: bool = False

    def __str__(self) -> str:
        return f"({self.i},{self.j})" + ("'" if self.primed else "")


@dataclass(frozen=True)
class MoveEvent:
    """kind 'C' (commutation), 'D' (double), 'B' (braid); r is the 1-based
    position where the move applies."""

    kind: str
    r: int

    def __str__(self) -> str:
        return f"{self.kind} {self.r}"


@dataclass(frozen=True)
class MoveTrace:
    """words[0] is the initial word; events[s] transforms words[s] into
    words[s+1]; labels[s] is the per-position label tuple of words[s]
    (None on letters outside the tracked factor)."""

    words: tuple[Word, ...]
    events: tuple[MoveEvent, ...]
    labels: tuple[tuple[Label | None, ...], ...]

    @property
    def initial(self) -> Word:
        return self.words[0]

    @property
    def final(self) -> Word:
        return self.words[-1]

    def count(self, kind: str) -> int:
        return sum(1 for e in self.events if e.kind == kind)


def apply_move(w: Word, event: MoveEvent) -> tuple[Word, dict[int, int]]:
    """Apply a single move; returns the new word and the correspondence
    old position -> new position.

    Doubling maps the doubled position to the left copy (the right copy is
    new); a braid exchanges the outer positions; a commutation swaps.
    """
    letters = list(w.letters)
    r = event.r
    p = len(letters)
    if event.kind == "D":
        if not 1 <= r <= p:
            raise ValueError(f"double position {r} out of range")
        letters.insert(r, letters[r - 1])
        corr = {q: q if q <= r else q + 1 for q in range(1, p + 1)}
    elif event.kind == "C":
        if not 1 <= r <= p - 1:
            raise ValueError(f"commutation position {r} out of range")
        a, b = letters[r - 1], letters[r]
        if abs(a - b) < 2:
            raise ValueError(f"letters s_{a} s_{b} at {r} do not commute")
        letters[r - 1], letters[r] = b, a
        corr = {q: q for q in range(1, p + 1)}
        corr[r], corr[r + 1] = r + 1, r
    elif event.kind == "B":
        if not 1 <= r <= p - 2:
            raise ValueError(f"braid position {r} out of range")
        a, b, a2 = letters[r - 1 : r + 2]
        if a != a2 or abs(a - b) != 1:
            raise ValueError(f"no braid pattern at {r}: s_{a} s_{b} s_{a2}")
        letters[r - 1 : r + 2] = [b, a, b]
        corr = {q: q for q in range(1, p + 1)}
        corr[r], corr[r + 2] = r + 2, r
    else:
        raise ValueError(f"unknown move kind {event.kind!r}")
    return Word(w.rank, tuple(letters)), corr


def classify_braid(w: Word, r: int) -> int:
    """Case (1)-(5) of the effect of a braid move at position r, from the
    vertex status of the three letters and, when all three are vertices,
    whether they lie in a common face.

    Face and vertex tests are 0-Hecke deletion tests, no enumeration.
    """
    p = len(w)
    if not 1 <= r <= p - 2:
        raise ValueError(f"braid position {r} out of range")
    a, b, a2 = w.letters[r - 1 : r + 2]
    if a != a2 or abs(a - b) != 1:
        raise ValueError(f"no braid pattern at {r}: s_{a} s_{b} s_{a2}")
    if not contains_longest(w):
        raise ValueError("word does not contain a reduced expression of w0")
    v = [is_face(w, (q,)) for q in (r, r + 1, r + 2)]
    total = sum(v)
    if total == 0:
        return 1
    if total == 1:
        assert v[0] or v[2], "single vertex must be an outer letter"
        return 2
    if total == 2:
        assert v[0] and v[2], "two vertices must be the outer letters"
        return 3
    return 5 if is_face(w, (r, r + 1, r + 2)) else 4


class _Builder:
    """Mutable word + labels, recording moves as they are performed."""

    def __init__(self, w: Word, labels):
        self.rank = w.rank
        self.letters = list(w.letters)
        self.labels: list[Label | None] = list(labels)
        self.words = [w]
        self.events: list[MoveEvent] = []
        self.label_states = [tuple(labels)]

    def _record(self, event: MoveEvent):
        self.events.append(event)
        self.words.append(Word(self.rank, tuple(self.letters)))
        self.label_states.append(tuple(self.labels))

    def letter(self, r: int) -> int:
        return self.letters[r - 1]

    def commute(self, r: int):
        a, b = self.letters[r - 1], self.letters[r]
        assert abs(a - b) >= 2, f"illegal commutation at {r}: s_{a} s_{b}"
        self.letters[r - 1], self.letters[r] = b, a
        self.labels[r - 1], self.labels[r] = self.labels[r], self.labels[r - 1]
        self._record(MoveEvent("C", r))

    def double(self, r: int):
        lab = self.labels[r - 1]
        assert lab is not None and lab.j == 1 and not lab.primed, (
            f"doubling expects an (i,1) label at {r}, found {lab}"
        )
        self.letters.insert(r, self.letters[r - 1])
        self.labels.insert(r, Label(lab.i, 1, True))
        self._record(MoveEvent("D", r))

    def braid(self, r: int):
        a, b, a2 = self.letters[r - 1 : r + 2]
        assert a == a2 and abs(a - b) == 1, f"no braid pattern at {r}"
        self.letters[r - 1 : r + 2] = [b, a, b]
        ls = self.labels
        ls[r - 1], ls[r + 1] = ls[r + 1], ls[r - 1]
        self._record(MoveEvent("B", r))

    def commute_window_to(self, start: int, target: tuple[int, ...]):
        """Bubble the window starting at 1-based ``start`` into the target
        letter sequence using commutations only."""
        for off, want in enumerate(target):
            at = start + off
            m = at
            while m <= len(self.letters) and self.letters[m - 1] != want:
                m += 1
            assert m <= len(self.letters), "target letter not found"
            for pos in range(m - 1, at - 1, -1):
                self.commute(pos)

    def trace(self) -> MoveTrace:
        return MoveTrace(tuple(self.words), tuple(self.events), tuple(self.label_states))


def _row_start(n: int, i: int) -> int:
    """0-based offset of row i inside the staircase word of rank n."""
    return (i - 1) * n - (i - 1) * (i - 2) // 2


def _staircase_letters(n: int) -> tuple[int, ...]:
    out = []
    for i in range(n, 0, -1):
        out.extend(range(1, i + 1))
    return tuple(out)


def _grid_labels(n: int) -> list[Label]:
    out = []
    for i in range(1, n + 1):
        for j in range(1, n + 2 - i):
            out.append(Label(i, j))
    return out


def _check_triangle(w: Word, start: int):
    n = w.rank
    want = _staircase_letters(n)
    got = w.letters[start : start + len(want)]
    if got != want:
        raise ValueError(f"no staircase factor of rank {n} at offset {start}")


def _insert_moves(b: _Builder, sigma: int, ell: int):
    """Letter-insertion moves on the window starting at
    position sigma+1, whose content is s_1 followed by the staircase of
    rank ell; ends with the window reading staircase then s_ell."""
    for k in range(1, ell):
        assert b.letter(sigma + 2 * k) == k
        mover = sigma + ell + k + 1
        assert b.letter(mover) == k
        for pos in range(mover - 1, sigma + 2 * k + 1, -1):
            b.commute(pos)
        b.braid(sigma + 2 * k)
    target = _staircase_letters(ell) + (ell,)
    b.commute_window_to(sigma + 1, target)


def insertion_sequence(w: Word, ell: int, triangle_start: int = 0) -> MoveTrace:
    """Trace moving the staircase factor at ``triangle_start`` to staircase
    followed by ``s_ell``: one doubling (of the s_1 in row n+1-ell) and
    ell-1 braid moves, interlaced with commutations.
    """
    n = w.rank
    if not 1 <= ell <= n:
        raise ValueError(f"ell must be in 1..{n}")
    _check_triangle(w, triangle_start)
    labels: list[Label | None] = [None] * len(w)
    size = n * (n + 1) // 2
    labels[triangle_start : triangle_start + size] = _grid_labels(n)
    b = _Builder(w, labels)
    i_star = n + 1 - ell
    anchor = triangle_start + _row_start(n, i_star) + 1
    b.double(anchor)
    if ell > 1:
        _insert_moves(b, anchor - 1, ell)
    expected = _staircase_letters(n) + (ell,)
    got = tuple(b.letters[triangle_start : triangle_start + size + 1])
    assert got == expected, f"insertion ended on {got}"
    return b.trace()


def fattening_sequence(w: Word, triangle_start: int = 0) -> MoveTrace:
    """Trace transforming the staircase factor at ``triangle_start`` into
    staircase followed by reversed c: n doublings first, then the insertion
    moves for ell = 2..n, innermost first.

    >>> from .words import c_sorted_word
    >>> t = fattening_sequence(c_sorted_word(3))
    >>> t.count("D"), t.count("B")
    (3, 3)
    >>> t.final.letters
    (1, 2, 3, 1, 2, 1, 3, 2, 1)
    """
    n = w.rank
    _check_triangle(w, triangle_start)
    labels: list[Label | None] = [None] * len(w)
    size = n * (n + 1) // 2
    labels[triangle_start : triangle_start + size] = _grid_labels(n)
    b = _Builder(w, labels)
    anchors = []
    for i in range(1, n + 1):
        pos = triangle_start + _row_start(n, i) + i
        assert b.letter(pos) == 1
        b.double(pos)
        anchors.append(pos)
    for ell in range(2, n + 1):
        sigma = anchors[n - ell] - 1
        _insert_moves(b, sigma, ell)
    expected = _staircase_letters(n) + tuple(range(n, 0, -1))
    got = tuple(b.letters[triangle_start : triangle_start + size + n])
    assert got == expected, f"fattening ended on {got}"
    finals = b.labels[triangle_start : triangle_start + size + n]
    assert finals == final_label_pattern(n), "final labels off pattern"
    return b.trace()


def final_label_pattern(n: int) -> list[Label]:
    """Labels of the fattened factor, left to right: the c prefix reads
    (i,1), the staircase of rank n-1 reads (i,j+1) on its (i,j) letter, and
    the reversed-c suffix reads (i,1)' at its i-th letter."""
    out = [Label(i, 1) for i in range(1, n + 1)]
    for i in range(1, n):
        for j in range(1, n + 1 - i):
            out.append(Label(i, j + 1))
    out.extend(Label(i, 1, True) for i in range(1, n + 1))
    return out


def commutation_matching(src: Word, dst: Word) -> list[int]:
    """The position correspondence realised by any commutation sequence
    from ``src`` to ``dst``: the z-th occurrence of each letter value maps
    to the z-th occurrence in ``dst``.  Raises if the words are not
    commutation equivalent (a non-commuting pair would have to reorder).

    Returns ``match`` with ``match[r-1]`` the 1-based dst position of src
    position r.
    """
    if src.rank != dst.rank or len(src) != len(dst):
        raise ValueError("words of different shape")
    by_letter: dict[int, list[int]] = {}
    for q, a in enumerate(dst.letters, start=1):
        by_letter.setdefault(a, []).append(q)
    counts: dict[int, int] = {}
    match = []
    for a in src.letters:
        z = counts.get(a, 0)
        occ = by_letter.get(a, [])
        if z >= len(occ):
            raise ValueError("words are not commutation equivalent")
        match.append(occ[z])
        counts[a] = z + 1
    for p in range(len(src)):
        for q in range(p + 1, len(src)):
            if abs(src.letters[p] - src.letters[q]) < 2 and match[p] > match[q]:
                raise ValueError("words are not commutation equivalent")
    return match


def format_trace(trace: MoveTrace, verbose: bool = False) -> str:
    from .words import format_word

    lines = []
    for s, event in enumerate(trace.events):
        lines.append(str(event))
        if verbose:
            lines.append(format_word(trace.words[s + 1]))
    return "\n".join(lines) + "\n"


if __name__ == "__main__":
    import doctest

    doctest.testmod()
