"""Sheats' symplectic jeu de taquin.

A slide punctures an inner corner and moves the puncture right or down by
elementary steps until it reaches an outside corner.  Horizontal moves go
through the bijection Phi between admissible and coadmissible columns.  A
column may become admissible only in the extended alphabet a1 < C_n < a1-bar;
it is then contracted by R3 once the slide is over.
"""

from dataclasses import dataclass
from functools import lru_cache

from .columns import (
    A1,
    Column,
    column_from_letters,
    contract,
    extended_key,
    is_admissible,
    is_coadmissible,
    phi_inverse,
    phi_map,
)
from .errors import InvalidInput, InvariantViolation
from .tableaux import (
    PUNCTURE,
    PuncturedSkewTableau,
    SkewTableau,
    SplitForm,
    inner_corners,
    is_admissible_skew,
    skew_from_reading,
    split_punctured,
)


@dataclass(frozen=True)
class SlideState:
    """A punctured skew tableau met during a slide started in column ``start``."""

    tableau: PuncturedSkewTableau
    start: int

    @property
    def puncture(self):
        return self.tableau.puncture


def _cell_at_row(entry, row):
    offset, cells = entry
    k = row - offset
    return k if 0 <= k < len(cells) else None


def _neighbours(t):
    """Split-form letters around the puncture: ``(a, a_right, b, b_right, b_index)``."""
    j, r = t.puncture
    n = t.n
    offset, cells = t.columns[j]
    row = offset + r
    a = a_r = b = b_r = None
    b_index = None
    if r + 1 < len(cells):
        left, right = split_punctured(n, cells)
        a, a_r = left[r + 1], right[r + 1]
    if j + 1 < len(t.columns):
        k = _cell_at_row(t.columns[j + 1], row)
        if k is not None:
            left, right = split_punctured(n, t.columns[j + 1][1])
            b, b_r, b_index = left[k], right[k], k
    return a, a_r, b, b_r, b_index


def is_terminal(state):
    """The puncture sits on an outside corner."""
    a, _, b, _, _ = _neighbours(state.tableau)
    return a is None and b is None


def _replace(columns, j, entry):
    cols = list(columns)
    cols[j] = entry
    return tuple(cols)


def sjdt_elementary(state):
    """One elementary step: a vertical swap or a horizontal move through Phi."""
    t = state.tableau
    n = t.n
    j, r = t.puncture
    a, a_r, b, _, k = _neighbours(t)
    if a is None and b is None:
        raise InvalidInput("the puncture is already an outside corner")
    offset, cells = t.columns[j]
    if b is None or (a is not None and extended_key(a_r) <= extended_key(b)):
        swapped = list(cells)
        swapped[r], swapped[r + 1] = swapped[r + 1], swapped[r]
        cols = _replace(t.columns, j, (offset, tuple(swapped)))
        return SlideState(PuncturedSkewTableau(n, cols, (j, r + 1)), state.start)

    bare = Column(n, tuple(x for x in cells if x is not PUNCTURE))
    offset2, cells2 = t.columns[j + 1]
    if b < 0:
        # case 2(i): b joins Phi(C1), C1 is rebuilt through Phi^-1
        if cells2[k] != b:
            raise InvariantViolation(f"barred letter {b} not found at row {k} of {cells2}")
        star = phi_map(bare).cells
        if b in star:
            raise InvariantViolation(f"{b} already occurs in Phi({bare})")
        d1 = column_from_letters(n, star + (b,))
        if not is_coadmissible(d1):
            raise InvariantViolation(f"D1 = {d1} is not coadmissible")
        new1 = phi_inverse(d1).cells
        new2 = cells2[:k] + (PUNCTURE,) + cells2[k + 1 :]
    else:
        # case 2(ii): b joins C1 directly, C2 is rebuilt through Phi^-1
        try:
            new1 = column_from_letters(n, bare.cells + (b,)).cells
        except InvalidInput:
            raise InvariantViolation(f"{b} already occurs in {bare}") from None
        star = phi_map(Column(n, cells2)).cells
        if star[k] != b:
            raise InvariantViolation(f"unbarred letter {b} not at row {k} of Phi({cells2})")
        d2 = Column(n, star[:k] + star[k + 1 :])
        rebuilt = phi_inverse(d2).cells
        new2 = rebuilt[:k] + (PUNCTURE,) + rebuilt[k:]
    cols = _replace(t.columns, j, (offset, new1))
    cols = _replace(cols, j + 1, (offset2, new2))
    return SlideState(PuncturedSkewTableau(n, cols, (j + 1, k)), state.start)


def split_form_extended(t):
    """Split form of a punctured tableau, using a1 where a column needs it."""
    return SplitForm(t.n, tuple((o, *split_punctured(t.n, cells)) for o, cells in t.columns))


def check_a1_admissible(state):
    """Assert the invariants of a slide: a1-admissible, a1 only in the start column."""
    t = state.tableau
    try:
        form = split_form_extended(t)
    except InvalidInput as exc:
        raise InvariantViolation(f"intermediate tableau is not a1-admissible: {exc}") from None
    if not form.rows_increasing():
        raise InvariantViolation("split rows of an intermediate tableau are not increasing")
    for j, (_, left, _) in enumerate(form.columns):
        if A1 in left and j != state.start:
            raise InvariantViolation(f"a1 appears in column {j}, slide started in {state.start}")


def puncture(t, corner):
    """Put the puncture in the inner corner ``corner`` of the skew tableau ``t``."""
    if corner not in inner_corners(t):
        raise InvalidInput(f"{corner} is not an inner corner of the tableau")
    row, j = corner
    cols = tuple((o, c.cells) for o, c in t.columns)
    offset, cells = cols[j]
    cols = _replace(cols, j, (offset - 1, (PUNCTURE,) + cells))
    return SlideState(PuncturedSkewTableau(t.n, cols, (j, 0)), j)


def run_slide(t, corner, trace=None):
    """Elementary steps from ``corner`` until the puncture is an outside corner.

    Returns the final :class:`SlideState`.  If ``trace`` is a list every
    state (including the first) is appended to it.
    """
    state = puncture(t, corner)
    while True:
        if trace is not None:
            trace.append(state)
        check_a1_admissible(state)
        if is_terminal(state):
            return state
        state = sjdt_elementary(state)


def finish_slide(state):
    """Drop the puncture and contract the a1-column if there is one."""
    t = state.tableau
    n = t.n
    j, r = t.puncture
    cols = [(o, tuple(c)) for o, c in t.columns]
    offset, cells = cols[j]
    if r != len(cells) - 1:
        raise InvariantViolation("puncture is not at the bottom of its column")
    cols[j] = (offset, cells[:-1])
    bad = [i for i, (_, c) in enumerate(cols) if not is_admissible(Column(n, c))]
    if len(bad) > 1 or (bad and bad[0] != state.start):
        raise InvariantViolation(f"non-admissible columns {bad} after a slide from {state.start}")
    for i in bad:
        offset, cells = cols[i]
        cols[i] = (offset + 1, contract(Column(n, cells)).cells)
    while cols and cols[-1][0] == 0 and not cols[-1][1]:
        cols.pop()
    try:
        return SkewTableau(n, tuple((o, Column(n, c)) for o, c in cols))
    except InvalidInput as exc:
        raise InvariantViolation(f"slide result is not an admissible skew tableau: {exc}") from None


def sjdt_slide(t, corner, trace=None):
    """SJDT(T, c): the complete slide into the inner corner ``corner``."""
    if not is_admissible_skew(t):
        raise InvalidInput("tableau is not an admissible skew tableau")
    return finish_slide(run_slide(t, corner, trace))


@dataclass(frozen=True)
class CornerPolicy:
    """Which inner corner to fill next.

    With ``order`` unset the topmost corner is used, ties broken by the
    leftmost column; ``reverse`` takes the bottommost, rightmost one
    instead.  Otherwise ``order`` lists the corners to use, one per slide.
    """

    order: tuple = None
    reverse: bool = False

    def choose(self, t, step):
        corners = inner_corners(t)
        if self.order is None:
            return max(corners) if self.reverse else min(corners)
        if step >= len(self.order):
            raise InvalidInput(f"corner sequence exhausted after {step} slides")
        corner = tuple(self.order[step])
        if corner not in corners:
            raise InvalidInput(f"{corner} is not an inner corner at slide {step}")
        return corner


def rectify(t, policy=None):
    """Slide into inner corners until the inner shape is empty."""
    from .tableaux import SymplecticTableau

    policy = policy or CornerPolicy()
    step = 0
    while inner_corners(t):
        t = sjdt_slide(t, policy.choose(t, step))
        step += 1
    cols = tuple(c for o, c in t.columns if len(c))
    try:
        return SymplecticTableau(t.n, cols)
    except InvalidInput as exc:
        raise InvariantViolation(f"rectification is not a symplectic tableau: {exc}") from None


def rectify_all_orders(t):
    """The set of rectifications over every possible order of corners."""

    @lru_cache(maxsize=None)
    def results(s):
        corners = inner_corners(s)
        if not corners:
            return frozenset([rectify(s)])
        out = set()
        for c in corners:
            out |= results(sjdt_slide(s, c))
        return frozenset(out)

    return set(results(t))


def slide_reading(word, outer, inner, corner):
    """Xi(w, c): reading of SJDT(T_w, c) where T_w has reading ``word``."""
    return sjdt_slide(skew_from_reading(word, outer, inner), corner).reading()


def two_column_slide(c1, c2, k):
    """SJDT on ``C1 C2`` where ``C1`` sits below an inner column of height ``k``."""
    n = c1.n
    t = SkewTableau(n, ((k, c1), (0, c2)))
    return sjdt_slide(t, (k - 1, 0))


def psi_two_column(word, q, p, k):
    """Psi_{(q,p)/k} on readings of two-column skew tableaux."""
    return slide_reading(word, (q, p), (k,), (k - 1, 0))


def antidiagonal(word):
    """Staircase skew tableau with one letter per column and reading ``word``.

    The outer shape has a column of height ``len(word)``, so this is a
    genuine type C shape only when ``len(word) <= n``.
    """
    length = len(word)
    cols = tuple(
        (length - 1 - i, Column(word.n, (x,))) for i, x in enumerate(reversed(word.letters))
    )
    return SkewTableau(word.n, cols)


__all__ = [
    "CornerPolicy",
    "SlideState",
    "antidiagonal",
    "is_terminal",
    "psi_two_column",
    "puncture",
    "rectify",
    "rectify_all_orders",
    "run_slide",
    "sjdt_elementary",
    "sjdt_slide",
    "slide_reading",
    "split_form_extended",
    "two_column_slide",
]
