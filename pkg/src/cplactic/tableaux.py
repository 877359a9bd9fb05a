"""Symplectic tableaux, admissible skew tableaux and their split forms.

Tableaux are stored column-major.  A shape is the tuple of column heights,
weakly decreasing; a dominant weight ``lam`` corresponds to the shape with
``lam[i-1]`` columns of height ``i``.  Positions are ``(row, col)`` with
row 0 on top and column 0 on the left.
"""

from dataclasses import dataclass
from functools import lru_cache

from .columns import (
    Column,
    admissible_columns,
    extended_key,
    is_admissible,
    split,
    split_extended,
)
from .crystal import Word, letter_key
from .errors import ComponentOverflow, InvalidInput

DEFAULT_ENUMERATION_CAP = 2_000_000


@lru_cache(maxsize=1 << 16)
def split_pair(col):
    """``(lC, rC)`` of an admissible column, memoised."""
    sp = split(col)
    return sp.left, sp.right


def _rows_ok(right, left, shift):
    # right[k] sits on the same row as left[k - shift]
    for k, x in enumerate(right):
        m = k - shift
        if 0 <= m < len(left) and extended_key(x) > extended_key(left[m]):
            return False
    return True


def columns_compatible(c1, c2, offset1=0, offset2=0):
    """``rC1 <= lC2`` on every shared row."""
    _, r1 = split_pair(c1)
    l2, _ = split_pair(c2)
    return _rows_ok(r1, l2, offset2 - offset1)


def shape_from_weight(lam):
    """Column heights of the Young diagram of the dominant weight ``lam``."""
    heights = []
    for h in range(len(lam), 0, -1):
        heights.extend([h] * lam[h - 1])
    return tuple(heights)


def weight_from_shape(heights, n):
    lam = [0] * n
    for h in heights:
        lam[h - 1] += 1
    return tuple(lam)


def _check_shape(heights):
    if any(h <= 0 for h in heights) or any(a < b for a, b in zip(heights, heights[1:])):
        raise InvalidInput(f"{heights} is not a shape (positive, weakly decreasing heights)")


def _format_rows(n, offsets, cols, unicode):
    from .crystal import format_letter

    def cell(x):
        if x is None:
            return "."
        if isinstance(x, int):
            return format_letter(x, unicode)
        return str(x)

    depth = max((o + len(c) for o, c in zip(offsets, cols)), default=0)
    grid = []
    for r in range(depth):
        row = []
        for o, c in zip(offsets, cols):
            row.append(cell(c[r - o]) if o <= r < o + len(c) else (" " if r >= o else "."))
        grid.append(row)
    width = max((len(s) for row in grid for s in row), default=1)
    return "\n".join(" ".join(s.rjust(width) for s in row).rstrip() for row in grid)


@dataclass(frozen=True)
class SymplecticTableau:
    """A Kashiwara-Nakashima tableau over C_n, stored as its columns."""

    n: int
    columns: tuple = ()

    def __post_init__(self):
        cols = tuple(self.columns)
        object.__setattr__(self, "columns", cols)
        for j, c in enumerate(cols):
            if not isinstance(c, Column) or c.n != self.n:
                raise InvalidInput(f"column {j} is not a Column over C_{self.n}")
            if len(c) == 0:
                raise InvalidInput(f"column {j} is empty")
            if not is_admissible(c):
                raise InvalidInput(f"column {j} ({c}) is not admissible")
        for j in range(len(cols) - 1):
            if len(cols[j]) < len(cols[j + 1]):
                raise InvalidInput(f"column {j + 1} is taller than column {j}")
            if not columns_compatible(cols[j], cols[j + 1]):
                raise InvalidInput(f"columns {j} and {j + 1} violate rC <= lC")

    @classmethod
    def _unchecked(cls, n, columns):
        t = object.__new__(cls)
        object.__setattr__(t, "n", n)
        object.__setattr__(t, "columns", tuple(columns))
        return t

    @classmethod
    def from_lists(cls, n, columns):
        return cls(n, tuple(Column(n, tuple(c)) for c in columns))

    @property
    def shape(self):
        return tuple(len(c) for c in self.columns)

    def __len__(self):
        return sum(len(c) for c in self.columns)

    def reading(self):
        letters = []
        for c in reversed(self.columns):
            letters.extend(c.cells)
        return Word._raw(self.n, tuple(letters))

    def as_lists(self):
        return [list(c.cells) for c in self.columns]

    def to_skew(self):
        return SkewTableau(self.n, tuple((0, c) for c in self.columns))

    def pretty(self, unicode=False):
        cols = [c.cells for c in self.columns]
        return _format_rows(self.n, [0] * len(cols), cols, unicode)

    def __str__(self):
        return " | ".join(str(c) for c in self.columns)


def reading(t):
    """Columns right to left, each top to bottom."""
    return t.reading()


def is_symplectic(t):
    """Split criterion: admissible columns with ``rC_i <= lC_{i+1}``."""
    cols = t.columns
    if not all(len(c) > 0 and is_admissible(c) for c in cols):
        return False
    for a, b in zip(cols, cols[1:]):
        if len(a) < len(b) or not columns_compatible(a, b):
            return False
    return True


def _has_bad_configuration(c1, c2):
    # (a,b)-configuration with p(a,b) >= b - a, indices as in the KN definition
    pos_i = {x: k for k, x in enumerate(c1.cells)}
    pos_j = {x: k for k, x in enumerate(c2.cells)}
    for a in range(1, c1.n + 1):
        if a not in pos_i or -a not in pos_j:
            continue
        p, s = pos_i[a], pos_j[-a]
        for b in range(a, c1.n + 1):
            for col in (pos_j, pos_i):
                if b in col and -b in col:
                    q, r = col[b], col[-b]
                    if p <= q < r <= s and (s - r) + (q - p) >= b - a:
                        return True
    return False


def is_kn_tableau(t):
    """The (a,b)-configuration criterion with rows weakly increasing."""
    cols = t.columns
    if not all(len(c) > 0 and is_admissible(c) for c in cols):
        return False
    for c1, c2 in zip(cols, cols[1:]):
        if len(c1) < len(c2):
            return False
        if any(letter_key(x) > letter_key(y) for x, y in zip(c1.cells, c2.cells)):
            return False
        if _has_bad_configuration(c1, c2):
            return False
    return True


def highest_weight_tableau(lam):
    """The tableau of shape ``lam`` whose row i holds only the letter i."""
    n = len(lam)
    if n < 1 or any(c < 0 for c in lam):
        raise InvalidInput(f"{lam} is not a dominant weight")
    cols = [Column(n, tuple(range(1, h + 1))) for h in shape_from_weight(lam)]
    return SymplecticTableau._unchecked(n, cols)


def tableau_from_reading(word, shape):
    """Cut ``word`` into columns of the given shape and validate."""
    _check_shape(shape)
    if sum(shape) != len(word):
        raise InvalidInput(f"word of length {len(word)} does not fill shape {shape}")
    letters = word.letters
    cols = []
    pos = 0
    for h in reversed(shape):
        cols.append(Column(word.n, letters[pos : pos + h]))
        pos += h
    return SymplecticTableau(word.n, tuple(reversed(cols)))


@dataclass(frozen=True)
class SkewTableau:
    """Columns ``(offset, Column)``: ``offset`` rows of the inner shape sit on top."""

    n: int
    columns: tuple = ()

    def __post_init__(self):
        cols = []
        for j, entry in enumerate(self.columns):
            try:
                offset, col = entry
            except (TypeError, ValueError):
                raise InvalidInput(f"column {j} must be an (offset, Column) pair") from None
            if not isinstance(col, Column):
                col = Column(self.n, tuple(col))
            if col.n != self.n:
                raise InvalidInput(f"column {j} has rank {col.n}, expected {self.n}")
            if not isinstance(offset, int) or offset < 0:
                raise InvalidInput(f"column {j} has invalid offset {offset!r}")
            cols.append((offset, col))
        while cols and cols[-1][0] == 0 and len(cols[-1][1]) == 0:
            cols.pop()
        object.__setattr__(self, "columns", tuple(cols))
        _check_skew_shape(self.offsets, self.outer)
        problem = _skew_problem(self)
        if problem:
            raise InvalidInput(problem)

    @classmethod
    def _unchecked(cls, n, columns):
        t = object.__new__(cls)
        object.__setattr__(t, "n", n)
        object.__setattr__(t, "columns", tuple(columns))
        return t

    @classmethod
    def from_lists(cls, n, offsets, columns):
        return cls(n, tuple((o, Column(n, tuple(c))) for o, c in zip(offsets, columns)))

    @property
    def offsets(self):
        return tuple(o for o, _ in self.columns)

    @property
    def outer(self):
        """Column heights of lambda."""
        return tuple(o + len(c) for o, c in self.columns)

    @property
    def inner(self):
        """Column heights of mu (trailing zeros dropped)."""
        return tuple(o for o, _ in self.columns if o > 0)

    def __len__(self):
        return sum(len(c) for _, c in self.columns)

    def reading(self):
        letters = []
        for _, c in reversed(self.columns):
            letters.extend(c.cells)
        return Word._raw(self.n, tuple(letters))

    def is_straight(self):
        return all(o == 0 for o, _ in self.columns)

    def to_symplectic(self):
        if not self.is_straight():
            raise InvalidInput("skew tableau has a non-empty inner shape")
        return SymplecticTableau(self.n, tuple(c for _, c in self.columns))

    def pretty(self, unicode=False):
        return _format_rows(
            self.n, list(self.offsets), [c.cells for _, c in self.columns], unicode
        )

    def __str__(self):
        return " | ".join(f"[{o}] {c}" for o, c in self.columns)


def _check_skew_shape(offsets, outer):
    for j in range(len(offsets) - 1):
        if offsets[j] < offsets[j + 1] or outer[j] < outer[j + 1]:
            raise InvalidInput(
                f"offsets {offsets} / outer heights {outer} do not describe a skew shape"
            )


def _skew_problem(t):
    cols = t.columns
    for j, (_, c) in enumerate(cols):
        if not is_admissible(c):
            return f"column {j} ({c}) is not admissible"
    for j in range(len(cols) - 1):
        (o1, c1), (o2, c2) = cols[j], cols[j + 1]
        if not columns_compatible(c1, c2, o1, o2):
            return f"split rows of columns {j} and {j + 1} are not weakly increasing"
    return None


def is_admissible_skew(t):
    try:
        _check_skew_shape(t.offsets, t.outer)
    except InvalidInput:
        return False
    return _skew_problem(t) is None


def inner_corners(t):
    """Boxes of mu with nothing of mu below or to the right, as (row, col)."""
    offs = list(t.offsets) + [0]
    return [(offs[j] - 1, j) for j in range(len(offs) - 1) if offs[j] > offs[j + 1]]


def outside_corners(t):
    outer = list(t.outer) + [0]
    return [(outer[j] - 1, j) for j in range(len(outer) - 1) if outer[j] > outer[j + 1]]


class _Puncture:
    def __repr__(self):
        return "*"

    __str__ = __repr__


PUNCTURE = _Puncture()


def split_punctured(n, cells, extended=True):
    """Split a column whose cells may contain :data:`PUNCTURE` once.

    The puncture keeps its cell in both halves; the other letters are
    replaced by those of the split of the column with the puncture removed.
    Returns ``(lC, rC)`` as tuples.
    """
    k = next((i for i, x in enumerate(cells) if x is PUNCTURE), None)
    bare = tuple(x for x in cells if x is not PUNCTURE)
    col = Column(n, bare)
    sp = split_extended(col) if extended else split(col)
    left, right = list(sp.left), list(sp.right)
    if k is not None:
        left.insert(k, PUNCTURE)
        right.insert(k, PUNCTURE)
    return tuple(left), tuple(right)


@dataclass(frozen=True)
class SplitForm:
    """Each column replaced by ``(offset, lC, rC)``."""

    n: int
    columns: tuple

    def rows(self):
        depth = max((o + len(l) for o, l, _ in self.columns), default=0)
        out = []
        for r in range(depth):
            row = []
            for o, left, right in self.columns:
                if o <= r < o + len(left):
                    row.extend([left[r - o], right[r - o]])
                else:
                    row.extend([None, None])
            out.append(row)
        return out

    def rows_increasing(self):
        for row in self.rows():
            prev = None
            for x in row:
                if x is None or x is PUNCTURE:
                    continue
                if prev is not None and extended_key(prev) > extended_key(x):
                    return False
                prev = x
        return True

    def pretty(self, unicode=False):
        offsets = []
        cols = []
        for o, left, right in self.columns:
            offsets.extend([o, o])
            cols.extend([left, right])
        return _format_rows(self.n, offsets, cols, unicode)


def split_form(t):
    """Split form of a symplectic, skew or punctured skew tableau."""
    if isinstance(t, SymplecticTableau):
        entries = [(0, c.cells) for c in t.columns]
    elif isinstance(t, SkewTableau):
        entries = [(o, c.cells) for o, c in t.columns]
    else:
        entries = [(o, tuple(c)) for o, c in t.columns]
    return SplitForm(t.n, tuple((o, *split_punctured(t.n, cells)) for o, cells in entries))


@dataclass(frozen=True)
class PuncturedSkewTableau:
    """A skew tableau in which one cell holds :data:`PUNCTURE`.

    Columns are ``(offset, cells)`` with ``cells`` a plain tuple, so that
    intermediate states of a slide (possibly only a1-admissible) can be
    represented without validation.
    """

    n: int
    columns: tuple
    puncture: tuple  # (col, index within that column's cells)

    @property
    def puncture_row(self):
        j, k = self.puncture
        return self.columns[j][0] + k

    def is_admissible(self, extended=False):
        try:
            form = SplitForm(
                self.n,
                tuple(
                    (o, *split_punctured(self.n, cells, extended)) for o, cells in self.columns
                ),
            )
        except InvalidInput:
            return False
        return form.rows_increasing()

    def pretty(self, unicode=False):
        return _format_rows(
            self.n, [o for o, _ in self.columns], [c for _, c in self.columns], unicode
        )


def _column_candidates(n, height):
    return admissible_columns(n, height)


def _check_skew_request(n, outer, inner):
    _check_shape(outer)
    inner = tuple(inner) + (0,) * (len(outer) - len(inner))
    if len(inner) > len(outer) or any(i > o for i, o in zip(inner, outer)):
        raise InvalidInput(f"inner shape {inner} does not fit in {outer}")
    if any(a < b for a, b in zip(inner, inner[1:])):
        raise InvalidInput(f"{inner} is not a shape")
    if any(o - i > 2 * n for o, i in zip(outer, inner)):
        raise InvalidInput(f"a column of {outer}/{inner} is taller than 2n")
    return inner


def enumerate_skew_tableaux(n, outer, inner=(), cap=DEFAULT_ENUMERATION_CAP):
    """All admissible skew tableaux of shape outer/inner, in lexicographic order.

    Columns are chosen left to right among admissible columns of the right
    height, pruning on the split-row condition with the previous column.
    """
    inner = _check_skew_request(n, outer, inner)
    heights = [o - i for o, i in zip(outer, inner)]
    out = []

    def extend(j, chosen):
        if j == len(heights):
            if len(out) >= cap:
                raise ComponentOverflow(f"more than {cap} skew tableaux of shape {outer}/{inner}")
            out.append(SkewTableau._unchecked(n, tuple(zip(inner, chosen))))
            return
        for c in _column_candidates(n, heights[j]):
            if j and not columns_compatible(chosen[-1], c, inner[j - 1], inner[j]):
                continue
            chosen.append(c)
            extend(j + 1, chosen)
            chosen.pop()

    extend(0, [])
    return out


def enumerate_tableaux(n, shape, cap=DEFAULT_ENUMERATION_CAP):
    """All symplectic tableaux of the given shape."""
    return [
        SymplecticTableau._unchecked(n, tuple(c for _, c in t.columns))
        for t in enumerate_skew_tableaux(n, shape, (), cap)
    ]


def random_skew_tableau(n, outer, inner, rng, attempts=1000):
    """Sample an admissible skew tableau by a seeded choice at each column.

    Uses ``rng`` (a :class:`random.Random`); backtracks on dead ends.
    Returns ``None`` if no filling was found within ``attempts`` restarts.
    """
    inner = _check_skew_request(n, outer, inner)
    heights = [o - i for o, i in zip(outer, inner)]
    for _ in range(attempts):
        chosen = []
        for j, h in enumerate(heights):
            options = [
                c
                for c in _column_candidates(n, h)
                if not j or columns_compatible(chosen[-1], c, inner[j - 1], inner[j])
            ]
            if not options:
                break
            chosen.append(rng.choice(options))
        else:
            return SkewTableau._unchecked(n, tuple(zip(inner, chosen)))
    return None


def skew_from_reading(word, outer, inner=()):
    """Rebuild the skew tableau of shape outer/inner with the given reading."""
    inner = _check_skew_request(word.n, outer, inner)
    heights = [o - i for o, i in zip(outer, inner)]
    if sum(heights) != len(word):
        raise InvalidInput(f"word of length {len(word)} does not fill {outer}/{inner}")
    cols = []
    pos = 0
    for h in reversed(heights):
        cols.append(Column(word.n, word.letters[pos : pos + h]))
        pos += h
    return SkewTableau(word.n, tuple(zip(inner, reversed(cols))))


__all__ = [
    "PUNCTURE",
    "PuncturedSkewTableau",
    "SkewTableau",
    "SplitForm",
    "SymplecticTableau",
    "columns_compatible",
    "enumerate_skew_tableaux",
    "enumerate_tableaux",
    "highest_weight_tableau",
    "inner_corners",
    "is_admissible_skew",
    "is_kn_tableau",
    "is_symplectic",
    "outside_corners",
    "random_skew_tableau",
    "reading",
    "shape_from_weight",
    "skew_from_reading",
    "split_form",
    "split_pair",
    "tableau_from_reading",
    "weight_from_shape",
]
