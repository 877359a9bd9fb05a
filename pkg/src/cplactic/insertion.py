"""Insertion of a letter into an admissible column and into a symplectic tableau."""

from dataclasses import dataclass

from .columns import Column, contract, is_admissible
from .crystal import check_letter, letter_key
from .errors import InvalidInput, InvariantViolation
from .plactic import forward_rewrites
from .tableaux import SymplecticTableau, columns_compatible


@dataclass(frozen=True)
class Grew:
    """``w(C)x`` is an admissible column word; ``column`` is one cell taller."""

    column: Column


@dataclass(frozen=True)
class Contracted:
    """``w(C)x`` is a column word that is not admissible; R3 shortened it."""

    column: Column


@dataclass(frozen=True)
class Bumped:
    """``w(C)x`` is congruent to ``letter`` followed by ``w(column)``."""

    column: Column
    letter: int


def bump_sweep(letters, n):
    """Apply the unique forward R1/R2 rewrite to each 3-window, right to left."""
    out = list(letters)
    for k in range(len(out) - 3, -1, -1):
        rules = forward_rewrites(out[k], out[k + 1], out[k + 2], n)
        if len(rules) != 1:
            raise InvariantViolation(
                f"window {tuple(out[k:k + 3])} of {tuple(letters)} admits {len(rules)} rewrites"
            )
        out[k : k + 3] = rules[0][1]
    return out


def insert_letter_column(x, col):
    """``x -> C`` for an admissible column ``C``."""
    n = col.n
    check_letter(x, n)
    if not is_admissible(col):
        raise InvalidInput(f"column {col} is not admissible")
    cells = col.cells
    if not cells or letter_key(cells[-1]) < letter_key(x):
        grown = Column(n, cells + (x,))
        if is_admissible(grown):
            return Grew(grown)
        try:
            return Contracted(contract(grown))
        except InvalidInput as exc:
            raise InvariantViolation(f"cannot contract {grown}: {exc}") from None
    swept = bump_sweep(cells + (x,), n)
    try:
        new = Column(n, tuple(swept[1:]))
    except InvalidInput as exc:
        raise InvariantViolation(f"bumping {x} into {col} broke the column: {exc}") from None
    out = swept[0]
    if not is_admissible(new) or not columns_compatible(new, Column(n, (out,))):
        raise InvariantViolation(f"bumping {x} into {col} gave {new} | {out}")
    return Bumped(new, out)


def _insert(x, tableau, allow_contraction):
    n = tableau.n
    cols = list(tableau.columns)
    y = x
    j = 0
    while True:
        if j == len(cols):
            cols.append(Column(n, (y,)))
            break
        res = insert_letter_column(y, cols[j])
        if isinstance(res, Grew):
            cols[j] = res.column
            break
        if isinstance(res, Contracted):
            if j > 0 or not allow_contraction:
                raise InvariantViolation(f"contraction while inserting {x} at column {j}")
            t = SymplecticTableau._unchecked(n, cols[1:])
            for z in res.column.cells:
                t = _insert(z, t, allow_contraction=False)
            return t
        cols[j] = res.column
        y = res.letter
        j += 1
    try:
        return SymplecticTableau(n, tuple(cols))
    except InvalidInput as exc:
        raise InvariantViolation(f"inserting {x} produced an invalid tableau: {exc}") from None


def insert_letter_tableau(x, tableau):
    """``x -> T``: bump through the columns, contracting at the first one if needed."""
    check_letter(x, tableau.n)
    return _insert(x, tableau, allow_contraction=True)


def p_symbol(w):
    """The symplectic tableau P(w), by left-to-right insertion."""
    t = SymplecticTableau._unchecked(w.n, ())
    for x in w.letters:
        t = _insert(x, t, allow_contraction=True)
    return t


def p_symbol_prefixes(w):
    """``[P(x_1), P(x_1 x_2), ..., P(w)]``."""
    t = SymplecticTableau._unchecked(w.n, ())
    out = []
    for x in w.letters:
        t = _insert(x, t, allow_contraction=True)
        out.append(t)
    return out

