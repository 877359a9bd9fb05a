"""Admissible and coadmissible columns, splitting, and the bijection Phi.

A column is a strictly increasing word, read top to bottom.  A column is
admissible when ``N(m) <= m`` for every ``m``; it is then split into a pair
``(lC, rC)`` by a greedy rule, and ``Phi`` trades it for a coadmissible
column of the same height.
"""

import enum
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .crystal import check_letter, letter_key
from .errors import InvalidInput, InvariantViolation


class ExtendedLetter(enum.Enum):
    """The two letters added by the extended alphabet a1 < 1 < ... < 1-bar < a1-bar."""

    A1 = "a1"
    A1_BAR = "a1-bar"

    def __repr__(self):
        return self.value

    __str__ = __repr__


A1 = ExtendedLetter.A1
A1_BAR = ExtendedLetter.A1_BAR


def extended_key(x):
    if x is A1:
        return 0
    if x is A1_BAR:
        return 1 << 22
    return letter_key(x)


@dataclass(frozen=True)
class Column:
    """A strictly increasing column of letters over C_n."""

    n: int
    cells: tuple = ()

    def __post_init__(self):
        cells = tuple(self.cells)
        for x in cells:
            check_letter(x, self.n)
        keys = [letter_key(x) for x in cells]
        if any(a >= b for a, b in zip(keys, keys[1:])):
            raise InvalidInput(f"column {cells} is not strictly increasing")
        object.__setattr__(self, "cells", cells)

    def __len__(self):
        return len(self.cells)

    def __iter__(self):
        return iter(self.cells)

    def __str__(self):
        return " ".join(str(x) for x in self.cells)

    @property
    def height(self):
        return len(self.cells)


def column_from_letters(n, letters):
    """Sort ``letters`` into a column; raises if two of them coincide."""
    return Column(n, tuple(sorted(letters, key=letter_key)))


@dataclass(frozen=True)
class SplitColumn:
    left: tuple
    right: tuple
    pairs: tuple  # I: unbarred z with (z, z-bar) in C, decreasing
    replacements: tuple  # J: the greedy t_i, decreasing; 0 stands for a1
    extended: bool = False


def n_count(col, m):
    """N(m): letters x of the column with x <= m or x >= m-bar."""
    return sum(1 for x in col.cells if abs(x) <= m)


def is_admissible(col):
    return all(n_count(col, m) <= m for m in range(1, col.n + 1))


def _pairs(cells):
    present = set(cells)
    return sorted((z for z in cells if z > 0 and -z in present), reverse=True)


def _greedy(cells, allow_a1):
    pairs = _pairs(cells)
    used = {abs(x) for x in cells}
    reps = []
    for z in pairs:
        t = min(z, reps[-1]) - 1 if reps else z - 1
        while t >= 1 and t in used:
            t -= 1
        if t < 1:
            if not allow_a1 or t < 0 or (reps and reps[-1] == 0):
                return pairs, None
            t = 0
        reps.append(t)
    return pairs, reps


def _build_split(cells, pairs, reps, extended):
    swap_l = dict(zip(pairs, reps))
    left, right = [], []
    for x in cells:
        if x > 0 and x in swap_l:
            t = swap_l[x]
            left.append(A1 if t == 0 else t)
            right.append(x)
        elif x < 0 and -x in swap_l:
            t = swap_l[-x]
            left.append(x)
            right.append(A1_BAR if t == 0 else -t)
        else:
            left.append(x)
            right.append(x)
    left.sort(key=extended_key)
    right.sort(key=extended_key)
    return SplitColumn(tuple(left), tuple(right), tuple(pairs), tuple(reps), extended)


def split(col):
    """Split an admissible column into ``(lC, rC)``."""
    pairs, reps = _greedy(col.cells, allow_a1=False)
    if reps is None:
        raise InvalidInput(f"column {col} is not splittable")
    return _build_split(col.cells, pairs, reps, False)


def strict_factors_admissible(col):
    # admissibility passes to subcolumns, so the two maximal strict factors suffice
    if len(col) < 2:
        return True
    return is_admissible(Column(col.n, col.cells[1:])) and is_admissible(
        Column(col.n, col.cells[:-1])
    )


def split_extended(col):
    """Split in the alphabet a1 < C_n < a1-bar.

    Admissible columns split as usual.  A non-admissible column whose strict
    factors are all admissible splits with exactly one ``a1`` in ``lC`` and
    one ``a1-bar`` in ``rC``.
    """
    if is_admissible(col):
        return split(col)
    if not strict_factors_admissible(col):
        raise InvalidInput(f"column {col} has a non-admissible strict factor")
    pairs, reps = _greedy(col.cells, allow_a1=True)
    if reps is None or reps.count(0) != 1:
        raise InvariantViolation(f"extended split of {col} did not use a1 exactly once")
    return _build_split(col.cells, pairs, reps, True)


def is_coadmissible(col):
    n = col.n
    for z in _pairs(col.cells):
        if sum(1 for x in col.cells if abs(x) >= z) > n - z + 1:
            return False
    return True


def phi_map(col):
    """Phi: unbarred letters of lC followed by barred letters of rC."""
    if not is_admissible(col):
        raise InvalidInput(f"column {col} is not admissible")
    sp = split(col)
    cells = [x for x in sp.left if x > 0] + [x for x in sp.right if x < 0]
    return Column(col.n, tuple(cells))


def phi_inverse(col):
    """The admissible column C with Phi(C) equal to ``col``."""
    if not is_coadmissible(col):
        raise InvalidInput(f"column {col} is not coadmissible")
    n = col.n
    reps = _pairs(col.cells)  # J, decreasing
    used = {abs(x) for x in col.cells}
    pairs = [0] * len(reps)
    floor = 0
    for k in range(len(reps) - 1, -1, -1):
        z = max(reps[k], floor) + 1
        while z <= n and z in used:
            z += 1
        if z > n:
            raise InvariantViolation(f"reverse greedy failed on coadmissible column {col}")
        pairs[k] = z
        floor = z
    drop = set(reps)
    unbarred = [x for x in col.cells if x > 0 and x not in drop] + pairs
    barred = [x for x in col.cells if x < 0 and -x not in drop] + [-z for z in pairs]
    out = column_from_letters(n, unbarred + barred)
    if not is_admissible(out) or phi_map(out) != col:
        raise InvariantViolation(f"phi_inverse({col}) produced {out}")
    return out


def contract(col):
    """R3: erase the pair (z, z-bar) with the lowest z satisfying N(z) = z + 1.

    The input must be a non-admissible column word all of whose strict
    factors are admissible.
    """
    if is_admissible(col):
        raise InvalidInput(f"column {col} is admissible; nothing to contract")
    if not strict_factors_admissible(col):
        raise InvalidInput(f"column {col} has a non-admissible strict factor")
    for z in sorted(_pairs(col.cells)):
        if n_count(col, z) == z + 1:
            return Column(col.n, tuple(x for x in col.cells if abs(x) != z))
    raise InvariantViolation(f"no contractible pair in {col}")


@lru_cache(maxsize=None)
def alphabet(n):
    return tuple(range(1, n + 1)) + tuple(range(-n, 0))


@lru_cache(maxsize=None)
def all_columns(n, height):
    """Every strictly increasing column of the given height, in lex order."""
    return tuple(Column(n, c) for c in combinations(alphabet(n), height))


@lru_cache(maxsize=None)
def admissible_columns(n, height):
    return tuple(c for c in all_columns(n, height) if is_admissible(c))
