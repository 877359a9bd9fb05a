"""The Robinson-Schensted type bijection w -> (P(w), Q(w)) and its inverse.

``Q(w)`` is the sequence of shapes of ``P(x_1)``, ``P(x_1 x_2)``, ...,
``P(w)``; consecutive shapes differ by one box.  Shapes are tuples of
column heights and the empty shape is ``()``.
"""

from dataclasses import dataclass
from functools import lru_cache

from .crystal import Word, is_highest_weight, replay, to_highest
from .errors import InvalidInput
from .insertion import p_symbol_prefixes
from .tableaux import SymplecticTableau, enumerate_tableaux


@dataclass(frozen=True)
class RSPair:
    p: SymplecticTableau
    q: tuple  # shapes Q_1, ..., Q_l


def q_symbol(w):
    return tuple(t.shape for t in p_symbol_prefixes(w))


def rs_map(w):
    prefixes = p_symbol_prefixes(w)
    p = prefixes[-1] if prefixes else SymplecticTableau._unchecked(w.n, ())
    return RSPair(p, tuple(t.shape for t in prefixes))


def row_lengths(shape):
    return tuple(sum(1 for h in shape if h > r) for r in range(max(shape, default=0)))


def _shape_ok(shape, n):
    return (
        all(isinstance(h, int) and 1 <= h <= n for h in shape)
        and all(a >= b for a, b in zip(shape, shape[1:]))
    )


def box_change(before, after):
    """``(+k)`` if ``after`` adds a box in row k, ``(-k)`` if it removes one, else None."""
    r1, r2 = row_lengths(before), row_lengths(after)
    depth = max(len(r1), len(r2))
    r1 = r1 + (0,) * (depth - len(r1))
    r2 = r2 + (0,) * (depth - len(r2))
    diffs = [(k + 1, b - a) for k, (a, b) in enumerate(zip(r1, r2)) if a != b]
    if len(diffs) != 1 or abs(diffs[0][1]) != 1:
        return None
    row, delta = diffs[0]
    return row if delta > 0 else -row


def validate_oscillating(q, n):
    """Shapes with heights at most n, each one box away from the previous (from empty)."""
    prev = ()
    for shape in q:
        shape = tuple(shape)
        if not _shape_ok(shape, n) or box_change(prev, shape) is None:
            return False
        prev = shape
    return True


def highest_weight_word(q, n):
    """The highest weight word ``x_1 ... x_l`` whose Q-symbol is ``q``."""
    letters = []
    prev = ()
    for shape in q:
        letters.append(box_change(prev, tuple(shape)))
        prev = tuple(shape)
    return Word(n, tuple(letters))


def rs_inverse(pair):
    """Recover ``w`` from ``(P(w), Q(w))`` through the crystal structure."""
    p, q = pair.p, tuple(tuple(s) for s in pair.q)
    n = p.n
    if not validate_oscillating(q, n):
        raise InvalidInput(f"{q} is not an {n}-oscillating tableau")
    final = q[-1] if q else ()
    if final != p.shape:
        raise InvalidInput(f"P has shape {p.shape} but Q ends with {final}")
    top = highest_weight_word(q, n)
    if not is_highest_weight(top):
        raise InvalidInput(f"Q = {q} does not come from any word")
    _, path = to_highest(p.reading())
    w = replay(top, path)
    if w is None or rs_map(w) != RSPair(p, q):
        raise InvalidInput("pair is not in the image of the RS correspondence")
    return w


def oscillating_tableaux(n, length):
    """All n-oscillating tableaux of the given length, as tuples of shapes."""
    out = []

    def neighbours(shape):
        rows = list(row_lengths(shape))
        seen = []
        for k in range(len(rows) + 1):
            if k < n and (k == 0 or rows[k - 1] > (rows[k] if k < len(rows) else 0)):
                new = rows[:] + [0] * (k + 1 - len(rows))
                new[k] += 1
                seen.append(new)
            if k < len(rows) and (k + 1 == len(rows) or rows[k] > rows[k + 1]):
                new = rows[:]
                new[k] -= 1
                seen.append(new)
        for rows2 in seen:
            rows2 = [r for r in rows2 if r > 0]
            yield tuple(sum(1 for r in rows2 if r > c) for c in range(rows2[0] if rows2 else 0))

    def walk(prefix, shape):
        if len(prefix) == length:
            out.append(tuple(prefix))
            return
        for nxt in neighbours(shape):
            prefix.append(nxt)
            walk(prefix, nxt)
            prefix.pop()

    walk([], ())
    return out


@lru_cache(maxsize=None)
def count_tableaux(n, shape):
    if not shape:
        return 1
    return len(enumerate_tableaux(n, shape))


def count_rs_pairs(n, length):
    """Number of pairs (P, Q) with Q n-oscillating of the given length."""
    return sum(count_tableaux(n, q[-1]) for q in oscillating_tableaux(n, length)) if length else 1


__all__ = [
    "RSPair",
    "box_change",
    "count_rs_pairs",
    "highest_weight_word",
    "oscillating_tableaux",
    "q_symbol",
    "rs_inverse",
    "rs_map",
    "validate_oscillating",
]
