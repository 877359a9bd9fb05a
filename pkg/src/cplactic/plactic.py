"""The defining relations R1, R2, R3 of the plactic monoid Pl(C_n).

R1 and R2 relate three-letter words; the "forward" direction goes from the
left hand side (a vertex of B(121)) to the right hand side (a vertex of
B(112)).  R3 erases a pair (z, z-bar) from a minimally non-admissible
column word.
"""

from collections import deque
from dataclasses import dataclass

from .columns import Column, contract, is_admissible, strict_factors_admissible
from .crystal import Word, letter_key, same_position
from .errors import InvalidInput

FORWARD = "forward"
BACKWARD = "backward"


@dataclass(frozen=True)
class RewriteStep:
    rule: str  # R1a, R1b, R2a, R2b or R3
    direction: str
    position: int
    result: Word


def _lt(a, b):
    return letter_key(a) < letter_key(b)


def _le(a, b):
    return letter_key(a) <= letter_key(b)


def _r1a(y, z, x):
    return _le(x, y) and _lt(y, z) and z != -x


def _r1b(x, z, y):
    return _lt(x, y) and _le(y, z) and z != -x


def _r2_ok(x, y, n):
    return 1 < x <= n and _le(x, y) and _le(y, -x)


def forward_rewrites(a, b, c, n):
    """All forward R1/R2 rewrites of the window ``abc`` as (rule, new window)."""
    out = []
    if _r1a(a, b, c):
        out.append(("R1a", (a, c, b)))
    if _r1b(a, b, c):
        out.append(("R1b", (b, a, c)))
    if c > 0 and b == -c and _r2_ok(c + 1, a, n):
        out.append(("R2a", (a, c + 1, -(c + 1))))
    if a > 0 and b == -a and _r2_ok(a, c, n):
        out.append(("R2b", (-(a - 1), a - 1, c)))
    return out


def backward_rewrites(a, b, c, n):
    """All backward R1/R2 rewrites of the window ``abc``."""
    out = []
    # R1a right side y x z
    if _r1a(a, c, b):
        out.append(("R1a", (a, c, b)))
    # R1b right side z x y
    if _r1b(b, a, c):
        out.append(("R1b", (b, a, c)))
    # R2a right side y x x-bar
    if b > 0 and c == -b and _r2_ok(b, a, n):
        out.append(("R2a", (a, -(b - 1), b - 1)))
    # R2b right side (x-1)-bar (x-1) y
    if b > 0 and a == -b and _r2_ok(b + 1, c, n):
        out.append(("R2b", (b + 1, -(b + 1), c)))
    return out


def _increasing(letters):
    return all(_lt(a, b) for a, b in zip(letters, letters[1:]))


def contractible(letters, n):
    """True when ``letters`` is a non-admissible column word with admissible strict factors."""
    if not letters or not _increasing(letters):
        return False
    col = Column(n, tuple(letters))
    return not is_admissible(col) and strict_factors_admissible(col)


def _r3_steps(w):
    letters, n = w.letters, w.n
    out = []
    for i in range(len(letters)):
        j = i + 1
        while j <= len(letters) and _increasing(letters[i:j]):
            if contractible(letters[i:j], n):
                small = contract(Column(n, letters[i:j])).cells
                out.append(
                    RewriteStep("R3", FORWARD, i, Word._raw(n, letters[:i] + small + letters[j:]))
                )
            j += 1
    return out


def _r3_inverse_steps(w):
    letters, n = w.letters, w.n
    out = []
    seen = set()
    for i in range(len(letters) + 1):
        j = i
        while j <= len(letters) and _increasing(letters[i:j]):
            factor = letters[i:j]
            used = {abs(x) for x in factor}
            for z in range(1, n + 1):
                if z in used:
                    continue
                big = tuple(sorted(factor + (z, -z), key=letter_key))
                if contractible(big, n) and contract(Column(n, big)).cells == factor:
                    result = letters[:i] + big + letters[j:]
                    if (i, result) not in seen:
                        seen.add((i, result))
                        out.append(RewriteStep("R3", BACKWARD, i, Word._raw(n, result)))
            j += 1
    return out


def elementary_rewrites(w, include_r3_inverse=False):
    """Every single application of R1, R2 (both directions) and R3 to ``w``.

    Inverse R3 steps (inserting a pair) are only produced on request; there
    are many of them and they are meant for bounded searches in tests.
    """
    n = w.n
    letters = w.letters
    steps = []
    for k in range(len(letters) - 2):
        a, b, c = letters[k : k + 3]
        for direction, rules in (
            (FORWARD, forward_rewrites(a, b, c, n)),
            (BACKWARD, backward_rewrites(a, b, c, n)),
        ):
            for tag, window in rules:
                new = letters[:k] + window + letters[k + 3 :]
                steps.append(RewriteStep(tag, direction, k, Word._raw(n, new)))
    steps.extend(_r3_steps(w))
    if include_r3_inverse:
        steps.extend(_r3_inverse_steps(w))
    return steps


def congruent(w1, w2):
    """Plactic congruence, decided through the crystal relation ~."""
    if w1.n != w2.n:
        raise InvalidInput(f"rank mismatch: {w1.n} vs {w2.n}")
    return same_position(w1, w2)


def rewrite_search(source, target, max_depth, max_length=None, include_r3_inverse=False):
    """Breadth-first search for a chain of elementary rewrites.

    Returns the list of steps leading from ``source`` to ``target`` or
    ``None`` if none exists within ``max_depth`` steps.  ``max_length``
    bounds the words visited (useful with inverse R3).
    """
    if source == target:
        return []
    parent = {source: None}
    frontier = deque([(source, 0)])
    while frontier:
        w, depth = frontier.popleft()
        if depth == max_depth:
            continue
        for step in elementary_rewrites(w, include_r3_inverse):
            v = step.result
            if v in parent or (max_length is not None and len(v) > max_length):
                continue
            parent[v] = (w, step)
            if v == target:
                chain = []
                while parent[v] is not None:
                    v, st = parent[v]
                    chain.append(st)
                return chain[::-1]
            frontier.append((v, depth + 1))
    return None
