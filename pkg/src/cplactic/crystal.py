"""Words over the type C_n alphabet and Kashiwara's crystal operators on them.

Letters are signed integers: ``k`` is the unbarred letter k and ``-k`` its
barred partner.  The alphabet order is ``1 < 2 < ... < n < -n < ... < -1``,
which is *not* integer order; always compare through :func:`letter_key`.
"""

from collections import deque
from dataclasses import dataclass, field

from . import kernel
from .errors import ComponentOverflow, InvalidInput

_BAR_BASE = 1 << 20


def letter_key(x):
    """Sort key realising the order 1 < ... < n < n-bar < ... < 1-bar."""
    return x if x > 0 else _BAR_BASE + x


def is_barred(x):
    return x < 0


def bar(x):
    return -x


def format_letter(x, unicode=False):
    if unicode and x < 0:
        return f"{-x}̄"
    return str(x)


def check_letter(x, n):
    if not isinstance(x, int) or isinstance(x, bool) or x == 0 or abs(x) > n:
        raise InvalidInput(f"letter {x!r} is not in the alphabet C_{n}")


@dataclass(frozen=True)
class Word:
    """A finite word over C_n; the rank travels with the word."""

    n: int
    letters: tuple = field(default=())

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise InvalidInput(f"rank must be a positive integer, got {self.n!r}")
        letters = tuple(self.letters)
        for x in letters:
            check_letter(x, self.n)
        object.__setattr__(self, "letters", letters)

    @classmethod
    def _raw(cls, n, letters):
        # trusted constructor for kernel output
        w = object.__new__(cls)
        object.__setattr__(w, "n", n)
        object.__setattr__(w, "letters", letters)
        return w

    @classmethod
    def parse(cls, text, n):
        """Parse whitespace-separated signed integers, e.g. ``"1 2 -1"``."""
        try:
            letters = tuple(int(tok) for tok in text.split())
        except ValueError as exc:
            raise InvalidInput(f"cannot parse word {text!r}: {exc}") from None
        return cls(n, letters)

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, item):
        if isinstance(item, slice):
            return Word._raw(self.n, self.letters[item])
        return self.letters[item]

    def __add__(self, other):
        if not isinstance(other, Word):
            return NotImplemented
        _same_rank(self, other)
        return Word._raw(self.n, self.letters + other.letters)

    def __str__(self):
        return " ".join(str(x) for x in self.letters)

    def pretty(self, unicode=False):
        return " ".join(format_letter(x, unicode) for x in self.letters)


def _same_rank(w1, w2):
    if w1.n != w2.n:
        raise InvalidInput(f"rank mismatch: {w1.n} vs {w2.n}")


def _check_color(w, i):
    if not 1 <= i <= w.n:
        raise InvalidInput(f"colour {i} outside 1..{w.n}")


def signature(w, i):
    """Reduced i-signature of ``w`` as a list of ``(sign, position)`` pairs.

    The list reads ``-...-+...+`` after all adjacent ``+-`` factors have
    been cancelled; positions index into ``w``.
    """
    _check_color(w, i)
    minus, plus = kernel.reduced_signature(w.letters, w.n, i)
    return [("-", p) for p in minus] + [("+", p) for p in plus]


def f_op(w, i):
    """Kashiwara lowering operator; ``None`` when it annihilates ``w``."""
    _check_color(w, i)
    out = kernel.apply_f(w.letters, w.n, i)
    return None if out is None else Word._raw(w.n, out)


def e_op(w, i):
    """Kashiwara raising operator; ``None`` when it annihilates ``w``."""
    _check_color(w, i)
    out = kernel.apply_e(w.letters, w.n, i)
    return None if out is None else Word._raw(w.n, out)


def epsilon(w, i):
    _check_color(w, i)
    return kernel.eps_phi(w.letters, w.n, i)[0]


def phi_coeff(w, i):
    _check_color(w, i)
    return kernel.eps_phi(w.letters, w.n, i)[1]


def weight(w):
    """``d(w)``: for each i, the number of letters i minus the number of i-bar."""
    d = [0] * w.n
    for x in w.letters:
        d[abs(x) - 1] += 1 if x > 0 else -1
    return tuple(d)


def is_highest_weight(w):
    return all(kernel.eps_phi(w.letters, w.n, i)[0] == 0 for i in range(1, w.n + 1))


def to_highest(w):
    """Canonical raising: always use the smallest colour with epsilon > 0.

    Returns ``(w0, path)``; lowering ``w0`` by ``f_c`` for ``c`` in
    ``reversed(path)`` gives back ``w``.
    """
    top, path = kernel.raise_to_highest(w.letters, w.n)
    return Word._raw(w.n, top), path


def replay(w0, path):
    """Lower ``w0`` along a raising path recorded by :func:`to_highest`."""
    out = kernel.lower_along(w0.letters, w0.n, tuple(reversed(path)))
    return None if out is None else Word._raw(w0.n, out)


def highest_weight_lambda(w0):
    """Coordinates of ``wt(w0)`` on the fundamental weights."""
    if not is_highest_weight(w0):
        raise InvalidInput(f"{w0} is not a highest weight vertex")
    d = weight(w0)
    lam = tuple(d[i] - d[i + 1] for i in range(w0.n - 1)) + (d[-1],)
    if any(c < 0 for c in lam):
        raise InvalidInput(f"highest weight {lam} of {w0} is not dominant")
    return lam


def same_position(w1, w2):
    """The relation ~ : same place in two isomorphic components."""
    _same_rank(w1, w2)
    top1, path = to_highest(w1)
    top2, _ = to_highest(w2)
    if weight(top1) != weight(top2):
        return False
    return replay(top2, path) == w2


def same_component(w1, w2):
    """The coplactic relation: ``w1`` and ``w2`` share a connected component."""
    _same_rank(w1, w2)
    return to_highest(w1)[0] == to_highest(w2)[0]


@dataclass
class Component:
    """A connected component of the crystal graph, in BFS discovery order."""

    n: int
    vertices: list
    edges: list  # (source, colour, target)

    @property
    def top(self):
        return self.vertices[0]

    def to_dot(self, unicode=False):
        index = {v: k for k, v in enumerate(self.vertices)}
        lines = ["digraph crystal {"]
        for k, v in enumerate(self.vertices):
            lines.append(f'  v{k} [label="{v.pretty(unicode)}"];')
        for src, color, dst in self.edges:
            lines.append(f'  v{index[src]} -> v{index[dst]} [label="{color}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


DEFAULT_COMPONENT_CAP = 200_000


def enumerate_component(w, cap=DEFAULT_COMPONENT_CAP):
    """Breadth-first closure of ``B(w)`` under the lowering operators.

    Starts from the highest weight vertex and tries colours in ascending
    order, so vertex and edge order are deterministic.
    """
    n = w.n
    top, _ = kernel.raise_to_highest(w.letters, n)
    seen = {top: 0}
    order = [top]
    edges = []
    queue = deque([top])
    while queue:
        v = queue.popleft()
        for i in range(1, n + 1):
            u = kernel.apply_f(v, n, i)
            if u is None:
                continue
            if u not in seen:
                if len(order) >= cap:
                    raise ComponentOverflow(f"component of {w} exceeds {cap} vertices")
                seen[u] = len(order)
                order.append(u)
                queue.append(u)
            edges.append((v, i, u))
    words = {v: Word._raw(n, v) for v in order}
    return Component(
        n,
        [words[v] for v in order],
        [(words[a], i, words[b]) for a, i, b in edges],
    )
