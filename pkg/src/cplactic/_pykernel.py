"""Pure-Python crystal kernel on words encoded as tuples of signed integers.

Letter ``k`` is the unbarred letter k, ``-k`` is the barred letter.  Every
function takes the rank ``n`` explicitly.  This module is the reference
implementation; ``_ckernel`` must agree with it bit for bit.
"""


def _sign(x, n, i):
    # +1 for a "+" letter of colour i, -1 for a "-" letter, 0 otherwise
    if i == n:
        if x == n:
            return 1
        if x == -n:
            return -1
        return 0
    if x == i or x == -(i + 1):
        return 1
    if x == i + 1 or x == -i:
        return -1
    return 0


def reduced_signature(letters, n, i):
    """Return ``(minus, plus)``: positions of the uncancelled signs.

    The reduced word is ``-`` at every position of ``minus`` followed by
    ``+`` at every position of ``plus``, both in left-to-right order.
    """
    minus = []
    plus = []
    for pos, x in enumerate(letters):
        s = _sign(x, n, i)
        if s > 0:
            plus.append(pos)
        elif s < 0:
            if plus:
                plus.pop()
            else:
                minus.append(pos)
    return minus, plus


def eps_phi(letters, n, i):
    minus, plus = reduced_signature(letters, n, i)
    return len(minus), len(plus)


def _lower_letter(x, n, i):
    if i == n:
        return -n
    return i + 1 if x == i else -i


def _raise_letter(x, n, i):
    if i == n:
        return n
    return i if x == i + 1 else -(i + 1)


def apply_f(letters, n, i):
    _, plus = reduced_signature(letters, n, i)
    if not plus:
        return None
    pos = plus[0]
    out = list(letters)
    out[pos] = _lower_letter(out[pos], n, i)
    return tuple(out)


def apply_e(letters, n, i):
    minus, _ = reduced_signature(letters, n, i)
    if not minus:
        return None
    pos = minus[-1]
    out = list(letters)
    out[pos] = _raise_letter(out[pos], n, i)
    return tuple(out)


def raise_to_highest(letters, n):
    """Raise with the smallest colour having epsilon > 0 until none remains.

    Returns the highest weight word and the colours applied, in order.
    """
    word = tuple(letters)
    path = []
    while True:
        for i in range(1, n + 1):
            up = apply_e(word, n, i)
            if up is not None:
                word = up
                path.append(i)
                break
        else:
            return word, tuple(path)


def lower_along(letters, n, colors):
    """Apply ``f_c`` for each colour of ``colors`` in order; None if one fails."""
    word = tuple(letters)
    for c in colors:
        word = apply_f(word, n, c)
        if word is None:
            return None
    return word
