"""Reference computations that avoid the insertion and sliding code paths.

Only the crystal operators, columns and tableaux are used here, so the
results can be compared against :mod:`cplactic.insertion` and
:mod:`cplactic.sjdt` without sharing their logic.
"""

from ..columns import Column, is_admissible, phi_map
from ..crystal import Word, highest_weight_lambda, replay, to_highest
from ..errors import InvalidInput, InvariantViolation
from ..tableaux import highest_weight_tableau, shape_from_weight, tableau_from_reading


def oracle_p_symbol(w):
    """P(w) via the unique isomorphism between B(w) and B(lambda)."""
    top, path = to_highest(w)
    lam = highest_weight_lambda(top)
    model = highest_weight_tableau(lam)
    image = replay(model.reading(), path)
    if image is None:
        raise InvariantViolation(f"raising path of {w} does not replay on the tableau crystal")
    try:
        return tableau_from_reading(image, shape_from_weight(lam))
    except InvalidInput as exc:
        raise InvariantViolation(f"{image} is not a tableau reading: {exc}") from None


def theta_map(w):
    """``u- v+`` where ``v+ u-`` is the reading of Phi(C), ``w = w(C)``."""
    try:
        col = Column(w.n, w.letters)
    except InvalidInput:
        raise InvalidInput(f"{w} is not a column word") from None
    if not is_admissible(col):
        raise InvalidInput(f"{w} is not an admissible column word")
    star = phi_map(col).cells
    plus = tuple(x for x in star if x > 0)
    minus = tuple(x for x in star if x < 0)
    return Word._raw(w.n, minus + plus)
