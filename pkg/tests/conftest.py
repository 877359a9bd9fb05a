import pytest

from cplactic import Word
from cplactic.columns import Column


def W(text, n):
    return Word.parse(text, n)


def C(text, n):
    return Column(n, Word.parse(text, n).letters)


def weyl_dimension(shape, n):
    """dim V(lambda) for sp(2n), lambda given by column heights (Weyl's formula)."""
    rows = [sum(1 for h in shape if h > i) for i in range(n)]
    rho = [n - i for i in range(n)]
    lam = [r + p for r, p in zip(rows, rho)]
    num = den = 1
    for i in range(n):
        num *= lam[i]
        den *= rho[i]
        for j in range(i + 1, n):
            num *= (lam[i] - lam[j]) * (lam[i] + lam[j])
            den *= (rho[i] - rho[j]) * (rho[i] + rho[j])
    assert num % den == 0
    return num // den


@pytest.fixture
def word():
    return W
