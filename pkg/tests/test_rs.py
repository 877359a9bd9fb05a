import itertools

import pytest

from cplactic import InvalidInput, RSPair, SymplecticTableau, Word, q_symbol, rs_inverse, rs_map
from cplactic.crystal import same_component
from cplactic.rs import (
    box_change,
    count_rs_pairs,
    highest_weight_word,
    oscillating_tableaux,
    validate_oscillating,
)

from conftest import W


def test_q_symbol_of_example():
    assert q_symbol(W("1 2 -1", 2)) == ((1,), (2,), (1,))


def test_roundtrip_small():
    for w in [W("", 2), W("1", 2), W("2 -1 1 -2", 2), W("3 -3 1", 3)]:
        assert rs_inverse(rs_map(w)) == w


def test_box_change():
    assert box_change((), (1,)) == 1
    assert box_change((2,), (2, 1)) == 1
    assert box_change((2,), (1,)) == -2
    assert box_change((1,), (1,)) is None


def test_highest_weight_word():
    assert highest_weight_word(((1,), (2,), (1,)), 2) == W("1 2 -2", 2)


def test_validate_oscillating():
    assert validate_oscillating(((1,), (2,), (2, 1)), 2)
    assert not validate_oscillating(((1,), (2,), (3,)), 2)
    assert not validate_oscillating(((2,),), 2)


def test_inverse_rejects_mismatched_shape():
    p = SymplecticTableau.from_lists(2, [[1]])
    with pytest.raises(InvalidInput):
        rs_inverse(RSPair(p, ((1,), (2,))))


def test_inverse_rejects_non_oscillating():
    p = SymplecticTableau.from_lists(2, [[1, 2]])
    with pytest.raises(InvalidInput):
        rs_inverse(RSPair(p, ((2,),)))


# (2n)^l words of length l are in bijection with pairs (P, Q)
@pytest.mark.parametrize("n,length", [(1, 3), (2, 3), (2, 4), (3, 3)])
def test_pair_count(n, length):
    assert count_rs_pairs(n, length) == (2 * n) ** length


def test_oscillating_count():
    assert len(oscillating_tableaux(1, 2)) == 2  # (1),(1,1) and (1),()


def test_q_constant_on_components_n2_len3():
    letters = [1, 2, -2, -1]
    words = [Word(2, w) for w in itertools.product(letters, repeat=3)]
    by_q = {}
    for w in words:
        by_q.setdefault(q_symbol(w), []).append(w)
    for group in by_q.values():
        assert all(same_component(group[0], w) for w in group)
