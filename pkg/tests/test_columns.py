import pytest

from cplactic import A1, A1_BAR, InvalidInput
from cplactic.columns import (
    Column,
    admissible_columns,
    all_columns,
    contract,
    is_admissible,
    is_coadmissible,
    n_count,
    phi_inverse,
    phi_map,
    split,
    split_extended,
)

from conftest import C


def test_column_must_increase():
    with pytest.raises(InvalidInput):
        Column(3, (2, 1))
    with pytest.raises(InvalidInput):
        Column(3, (-1, -2))


def test_split_golden():
    sp = split(C("2 4 6 7 -7 -4 -2", 7))
    assert sp.pairs == (7, 4, 2)
    assert sp.replacements == (5, 3, 1)
    assert sp.left == (1, 3, 5, 6, -7, -4, -2)
    assert sp.right == (2, 4, 6, 7, -5, -3, -1)


def test_split_failure_golden():
    col = C("2 4 5 6 7 -7 -4 -2", 7)
    assert not is_admissible(col)
    with pytest.raises(InvalidInput):
        split(col)


def test_phi_golden():
    assert phi_map(C("1 4 -5 -4 -3", 5)) == C("1 2 -5 -3 -2", 5)
    assert split(C("1 4 -5 -4 -3", 5)).left == (1, 2, -5, -4, -3)


def test_phi_inverse_golden():
    assert phi_inverse(C("1 2 -2 -1", 4)) == C("3 4 -4 -3", 4)


def test_pair_free_column_is_fixed():
    col = C("1 3 -2", 3)
    assert split(col).left == split(col).right == col.cells
    assert phi_map(col) == col


def test_split_extended_golden():
    sp = split_extended(C("2 3 4 -4 -1", 4))
    assert sp.extended
    assert sp.left == (A1, 2, 3, -4, -1)
    assert sp.right == (2, 3, 4, -1, A1_BAR)


def test_split_extended_rejects_bad_factor():
    with pytest.raises(InvalidInput):
        split_extended(C("1 2 -2 -1", 2))


def test_contract_golden():
    assert contract(C("3 5 -5 -4 -3 -2", 5)) == C("3 -4 -3 -2", 5)


def test_contract_rejects_admissible():
    with pytest.raises(InvalidInput):
        contract(C("1 2", 2))


def test_n_count():
    col = C("1 3 -3 -1", 3)
    assert [n_count(col, m) for m in (1, 2, 3)] == [2, 2, 4]
    assert not is_admissible(col)


def test_coadmissible_examples():
    assert is_coadmissible(C("1 2 -5 -3 -2", 5))
    assert not is_coadmissible(C("3 4 -4 -3", 4))


def test_phi_inverse_rejects_non_coadmissible():
    with pytest.raises(InvalidInput):
        phi_inverse(C("3 4 -4 -3", 4))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_phi_is_a_height_preserving_bijection(n):
    for h in range(n + 1):
        adm = admissible_columns(n, h)
        coadm = [c for c in all_columns(n, h) if is_coadmissible(c)]
        images = {phi_map(c) for c in adm}
        assert images == set(coadm)
        assert all(phi_inverse(phi_map(c)) == c for c in adm)


# number of admissible columns of height h = dim of the h-th fundamental representation
@pytest.mark.parametrize(
    "n,counts", [(2, [1, 4, 5]), (3, [1, 6, 14, 14]), (4, [1, 8, 27, 48, 42])]
)
def test_admissible_counts(n, counts):
    assert [len(admissible_columns(n, h)) for h in range(n + 1)] == counts


def test_no_admissible_column_taller_than_n():
    assert all(not is_admissible(c) for c in all_columns(3, 4))

