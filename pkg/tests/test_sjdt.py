import pytest

from cplactic import (
    CornerPolicy,
    InvalidInput,
    SkewTableau,
    p_symbol,
    rectify,
    rectify_all_orders,
    sjdt_elementary,
    sjdt_slide,
    two_column_slide,
)
from cplactic.columns import A1
from cplactic.crystal import same_position
from cplactic.sjdt import (
    SlideState,
    antidiagonal,
    check_a1_admissible,
    is_terminal,
    psi_two_column,
    puncture,
    run_slide,
    slide_reading,
    split_form_extended,
)
from cplactic.tableaux import PUNCTURE as S
from cplactic.tableaux import PuncturedSkewTableau, enumerate_skew_tableaux, inner_corners

from conftest import C, W


def state(n, cols, p):
    return SlideState(PuncturedSkewTableau(n, cols, p), p[0])


def cells(s):
    return [c for _, c in s.tableau.columns]


def worked_example():
    return SkewTableau.from_lists(5, [2, 1, 0], [[3, -5, -3], [2, 3, -4, -1], [2, 3, 4, -1]])


def test_horizontal_move_barred():
    s = sjdt_elementary(state(5, ((0, (2, 4, S, -3, -1)), (0, (4, 5, -4, -1))), (0, 2)))
    assert cells(s) == [(2, 5, -5, -3, -1), (4, 5, S, -1)]
    assert s.puncture == (1, 2)


def test_horizontal_move_unbarred():
    s = sjdt_elementary(state(5, ((0, (2, 3, S, -5, -1)), (0, (2, 3, 5, -5))), (0, 2)))
    assert cells(s) == [(2, 3, 4, -5, -1), (2, 3, S, -4)]


def test_horizontal_move_third_example():
    s = sjdt_elementary(state(5, ((0, (4, -5)), (0, (S, -4)), (0, (4, -3))), (1, 0)))
    assert cells(s) == [(4, -5), (4, -4), (S, -3)]


def test_vertical_move():
    s = sjdt_elementary(state(2, ((0, (S, 1)),), (0, 0)))
    assert cells(s) == [(1, S)] and is_terminal(s)


def test_worked_example_trace():
    t = worked_example()
    assert t.inner == (2, 1)
    trace = []
    final = run_slide(t, (0, 1), trace)
    assert [s.puncture for s in trace] == [(1, 0), (1, 1), (1, 2), (2, 2), (2, 3)]
    assert trace[3].tableau.columns[1] == (0, (2, 3, 4, -4, -1))
    # the a1-admissible tableau: a1 appears only in the starting column
    form = split_form_extended(final.tableau)
    assert form.columns[1][1] == (A1, 2, 3, -4, -1)
    assert all(A1 not in left for j, (_, left, _) in enumerate(form.columns) if j != 1)


def test_worked_example_result():
    out = sjdt_slide(worked_example(), (0, 1))
    assert [(o, c.cells) for o, c in out.columns] == [
        (2, (3, -5, -3)),
        (1, (2, 3, -1)),
        (0, (2, 3, -1)),
    ]
    assert same_position(worked_example().reading(), out.reading())


def test_worked_example_rectification_orders():
    t = worked_example()
    expected = p_symbol(t.reading())
    assert expected.as_lists() == [[2, 3, -5, -3], [2, 3, -1], [3, -1]]
    assert rectify_all_orders(t) == {expected}
    assert rectify(t) == rectify(t, CornerPolicy(reverse=True)) == expected


def test_corner_policy_order():
    t = worked_example()
    expected = rectify(t)
    # contractions enlarge the inner shape, so record a full sequence first
    order, s = [], t
    while inner_corners(s):
        order.append(max(inner_corners(s)))
        s = sjdt_slide(s, order[-1])
    assert len(order) > sum(t.inner)
    assert rectify(t, CornerPolicy(order=tuple(order))) == expected
    with pytest.raises(InvalidInput):
        rectify(t, CornerPolicy(order=((0, 0),)))


def test_invalid_corner():
    with pytest.raises(InvalidInput):
        puncture(worked_example(), (0, 0))


def test_straight_tableau_is_fixed():
    t = SkewTableau.from_lists(2, [0, 0], [[1, 2], [-2]])
    assert rectify(t).as_lists() == [[1, 2], [-2]]


def test_two_column_golden():
    out = two_column_slide(C("2 3 -5 -1", 5), C("2 3 5 -5", 5), 1)
    assert out.reading() == W("2 3 -4 2 3 4 -5 -1", 5)
    assert psi_two_column(W("2 3 5 -5 2 3 -5 -1", 5), 5, 4, 1) == out.reading()


def test_vertical_only_slide_keeps_reading_letters():
    t = SkewTableau.from_lists(2, [1, 0], [[1], [2]])
    out = sjdt_slide(t, (0, 0))
    assert [(o, c.cells) for o, c in out.columns] == [(0, (1,)), (0, (2,))]
    assert out.reading() == t.reading()


def test_slide_reading_helper():
    w = W("1 2", 2)
    assert slide_reading(w, (2, 1), (1,), (0, 0)) == sjdt_slide(
        SkewTableau.from_lists(2, [1, 0], [[2], [1]]), (0, 0)
    ).reading()


def test_antidiagonal_rectifies_to_p():
    for text in ["2 -1", "1 -2", "-1 2"]:
        w = W(text, 2)
        t = antidiagonal(w)
        assert t.reading() == w
        assert rectify(t) == p_symbol(w)


@pytest.mark.parametrize("outer,inner", [((2, 2), (1,)), ((3, 2, 1), (1,)), ((2, 2, 1), (1, 1))])
def test_slides_keep_invariants(outer, inner):
    for t in enumerate_skew_tableaux(2, outer, inner):
        for corner in inner_corners(t):
            trace = []
            run_slide(t, corner, trace)
            for s in trace:
                check_a1_admissible(s)
