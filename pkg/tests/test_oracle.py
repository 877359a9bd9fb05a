import pytest

from cplactic import InvalidInput, SymplecticTableau, p_symbol
from cplactic.columns import admissible_columns
from cplactic.crystal import Word
from cplactic.oracle import oracle_p_symbol, run_suite, suite_names, theta_map
from cplactic.oracle.suites import SuiteReport, minimize

from conftest import W


def test_oracle_on_tableau_reading():
    t = SymplecticTableau.from_lists(4, [[1, 4, -4, -3], [2, 4, -2], [3, -3, -1], [-1]])
    assert oracle_p_symbol(t.reading()) == t


def test_oracle_single_column():
    assert oracle_p_symbol(W("1 2 3", 3)).as_lists() == [[1, 2, 3]]


def test_oracle_agrees_on_examples():
    for text in ["3 5 -5 -4 -3 -2", "3 5 -5 -4 -3 3", "2 -1 1 -2 2"]:
        w = W(text, 5)
        assert oracle_p_symbol(w) == p_symbol(w)


def test_theta_golden():
    assert theta_map(W("1 4 -5 -4 -3", 5)) == W("-5 -3 -2 1 2", 5)


def test_theta_pair_free():
    assert theta_map(W("1 3 -2", 3)) == W("-2 1 3", 3)


def test_theta_rejects_non_column():
    with pytest.raises(InvalidInput):
        theta_map(W("2 1", 2))
    with pytest.raises(InvalidInput):
        theta_map(W("1 -1", 1))


def test_suite_names():
    assert {"p-differential", "confluence", "plactic", "rs", "two-column"} <= set(suite_names())


def test_unknown_suite():
    with pytest.raises(InvalidInput):
        run_suite("nope")


def test_p_differential_suite():
    report = run_suite("p-differential", n=2, max_len=5)
    assert report.ok and report.cases == sum(4**k for k in range(6))


def test_empty_word_set():
    report = run_suite("p-differential", n=2, min_len=3, max_len=2)
    assert report.cases == 0 and report.ok


def test_confluence_on_worked_example_shape():
    report = run_suite("confluence", n=5, shapes=[((5, 5, 4), (2, 1))], large_shapes=(), samples=10, cap=200)
    assert report.ok and report.cases == 10


def test_replay_determinism():
    a = run_suite("slide", n=2, samples=30, seed=4)
    b = run_suite("slide", n=2, samples=30, seed=4)
    assert a == b


def test_sharded_run_matches_serial():
    serial = run_suite("plactic", n=2, max_len=3)
    sharded = run_suite("plactic", n=2, max_len=3, workers=2)
    assert serial.cases == sharded.cases and serial.failures == sharded.failures


def test_merge_is_associative():
    r = [SuiteReport("x", {}, k, []) for k in (1, 2, 3)]
    assert r[0].merge(r[1]).merge(r[2]).cases == r[0].merge(r[1].merge(r[2])).cases == 6


def test_minimize_shrinks_word():
    def check(w, p):
        return "has a 2" if 2 in w.letters else None

    small = minimize(check, Word(3, (1, 3, 2, -1)), {"n": 3})
    assert small == Word(2, (2,))


def test_failures_are_reported():
    from cplactic.oracle import suites

    cases, _, defaults = suites.SUITES["theta"]
    suites.SUITES["broken"] = (cases, lambda c, p: "boom" if len(c) == 2 else None, defaults)
    try:
        report = run_suite("broken", n=2)
    finally:
        del suites.SUITES["broken"]
    assert not report.ok
    assert report.cases == sum(len(admissible_columns(2, h)) for h in range(3))
    assert all(f.counterexample.startswith("[n=") for f in report.failures)
    assert "FAIL" in report.summary()
