import time

import pytest
from hypothesis import given
from hypothesis import strategies as st

from acyclic_coloring import constructions as C
from acyclic_coloring.bounds import (
    RULE_BASELINE,
    RULE_COUNTING,
    RULE_DEGENERATE,
    BoundError,
    counting_lower_bound,
    graph_lower_bound,
    robust_counting_check,
    theorem3_bound,
    theorem3_report,
)
from acyclic_coloring.graph import Graph


def test_counting_examples():
    r = counting_lower_bound(5, 3)
    assert (r.bound, r.rule, r.lhs, r.rhs) == (7, RULE_COUNTING, 13, 15)
    r = counting_lower_bound(3, 2)
    assert (r.bound, r.lhs, r.rhs) == (5, 5, 6)
    r = counting_lower_bound(3, 3)
    assert (r.bound, r.rule) == (4, RULE_BASELINE)
    assert not r.holds


def test_counting_degenerate_and_infeasible():
    assert counting_lower_bound(1, 1).bound == 1
    assert counting_lower_bound(1, 5).rule == RULE_DEGENERATE
    assert counting_lower_bound(2, 3).bound == 3
    with pytest.raises(BoundError):
        counting_lower_bound(4, 2)
    with pytest.raises(BoundError):
        counting_lower_bound(0, 2)


def test_robust_examples():
    t0 = time.perf_counter()
    ok1, r1 = robust_counting_check(5, 3, 1)
    ok2, r2 = robust_counting_check(5, 3, 2)
    assert time.perf_counter() - t0 < 1e-3
    assert ok1 and (r1.lhs, r1.rhs, r1.bound) == (14, 15, 7)
    assert not ok2 and (r2.lhs, r2.rhs) == (15, 15)
    ok, r = robust_counting_check(6, 4, 1)
    assert ok and (r.lhs, r.rhs) == (23, 24)
    with pytest.raises(BoundError):
        robust_counting_check(3, 3, 0)


@given(st.integers(2, 60), st.integers(1, 59), st.integers(0, 100))
def test_robust_simplification(d, m, x):
    if not d > m:
        return
    ok, r = robust_counting_check(d, m, x)
    assert ok == (m + d * (m - 1) + x < d * m) == (m + x < d)
    assert r.recheck()


@given(st.integers(2, 60), st.integers(1, 59))
def test_robust_zero_is_regime(d, m):
    if d > m:
        assert robust_counting_check(d, m, 0)[0]


@given(st.integers(1, 60), st.integers(1, 40))
def test_certificates_recheck(d, m):
    if d >= 2 * m:
        return
    r = counting_lower_bound(d, m)
    assert r.recheck()
    assert r.bound <= d + 2
    r.holds = not r.holds
    assert not r.recheck()


def test_theorem3():
    assert theorem3_bound(3) == 5
    assert theorem3_bound(1) == 1
    assert theorem3_bound(4) == 5
    assert "even" in theorem3_report(4).note
    assert theorem3_bound(7) == 9


def test_graph_lower_bound():
    assert graph_lower_bound(C.complete_graph(6)).bound == 7
    assert graph_lower_bound(C.cocktail_party_graph(8)).bound == 8
    with pytest.raises(BoundError):
        graph_lower_bound(Graph.from_edges(3, [(0, 1), (1, 2)]))
    with pytest.raises(BoundError):
        graph_lower_bound(C.cycle_graph(5))


def test_json_shape():
    assert counting_lower_bound(5, 3).to_json() == {"bound": 7, "rule": "counting", "lhs": 13, "rhs": 15}
