import random

import pytest

from cleavedpa.combinatorics import (
    Matching,
    catalan,
    enumerate_noncrossing,
    is_noncrossing,
    random_noncrossing,
    reflect,
    trace_cycles,
)


@pytest.mark.parametrize("n", range(6))
def test_counts_are_catalan(n):
    ms = enumerate_noncrossing(n)
    assert len(ms) == catalan(n) == len(set(ms))
    assert all(is_noncrossing(m.pairs()) for m in ms)


def test_catalan_values():
    assert [catalan(n) for n in range(7)] == [1, 1, 2, 5, 14, 42, 132]


def test_crossing_pairs_detected():
    assert not is_noncrossing([(1, 3), (2, 4)])
    assert is_noncrossing([(1, 4), (2, 3)])


def test_matching_round_trips():
    m = Matching.from_pairs([(1, 4), (2, 3)])
    assert m.partner(1) == 4 and m.partner(3) == 2
    assert Matching.parse(str(m)) == m


def test_identical_matchings_give_n_cycles():
    for m in enumerate_noncrossing(3):
        assert len(trace_cycles(m, m)) == 3


def test_reflect_is_involution():
    for m in enumerate_noncrossing(4):
        assert reflect(reflect(m)) == m
        assert is_noncrossing(reflect(m).pairs())


def test_random_noncrossing_covers_all():
    rng = random.Random(3)
    seen = {random_noncrossing(3, rng) for _ in range(300)}
    assert seen == set(enumerate_noncrossing(3))
