from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from cleavedpa.ring import DELTA, ONE, Q, ZERO, HalfLaurent, divexact, eval_at, qpow

terms = st.dictionaries(st.integers(-8, 8), st.integers(-5, 5), max_size=5)
poly = terms.map(HalfLaurent)


@given(poly, poly, poly)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == ZERO
    assert a * ONE == a


@given(poly)
def test_pairs_round_trip(a):
    assert HalfLaurent.from_pairs(a.to_pairs()) == a
    assert all(c != 0 for _, c in a.to_pairs())


@given(poly, poly.filter(bool))
def test_divexact_inverts_multiplication(a, b):
    assert divexact(a * b, b) == a


def test_divexact_rejects_remainder():
    with pytest.raises(ValueError):
        divexact(ONE + Q, Q + qpow(6))


@given(poly, poly, st.sampled_from([Fraction(3, 2), Fraction(-2, 7)]))
def test_evaluation_is_a_homomorphism(a, b, s):
    assert eval_at(a * b, s) == eval_at(a, s) * eval_at(b, s)
    assert eval_at(a + b, s) == eval_at(a, s) + eval_at(b, s)


def test_half_exponents_and_delta():
    h = qpow(1)
    assert h * h == Q
    assert h * qpow(-1) == ONE
    assert DELTA == Q + Q.conjugate()
    assert DELTA.conjugate() == DELTA
    assert str(Q) == "q"
    assert Q ** -1 == qpow(-2)


def test_zero_is_falsy():
    assert not ZERO
    assert not HalfLaurent({3: 0})
    assert HalfLaurent(2) == ONE + ONE
