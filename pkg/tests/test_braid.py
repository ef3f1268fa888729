import random

import pytest

from cleavedpa.braid import (
    BraidWord,
    braid_closure,
    braid_layers,
    braid_rep,
    braid_to_tangle,
    check_conventions,
    random_word,
    square_braid,
)
from cleavedpa.diagram import DiagramError
from cleavedpa.partition import partition_map
from cleavedpa.diagram import radial_identity
from cleavedpa.ring import qpow
from cleavedpa.tangle import crossing_signs, jones_closed, kauffman_oracle, validate_tangle


def test_parse_and_print():
    w = BraidWord.parse(3, "s1 s2^-1 s1^3")
    assert w.letters == ((1, 1), (2, -1), (1, 1), (1, 1), (1, 1))
    assert str(BraidWord.parse(3, str(w))) == str(w)
    assert str(BraidWord(2)) == "e"
    assert BraidWord.parse(2, "s1^-2").letters == ((1, -1), (1, -1))
    with pytest.raises(ValueError):
        BraidWord.parse(2, "s2")
    with pytest.raises(ValueError):
        BraidWord.parse(2, "t1")


def test_layers_run_right_to_left():
    w = BraidWord.parse(3, "s1 s2^-1")
    assert braid_layers(w) == [(2, -1), (1, 1)]


def test_odd_strands_refused_in_annulus():
    with pytest.raises(DiagramError, match="even"):
        braid_to_tangle(BraidWord(3))


def test_conventions_hold():
    check_conventions()


def test_signs_follow_letters():
    w = BraidWord.parse(4, "s1 s2^-1 s3 s3")
    assert crossing_signs(braid_to_tangle(w)) == (3, 1)


def test_identity_braid_is_identity():
    assert braid_rep(BraidWord(4)) == partition_map(radial_identity(2))


def test_representation_is_multiplicative():
    rng = random.Random(41)
    for _ in range(8):
        u, v = random_word(4, rng.randint(0, 2), rng), random_word(4, rng.randint(0, 2), rng)
        assert braid_rep(u * v) == braid_rep(u) @ braid_rep(v)


def test_inverse_gives_identity():
    rng = random.Random(42)
    ident = braid_rep(BraidWord(4))
    for _ in range(4):
        w = random_word(4, 2, rng)
        assert braid_rep(w) @ braid_rep(w.inverse()) == ident


@pytest.mark.parametrize(
    "left, right",
    [("s1 s2 s1", "s2 s1 s2"), ("s1 s3", "s3 s1"), ("s2^-1 s3 s2", "s3 s2 s3^-1")],
)
def test_braid_relations_on_I4(left, right):
    assert braid_rep(BraidWord.parse(4, left)) == braid_rep(BraidWord.parse(4, right))


def test_square_braid_is_planar():
    rng = random.Random(43)
    for k in (2, 3, 4):
        validate_tangle(square_braid(random_word(k, 3, rng)), strict=True)


def test_closures():
    trefoil = braid_closure(BraidWord.parse(2, "s1^3"))
    assert trefoil.boundaries == (0,)
    assert jones_closed(trefoil) == qpow(2) + qpow(6) + qpow(10) - qpow(18)
    mirror_trefoil = braid_closure(BraidWord.parse(2, "s1^-3"))
    assert jones_closed(mirror_trefoil) == jones_closed(trefoil).conjugate()
    fig8 = braid_closure(BraidWord.parse(3, "s1 s2^-1 s1 s2^-1"))
    assert jones_closed(fig8) == qpow(10) + qpow(-10)


def test_markov_stabilisation_preserves_jones():
    rng = random.Random(44)
    for _ in range(5):
        w = random_word(3, rng.randint(1, 3), rng)
        base = jones_closed(braid_closure(w))
        wider = BraidWord(4, w.letters + ((3, rng.choice((1, -1))),))
        assert jones_closed(braid_closure(wider)) == base == kauffman_oracle(braid_closure(w))
