import random
from pathlib import Path

import pytest

from cleavedpa.diagram import (
    DiagramError,
    ParseError,
    PlanarDiagram,
    cap_diagram,
    compose,
    cup_diagram,
    cupcap_diagram,
    drop_trivial_boundary,
    find_violations,
    pairing_diagram,
    parse_diagram,
    radial_identity,
    serialize_diagram,
    validate,
)
from cleavedpa.sampling import random_planar_diagram

from randomcases import composable_pair, small_signature

DIAGRAMS = Path(__file__).resolve().parent.parent / "diagrams"


def test_arcs_are_canonical():
    a = PlanarDiagram((1,), [((0, 2), (0, 1))])
    b = PlanarDiagram((1,), [((0, 1), (0, 2))])
    assert a == b and hash(a) == hash(b)


def test_dangling_and_reused_points():
    P = PlanarDiagram((2,), [((0, 1), (0, 2)), ((0, 2), (0, 3))])
    problems = find_violations(P)
    assert any("0:4" in p for p in problems)
    assert any("0:2" in p for p in problems)
    with pytest.raises(DiagramError) as info:
        validate(P)
    assert len(info.value.violations) == len(problems)


def test_out_of_range_point():
    with pytest.raises(DiagramError):
        validate(PlanarDiagram((1,), [((0, 1), (0, 3))]))
    with pytest.raises(DiagramError):
        validate(PlanarDiagram((1,), [((0, 1), (2, 1))]))


def test_crossing_chords_fail_strict_only():
    P = parse_diagram((DIAGRAMS / "crossing.pd").read_text())
    assert not find_violations(P)
    assert find_violations(P, strict=True)


def test_arc_through_wrong_side_of_hole_is_not_planar():
    # points 1,3 and 2,4 on the same hole cross outside it
    P = PlanarDiagram((0, 2), [((1, 1), (1, 3)), ((1, 2), (1, 4))])
    assert find_violations(P, strict=True)


@pytest.mark.parametrize("seed", range(40))
def test_random_diagrams_are_strictly_planar(seed):
    rng = random.Random(seed)
    validate(random_planar_diagram(small_signature(rng), rng), strict=True)


def test_composites_stay_planar():
    rng = random.Random(11)
    for _ in range(200):
        R, i, T = composable_pair(rng)
        C = compose(R, i, T)
        assert C.signature == R.signature[:i] + T.signature[1:] + R.signature[i + 1 :]
        validate(C, strict=True)


def test_compose_counts_closed_circles():
    assert compose(cap_diagram(hole=True), 1, cup_diagram()) == cupcap_diagram(1, 1)
    closed = compose(PlanarDiagram((0, 1), [((1, 1), (1, 2))]), 1, cap_diagram())
    assert closed == PlanarDiagram((0,), (), 1)


def test_compose_signature_mismatch_names_both():
    with pytest.raises(DiagramError, match=r"\(1;1\).*\(2;2\)"):
        compose(radial_identity(1), 1, radial_identity(2))
    with pytest.raises(DiagramError):
        compose(radial_identity(1), 2, radial_identity(1))


def test_identity_is_neutral():
    rng = random.Random(5)
    for _ in range(30):
        P = random_planar_diagram(small_signature(rng, min_m=1), rng)
        i = rng.randint(1, P.m)
        assert compose(P, i, radial_identity(P.boundaries[i])) == P
        assert compose(radial_identity(P.boundaries[0]), 1, P) == P


def test_drop_trivial_boundary():
    P = PlanarDiagram((1, 0, 1), [((0, 1), (2, 1)), ((0, 2), (2, 2))])
    assert drop_trivial_boundary(P, 1) == radial_identity(1)
    with pytest.raises(DiagramError):
        drop_trivial_boundary(P, 2)


def test_standard_diagrams_are_valid():
    for P in (radial_identity(2), pairing_diagram(2), cap_diagram(), cup_diagram(), cupcap_diagram(2, 3)):
        validate(P, strict=True)
    with pytest.raises(DiagramError):
        cupcap_diagram(1, 2)


def test_text_round_trip():
    for path in DIAGRAMS.glob("*.pd"):
        P = parse_diagram(path.read_text())
        assert parse_diagram(serialize_diagram(P)) == P


@pytest.mark.parametrize(
    "text, line, column",
    [
        ("arc 0:1-0:2\n", 1, 1),
        ("boundaries 1\nblob 3\n", 2, 1),
        ("boundaries 1\narc 0:1-zz\n", 2, 9),
        ("boundaries 1\ncircles many\n", 2, 9),
        ("boundaries 1,x\n", 1, 12),
        ("boundaries 1\narc x0:1-0:2\n", 2, 5),
    ],
)
def test_parse_errors_carry_position(text, line, column):
    with pytest.raises(ParseError) as info:
        parse_diagram(text, source="f.pd")
    assert (info.value.line, info.value.column) == (line, column)
    assert str(info.value).startswith(f"f.pd:{line}:{column}:")


def test_comments_and_blank_lines():
    P = parse_diagram("# cap\n\nboundaries 1  # one pair\narc 0:1-0:2\n")
    assert P == cap_diagram()
