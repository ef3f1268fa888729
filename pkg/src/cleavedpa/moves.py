"""Local Reidemeister pairs and random embeddings of them."""

from __future__ import annotations

import random

from .braid import BraidWord, square_braid
from .diagram import DiagramError, port
from .sampling import random_tangle
from .tangle import (
    TangleDiagram,
    compose,
    find_tangle_violations,
    orient_strands,
    strands,
)

__all__ = ["r1_pairs", "r2_pairs", "r3_pairs", "local_pairs", "orient_pair", "embed_pair"]

STRAIGHT = TangleDiagram((1,), (), [((0, 1), (0, 2))])


def r1_pairs() -> list[tuple[TangleDiagram, TangleDiagram]]:
    """Every planar one-crossing kink on a (1) disc, paired with the straight arc."""
    out = []
    for over in ("02", "13"):
        for k in range(4):
            for j in ((k + 1) % 4, (k + 3) % 4):
                arcs = [((0, 1), port(0, k)), (port(0, (k + 2) % 4), port(0, j)), (port(0, (j + 2) % 4), (0, 2))]
                kink = TangleDiagram((1,), (over,), arcs)
                if not find_tangle_violations(kink, strict=True):
                    out.append((kink, STRAIGHT))
    return out


def _braid_pair(strands_: int, left: str, right: str):
    a = square_braid(BraidWord.parse(strands_, left)).unoriented()
    b = square_braid(BraidWord.parse(strands_, right)).unoriented()
    return a, b


def r2_pairs():
    return [_braid_pair(2, "s1 s1^-1", ""), _braid_pair(2, "s1^-1 s1", "")]


def r3_pairs():
    return [
        _braid_pair(3, "s1 s2 s1", "s2 s1 s2"),
        _braid_pair(3, "s1^-1 s2^-1 s1^-1", "s2^-1 s1^-1 s2^-1"),
        _braid_pair(3, "s1 s2 s1^-1", "s2^-1 s1 s2"),
    ]


def local_pairs(move: str):
    return {"R1": r1_pairs, "R2": r2_pairs, "R3": r3_pairs}[move]()


def orient_pair(left: TangleDiagram, right: TangleDiagram, rng: random.Random):
    """Orient both sides so that every boundary point has the same role on each."""
    fixed = {}
    for path in strands(left):
        a, b = path[0][0], path[-1][1]
        if rng.random() < 0.5:
            a, b = b, a
        fixed[a], fixed[b] = "out", "in"
    return orient_strands(left, fixed, rng), orient_strands(right, fixed, rng)


def _roles(T: TangleDiagram) -> dict:
    roles = {}
    for a, b in T.arcs:
        if not a[0] < 0:
            roles[a] = "out"
        if not b[0] < 0:
            roles[b] = "in"
    return roles


def embed_pair(left: TangleDiagram, right: TangleDiagram, rng: random.Random, outer_crossings: int = 2, attempts: int = 200):
    """Glue both sides of a local pair into the same random oriented outer tangle."""
    left, right = orient_pair(left, right, rng)
    k = left.boundaries[0]
    roles = _roles(left)
    for _ in range(attempts):
        others = [rng.randint(0, 2) for _ in range(rng.randint(0, 2))]
        slot = rng.randint(1, len(others) + 1)
        inner = others[: slot - 1] + [k] + others[slot - 1:]
        n0 = rng.randint(0, 2)
        outer = random_tangle((n0, *inner), rng.randint(0, outer_crossings), rng, oriented=False)
        # a strand leaving the local disc must arrive at the slot in R, and vice versa
        fixed = {(slot, p): ("in" if r == "out" else "out") for (_, p), r in roles.items()}
        try:
            outer = orient_strands(outer, fixed, rng)
        except DiagramError:
            continue
        return compose(outer, slot, left), compose(outer, slot, right)
    raise DiagramError("no compatible outer tangle found")
