"""Random planar diagrams for property testing.

The surface is cut open along disjoint paths from the outer boundary to
each inner disc.  Reading the boundary of the resulting disc gives a word
of endpoints; any noncrossing matching of that word is a planar diagram.
"""

from __future__ import annotations

import random

from .combinatorics import random_noncrossing
from .diagram import PlanarDiagram

__all__ = [
    "boundary_word",
    "random_planar_diagram",
    "random_signature",
    "random_tangle",
    "random_closed_tangle",
]


def boundary_word(signature, rng: random.Random) -> list[tuple[int, int]]:
    """Endpoints of the cut-open surface in counterclockwise order."""
    n0, *inner = signature
    # gap g sits just before outer point g+1; gap 2n_0 wraps to the end
    gaps: dict[int, list[int]] = {}
    order = list(range(1, len(inner) + 1))
    rng.shuffle(order)
    for j in order:
        gaps.setdefault(rng.randint(0, 2 * n0), []).append(j)
    word = []
    for g in range(2 * n0 + 1):
        for j in gaps.get(g, ()):
            size = 2 * inner[j - 1]
            if size:
                h = rng.randint(1, size)
                word += [(j, (h - t - 1) % size + 1) for t in range(size)]
        if g < 2 * n0:
            word.append((0, g + 1))
    return word


def random_planar_diagram(signature, rng: random.Random, max_circles: int = 1) -> PlanarDiagram:
    signature = tuple(signature)
    if sum(signature) % 1:
        raise ValueError("bad signature")
    word = boundary_word(signature, rng)
    if len(word) % 2:
        raise ValueError("odd number of endpoints")
    m = random_noncrossing(len(word) // 2, rng)
    arcs = [(word[a - 1], word[b - 1]) for a, b in m.pairs()]
    return PlanarDiagram(signature, arcs, rng.randint(0, max_circles))


def random_signature(rng: random.Random, max_n: int = 3, max_m: int = 3, min_m: int = 0) -> tuple[int, ...]:
    return tuple(rng.randint(0, max_n) for _ in range(rng.randint(min_m, max_m) + 1))


def random_tangle(signature, crossings: int, rng: random.Random, oriented: bool = True, max_circles: int = 1):
    """Random tangle: a planar diagram with extra 4-point holes each filled by a crossing."""
    from .tangle import compose, crossing_disc, from_planar, orient_strands

    signature = tuple(signature)
    base = random_planar_diagram(signature + (2,) * crossings, rng, max_circles)
    T = from_planar(base)
    for slot in range(len(signature) + crossings - 1, len(signature) - 1, -1):
        T = compose(T, slot, crossing_disc(rng.choice(("02", "13")), rng.randrange(4)))
    return orient_strands(T, None, rng) if oriented else T


def random_closed_tangle(crossings: int, rng: random.Random, holes: int = 0, max_circles: int = 1):
    return random_tangle((0,) * (holes + 1), crossings, rng, True, max_circles)
