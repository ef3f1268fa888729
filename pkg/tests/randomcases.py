"""Seeded random inputs shared by the property tests."""

import random

from cleavedpa.diagram import DiagramError
from cleavedpa.sampling import random_planar_diagram, random_tangle
from cleavedpa.tangle import orient_strands


def small_signature(rng, max_n=3, max_m=3, budget=6, min_m=0):
    """Random signature with every n_i <= max_n and sum n_i <= budget."""
    while True:
        sig = tuple(rng.randint(0, max_n) for _ in range(rng.randint(min_m, max_m) + 1))
        if sum(sig) <= budget:
            return sig


def composable_pair(rng, max_n=3, budget=6):
    """(R, i, T) planar diagrams with n_0(T) = n_i(R)."""
    R = random_planar_diagram(small_signature(rng, max_n, 3, budget, min_m=1), rng)
    i = rng.randint(1, R.m)
    rest = small_signature(rng, max_n, 2, budget - R.boundaries[i])[1:]
    T = random_planar_diagram((R.boundaries[i],) + rest, rng)
    return R, i, T


def oriented_composable_pair(rng, max_crossings=2):
    """(R, i, T) oriented tangles whose glued strands agree in direction."""
    while True:
        T = random_tangle(small_signature(rng, 2, 1, 4), rng.randint(0, max_crossings), rng)
        outer_inner = small_signature(rng, 2, 1, 3)
        slot = rng.randint(1, len(outer_inner))
        sig = outer_inner[:slot] + (T.boundaries[0],) + outer_inner[slot:]
        R = random_tangle(sig, rng.randint(0, max_crossings), rng, oriented=False)
        fixed = {}
        for a, b in T.arcs:
            if a[0] == 0:
                fixed[(slot, a[1])] = "in"
            if b[0] == 0:
                fixed[(slot, b[1])] = "out"
        try:
            return orient_strands(R, fixed, rng), slot, T
        except DiagramError:
            continue

