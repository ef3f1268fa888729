"""Noncrossing perfect matchings on cyclically ordered points."""

from __future__ import annotations

import random
from functools import lru_cache
from math import comb
from typing import Iterable

__all__ = [
    "Matching",
    "catalan",
    "enumerate_noncrossing",
    "is_noncrossing",
    "trace_cycles",
    "random_noncrossing",
    "reflect",
]


class Matching(tuple):
    """A perfect matching of the points ``1..2n``.

    Stored as the tuple of partners: ``m[k - 1]`` is the partner of ``k``.
    Tuple order is therefore lexicographic by partner-of-1, partner-of-2, ...
    """

    __slots__ = ()

    def __new__(cls, partners: Iterable[int] = ()):
        return super().__new__(cls, partners)

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]], n: int | None = None) -> "Matching":
        pairs = [tuple(p) for p in pairs]
        size = 2 * n if n is not None else 2 * len(pairs)
        partner = [0] * size
        for a, b in pairs:
            if not (1 <= a <= size and 1 <= b <= size) or a == b:
                raise ValueError(f"bad pair {a}-{b} for {size} points")
            if partner[a - 1] or partner[b - 1]:
                raise ValueError(f"point reused in pair {a}-{b}")
            partner[a - 1] = b
            partner[b - 1] = a
        if not all(partner):
            raise ValueError("matching does not cover every point")
        return cls(partner)

    @classmethod
    def parse(cls, text: str) -> "Matching":
        """Parse the text form ``"1-4,2-3"``; the empty string is the empty matching."""
        text = text.strip()
        if not text:
            return cls()
        pairs = []
        for chunk in text.split(","):
            a, _, b = chunk.partition("-")
            pairs.append((int(a), int(b)))
        return cls.from_pairs(pairs)

    @property
    def n(self) -> int:
        return len(self) // 2

    def partner(self, k: int) -> int:
        return self[k - 1]

    def pairs(self) -> list[tuple[int, int]]:
        return [(k, p) for k, p in enumerate(self, 1) if k < p]

    def __str__(self) -> str:
        return ",".join(f"{a}-{b}" for a, b in self.pairs())

    def __repr__(self) -> str:
        return f"Matching({str(self)!r})"


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def is_noncrossing(pairs) -> bool:
    """True iff no two pairs interleave around the circle."""
    if isinstance(pairs, Matching):
        pairs = pairs.pairs()
    spans = [tuple(sorted(p)) for p in pairs]
    for i, (a, b) in enumerate(spans):
        for c, d in spans[i + 1:]:
            if (a < c < b) != (a < d < b):
                return False
    return True


@lru_cache(maxsize=None)
def _noncrossing_pair_lists(lo: int, hi: int) -> tuple[tuple[tuple[int, int], ...], ...]:
    # all noncrossing matchings of the interval lo..hi as pair tuples
    if lo > hi:
        return ((),)
    out = []
    for mate in range(lo + 1, hi + 1, 2):
        for inner in _noncrossing_pair_lists(lo + 1, mate - 1):
            for outer in _noncrossing_pair_lists(mate + 1, hi):
                out.append(((lo, mate),) + inner + outer)
    return tuple(out)


@lru_cache(maxsize=None)
def enumerate_noncrossing(n: int) -> tuple[Matching, ...]:
    """All Catalan(n) noncrossing matchings of ``1..2n`` in tuple order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    found = [Matching.from_pairs(pairs, n) for pairs in _noncrossing_pair_lists(1, 2 * n)]
    return tuple(sorted(found))


def trace_cycles(inside: Matching, outside: Matching) -> tuple[tuple[int, ...], ...]:
    """Components of the union of two matchings.

    Each cycle starts at its smallest point and first steps along the
    inside matching; cycles are listed by ascending smallest point.
    """
    if len(inside) != len(outside):
        raise ValueError("matchings have different sizes")
    seen = set()
    cycles = []
    for start in range(1, len(inside) + 1):
        if start in seen:
            continue
        cycle = []
        k = start
        while True:
            j = inside[k - 1]
            cycle.extend((k, j))
            seen.update((k, j))
            k = outside[j - 1]
            if k == start:
                break
        cycles.append(tuple(cycle))
    return tuple(cycles)


def reflect(m: Matching) -> Matching:
    """Relabel point ``k`` as ``2n + 1 - k``."""
    size = len(m)
    return Matching(size + 1 - m[size - k] for k in range(1, size + 1))


def random_noncrossing(n: int, rng: random.Random) -> Matching:
    """Uniform random noncrossing matching via the cycle lemma on a shuffled word."""
    steps = [1] * n + [-1] * (n + 1)
    rng.shuffle(steps)
    # rotate to start just after the first minimum of the partial sums
    level, low, cut = 0, 1, 0
    for i, s in enumerate(steps):
        level += s
        if level < low:
            low, cut = level, i + 1
    word = (steps[cut:] + steps[:cut])[:-1]
    partner = [0] * (2 * n)
    stack = []
    for k, s in enumerate(word, 1):
        if s == 1:
            stack.append(k)
        else:
            a = stack.pop()
            partner[a - 1] = k
            partner[k - 1] = a
    return Matching(partner)
