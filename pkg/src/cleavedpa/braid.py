"""Braids as annular tangles and their representations on I_{2n}.

A braid is drawn going down the page.  Letter ``(j, +1)`` crosses the
strands in positions ``j`` and ``j + 1`` with a positive (right-handed)
crossing.  Words compose like matrices: the rightmost letter is the top
layer, so ``braid_rep(u * v) == braid_rep(u) @ braid_rep(v)``.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass

from .diagram import DiagramError, port
from .partition import PartitionMatrix
from .tangle import TangleDiagram, compose, partition_tangle

__all__ = [
    "BraidWord",
    "braid_layers",
    "braid_to_tangle",
    "square_braid",
    "braid_closure",
    "braid_rep",
    "random_word",
    "check_conventions",
]

_LETTER = re.compile(r"s(\d+)(?:\^(-?\d+))?$")


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple((int(j), int(s)) for j, s in self.letters))
        for j, s in self.letters:
            if not 1 <= j < self.strands:
                raise ValueError(f"generator s{j} needs at least {j + 1} strands")
            if s not in (1, -1):
                raise ValueError("letter signs are +1 or -1")

    @classmethod
    def parse(cls, strands: int, text: str) -> "BraidWord":
        """Parse ``"s1 s2^-1 s1^3"``; whitespace or commas separate letters."""
        letters = []
        for tok in re.split(r"[\s,]+", text.strip()):
            if not tok or tok in ("e", "1"):
                continue
            m = _LETTER.match(tok)
            if not m:
                raise ValueError(f"bad braid letter {tok!r}")
            power = int(m.group(2) or 1)
            if power == 0:
                continue
            sign = 1 if power > 0 else -1
            letters += [(int(m.group(1)), sign)] * abs(power)
        return cls(strands, tuple(letters))

    def inverse(self) -> "BraidWord":
        return BraidWord(self.strands, tuple((j, -s) for j, s in reversed(self.letters)))

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if self.strands != other.strands:
            raise ValueError("strand counts differ")
        return BraidWord(self.strands, self.letters + other.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        if not self.letters:
            return "e"
        return " ".join(f"s{j}" if s > 0 else f"s{j}^-1" for j, s in self.letters)


def braid_layers(w: BraidWord) -> list[tuple[int, int]]:
    """Letters from the top of the picture to the bottom."""
    return list(reversed(w.letters))


def _stack(w: BraidWord, top, bottom, boundaries) -> TangleDiagram:
    # top(k) / bottom(k): endpoint of strand position k at the upper / lower edge.
    # Crossing ports: NE=0, NW=1, SW=2, SE=3; all strands run downward.
    cur = {k: top(k) for k in range(1, w.strands + 1)}
    arcs, crossings = [], []
    for c, (j, sign) in enumerate(braid_layers(w)):
        crossings.append("02" if sign > 0 else "13")
        arcs.append((cur[j], port(c, 1)))
        arcs.append((cur[j + 1], port(c, 0)))
        cur[j], cur[j + 1] = port(c, 2), port(c, 3)
    arcs += [(cur[k], bottom(k)) for k in cur]
    return TangleDiagram(boundaries, tuple(crossings), arcs, 0, True)


def braid_to_tangle(w: BraidWord) -> TangleDiagram:
    """Annular tangle of signature (n; n); the inner boundary is the top edge."""
    if w.strands % 2:
        raise DiagramError(f"annular braids need an even number of strands, got {w.strands}")
    n = w.strands // 2
    return _stack(w, lambda k: (1, k), lambda k: (0, k), (n, n))


def square_braid(w: BraidWord) -> TangleDiagram:
    """The braid in a disc of signature (k) for k strands.

    Bottom position j is boundary point j and top position j is point
    2k + 1 - j, so the points run counterclockwise from the bottom left.
    """
    k = w.strands
    return _stack(w, lambda j: (0, 2 * k + 1 - j), lambda j: (0, j), (k,))


def braid_closure(w: BraidWord) -> TangleDiagram:
    """Closed oriented diagram: each bottom end is joined around the right to its top end."""
    k = w.strands
    cap = TangleDiagram((0, k), (), [((1, j), (1, 2 * k + 1 - j)) for j in range(1, k + 1)], 0, True)
    return compose(cap, 1, square_braid(w))


def braid_rep(w: BraidWord, workers: int | None = None) -> PartitionMatrix:
    return partition_tangle(braid_to_tangle(w), workers)


def random_word(strands: int, length: int, rng: random.Random) -> BraidWord:
    return BraidWord(
        strands, tuple((rng.randint(1, strands - 1), rng.choice((1, -1))) for _ in range(length))
    )


def check_conventions() -> None:
    """Fail loudly if the smoothing and sign conventions drift.

    The 0-resolution of the positive generator of B_2 must be the identity
    braid, its 1-resolution the cup-cap diagram, and its sign positive.
    """
    from .diagram import cupcap_diagram, radial_identity
    from .tangle import crossing_signs, resolve

    T = braid_to_tangle(BraidWord(2, ((1, 1),)))
    if resolve(T, (0,)) != radial_identity(1) or resolve(T, (1,)) != cupcap_diagram(1, 1):
        raise AssertionError("smoothing convention broken: sigma does not resolve to identity / cup-cap")
    if crossing_signs(T) != (1, 0):
        raise AssertionError("crossing sign convention broken: sigma is not positive")
