"""Cleaved links: the basis of the modules I_{2n}."""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from typing import NamedTuple

from .combinatorics import Matching, enumerate_noncrossing, reflect, trace_cycles

__all__ = [
    "CleavedLink",
    "make_cleaved",
    "enumerate_cleaved",
    "basis_index",
    "dimension",
    "conjugate_link",
    "dual_link",
    "label",
    "from_label",
    "NAMED_ORDER_N2",
    "named_basis",
    "format_link",
]

_FLIP = str.maketrans("+-", "-+")


class CleavedLink(NamedTuple):
    """(inside matching, outside matching, one sign per circle).

    ``decorations`` is a string over ``"+-"`` whose k-th character
    decorates the k-th cycle of ``trace_cycles(inside, outside)``.
    """

    inside: Matching
    outside: Matching
    decorations: str

    @property
    def n(self) -> int:
        return self.inside.n

    def cycles(self) -> tuple[tuple[int, ...], ...]:
        return trace_cycles(self.inside, self.outside)


def make_cleaved(inside, outside, decorations: str) -> CleavedLink:
    """Build a cleaved link, checking the matchings and decoration count."""
    if isinstance(inside, str):
        inside = Matching.parse(inside)
    if isinstance(outside, str):
        outside = Matching.parse(outside)
    if inside.n != outside.n:
        raise ValueError("inside and outside matchings have different sizes")
    if set(decorations) - set("+-"):
        raise ValueError(f"decorations must be '+' or '-', got {decorations!r}")
    ncyc = len(trace_cycles(inside, outside))
    if len(decorations) != ncyc:
        raise ValueError(f"{ncyc} circles but {len(decorations)} decorations")
    return CleavedLink(Matching(inside), Matching(outside), decorations)


@lru_cache(maxsize=None)
def enumerate_cleaved(n: int) -> tuple[CleavedLink, ...]:
    """The elements of cleaved{n} ordered by (inside, outside, decorations), with + before -."""
    out = []
    for inside in enumerate_noncrossing(n):
        for outside in enumerate_noncrossing(n):
            k = len(trace_cycles(inside, outside))
            for dec in product("+-", repeat=k):
                out.append(CleavedLink(inside, outside, "".join(dec)))
    return tuple(out)


@lru_cache(maxsize=None)
def basis_index(n: int) -> dict[CleavedLink, int]:
    return {link: k for k, link in enumerate(enumerate_cleaved(n))}


def dimension(n: int) -> int:
    return len(enumerate_cleaved(n))


def conjugate_link(link: CleavedLink) -> CleavedLink:
    return CleavedLink(link.inside, link.outside, link.decorations.translate(_FLIP))


def dual_link(link: CleavedLink) -> CleavedLink:
    """The basis element pairing to 1 with ``link`` under the annular pairing.

    Inside and outside swap roles and every point ``k`` is relabelled
    ``2n + 1 - k``; each circle keeps its decoration.
    """
    size = 2 * link.n
    inside, outside = reflect(link.outside), reflect(link.inside)
    cycle_of = {}
    for sign, cyc in zip(link.decorations, link.cycles()):
        for p in cyc:
            cycle_of[p] = sign
    dec = "".join(cycle_of[size + 1 - cyc[0]] for cyc in trace_cycles(inside, outside))
    return CleavedLink(inside, outside, dec)


# Named generators of I_4.  With inside matching 1-4,2-3 a one-circle
# outside filling is type A and a two-circle filling is type B; with
# inside 1-2,3-4 they are D and C.  Subscripts follow cycle order (the
# cycle through point 1 first).
_TYPE_N2 = {
    ("1-4,2-3", "1-2,3-4"): "A",
    ("1-4,2-3", "1-4,2-3"): "B",
    ("1-2,3-4", "1-2,3-4"): "C",
    ("1-2,3-4", "1-4,2-3"): "D",
}

NAMED_ORDER_N2 = (
    "C++", "C-+", "C+-", "C--", "D+", "D-",
    "A+", "A-", "B++", "B+-", "B-+", "B--",
)


def label(link: CleavedLink) -> str | None:
    """Conventional name: ``0`` for I_0, ``+``/``-`` for I_2, ``A+``... for I_4."""
    if link.n == 0:
        return "0"
    if link.n == 1:
        return link.decorations
    if link.n == 2:
        return _TYPE_N2[(str(link.inside), str(link.outside))] + link.decorations
    return None


@lru_cache(maxsize=None)
def _labels(n: int) -> dict[str, CleavedLink]:
    return {label(link): link for link in enumerate_cleaved(n)}


def from_label(name: str, n: int = 2) -> CleavedLink:
    return _labels(n)[name]


def named_basis() -> list[CleavedLink]:
    """cleaved{2} in the order used for the Temperley-Lieb comparison matrices."""
    return [from_label(name) for name in NAMED_ORDER_N2]


def format_link(link: CleavedLink) -> str:
    text = f"in={link.inside}; out={link.outside}; dec={link.decorations}"
    name = label(link)
    if name is not None and link.n == 2:
        text += f"  [{name}]"
    return text
