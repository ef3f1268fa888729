"""Tangle diagrams, their resolutions and the state-sum invariant Z_T.

Crossing ports are numbered 0..3 counterclockwise; the strands are 0-2
and 1-3 and ``over`` names the strand on top.  In a resolution the
0-smoothing joins each end of the over strand to the neighbouring port
clockwise from it, the 1-smoothing to the neighbour counterclockwise.
With this choice the 0-resolution of a positive braid generator is the
identity braid.
"""

from __future__ import annotations

import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Mapping

from .diagram import (
    DiagramError,
    ParseError,
    PlanarDiagram,
    _endpoint_violations,
    _fmt_end,
    check_composable,
    glue_arcs,
    is_port,
    map_genus_violations,
    parse_statements,
    port,
    port_parts,
    relabel_for_compose,
)
from .partition import PartitionMatrix, partition_map
from .ring import DELTA, ONE, ZERO, HalfLaurent, qpow

__all__ = [
    "TangleDiagram",
    "SMOOTHINGS",
    "from_planar",
    "parse_tangle",
    "serialize_tangle",
    "find_tangle_violations",
    "validate_tangle",
    "crossing_signs",
    "crossing_sign",
    "mirror",
    "smooth",
    "resolve",
    "resolutions",
    "unshifted_partition",
    "partition_tangle",
    "jones_closed",
    "kauffman_oracle",
    "skein_check",
    "strands",
    "orient_strands",
    "compose",
    "crossing_disc",
]

# SMOOTHINGS[over][value] lists the port pairs joined by that smoothing
SMOOTHINGS = {
    "02": {0: ((0, 3), (2, 1)), 1: ((0, 1), (2, 3))},
    "13": {0: ((1, 0), (3, 2)), 1: ((1, 2), (3, 0))},
}


@dataclass(frozen=True)
class TangleDiagram:
    """A planar diagram whose arcs may also end at crossing ports.

    When ``oriented`` is true every arc is stored as ``(tail, head)``.
    ``names`` keeps the crossing identifiers used in the text format.
    """

    boundaries: tuple[int, ...]
    crossings: tuple[str, ...] = ()
    arcs: tuple = ()
    circles: int = 0
    oriented: bool = False
    names: tuple[str, ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "boundaries", tuple(int(n) for n in self.boundaries))
        crossings = tuple(self.crossings)
        if any(o not in SMOOTHINGS for o in crossings):
            raise DiagramError("crossing over-flag must be '02' or '13'")
        object.__setattr__(self, "crossings", crossings)
        arcs = []
        for a, b in self.arcs:
            a, b = tuple(a), tuple(b)
            arcs.append((a, b) if self.oriented or a <= b else (b, a))
        object.__setattr__(self, "arcs", tuple(sorted(arcs)))
        names = self.names
        if names is None or len(names) != len(crossings):
            names = tuple(str(c) for c in range(len(crossings)))
        object.__setattr__(self, "names", tuple(names))

    @property
    def signature(self) -> tuple[int, ...]:
        return self.boundaries

    @property
    def m(self) -> int:
        return len(self.boundaries) - 1

    def partner_map(self) -> dict:
        out = {}
        for a, b in self.arcs:
            out[a] = b
            out[b] = a
        return out

    def unoriented(self) -> "TangleDiagram":
        return TangleDiagram(self.boundaries, self.crossings, self.arcs, self.circles, False, self.names)

    def planar(self) -> PlanarDiagram:
        if self.crossings:
            raise DiagramError("diagram has crossings")
        return PlanarDiagram(self.boundaries, self.arcs, self.circles)

    def __str__(self) -> str:
        return serialize_tangle(self)


def from_planar(P: PlanarDiagram) -> TangleDiagram:
    return TangleDiagram(P.boundaries, (), P.arcs, P.circles)


def crossing_disc(over: str = "02", rotation: int = 0, oriented: bool = False) -> TangleDiagram:
    """A single crossing in a disc of signature (2), port k at point ``(k + rotation) % 4 + 1``.

    Oriented, the strands run from the lower-numbered end of each strand
    through the crossing.
    """
    arcs = []
    for k in range(4):
        b = (0, (k + rotation) % 4 + 1)
        if oriented:
            arcs.append((b, port(0, k)) if k < 2 else (port(0, k), b))
        else:
            arcs.append((b, port(0, k)))
    return TangleDiagram((2,), (over,), arcs, 0, oriented)


# --- validation -------------------------------------------------------


def _orientation_violations(T: TangleDiagram) -> list[str]:
    if not T.oriented:
        return []
    problems = []
    role = {}
    for a, b in T.arcs:
        role[a] = "tail"
        role[b] = "head"
    for c in range(len(T.crossings)):
        for k in (0, 1):
            r1, r2 = role.get(port(c, k)), role.get(port(c, k + 2))
            if r1 is not None and r1 == r2:
                problems.append(f"strand {k}-{k + 2} of crossing {T.names[c]} is not oriented end to end")
    return problems


def find_tangle_violations(T: TangleDiagram, strict: bool = False) -> list[str]:
    problems = _endpoint_violations(T.boundaries, T.arcs, len(T.crossings))
    problems += _orientation_violations(T)
    if strict and not problems:
        problems = map_genus_violations(T.boundaries, T.arcs, len(T.crossings))
    return problems


def validate_tangle(T: TangleDiagram, strict: bool = False) -> TangleDiagram:
    problems = find_tangle_violations(T, strict)
    if problems:
        raise DiagramError("; ".join(problems), problems)
    return T


# --- text format ------------------------------------------------------


def _propagate(arcs, n_crossings, seeds, source=None):
    """Orient every arc reachable from ``seeds`` through crossing strands."""
    at = {}
    for k, (a, b) in enumerate(arcs):
        at[a] = k
        at[b] = k
    direction: dict[int, tuple] = {}
    stack = []
    for tail, head, line, col in seeds:
        k = at.get(tail)
        if k is None or at.get(head) != k:
            raise ParseError(f"no arc joins {_fmt_end(tail)} and {_fmt_end(head)}", line, col, source)
        if direction.get(k, (tail, head)) != (tail, head):
            raise ParseError("contradictory orient statements", line, col, source)
        direction[k] = (tail, head)
        stack.append(k)
    while stack:
        k = stack.pop()
        tail, head = direction[k]
        for e, want in ((head, "tail"), (tail, "head")):
            if not is_port(e):
                continue
            c, p = port_parts(e)
            other = port(c, (p + 2) % 4)
            j = at.get(other)
            if j is None:
                continue
            a, b = arcs[j]
            far = b if a == other else a
            new = (other, far) if want == "tail" else (far, other)
            old = direction.get(j)
            if old is None:
                direction[j] = new
                stack.append(j)
            elif old != new:
                raise DiagramError(f"inconsistent orientation through crossing {c}")
    return direction


def parse_tangle(text: str, source: str | None = None) -> TangleDiagram:
    raw = parse_statements(text, source, allow_tangle=True)
    ids = list(raw.crossings)
    index = {name: c for c, name in enumerate(ids)}

    def resolve_end(e, line, col):
        if e[0] == "x":
            if e[1] not in index:
                raise ParseError(f"unknown crossing {e[1]!r}", line, col, source)
            return port(index[e[1]], e[2])
        return e

    arcs = [(resolve_end(a, l, c), resolve_end(b, l, c)) for a, b, l, c in raw.arcs]
    crossings = tuple(raw.crossings[name][0] for name in ids)
    if not raw.orients:
        return TangleDiagram(raw.boundaries, crossings, arcs, raw.circles, False, tuple(ids))
    seeds = [(resolve_end(a, l, c), resolve_end(b, l, c), l, c) for a, b, l, c in raw.orients]
    direction = _propagate(arcs, len(crossings), seeds, source)
    missing = [k for k in range(len(arcs)) if k not in direction]
    if missing:
        a, b = arcs[missing[0]]
        line = raw.arcs[missing[0]][2]
        raise ParseError(f"arc {_fmt_end(a)}-{_fmt_end(b)} has no orientation", line, 1, source)
    arcs = [direction[k] for k in range(len(arcs))]
    return TangleDiagram(raw.boundaries, crossings, arcs, raw.circles, True, tuple(ids))


def _fmt_named(e, names):
    if is_port(e):
        c, k = port_parts(e)
        return f"x{names[c]}:{k}"
    return f"{e[0]}:{e[1]}"


def serialize_tangle(T: TangleDiagram) -> str:
    lines = ["boundaries " + ",".join(map(str, T.boundaries))]
    lines += [f"crossing {name} over={o}" for name, o in zip(T.names, T.crossings)]
    lines += [f"arc {_fmt_named(a, T.names)}-{_fmt_named(b, T.names)}" for a, b in T.arcs]
    if T.oriented:
        for strand in strands(T):
            tail, head = strand[0]
            lines.append(f"orient {_fmt_named(tail, T.names)} -> {_fmt_named(head, T.names)}")
    lines.append(f"circles {T.circles}")
    return "\n".join(lines) + "\n"


# --- strands and orientation -----------------------------------------


def strands(T: TangleDiagram) -> list[list[tuple]]:
    """Maximal strands as lists of arcs, each arc written in traversal order.

    Open strands run between boundary points; closed strands pass only
    through crossings.  For oriented diagrams traversal follows the
    orientation.
    """
    partner = T.partner_map()
    seen = set()
    out = []

    def follow(start):
        path = []
        e = start
        while True:
            f = partner[e]
            path.append((e, f))
            seen.add(frozenset((e, f)))
            if not is_port(f):
                return path
            c, k = port_parts(f)
            e = port(c, (k + 2) % 4)
            if e == start:
                return path

    heads = {b for a, b in T.arcs} if T.oriented else set()
    for a, b in T.arcs:
        for e in (a, b):
            if not is_port(e) and frozenset((e, partner[e])) not in seen:
                if T.oriented and e in heads:
                    continue
                out.append(follow(e))
    for a, b in T.arcs:
        if frozenset((a, b)) not in seen:
            out.append(follow(a))
    return out


def orient_strands(T: TangleDiagram, fixed: Mapping | None = None, rng: random.Random | None = None) -> TangleDiagram:
    """Orient every strand, at random where ``fixed`` leaves a choice.

    ``fixed`` maps boundary points to ``"out"`` (the strand starts there)
    or ``"in"`` (it ends there).  Raises :class:`DiagramError` when a strand
    has contradictory requirements.
    """
    fixed = dict(fixed or {})
    rng = rng or random.Random(0)
    arcs = []
    for path in strands(T.unoriented()):
        first, last = path[0][0], path[-1][1]
        want = None
        if first in fixed:
            want = fixed[first] == "out"
        if last in fixed and not is_port(last):
            other = fixed[last] == "in"
            if want is not None and want != other:
                raise DiagramError(f"strand from {_fmt_end(first)} to {_fmt_end(last)} cannot satisfy both ends")
            want = other
        if want is None:
            want = rng.random() < 0.5
        if want:
            arcs += path
        else:
            arcs += [(b, a) for a, b in path]
    return TangleDiagram(T.boundaries, T.crossings, arcs, T.circles, True, T.names)


def crossing_sign(T: TangleDiagram, c: int) -> int:
    """+1 when the under strand leaves a quarter turn counterclockwise of the over strand."""
    if not T.oriented:
        raise DiagramError("crossing signs need an oriented diagram")
    tails = {a for a, _ in T.arcs}
    o1, o2 = (0, 2) if T.crossings[c] == "02" else (1, 3)
    u1, u2 = (o1 + 1) % 4, (o2 + 1) % 4
    out_over = [k for k in (o1, o2) if port(c, k) in tails]
    out_under = [k for k in (u1, u2) if port(c, k) in tails]
    if len(out_over) != 1 or len(out_under) != 1:
        raise DiagramError(f"crossing {T.names[c]} is not consistently oriented")
    return 1 if out_under[0] == (out_over[0] + 1) % 4 else -1


def crossing_signs(T: TangleDiagram) -> tuple[int, int]:
    signs = [crossing_sign(T, c) for c in range(len(T.crossings))]
    return signs.count(1), signs.count(-1)


def mirror(T: TangleDiagram) -> TangleDiagram:
    flipped = tuple("13" if o == "02" else "02" for o in T.crossings)
    return TangleDiagram(T.boundaries, flipped, T.arcs, T.circles, T.oriented, T.names)


# --- resolutions ------------------------------------------------------


def _smooth_arcs(T: TangleDiagram, choice: Mapping[int, int]):
    """Replace the crossings in ``choice`` by smoothings and fuse the arcs.

    Returns ``(arcs, closed, keep)`` with surviving crossings renumbered in
    the order of ``keep``.
    """
    links = {}
    for c, v in choice.items():
        for a, b in SMOOTHINGS[T.crossings[c]][v]:
            links[port(c, a)] = port(c, b)
            links[port(c, b)] = port(c, a)
    keep = [c for c in range(len(T.crossings)) if c not in choice]
    renum = {c: j for j, c in enumerate(keep)}

    def final(e):
        if is_port(e):
            c, k = port_parts(e)
            return port(renum[c], k)
        return e

    partner = T.partner_map()
    done = set()
    arcs = []
    for e in sorted(partner):
        if e in done or e in links:
            continue
        x = partner[e]
        done.add(e)
        while x in links:
            done.add(x)
            y = links[x]
            done.add(y)
            x = partner[y]
        done.add(x)
        arcs.append((final(e), final(x)))
    closed = 0
    for e in sorted(links):
        if e in done:
            continue
        closed += 1
        x = e
        while x not in done:
            done.add(x)
            y = links[x]
            done.add(y)
            x = partner[y]
    return arcs, closed, keep


def smooth(T: TangleDiagram, c: int, value: int) -> TangleDiagram:
    """Resolve a single crossing; the result is unoriented."""
    arcs, closed, keep = _smooth_arcs(T, {c: value})
    return TangleDiagram(
        T.boundaries,
        tuple(T.crossings[j] for j in keep),
        arcs,
        T.circles + closed,
        False,
        tuple(T.names[j] for j in keep),
    )


def resolve(T: TangleDiagram, rho: Iterable[int]) -> PlanarDiagram:
    rho = tuple(rho)
    if len(rho) != len(T.crossings) or set(rho) - {0, 1}:
        raise ValueError("a resolution assigns 0 or 1 to every crossing")
    arcs, closed, _ = _smooth_arcs(T, dict(enumerate(rho)))
    return PlanarDiagram(T.boundaries, arcs, T.circles + closed)


def resolutions(T: TangleDiagram):
    """All resolutions in binary-counter order over the crossings."""
    return product((0, 1), repeat=len(T.crossings))


def _partial_sum(T: TangleDiagram, rhos) -> dict:
    acc: dict = {}
    for rho in rhos:
        h = sum(rho)
        coeff = qpow(2 * h, -1 if h % 2 else 1)
        for key, v in partition_map(resolve(T, rho)).entries.items():
            acc[key] = acc.get(key, ZERO) + coeff * v
    return acc


PARALLEL_THRESHOLD = 512


def _workers() -> int:
    value = os.environ.get("CLEAVED_THREADS")
    if value is None:
        return os.cpu_count() or 1
    try:
        return max(1, int(value))
    except ValueError:
        return 1


def unshifted_partition(T: TangleDiagram, workers: int | None = None) -> PartitionMatrix:
    """Σ_ρ (-q)^h(ρ) Z_ρ(T).

    Large sums (at least ``PARALLEL_THRESHOLD`` resolutions) run in a
    process pool sized by ``workers``, else ``CLEAVED_THREADS``, else the
    CPU count.  Chunks of resolutions are merged in order, so the result
    is identical to the serial sum.
    """
    validate_tangle(T)
    workers = workers or _workers()
    rhos = list(resolutions(T))
    if workers <= 1 or len(rhos) < PARALLEL_THRESHOLD:
        acc = _partial_sum(T, rhos)
    else:
        size = -(-len(rhos) // workers)
        chunks = [rhos[k:k + size] for k in range(0, len(rhos), size)]
        acc = {}
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_partial_sum, [T] * len(chunks), chunks):
                for key, v in part.items():
                    acc[key] = acc.get(key, ZERO) + v
    return PartitionMatrix(T.boundaries[0], T.boundaries[1:], acc)


def shift_factor(T: TangleDiagram) -> HalfLaurent:
    """(-1)^{n_-} q^{n_+ - 2 n_-}."""
    npos, nneg = crossing_signs(T)
    return qpow(2 * (npos - 2 * nneg), -1 if nneg % 2 else 1)


def partition_tangle(T: TangleDiagram, workers: int | None = None) -> PartitionMatrix:
    if T.crossings and not T.oriented:
        raise DiagramError("Z_T needs an oriented diagram; use unshifted_partition for unoriented input")
    factor = shift_factor(T) if T.crossings else ONE
    return unshifted_partition(T, workers).scale(factor)


def _require_closed(T: TangleDiagram):
    if any(T.boundaries):
        head, *rest = T.boundaries
        raise DiagramError(f"diagram has boundary points (signature ({head};{','.join(map(str, rest))}))")


def jones_closed(T: TangleDiagram) -> HalfLaurent:
    """J_L(q) for a closed diagram: the single entry of Z_T."""
    _require_closed(T)
    Z = partition_tangle(T)
    return Z[0, (0,) * T.m]


def kauffman_oracle(T: TangleDiagram) -> HalfLaurent:
    """Independent state sum for closed diagrams.

    Loops in each resolution are counted with a union-find over crossing
    ports; nothing here goes through cleaved links or fillings.
    """
    _require_closed(T)
    ncross = len(T.crossings)
    pos = neg = 0
    for c in range(ncross):
        if crossing_sign(T, c) > 0:
            pos += 1
        else:
            neg += 1
    total = ZERO
    for rho in product((0, 1), repeat=ncross):
        parent = list(range(4 * ncross))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(x, y):
            parent[find(x)] = find(y)

        for a, b in T.arcs:
            union(4 * (-1 - a[0]) + a[1], 4 * (-1 - b[0]) + b[1])
        for c, v in enumerate(rho):
            for a, b in SMOOTHINGS[T.crossings[c]][v]:
                union(4 * c + a, 4 * c + b)
        loops = len({find(x) for x in range(4 * ncross)}) + T.circles
        h = sum(rho)
        total = total + qpow(2 * h, (-1) ** h) * DELTA ** loops
    return qpow(2 * (pos - 2 * neg), (-1) ** neg) * total


def skein_check(T: TangleDiagram, c: int | None = None) -> dict[int, bool]:
    """Check Z~_T = Z~_{T_0} - q Z~_{T_1} at crossing ``c`` (or at every crossing)."""
    targets = range(len(T.crossings)) if c is None else [c]
    whole = unshifted_partition(T)
    out = {}
    for k in targets:
        rhs = unshifted_partition(smooth(T, k, 0)) + unshifted_partition(smooth(T, k, 1)).scale(qpow(2, -1))
        out[k] = whole == rhs
    return out


# --- composition ------------------------------------------------------


def compose(R, i: int, T) -> TangleDiagram:
    """``R ∘_i T`` for tangles (planar diagrams are accepted as crossing-free tangles).

    The result is oriented when both inputs are; glued strands must then
    agree in direction.
    """
    if isinstance(R, PlanarDiagram):
        R = from_planar(R)
    if isinstance(T, PlanarDiagram):
        T = from_planar(T)
    check_composable(R.boundaries, i, T.boundaries)
    outer_map, inner_map, bounds = relabel_for_compose(R.boundaries, i, T.boundaries)
    offset = len(R.crossings)
    outer = [(outer_map(a), outer_map(b)) for a, b in R.arcs]
    inner = [(inner_map(a, offset), inner_map(b, offset)) for a, b in T.arcs]
    oriented = R.oriented and T.oriented
    arcs, closed = glue_arcs(outer, inner, oriented=oriented)
    return TangleDiagram(bounds, R.crossings + T.crossings, arcs, R.circles + T.circles + closed, oriented)
