"""Planar diagrams over disc configurations.

A diagram lives in a disc ``D_0`` with holes ``D_1..D_m``.  Boundary ``i``
carries ``2 n_i`` points numbered ``1..2n_i`` counterclockwise from its
basepoint.  An endpoint is a pair ``(i, p)``.  Tangle diagrams reuse the
same machinery with crossing ports encoded as ``(-1 - c, k)`` for port
``k`` of crossing ``c`` (see :func:`port`).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable

__all__ = [
    "DiagramError",
    "ParseError",
    "PlanarDiagram",
    "port",
    "is_port",
    "port_parts",
    "find_violations",
    "validate",
    "map_genus_violations",
    "compose",
    "drop_trivial_boundary",
    "radial_identity",
    "pairing_diagram",
    "cup_diagram",
    "cap_diagram",
    "cupcap_diagram",
    "matching_diagram",
    "parse_diagram",
    "serialize_diagram",
]

Endpoint = tuple[int, int]


class DiagramError(ValueError):
    """A diagram violates its well-formedness or planarity conditions."""

    def __init__(self, message: str, violations: Iterable[str] = ()):
        self.violations = list(violations) or [message]
        super().__init__(message)


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int, source: str | None = None):
        self.message, self.line, self.column, self.source = message, line, column, source
        where = f"{source}:" if source else ""
        super().__init__(f"{where}{line}:{column}: {message}")


def port(c: int, k: int) -> Endpoint:
    return (-1 - c, k)


def is_port(e: Endpoint) -> bool:
    return e[0] < 0


def port_parts(e: Endpoint) -> tuple[int, int]:
    return -1 - e[0], e[1]


def _canonical_arcs(arcs, oriented: bool = False) -> tuple[tuple[Endpoint, Endpoint], ...]:
    out = []
    for a, b in arcs:
        a, b = tuple(a), tuple(b)
        out.append((a, b) if oriented or a <= b else (b, a))
    return tuple(sorted(out))


@dataclass(frozen=True)
class PlanarDiagram:
    """Arcs and free circles in a multi-holed disc.

    ``boundaries`` is the signature ``(n_0, n_1, ..., n_m)``; ``arcs`` are
    unordered endpoint pairs kept in canonical sorted form.
    """

    boundaries: tuple[int, ...]
    arcs: tuple[tuple[Endpoint, Endpoint], ...] = ()
    circles: int = 0

    def __post_init__(self):
        object.__setattr__(self, "boundaries", tuple(int(n) for n in self.boundaries))
        object.__setattr__(self, "arcs", _canonical_arcs(self.arcs))
        if not self.boundaries:
            raise DiagramError("a disc configuration needs an outer boundary")
        if self.circles < 0:
            raise DiagramError("negative circle count")

    @property
    def signature(self) -> tuple[int, ...]:
        return self.boundaries

    @property
    def m(self) -> int:
        return len(self.boundaries) - 1

    def partner_map(self) -> dict[Endpoint, Endpoint]:
        out = {}
        for a, b in self.arcs:
            out[a] = b
            out[b] = a
        return out

    def with_circles(self, k: int) -> "PlanarDiagram":
        return PlanarDiagram(self.boundaries, self.arcs, k)

    def __str__(self) -> str:
        return serialize_diagram(self)


# --- validation -------------------------------------------------------


def _endpoint_violations(boundaries, arcs, n_crossings: int = 0) -> list[str]:
    problems = []
    used: dict[Endpoint, int] = {}
    for a, b in arcs:
        for e in (a, b):
            used[e] = used.get(e, 0) + 1
            if is_port(e):
                c, k = port_parts(e)
                if not (0 <= c < n_crossings and 0 <= k <= 3):
                    problems.append(f"port {k} of crossing {c} out of range")
            else:
                i, p = e
                if not 0 <= i < len(boundaries):
                    problems.append(f"boundary index {i} out of range in point {i}:{p}")
                elif not 1 <= p <= 2 * boundaries[i]:
                    problems.append(
                        f"point index out of range: {i}:{p} (boundary {i} has {2 * boundaries[i]} points)"
                    )
        if a == b:
            problems.append(f"arc joins {a} to itself")
    for e, count in sorted(used.items()):
        if count > 1:
            problems.append(f"reused point {_fmt_end(e)} ({count} arcs)")
    for i, n in enumerate(boundaries):
        if n < 0:
            problems.append(f"boundary {i} has negative half-count")
            continue
        for p in range(1, 2 * n + 1):
            if (i, p) not in used:
                problems.append(f"dangling point {i}:{p}")
    for c in range(n_crossings):
        for k in range(4):
            if port(c, k) not in used:
                problems.append(f"dangling port {k} of crossing {c}")
    return problems


def _fmt_end(e: Endpoint) -> str:
    if is_port(e):
        c, k = port_parts(e)
        return f"x{c}:{k}"
    return f"{e[0]}:{e[1]}"


def map_genus_violations(boundaries, arcs, n_crossings: int = 0) -> list[str]:
    """Planarity test through the combinatorial map of the diagram.

    Vertices are boundary points and crossings; edges are boundary
    segments and arcs.  At a point of an inner boundary the
    counterclockwise rotation is (successor, predecessor, arc), on the
    outer boundary (successor, arc, predecessor); crossings rotate through
    ports 0..3.  Every connected component must satisfy V - E + F = 2.
    """
    # darts: 2*edge + end; end 0 leaves the first listed vertex
    edge_ends: list[tuple] = []
    rotation: dict[tuple, list[int]] = {}

    def add_edge(u, v):
        k = len(edge_ends)
        edge_ends.append((u, v))
        return 2 * k, 2 * k + 1

    seg_out: dict[Endpoint, int] = {}
    seg_in: dict[Endpoint, int] = {}
    for i, n in enumerate(boundaries):
        size = 2 * n
        for p in range(1, size + 1):
            nxt = p % size + 1
            d0, d1 = add_edge(("b", i, p), ("b", i, nxt))
            seg_out[(i, p)] = d0
            seg_in[(i, nxt)] = d1
    arc_dart: dict[Endpoint, int] = {}
    for a, b in arcs:
        d0, d1 = add_edge(_vertex(a), _vertex(b))
        arc_dart[a] = d0
        arc_dart[b] = d1

    for i, n in enumerate(boundaries):
        for p in range(1, 2 * n + 1):
            succ, pred, arc = seg_out[(i, p)], seg_in[(i, p)], arc_dart[(i, p)]
            rotation[("b", i, p)] = [succ, pred, arc] if i else [succ, arc, pred]
    for c in range(n_crossings):
        rotation[("x", c)] = [arc_dart[port(c, k)] for k in range(4)]

    sigma = {}
    vertex_of = {}
    for v, darts in rotation.items():
        for j, d in enumerate(darts):
            sigma[d] = darts[(j + 1) % len(darts)]
            vertex_of[d] = v

    # components by union-find over vertices
    parent = {v: v for v in rotation}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for u, v in edge_ends:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv

    verts: dict = {}
    for v in rotation:
        verts[find(v)] = verts.get(find(v), 0) + 1
    edges: dict = {}
    for u, _ in edge_ends:
        edges[find(u)] = edges.get(find(u), 0) + 1
    faces: dict = {}
    seen = set()
    for d in sigma:
        if d in seen:
            continue
        faces[find(vertex_of[d])] = faces.get(find(vertex_of[d]), 0) + 1
        x = d
        while x not in seen:
            seen.add(x)
            x = sigma[x ^ 1]
    problems = []
    for root, nv in verts.items():
        chi = nv - edges.get(root, 0) + faces.get(root, 0)
        if chi != 2:
            genus = (2 - chi) // 2
            problems.append(f"genus {genus} > 0: diagram is not planar in the configuration")
    return problems


def _vertex(e: Endpoint):
    if is_port(e):
        return ("x", port_parts(e)[0])
    return ("b", e[0], e[1])


def find_violations(P: PlanarDiagram, strict: bool = False) -> list[str]:
    problems = _endpoint_violations(P.boundaries, P.arcs)
    if strict and not problems:
        problems = map_genus_violations(P.boundaries, P.arcs)
    return problems


def validate(P: PlanarDiagram, strict: bool = False) -> PlanarDiagram:
    """Return ``P`` unchanged or raise :class:`DiagramError` listing every problem."""
    problems = find_violations(P, strict)
    if problems:
        raise DiagramError("; ".join(problems), problems)
    return P


# --- composition ------------------------------------------------------


def glue_arcs(outer, inner, oriented: bool = False):
    """Fuse two arc lists whose glued endpoints are marked ``(None, k)``.

    Returns ``(arcs, closed)`` where ``arcs`` are the fused arcs between
    unglued endpoints and ``closed`` counts chains that close up.  With
    ``oriented`` every arc is ``(tail, head)`` and a chain must be
    traversed coherently, otherwise :class:`DiagramError` is raised.
    """
    sides = (list(outer), list(inner))
    at_glue = ({}, {})
    for s, arcs in enumerate(sides):
        for k, (a, b) in enumerate(arcs):
            for end, e in enumerate((a, b)):
                if e[0] is None:
                    at_glue[s][e[1]] = (k, end)
    visited = (set(), set())
    fused = []

    def walk(s, k, end):
        # enter arc k on side s at `end`; returns final endpoint and directions seen
        dirs = set()
        while True:
            visited[s].add(k)
            dirs.add(end)
            x = sides[s][k][1 - end]
            if x[0] is not None:
                return x, dirs
            s = 1 - s
            k, end = at_glue[s][x[1]]

    for s, arcs in enumerate(sides):
        for k, (a, b) in enumerate(arcs):
            if k in visited[s]:
                continue
            for end, e in enumerate((a, b)):
                if e[0] is not None:
                    break
            else:
                continue
            x, dirs = walk(s, k, end)
            if oriented:
                if len(dirs) > 1:
                    raise DiagramError(f"orientations disagree along the glued strand from {_fmt_end(e)}")
                fused.append((e, x) if dirs == {0} else (x, e))
            else:
                fused.append((e, x))
    closed = 0
    for s, arcs in enumerate(sides):
        for k in range(len(arcs)):
            if k in visited[s]:
                continue
            dirs = set()
            cs, ck, cend = s, k, 0
            while ck not in visited[cs]:
                visited[cs].add(ck)
                dirs.add(cend)
                x = sides[cs][ck][1 - cend]
                cs = 1 - cs
                ck, cend = at_glue[cs][x[1]]
            if oriented and len(dirs) > 1:
                raise DiagramError("orientations disagree along a closed glued strand")
            closed += 1
    return fused, closed


def relabel_for_compose(outer_bounds, i, inner_bounds):
    """Endpoint maps for gluing a diagram with ``inner_bounds`` into hole ``i``."""
    m_inner = len(inner_bounds) - 1

    def outer_map(e):
        if is_port(e):
            return e
        j, p = e
        if j == i:
            return (None, p)
        return (j, p) if j < i else (j + m_inner - 1, p)

    def inner_map(e, crossing_offset=0):
        if is_port(e):
            c, k = port_parts(e)
            return port(c + crossing_offset, k)
        j, p = e
        if j == 0:
            return (None, p)
        return (i + j - 1, p)

    new_bounds = tuple(outer_bounds[:i]) + tuple(inner_bounds[1:]) + tuple(outer_bounds[i + 1:])
    return outer_map, inner_map, new_bounds


def check_composable(outer_bounds, i, inner_bounds):
    if not 1 <= i < len(outer_bounds):
        raise DiagramError(f"boundary index {i} is not an inner boundary of signature {_sig(outer_bounds)}")
    if outer_bounds[i] != inner_bounds[0]:
        raise DiagramError(
            f"signature mismatch: boundary {i} of {_sig(outer_bounds)} has n={outer_bounds[i]} "
            f"but the inserted diagram {_sig(inner_bounds)} has n_0={inner_bounds[0]}"
        )


def _sig(bounds) -> str:
    head, *rest = bounds
    return f"({head};{','.join(map(str, rest))})" if rest else f"({head})"


def compose(R: PlanarDiagram, i: int, T: PlanarDiagram) -> PlanarDiagram:
    """``R o_i T``: glue ``T`` into hole ``i`` of ``R``, point k to point k."""
    check_composable(R.boundaries, i, T.boundaries)
    outer_map, inner_map, bounds = relabel_for_compose(R.boundaries, i, T.boundaries)
    outer = [(outer_map(a), outer_map(b)) for a, b in R.arcs]
    inner = [(inner_map(a), inner_map(b)) for a, b in T.arcs]
    arcs, closed = glue_arcs(outer, inner)
    return PlanarDiagram(bounds, arcs, R.circles + T.circles + closed)


def drop_trivial_boundary(P: PlanarDiagram, i: int) -> PlanarDiagram:
    if not 1 <= i <= P.m:
        raise DiagramError(f"boundary {i} is not an inner boundary")
    if P.boundaries[i] != 0:
        raise DiagramError(f"boundary {i} carries {2 * P.boundaries[i]} points")

    def shift(e):
        return (e[0] - 1, e[1]) if e[0] > i else e

    bounds = P.boundaries[:i] + P.boundaries[i + 1:]
    return PlanarDiagram(bounds, [(shift(a), shift(b)) for a, b in P.arcs], P.circles)


# --- standard diagrams ------------------------------------------------


def radial_identity(n: int) -> PlanarDiagram:
    return PlanarDiagram((n, n), [((0, k), (1, k)) for k in range(1, 2 * n + 1)])


def pairing_diagram(n: int) -> PlanarDiagram:
    """Configuration (D_0; D_1, D_2) with point k of D_1 joined to point 2n+1-k of D_2."""
    return PlanarDiagram((0, n, n), [((1, k), (2, 2 * n + 1 - k)) for k in range(1, 2 * n + 1)])


def matching_diagram(matching) -> PlanarDiagram:
    """A noncrossing matching drawn in a disc of signature (n)."""
    return PlanarDiagram((matching.n,), [((0, a), (0, b)) for a, b in matching.pairs()])


def cap_diagram(hole: bool = False) -> PlanarDiagram:
    """A single arc on a disc of signature (1); with ``hole`` an empty inner disc is added."""
    return PlanarDiagram((1, 0) if hole else (1,), [((0, 1), (0, 2))])


def cup_diagram() -> PlanarDiagram:
    return PlanarDiagram((0, 1), [((1, 1), (1, 2))])


def cupcap_diagram(n: int = 1, position: int = 1) -> PlanarDiagram:
    """Annular (n;n) diagram: radial except a cup and cap at points ``position, position+1``."""
    if not 1 <= position < 2 * n:
        raise DiagramError(f"position {position} out of range for {2 * n} points")
    j = position
    arcs = [((0, k), (1, k)) for k in range(1, 2 * n + 1) if k not in (j, j + 1)]
    arcs += [((0, j), (0, j + 1)), ((1, j), (1, j + 1))]
    return PlanarDiagram((n, n), arcs)


# --- text format ------------------------------------------------------

_TOKEN_END = re.compile(r"(?:x(?P<xid>[A-Za-z0-9_]+)|(?P<bnd>\d+)):(?P<pt>\d+)$")


@dataclass
class RawStatements:
    boundaries: tuple[int, ...] | None = None
    arcs: list = field(default_factory=list)  # (end_a, end_b, line, col)
    circles: int = 0
    crossings: dict = field(default_factory=dict)  # id -> (over, line, col)
    orients: list = field(default_factory=list)  # (end_a, end_b, line, col)


def parse_endpoint(token: str, line: int, col: int, source=None):
    """``"i:p"`` gives ``(i, p)``; ``"x<id>:k"`` gives ``("x", id, k)``."""
    m = _TOKEN_END.match(token)
    if not m:
        raise ParseError(f"bad endpoint {token!r}", line, col, source)
    if m.group("xid") is not None:
        return ("x", m.group("xid"), int(m.group("pt")))
    return (int(m.group("bnd")), int(m.group("pt")))


def parse_statements(text: str, source: str | None = None, allow_tangle: bool = True) -> RawStatements:
    raw = RawStatements()
    for lineno, line in enumerate(text.splitlines(), 1):
        body = line.split("#", 1)[0]
        stripped = body.strip()
        if not stripped:
            continue
        col0 = len(body) - len(body.lstrip()) + 1
        keyword, _, rest = stripped.partition(" ")
        rest_col = col0 + len(keyword) + 1 + (len(rest) - len(rest.lstrip()))
        rest = rest.strip()
        if keyword == "boundaries":
            if raw.boundaries is not None:
                raise ParseError("duplicate boundaries statement", lineno, col0, source)
            try:
                raw.boundaries = tuple(int(tok) for tok in rest.split(","))
            except ValueError:
                raise ParseError(f"bad half-count list {rest!r}", lineno, rest_col, source) from None
            if any(n < 0 for n in raw.boundaries):
                raise ParseError("half-counts must be nonnegative", lineno, rest_col, source)
        elif keyword == "arc":
            left, sep, right = rest.partition("-")
            if not sep or not right:
                raise ParseError("expected 'arc <end>-<end>'", lineno, rest_col, source)
            a = parse_endpoint(left.strip(), lineno, rest_col, source)
            b = parse_endpoint(right.strip(), lineno, rest_col + len(left) + 1, source)
            if not allow_tangle and ("x" in (a[0], b[0])):
                raise ParseError("crossing ports are not allowed in a planar diagram", lineno, rest_col, source)
            raw.arcs.append((a, b, lineno, rest_col))
        elif keyword == "circles":
            if not rest.isdigit():
                raise ParseError(f"bad circle count {rest!r}", lineno, rest_col, source)
            raw.circles = int(rest)
        elif keyword == "crossing" and allow_tangle:
            m = re.fullmatch(r"([A-Za-z0-9_]+)\s+over=(02|13)", rest)
            if not m:
                raise ParseError("expected 'crossing <id> over=<02|13>'", lineno, rest_col, source)
            if m.group(1) in raw.crossings:
                raise ParseError(f"duplicate crossing {m.group(1)}", lineno, rest_col, source)
            raw.crossings[m.group(1)] = (m.group(2), lineno, rest_col)
        elif keyword == "orient" and allow_tangle:
            left, sep, right = rest.partition("->")
            if not sep:
                raise ParseError("expected 'orient <end> -> <end>'", lineno, rest_col, source)
            a = parse_endpoint(left.strip(), lineno, rest_col, source)
            b = parse_endpoint(right.strip(), lineno, rest_col + len(left) + 2, source)
            raw.orients.append((a, b, lineno, rest_col))
        else:
            raise ParseError(f"unknown statement {keyword!r}", lineno, col0, source)
    if raw.boundaries is None:
        raise ParseError("missing boundaries statement", 1, 1, source)
    return raw


def parse_diagram(text: str, source: str | None = None) -> PlanarDiagram:
    raw = parse_statements(text, source, allow_tangle=False)
    return PlanarDiagram(raw.boundaries, [(a, b) for a, b, _, _ in raw.arcs], raw.circles)


def serialize_diagram(P: PlanarDiagram) -> str:
    lines = ["boundaries " + ",".join(map(str, P.boundaries))]
    lines += [f"arc {a[0]}:{a[1]}-{b[0]}:{b[1]}" for a, b in P.arcs]
    lines.append(f"circles {P.circles}")
    return "\n".join(lines) + "\n"
