"""Multiply cleaved links and the partition map Z_P."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterable, Iterator, Mapping

from .cleaved import CleavedLink, basis_index, conjugate_link, enumerate_cleaved
from .combinatorics import Matching, enumerate_noncrossing, is_noncrossing, trace_cycles
from .diagram import DiagramError, PlanarDiagram, pairing_diagram, validate
from .ring import DELTA, ONE, ZERO, HalfLaurent, qpow

__all__ = [
    "Skeleton",
    "MultiCleavedLink",
    "ModuleVector",
    "PartitionMatrix",
    "enumerate_fillings",
    "decorated_fillings",
    "weight",
    "boundary",
    "partition_map",
    "apply",
    "pairing_matrix",
    "basis_vector",
]


@lru_cache(maxsize=None)
def _offsets(n: int) -> dict[tuple[Matching, Matching], int]:
    # index of the first decoration of each (inside, outside) block
    out = {}
    for k, link in enumerate(enumerate_cleaved(n)):
        out.setdefault((link.inside, link.outside), k)
    return out


@dataclass(frozen=True)
class _BoundaryTrace:
    inside: Matching
    outside: Matching
    cycle_circles: tuple[int, ...]  # global circle index of each cycle at this boundary
    offset: int


class Skeleton:
    """An undecorated multiply cleaved link: a diagram plus one filling per boundary.

    ``circles`` lists the traced components that meet some boundary, each as
    its sequence of boundary points, ordered by least endpoint; the free
    circles of the base diagram come after them and are only counted.
    """

    __slots__ = ("base", "fillings", "circles", "hits", "traces")

    def __init__(self, base: PlanarDiagram, fillings: Iterable[Matching]):
        self.base = base
        self.fillings = tuple(fillings)
        if len(self.fillings) != len(base.boundaries):
            raise ValueError("one filling per boundary is required")
        arc = base.partner_map()
        fill = self.fillings

        def fpartner(e):
            return (e[0], fill[e[0]][e[1] - 1])

        points = sorted(arc)
        circle_of: dict = {}
        circles = []
        for start in points:
            if start in circle_of:
                continue
            cid = len(circles)
            seq = []
            e = start
            while True:
                seq.append(e)
                circle_of[e] = cid
                x = arc[e]
                seq.append(x)
                circle_of[x] = cid
                e = fpartner(x)
                if e == start:
                    break
            circles.append(tuple(seq))
        self.circles = tuple(circles)
        self.hits = tuple(len({e[0] for e in c}) for c in circles)

        traces = []
        for i, n in enumerate(base.boundaries):
            walked = [0] * (2 * n)
            for p in range(1, 2 * n + 1):
                e = arc[(i, p)]
                while e[0] != i:
                    e = arc[fpartner(e)]
                walked[p - 1] = e[1]
            walked = Matching(walked)
            if not is_noncrossing(walked):
                raise DiagramError(
                    f"traced matching {walked} at boundary {i} is crossing; the diagram is not planar"
                )
            inside, outside = (walked, fill[0]) if i == 0 else (fill[i], walked)
            cyc = trace_cycles(inside, outside)
            traces.append(
                _BoundaryTrace(
                    inside,
                    outside,
                    tuple(circle_of[(i, c[0])] for c in cyc),
                    _offsets(n)[(inside, outside)],
                )
            )
        self.traces = tuple(traces)

    @property
    def free_circles(self) -> int:
        return self.base.circles

    @property
    def n_circles(self) -> int:
        return len(self.circles) + self.base.circles

    def __repr__(self) -> str:
        fills = "; ".join(f"{i}:{m}" for i, m in enumerate(self.fillings))
        return f"Skeleton({fills}; circles={self.n_circles})"


@dataclass(frozen=True)
class MultiCleavedLink:
    skeleton: Skeleton
    decorations: str

    def __post_init__(self):
        if len(self.decorations) != self.skeleton.n_circles:
            raise ValueError(
                f"{self.skeleton.n_circles} circles but {len(self.decorations)} decorations"
            )

    @property
    def base(self) -> PlanarDiagram:
        return self.skeleton.base

    def weight(self) -> HalfLaurent:
        return weight(self)

    def boundary(self, i: int) -> CleavedLink:
        return boundary(self, i)


def enumerate_fillings(P: PlanarDiagram) -> list[Skeleton]:
    """Every choice of noncrossing filling per boundary, traced into circles."""
    validate(P)
    choices = [enumerate_noncrossing(n) for n in P.boundaries]
    return [Skeleton(P, fills) for fills in product(*choices)]


def decorated_fillings(P: PlanarDiagram) -> Iterator[MultiCleavedLink]:
    for sk in enumerate_fillings(P):
        for dec in product("+-", repeat=sk.n_circles):
            yield MultiCleavedLink(sk, "".join(dec))


def _weight_exponent(hits, signs) -> int:
    # doubled exponent of prod q^{+-(1 - N/2)}
    return sum((2 - h) if s == "+" else (h - 2) for h, s in zip(hits, signs))


def weight(M: MultiCleavedLink) -> HalfLaurent:
    sk = M.skeleton
    hits = sk.hits + (0,) * sk.free_circles
    return qpow(_weight_exponent(hits, M.decorations))


def boundary(M: MultiCleavedLink, i: int) -> CleavedLink:
    """The cleaved link ``∂_i M`` with decorations restricted from ``M``."""
    tr = M.skeleton.traces[i]
    dec = "".join(M.decorations[c] for c in tr.cycle_circles)
    return CleavedLink(tr.inside, tr.outside, dec)


# --- matrices ---------------------------------------------------------


class ModuleVector:
    """Sparse HalfLaurent combination of basis tuples of ``I_{2n_1} ⊗ ... ⊗ I_{2n_k}``.

    Keys are tuples of per-factor basis indices.
    """

    __slots__ = ("ns", "coeffs")

    def __init__(self, ns: Iterable[int], coeffs: Mapping[tuple, HalfLaurent] | None = None):
        self.ns = tuple(ns)
        self.coeffs = {}
        for key, c in (coeffs or {}).items():
            key = tuple(key)
            if len(key) != len(self.ns):
                raise ValueError("basis tuple has the wrong length")
            c = HalfLaurent(c) if isinstance(c, int) else c
            if c:
                self.coeffs[key] = self.coeffs.get(key, ZERO) + c
        self.coeffs = {k: v for k, v in sorted(self.coeffs.items()) if v}

    @classmethod
    def from_links(cls, ns, terms: Mapping[tuple, HalfLaurent]) -> "ModuleVector":
        """Build from ``{(link_1, ..., link_k): coefficient}``."""
        ns = tuple(ns)
        idx = [basis_index(n) for n in ns]
        return cls(ns, {tuple(idx[j][l] for j, l in enumerate(key)): c for key, c in terms.items()})

    def links(self) -> dict[tuple[CleavedLink, ...], HalfLaurent]:
        bases = [enumerate_cleaved(n) for n in self.ns]
        return {tuple(bases[j][k] for j, k in enumerate(key)): c for key, c in self.coeffs.items()}

    def __eq__(self, other) -> bool:
        return isinstance(other, ModuleVector) and (self.ns, self.coeffs) == (other.ns, other.coeffs)

    def __add__(self, other: "ModuleVector") -> "ModuleVector":
        if self.ns != other.ns:
            raise ValueError("basis mismatch")
        acc = dict(self.coeffs)
        for k, v in other.coeffs.items():
            acc[k] = acc.get(k, ZERO) + v
        return ModuleVector(self.ns, acc)

    def scale(self, c: HalfLaurent) -> "ModuleVector":
        return ModuleVector(self.ns, {k: c * v for k, v in self.coeffs.items()})

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        return " + ".join(f"({c})*{list(k)}" for k, c in self.coeffs.items())


def basis_vector(link: CleavedLink) -> ModuleVector:
    return ModuleVector((link.n,), {(basis_index(link.n)[link],): ONE})


class PartitionMatrix:
    """Sparse matrix from ``⊗_i I_{2n_i}`` (i = 1..m) to ``I_{2n_0}``.

    ``entries`` maps ``(row, cols)`` to a nonzero HalfLaurent, where ``row``
    indexes ``enumerate_cleaved(n_0)`` and ``cols`` is a tuple of indices into
    ``enumerate_cleaved(n_i)``.
    """

    __slots__ = ("n_out", "n_in", "entries")

    def __init__(self, n_out: int, n_in: Iterable[int], entries: Mapping[tuple[int, tuple], HalfLaurent]):
        self.n_out = n_out
        self.n_in = tuple(n_in)
        self.entries = {k: v for k, v in sorted(entries.items()) if v}

    @property
    def signature(self) -> tuple[int, ...]:
        return (self.n_out,) + self.n_in

    @property
    def shape(self) -> tuple[int, int]:
        cols = 1
        for n in self.n_in:
            cols *= len(enumerate_cleaved(n))
        return len(enumerate_cleaved(self.n_out)), cols

    def columns(self) -> list[tuple[int, ...]]:
        return list(product(*(range(len(enumerate_cleaved(n))) for n in self.n_in)))

    def __getitem__(self, key) -> HalfLaurent:
        row, cols = key
        return self.entries.get((row, tuple(cols)), ZERO)

    def entry(self, out_link: CleavedLink, in_links: Iterable[CleavedLink]) -> HalfLaurent:
        row = basis_index(self.n_out)[out_link]
        cols = tuple(basis_index(n)[l] for n, l in zip(self.n_in, in_links))
        return self[row, cols]

    def to_rows(self) -> list[list[HalfLaurent]]:
        cols = self.columns()
        nrows = self.shape[0]
        return [[self[r, c] for c in cols] for r in range(nrows)]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PartitionMatrix)
            and self.signature == other.signature
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.signature, tuple(self.entries.items())))

    def __add__(self, other: "PartitionMatrix") -> "PartitionMatrix":
        if self.signature != other.signature:
            raise ValueError("signature mismatch")
        acc = dict(self.entries)
        for k, v in other.entries.items():
            acc[k] = acc.get(k, ZERO) + v
        return PartitionMatrix(self.n_out, self.n_in, acc)

    def scale(self, c: HalfLaurent | int) -> "PartitionMatrix":
        return PartitionMatrix(self.n_out, self.n_in, {k: c * v for k, v in self.entries.items()})

    def conjugate_labels(self) -> "PartitionMatrix":
        """Conjugate every basis label and every entry."""
        def flip(n, k):
            return basis_index(n)[conjugate_link(enumerate_cleaved(n)[k])]

        out = {}
        for (r, cols), v in self.entries.items():
            key = (flip(self.n_out, r), tuple(flip(n, k) for n, k in zip(self.n_in, cols)))
            out[key] = v.conjugate()
        return PartitionMatrix(self.n_out, self.n_in, out)

    def compose_at(self, i: int, other: "PartitionMatrix") -> "PartitionMatrix":
        """``self ∘_i other``: feed the output of ``other`` into input ``i`` (1-based)."""
        if not 1 <= i <= len(self.n_in):
            raise ValueError(f"no input {i}")
        if self.n_in[i - 1] != other.n_out:
            raise ValueError("signature mismatch")
        by_row: dict[int, list] = {}
        for (r, cols), v in other.entries.items():
            by_row.setdefault(r, []).append((cols, v))
        acc: dict = {}
        for (r, cols), v in self.entries.items():
            for tcols, w in by_row.get(cols[i - 1], ()):
                key = (r, cols[: i - 1] + tcols + cols[i:])
                acc[key] = acc.get(key, ZERO) + v * w
        n_in = self.n_in[: i - 1] + other.n_in + self.n_in[i:]
        return PartitionMatrix(self.n_out, n_in, acc)

    def __matmul__(self, other: "PartitionMatrix") -> "PartitionMatrix":
        if len(self.n_in) != 1:
            raise ValueError("matrix product needs a single input")
        return self.compose_at(1, other)

    def transpose_pairs(self) -> dict[tuple, HalfLaurent]:
        return {(cols, r): v for (r, cols), v in self.entries.items()}

    def column_vector(self, cols: tuple) -> ModuleVector:
        return ModuleVector((self.n_out,), {(r,): v for (r, c), v in self.entries.items() if c == tuple(cols)})

    def to_json(self) -> dict:
        return {
            "signature": list(self.signature),
            "entries": [
                {"row": r, "cols": list(c), "value": v.to_pairs()} for (r, c), v in self.entries.items()
            ],
        }

    def __repr__(self) -> str:
        return f"PartitionMatrix(signature={self.signature}, nonzero={len(self.entries)})"


def apply(Z: PartitionMatrix, v: ModuleVector) -> ModuleVector:
    if v.ns != Z.n_in:
        raise ValueError(f"basis mismatch: matrix takes {Z.n_in}, vector lives in {v.ns}")
    acc: dict = {}
    for (r, cols), z in Z.entries.items():
        c = v.coeffs.get(cols)
        if c is not None:
            acc[(r,)] = acc.get((r,), ZERO) + z * c
    return ModuleVector((Z.n_out,), acc)


@lru_cache(maxsize=4096)
def partition_map(P: PlanarDiagram) -> PartitionMatrix:
    """Z_P as an exact sparse matrix.

    One pass over fillings and decorations; free circles factor out as
    powers of q + q^-1.
    """
    acc: dict = {}
    m = len(P.boundaries)
    for sk in enumerate_fillings(P):
        hits = sk.hits
        traces = sk.traces
        for bits in product((0, 1), repeat=len(hits)):
            e = 0
            for h, b in zip(hits, bits):
                e += (h - 2) if b else (2 - h)
            idx = []
            for tr in traces:
                k = 0
                for c in tr.cycle_circles:
                    k = 2 * k + bits[c]
                idx.append(tr.offset + k)
            key = (idx[0], tuple(idx[1:m]))
            acc[key] = acc.get(key, ZERO) + qpow(e)
    if P.circles:
        factor = DELTA ** P.circles
        acc = {k: v * factor for k, v in acc.items()}
    return PartitionMatrix(P.boundaries[0], P.boundaries[1:], acc)


def pairing_matrix(n: int) -> PartitionMatrix:
    return partition_map(pairing_diagram(n))
