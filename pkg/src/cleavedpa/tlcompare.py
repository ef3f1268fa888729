"""Temperley-Lieb planar algebra at δ = q + q^-1 and its map into I_{2n}.

For n = 2 the module also carries the reference generator matrices
M1, M2, M3 in the named basis C++, C-+, C+-, C--, D+, D-, A+, A-, B++,
B+-, B-+, B--, and the kernel vectors quoted alongside them, so that
both can be checked against the computed maps.
"""

from __future__ import annotations

from itertools import product
from typing import Sequence

from .cleaved import NAMED_ORDER_N2, basis_index, enumerate_cleaved, label, named_basis
from .combinatorics import Matching, enumerate_noncrossing
from .diagram import PlanarDiagram, compose, cupcap_diagram, matching_diagram, validate
from .linalg import RingMatrix, determinant, evaluated_rank, kernel_basis, kernel_membership, rank
from .partition import partition_map
from .ring import DELTA, ONE, ZERO, HalfLaurent, divexact, qpow

__all__ = [
    "tl_basis",
    "tl_partition",
    "tl_to_I",
    "tl_generator_diagrams",
    "tl_generator_matrices",
    "generator_positions",
    "REFERENCE_MATRICES",
    "REFERENCE_KERNELS",
    "reference_matrix",
    "named_vector",
    "format_named_vector",
    "kernel_report",
    "joint_nullity",
    "quotient_determinant",
]


def tl_basis(n: int) -> tuple[Matching, ...]:
    return enumerate_noncrossing(n)


def _output_matching(P: PlanarDiagram) -> Matching:
    return Matching.from_pairs([(a[1], b[1]) for a, b in P.arcs], P.boundaries[0])


def tl_partition(P: PlanarDiagram) -> RingMatrix:
    """Z_P on Temperley-Lieb modules: glue matchings in, count circles, read the output."""
    validate(P)
    n0, inner = P.boundaries[0], P.boundaries[1:]
    rows = tl_basis(n0)
    row_of = {m: k for k, m in enumerate(rows)}
    cols = list(product(*(tl_basis(n) for n in inner)))
    out = [[ZERO] * len(cols) for _ in rows]
    for j, fills in enumerate(cols):
        D = P
        for i in range(len(inner), 0, -1):
            D = compose(D, i, PlanarDiagram((inner[i - 1],), matching_diagram(fills[i - 1]).arcs))
        out[row_of[_output_matching(D)]][j] = DELTA ** D.circles
    return RingMatrix(out, [str(m) for m in rows], [" ".join(str(m) for m in c) for c in cols])


def _named_order(n: int):
    if n == 2:
        idx = basis_index(2)
        return [idx[link] for link in named_basis()], list(NAMED_ORDER_N2)
    links = enumerate_cleaved(n)
    return list(range(len(links))), [label(l) or str(k) for k, l in enumerate(links)]


def tl_to_I(n: int) -> RingMatrix:
    """Columns Z_m(1) for the planar matchings m; rows in the named basis order."""
    order, names = _named_order(n)
    cols = []
    for m in tl_basis(n):
        Z = partition_map(matching_diagram(m))
        cols.append([Z[r, ()] for r in order])
    return RingMatrix([list(r) for r in zip(*cols)], names, [str(m) for m in tl_basis(n)])


def tl_generator_diagrams(n: int) -> list[PlanarDiagram]:
    """Cup-cap diagrams at positions (1,2), (2,3), ..., (2n-1, 2n)."""
    return [cupcap_diagram(n, i) for i in range(1, 2 * n)]


def _generator_matrix(n: int, position: int) -> RingMatrix:
    order, names = _named_order(n)
    return RingMatrix.from_partition(partition_map(cupcap_diagram(n, position)), order, names)


# Reference data for n = 2, rows and columns in NAMED_ORDER_N2.
# Tokens: h = q^(1/2), H = q^(-1/2), q, Q = q^-1.
_TOKENS = {"0": ZERO, "1": ONE, "q": qpow(2), "Q": qpow(-2), "h": qpow(1), "H": qpow(-1)}

_M1 = """
q 0 1 0 0 0 h 0 0 0 0 0
0 q 0 1 0 0 0 h 0 0 0 0
1 0 Q 0 0 0 H 0 0 0 0 0
0 1 0 Q 0 0 0 H 0 0 0 0
h 0 H 0 0 0 1 0 0 0 0 0
0 h 0 H 0 0 0 1 0 0 0 0
"""
_M2 = """
0 0 0 0 1 0 0 0 h H 0 0
0 0 0 0 0 1 0 0 0 0 h H
0 0 0 0 h 0 0 0 q 1 0 0
0 0 0 0 H 0 0 0 1 Q 0 0
0 0 0 0 0 h 0 0 0 0 q 1
0 0 0 0 0 H 0 0 0 0 1 Q
"""
_M3 = """
q 1 0 0 0 0 h 0 0 0 0 0
1 Q 0 0 0 0 H 0 0 0 0 0
0 0 q 1 0 0 0 h 0 0 0 0
0 0 1 Q 0 0 0 H 0 0 0 0
h H 0 0 0 0 1 0 0 0 0 0
0 0 h H 0 0 0 1 0 0 0 0
"""
_ZERO_ROWS = "\n".join(["0 " * 12] * 6)


def _read(text: str) -> list[list[HalfLaurent]]:
    return [[_TOKENS[t] for t in line.split()] for line in text.strip().splitlines()]


REFERENCE_MATRICES = {
    "M1": _read(_M1) + _read(_ZERO_ROWS),
    "M2": _read(_ZERO_ROWS) + _read(_M2),
    "M3": _read(_M3) + _read(_ZERO_ROWS),
}

# Kernel spanning sets as quoted: each vector is a list of (label, coefficient token).
REFERENCE_KERNELS = {
    "M1": [
        [("C++", "1"), ("A+", "-h")],
        [("C+-", "1"), ("A+", "-H")],
        [("C-+", "1"), ("A-", "-h")],
        [("C--", "1"), ("A-", "-H")],
        [("D+", "1")], [("D-", "1")],
        [("B++", "1")], [("B+-", "1")], [("B-+", "1")], [("B--", "1")],
    ],
    "M2": [
        [("C++", "1")], [("C-+", "1")], [("C+-", "1")], [("C--", "1")],
        [("A+", "1")], [("A-", "1")],
        [("B++", "1"), ("D+", "-h")],
        [("B+-", "1"), ("D+", "-H")],
        [("B-+", "1"), ("D-", "-h")],
        [("B--", "1"), ("D-", "-H")],
    ],
    "M3": [
        [("C++", "1"), ("A+", "-h")],
        [("C-+", "1"), ("A+", "-H")],
        [("C+-", "1"), ("A-", "-h")],
        [("C--", "1"), ("A-", "-H")],
        [("D+", "1")], [("D-", "1")],
        [("B++", "1")], [("B+-", "1")], [("B-+", "1")], [("B--", "1")],
    ],
    "joint": [
        [("B++", "1"), ("D+", "-h")],
        [("B+-", "1"), ("D+", "-H")],
        [("B-+", "1"), ("D-", "-h")],
        [("B--", "1"), ("D-", "-H")],
        [("C++", "1"), ("A+", "-h")],
        [("C--", "1"), ("A-", "-H")],
        [("C-+", "1"), ("C+-", "1"), ("A+", "-H"), ("A-", "-h")],
    ],
}


def _coeff(token: str) -> HalfLaurent:
    return -_TOKENS[token[1:]] if token.startswith("-") else _TOKENS[token]


def named_vector(terms) -> list[HalfLaurent]:
    """Coordinates in NAMED_ORDER_N2 of a combination of named generators."""
    v = [ZERO] * len(NAMED_ORDER_N2)
    for name, c in terms:
        c = _coeff(c) if isinstance(c, str) else c
        v[NAMED_ORDER_N2.index(name)] += c
    return v


def format_named_vector(v: Sequence[HalfLaurent], names: Sequence[str] = NAMED_ORDER_N2) -> str:
    parts = [f"({c})*I[{name}]" for name, c in zip(names, v) if c]
    return " + ".join(parts) if parts else "0"


def reference_matrix(name: str) -> RingMatrix:
    return RingMatrix(REFERENCE_MATRICES[name], NAMED_ORDER_N2, NAMED_ORDER_N2)


def generator_positions() -> dict[str, int]:
    """Which cup-cap position reproduces each reference matrix exactly."""
    found = {}
    for name in REFERENCE_MATRICES:
        ref = reference_matrix(name)
        hits = [p for p in (1, 2, 3) if _generator_matrix(2, p) == ref]
        if len(hits) != 1:
            raise AssertionError(f"{name} is reproduced by positions {hits}")
        found[name] = hits[0]
    return found


def tl_generator_matrices(n: int) -> list[RingMatrix]:
    """Matrices of the cup-cap generators on I_{2n}.

    For n = 2 they come in the order M1, M2, M3 of the reference data;
    otherwise by position 1..2n-1.
    """
    if n < 1:
        raise ValueError("Temperley-Lieb generators need n >= 1")
    if n == 2:
        pos = generator_positions()
        return [_generator_matrix(2, pos[name]) for name in ("M1", "M2", "M3")]
    return [_generator_matrix(n, p) for p in range(1, 2 * n)]


def kernel_report() -> list[dict]:
    """Check every quoted kernel vector against the computed matrices.

    ``joint`` vectors are tested against all three matrices.
    """
    mats = dict(zip(("M1", "M2", "M3"), tl_generator_matrices(2)))
    report = []
    for name, vectors in REFERENCE_KERNELS.items():
        targets = list(mats) if name == "joint" else [name]
        for terms in vectors:
            v = named_vector(terms)
            ok = all(kernel_membership(mats[t], v) for t in targets)
            alternatives = []
            if not ok:
                alternatives = [t for t in mats if kernel_membership(mats[t], v)]
            report.append(
                {"matrix": name, "vector": format_named_vector(v), "in_kernel": ok, "in_kernels_of": alternatives}
            )
    return report


def joint_nullity(mats: Sequence[RingMatrix] | None = None) -> int:
    mats = list(mats) if mats is not None else tl_generator_matrices(2)
    stacked = mats[0].stack(*mats[1:])
    r = rank(stacked)
    if evaluated_rank(stacked) != r:
        raise AssertionError("symbolic and evaluated ranks disagree")
    return stacked.shape[1] - r


def quotient_determinant() -> HalfLaurent:
    """det of [image generator | kernel generator] for the cup-cap map on I_2."""
    image = [row[0] for row in tl_to_I(1).rows]
    M = _generator_matrix(1, 1)
    (kernel,) = kernel_basis(M)
    target = [-qpow(-1), qpow(1)]
    unit = divexact(target[0], kernel[0])
    if not unit.is_monomial() or [unit * x for x in kernel] != target:
        raise AssertionError(f"kernel generator {kernel} is not a unit multiple of {target}")
    return determinant(RingMatrix([[image[0], target[0]], [image[1], target[1]]]))
