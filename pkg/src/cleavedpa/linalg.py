"""Dense matrices over Z[q^(1/2), q^(-1/2)] and their rank over the fraction field."""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .ring import ONE, ZERO, HalfLaurent, divexact, eval_at

__all__ = [
    "RingMatrix",
    "fraction_free_rref",
    "rank",
    "evaluated_rank",
    "kernel_basis",
    "kernel_membership",
    "determinant",
    "GENERIC_POINTS",
]

# substitution points for q^(1/2) used to cross-check symbolic ranks
GENERIC_POINTS = (Fraction(3, 2), Fraction(-7, 5), Fraction(11, 3))


def _lift(x) -> HalfLaurent:
    return HalfLaurent(x) if isinstance(x, int) else x


class RingMatrix:
    """Rectangular HalfLaurent matrix with optional row and column labels."""

    __slots__ = ("rows", "row_labels", "col_labels")

    def __init__(self, rows: Iterable[Iterable], row_labels: Sequence | None = None, col_labels: Sequence | None = None):
        self.rows = [[_lift(x) for x in row] for row in rows]
        widths = {len(r) for r in self.rows}
        if len(widths) > 1:
            raise ValueError("ragged matrix")
        self.row_labels = list(row_labels) if row_labels is not None else None
        self.col_labels = list(col_labels) if col_labels is not None else None

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), (len(self.rows[0]) if self.rows else 0)

    @classmethod
    def identity(cls, n: int) -> "RingMatrix":
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def from_partition(cls, Z, order: Sequence | None = None, labels: Sequence | None = None) -> "RingMatrix":
        """Dense form of a one-input :class:`PartitionMatrix`.

        ``order`` lists basis indices in the desired order, applied to both
        rows and columns (the matrix must be square in that case).
        """
        if len(Z.n_in) != 1:
            raise ValueError("only single-input partition matrices are square")
        nrows, ncols = Z.shape
        if order is None:
            rows = [[Z[r, (c,)] for c in range(ncols)] for r in range(nrows)]
        else:
            rows = [[Z[r, (c,)] for c in order] for r in order]
        return cls(rows, labels, labels)

    def __getitem__(self, key):
        i, j = key
        return self.rows[i][j]

    def __eq__(self, other) -> bool:
        return isinstance(other, RingMatrix) and self.rows == other.rows

    def __matmul__(self, other: "RingMatrix") -> "RingMatrix":
        n, k = self.shape
        k2, m = other.shape
        if k != k2:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        out = []
        for i in range(n):
            row = []
            for j in range(m):
                acc = ZERO
                for t in range(k):
                    a = self.rows[i][t]
                    if a:
                        b = other.rows[t][j]
                        if b:
                            acc = acc + a * b
                row.append(acc)
            out.append(row)
        return RingMatrix(out, self.row_labels, other.col_labels)

    def __add__(self, other: "RingMatrix") -> "RingMatrix":
        return RingMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)], self.row_labels, self.col_labels)

    def scale(self, c) -> "RingMatrix":
        return RingMatrix([[c * a for a in r] for r in self.rows], self.row_labels, self.col_labels)

    def apply(self, v: Sequence) -> list[HalfLaurent]:
        if len(v) != self.shape[1]:
            raise ValueError("dimension mismatch")
        v = [_lift(x) for x in v]
        return [sum((a * b for a, b in zip(r, v) if a and b), ZERO) for r in self.rows]

    def transpose(self) -> "RingMatrix":
        return RingMatrix([list(c) for c in zip(*self.rows)], self.col_labels, self.row_labels)

    def stack(self, *others: "RingMatrix") -> "RingMatrix":
        rows = [list(r) for r in self.rows]
        for o in others:
            rows += [list(r) for r in o.rows]
        return RingMatrix(rows, None, self.col_labels)

    def is_zero(self) -> bool:
        return not any(x for r in self.rows for x in r)

    def evaluate(self, s) -> list[list[Fraction]]:
        return [[eval_at(x, s) for x in r] for r in self.rows]

    def to_pairs(self) -> list[list[list[list[int]]]]:
        return [[x.to_pairs() for x in r] for r in self.rows]

    def __repr__(self) -> str:
        return "RingMatrix(" + repr([[str(x) for x in r] for r in self.rows]) + ")"


def _size(p: HalfLaurent) -> tuple[int, int, int]:
    return (p.max_exponent() - p.min_exponent(), len(p.terms), max(abs(c) for _, c in p.items()))


def fraction_free_rref(M: RingMatrix):
    """Fraction-free Gauss-Jordan elimination.

    Returns ``(rows, pivots, d)`` where every pivot entry equals ``d`` and
    the entries of pivot columns are zero elsewhere.  Each update is a
    2x2 determinant divided exactly by the previous pivot, so all entries
    stay in the ring.  Pivots are chosen with the smallest degree span.
    """
    A = [list(r) for r in M.rows]
    nrows, ncols = M.shape
    prev = ONE
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        candidates = [i for i in range(r, nrows) if A[i][c]]
        if not candidates:
            continue
        best = min(candidates, key=lambda i: _size(A[i][c]))
        A[r], A[best] = A[best], A[r]
        p = A[r][c]
        for i in range(nrows):
            if i == r:
                continue
            a = A[i][c]
            row = A[i]
            prow = A[r]
            for j in range(ncols):
                x = p * row[j] - a * prow[j] if a else p * row[j]
                row[j] = divexact(x, prev) if x else ZERO
        prev = p
        pivots.append(c)
        r += 1
    return A, pivots, prev


def rank(M: RingMatrix) -> int:
    """Rank over the fraction field Q(q^(1/2))."""
    if not M.rows:
        return 0
    return len(fraction_free_rref(M)[1])


def _fraction_rank(rows: list[list[Fraction]]) -> int:
    A = [list(r) for r in rows]
    if not A:
        return 0
    nrows, ncols = len(A), len(A[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if A[i][c]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        for i in range(r + 1, nrows):
            if A[i][c]:
                f = A[i][c] / A[r][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[r])]
        r += 1
        if r == nrows:
            break
    return r


def evaluated_rank(M: RingMatrix, points: Iterable = GENERIC_POINTS) -> int:
    """Largest exact rational rank over the substitution points.

    Substituting a value never increases rank, so this is a lower bound that
    agrees with :func:`rank` unless every point is a root of the
    relevant minors.
    """
    return max(_fraction_rank(M.evaluate(s)) for s in points)


def _normalize(v: list[HalfLaurent]) -> list[HalfLaurent]:
    # divide out a common monomial and integer content, then fix the sign
    nz = [x for x in v if x]
    if not nz:
        return v
    low = min(x.min_exponent() for x in nz)
    g = 0
    for x in nz:
        for _, c in x.items():
            g = gcd(g, c)
    out = []
    for x in v:
        out.append(HalfLaurent({e - low: c // g for e, c in x.items()}) if x else ZERO)
    lead = next(x for x in out if x)
    if next(reversed(list(lead.items())))[1] < 0:
        out = [-x for x in out]
    return out


def kernel_basis(M: RingMatrix) -> list[list[HalfLaurent]]:
    """Ring vectors spanning the kernel over the fraction field.

    For each free column ``f`` the vector has ``d`` at ``f`` and ``-A[i][f]``
    at the i-th pivot column, read from the fraction-free reduced form.
    """
    nrows, ncols = M.shape
    A, pivots, d = fraction_free_rref(M) if nrows else ([], [], ONE)
    basis = []
    for f in range(ncols):
        if f in pivots:
            continue
        v = [ZERO] * ncols
        v[f] = d
        for i, c in enumerate(pivots):
            v[c] = -A[i][f]
        try:
            v = [divexact(x, d) for x in v]
        except ValueError:
            pass
        basis.append(_normalize(v))
    return basis


def kernel_membership(M: RingMatrix, v: Sequence) -> bool:
    return all(not x for x in M.apply(v))


def determinant(M: RingMatrix) -> HalfLaurent:
    """Bareiss determinant with row swaps tracked in the sign."""
    n, m = M.shape
    if n != m:
        raise ValueError("determinant needs a square matrix")
    if n == 0:
        return ONE
    A = [list(r) for r in M.rows]
    sign = 1
    prev = ONE
    for k in range(n - 1):
        if not A[k][k]:
            swap = next((i for i in range(k + 1, n) if A[i][k]), None)
            if swap is None:
                return ZERO
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = divexact(A[k][k] * A[i][j] - A[i][k] * A[k][j], prev)
        prev = A[k][k]
    return A[n - 1][n - 1] * sign
