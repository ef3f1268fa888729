"""Exact arithmetic in Z[q^(1/2), q^(-1/2)].

Every element is stored as a map from *doubled* exponents to integer
coefficients, so the monomial ``q^(e/2)`` is keyed by the integer ``e``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Union

__all__ = [
    "HalfLaurent",
    "ZERO",
    "ONE",
    "Q",
    "DELTA",
    "qpow",
    "conjugate",
    "eval_at",
    "divexact",
]

Scalar = Union["HalfLaurent", int]


class HalfLaurent:
    """Laurent polynomial in q^(1/2) with integer coefficients.

    Values are immutable and hashable.  ``terms`` never holds a zero
    coefficient, which makes equality a plain comparison of term maps.

    >>> (Q + Q**-1) ** 2
    q^2 + 2 + q^-2
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] | int = ()):
        if isinstance(terms, int):
            terms = {0: terms}
        acc: dict[int, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for e, c in items:
            if c:
                acc[int(e)] = acc.get(int(e), 0) + int(c)
        self._terms = {e: c for e, c in sorted(acc.items()) if c}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[int, int]) -> "HalfLaurent":
        # terms must already be free of zeros; sorting keeps repr stable
        obj = cls.__new__(cls)
        obj._terms = dict(sorted(terms.items()))
        obj._hash = None
        return obj

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def min_exponent(self) -> int:
        return next(iter(self._terms))

    def max_exponent(self) -> int:
        return next(reversed(self._terms))

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    # ring operations -------------------------------------------------

    @staticmethod
    def _coerce(other) -> "HalfLaurent | None":
        if isinstance(other, HalfLaurent):
            return other
        if isinstance(other, int):
            return HalfLaurent(other)
        return None

    def __add__(self, other: Scalar) -> "HalfLaurent":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        acc = dict(self._terms)
        for e, c in other._terms.items():
            v = acc.get(e, 0) + c
            if v:
                acc[e] = v
            else:
                acc.pop(e, None)
        return HalfLaurent._raw(acc)

    __radd__ = __add__

    def __neg__(self) -> "HalfLaurent":
        return HalfLaurent._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: Scalar) -> "HalfLaurent":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Scalar) -> "HalfLaurent":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other: Scalar) -> "HalfLaurent":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        acc: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                acc[e] = acc.get(e, 0) + c1 * c2
        return HalfLaurent._raw({e: c for e, c in acc.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "HalfLaurent":
        if k < 0:
            if not self.is_monomial():
                raise ValueError("only monomials are invertible")
            (e, c), = self._terms.items()
            if c not in (1, -1):
                raise ValueError("only unit monomials are invertible")
            return HalfLaurent({-e * -k: c ** -k})
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, e: int) -> "HalfLaurent":
        """Multiply by ``q^(e/2)``."""
        return HalfLaurent._raw({k + e: c for k, c in self._terms.items()})

    def conjugate(self) -> "HalfLaurent":
        return HalfLaurent._raw({-e: c for e, c in self._terms.items()})

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    # serialization ---------------------------------------------------

    def to_pairs(self) -> list[list[int]]:
        """``[[e, c], ...]`` ascending in the doubled exponent ``e``."""
        return [[e, c] for e, c in self._terms.items()]

    @classmethod
    def from_pairs(cls, pairs: Iterable[Iterable[int]]) -> "HalfLaurent":
        out = {}
        for pair in pairs:
            e, c = pair
            if e in out:
                raise ValueError(f"repeated exponent {e}")
            out[e] = c
        return cls(out)

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in sorted(self._terms.items(), reverse=True):
            if e == 0:
                mono = ""
            elif e == 2:
                mono = "q"
            elif e % 2 == 0:
                mono = f"q^{e // 2}"
            else:
                mono = f"q^({e}/2)"
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    __str__ = __repr__


def qpow(e2: int, coeff: int = 1) -> HalfLaurent:
    """The monomial ``coeff * q^(e2/2)``; note the doubled exponent."""
    return HalfLaurent({e2: coeff})


ZERO = HalfLaurent()
ONE = HalfLaurent({0: 1})
Q = qpow(2)
DELTA = Q + qpow(-2)


def conjugate(p: HalfLaurent) -> HalfLaurent:
    return p.conjugate()


def eval_at(p: HalfLaurent, s) -> Fraction:
    """Value of ``p`` with the rational ``s`` substituted for q^(1/2)."""
    s = Fraction(s)
    if s == 0:
        raise ZeroDivisionError("cannot substitute 0 for q^(1/2)")
    return sum((c * s ** e for e, c in p.items()), Fraction(0))


def _poly_divmod(num: list[Fraction], den: list[Fraction]):
    # dense coefficient lists, index = degree
    num = list(num)
    q = [Fraction(0)] * max(len(num) - len(den) + 1, 1)
    lead = den[-1]
    for k in range(len(num) - len(den), -1, -1):
        coef = num[k + len(den) - 1] / lead
        q[k] = coef
        if coef:
            for j, d in enumerate(den):
                num[k + j] -= coef * d
    return q, num


def divexact(a: HalfLaurent, b: HalfLaurent) -> HalfLaurent:
    """Quotient ``a / b`` in the Laurent ring; raises if ``b`` does not divide ``a``."""
    if b.is_zero():
        raise ZeroDivisionError("division by zero")
    if a.is_zero():
        return ZERO
    if b.is_monomial():
        (eb, cb), = b.items()
        out = {}
        for e, c in a.items():
            if c % cb:
                raise ValueError(f"{b} does not divide {a}")
            out[e - eb] = c // cb
        return HalfLaurent._raw(out)
    a0, b0 = a.min_exponent(), b.min_exponent()
    num = [Fraction(0)] * (a.max_exponent() - a0 + 1)
    for e, c in a.items():
        num[e - a0] = Fraction(c)
    den = [Fraction(0)] * (b.max_exponent() - b0 + 1)
    for e, c in b.items():
        den[e - b0] = Fraction(c)
    if len(num) < len(den):
        raise ValueError(f"{b} does not divide {a}")
    quot, rem = _poly_divmod(num, den)
    if any(rem):
        raise ValueError(f"{b} does not divide {a}")
    out = {}
    for k, c in enumerate(quot):
        if c:
            if c.denominator != 1:
                raise ValueError(f"{b} does not divide {a} over the integers")
            out[k + a0 - b0] = int(c)
    return HalfLaurent._raw(out)
