"""Exact planar-algebra computations over Z[q^(1/2), q^(-1/2)]."""

from .ring import DELTA, ONE, Q, ZERO, HalfLaurent, qpow

__version__ = "0.1.0"
