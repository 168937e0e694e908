"""Orientation-preserving Moebius maps with exact integer matrices.

A :class:`ProjMap` stores ``t -> (a t + b)/(c t + d)`` as a primitive integer
matrix with positive determinant and a canonical sign, so two maps are equal
exactly when their stored entries are.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from math import gcd, lcm

from .errors import NoRealFixedPoint, NotAffine
from .numeric import INF, Infinity, QuadExt, as_quad


class MapClass(enum.Enum):
    IDENTITY = "identity"
    ELLIPTIC = "elliptic"
    PARABOLIC = "parabolic"
    HYPERBOLIC = "hyperbolic"


class ProjMap:
    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a, b, c, d):
        ints = [a, b, c, d]
        if not all(type(v) is int for v in ints):
            entries = [Fraction(v) for v in ints]
            den = lcm(*(e.denominator for e in entries))
            ints = [int(e * den) for e in entries]
            a, b, c, d = ints
        if a * d - b * c <= 0:
            raise ValueError(f"matrix [[{a},{b}],[{c},{d}]] is not orientation-preserving")
        g = gcd(*ints)
        lead = next(v for v in ints if v)
        if lead < 0:
            g = -g
        for name, v in zip(self.__slots__, ints):
            object.__setattr__(self, name, v // g)

    def __setattr__(self, name, value):
        raise AttributeError("ProjMap is immutable")

    @classmethod
    def identity(cls) -> "ProjMap":
        return cls(1, 0, 0, 1)

    @classmethod
    def translation(cls, r) -> "ProjMap":
        return cls(1, Fraction(r), 0, 1)

    @classmethod
    def scaling(cls, k) -> "ProjMap":
        return cls(Fraction(k), 0, 0, 1)

    @property
    def entries(self) -> tuple[int, int, int, int]:
        return self.a, self.b, self.c, self.d

    @property
    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    @property
    def trace(self) -> int:
        return self.a + self.d

    @property
    def is_identity(self) -> bool:
        return self.b == 0 and self.c == 0 and self.a == self.d

    @property
    def is_affine(self) -> bool:
        return self.c == 0

    @property
    def pole(self):
        """The point sent to infinity (``INF`` for affine maps)."""
        if self.c == 0:
            return INF
        return QuadExt(Fraction(-self.d, self.c))

    def __eq__(self, other):
        if not isinstance(other, ProjMap):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return f"ProjMap([[{self.a},{self.b}],[{self.c},{self.d}]])"

    def __str__(self):
        return f"[[{self.a},{self.b}],[{self.c},{self.d}]]"

    def formula(self) -> str:
        """Render as ``(a t + b)/(c t + d)``."""
        return f"({self.a} t + {self.b})/({self.c} t + {self.d})"

    def __call__(self, t):
        return apply(self, t)

    def __matmul__(self, other: "ProjMap") -> "ProjMap":
        return compose(self, other)


def apply(m: ProjMap, t):
    """Image of an extended real under ``m``; rational entries keep the field of ``t``."""
    a, b, c, d = m.entries
    if isinstance(t, Infinity):
        if c == 0:
            return t
        return QuadExt(Fraction(a, c))
    t = as_quad(t)
    if t.d == 0:
        n, m = t.p.numerator, t.p.denominator
        den = c * n + d * m
        if den == 0:
            return INF
        return QuadExt(Fraction(a * n + b * m, den))
    # (a t + b)/(c t + d) with t = p + q sqrt(D): multiply through by the conjugate
    p, q, D = t.p, t.q, t.d
    u, v = a * p + b, a * q
    w, z = c * p + d, c * q
    norm = w * w - z * z * D
    if norm == 0:
        return INF
    return QuadExt((u * w - v * z * D) / norm, (v * w - u * z) / norm, D)


def compose(m1: ProjMap, m2: ProjMap) -> ProjMap:
    """``m1`` after ``m2``."""
    a1, b1, c1, d1 = m1.entries
    a2, b2, c2, d2 = m2.entries
    return ProjMap(a1 * a2 + b1 * c2, a1 * b2 + b1 * d2,
                   c1 * a2 + d1 * c2, c1 * b2 + d1 * d2)


def invert(m: ProjMap) -> ProjMap:
    a, b, c, d = m.entries
    return ProjMap(d, -b, -c, a)


def conjugate(m: ProjMap, by: ProjMap) -> ProjMap:
    """``by . m . by^-1``"""
    return compose(compose(by, m), invert(by))


def classify(m: ProjMap) -> MapClass:
    if m.is_identity:
        return MapClass.IDENTITY
    disc = m.trace ** 2 - 4 * m.det
    if disc < 0:
        return MapClass.ELLIPTIC
    if disc == 0:
        return MapClass.PARABOLIC
    return MapClass.HYPERBOLIC


def fixed_points(m: ProjMap) -> list:
    """Fixed points in increasing order (``INF`` last when ``c == 0``)."""
    if m.is_identity:
        raise ValueError("every point is fixed by the identity")
    a, b, c, d = m.entries
    if c == 0:
        pts = [] if a == d else [QuadExt(Fraction(b, d - a))]
        return pts + [INF]
    disc = (a - d) ** 2 + 4 * b * c
    if disc < 0:
        raise NoRealFixedPoint(f"{m!r} is elliptic")
    # roots of c t^2 + (d - a) t - b = 0
    lo = QuadExt.normalize(Fraction(a - d, 2 * c), Fraction(-1, 2 * abs(c)), disc)
    hi = QuadExt.normalize(Fraction(a - d, 2 * c), Fraction(1, 2 * abs(c)), disc)
    return [lo] if lo == hi else [lo, hi]


def affine_germ(m: ProjMap) -> tuple[Fraction, Fraction]:
    """``(slope, translation)`` of an affine map."""
    if m.c != 0:
        raise NotAffine(f"{m!r} does not fix infinity")
    return Fraction(m.a, m.d), Fraction(m.b, m.d)
