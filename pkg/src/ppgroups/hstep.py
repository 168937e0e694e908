"""Step maps and commutator compactification in H(Z).

``gamma(r)`` and ``lambda_(r)`` interpolate between the identity near -inf
and translation by ``r`` near +inf through a single Moebius piece.  From them
come one-sided steps, and from those the gluing construction that rewrites
the commutator of two maps with matching translation germs as a product of
commutators of compactly supported maps.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil

from . import moebius
from .errors import BadSign, GermMismatch, NotAUnit, NotInPZ
from .moebius import MapClass, ProjMap
from .numeric import Infinity, QuadExt
from .piecewise import (PiecewisePP, commutator, compose, germs, glue,
                        is_compactly_supported, moved_set)


@dataclass(frozen=True)
class StepMap:
    """A step map with its provenance."""

    map: PiecewisePP
    kind: str  # "gamma" or "lambda"
    n: int
    r: Fraction

    @property
    def breakpoints(self):
        return self.map.breakpoints

    def __call__(self, t):
        return self.map(t)


def _rational(r) -> Fraction:
    return r if isinstance(r, Fraction) else Fraction(r)


def gamma_point(r) -> QuadExt:
    """The root in (0, 1) of ``x/(1-x) = x + r``, i.e. of ``x^2 + r x - r = 0``."""
    r = _rational(r)
    return QuadExt(-r / 2) + QuadExt.sqrt_of(r * r + 4 * r) / 2


def lambda_point(r) -> QuadExt:
    """The root in [-r, -r + 1] of ``x/(1+x) = x + r``, i.e. of ``x^2 + r x + r = 0``."""
    r = _rational(r)
    return QuadExt(-r / 2) + QuadExt.sqrt_of(r * r - 4 * r) / 2


def gamma_n(n: int, r) -> StepMap:
    """``gamma(r)`` conjugated by ``t -> t + n``."""
    r = _rational(r)
    if r <= 0:
        raise BadSign(f"gamma needs r > 0, got {r}")
    x = gamma_point(r)
    shift = ProjMap.translation(n)
    middle = moebius.conjugate(ProjMap(1, 0, -1, 1), shift)
    f = PiecewisePP([QuadExt(n), x + n], [ProjMap.identity(), middle, ProjMap.translation(r)])
    return StepMap(f, "gamma", n, r)


def lambda_n(n: int, r) -> StepMap:
    """``lambda_(r)`` conjugated by ``t -> t + n``."""
    r = _rational(r)
    if r >= 0:
        raise BadSign(f"lambda needs r < 0, got {r}")
    x = lambda_point(r)
    shift = ProjMap.translation(n)
    middle = moebius.conjugate(ProjMap(1, 0, 1, 1), shift)
    f = PiecewisePP([QuadExt(n), x + n], [ProjMap.identity(), middle, ProjMap.translation(r)])
    return StepMap(f, "lambda", n, r)


def gamma(r) -> StepMap:
    return gamma_n(0, r)


def lambda_(r) -> StepMap:
    return lambda_n(0, r)


def _step(n: int, r: Fraction) -> PiecewisePP:
    return (gamma_n(n, r) if r > 0 else lambda_n(n, r)).map


def step_right(r, p) -> PiecewisePP:
    """Identity left of some ``y < p``, translation by ``r`` on ``(p, inf)``."""
    r, p = _rational(r), _rational(p)
    if r == 0:
        raise BadSign("step size must be nonzero")
    n = ceil(p) - 2
    if r < 0:
        # the lambda breakpoint sits up to |r| + 1 to the right of n
        n -= ceil(-r)
    return _step(n, r)


def step_left(r, p) -> PiecewisePP:
    """Translation by ``r`` on ``(-inf, p)``, identity right of some ``z > p``."""
    r, p = _rational(r), _rational(p)
    if r == 0:
        raise BadSign("step size must be nonzero")
    return compose(PiecewisePP.translation(r), _step(ceil(p), r).inverse)


# -- compactification ------------------------------------------------------

@dataclass(frozen=True)
class Compactification:
    h1: PiecewisePP
    h2: PiecewisePP
    k1: PiecewisePP
    k2: PiecewisePP
    s1: PiecewisePP
    s2: PiecewisePP
    t1: PiecewisePP
    t2: PiecewisePP
    r: int
    s: int
    width: int


def _translation_germ(f: PiecewisePP, name: str) -> Fraction:
    neg, pos = germs(f)
    if neg.slope != 1 or pos.slope != 1:
        raise GermMismatch(f"{name} has a germ at infinity that is not a translation")
    if neg.translation != pos.translation:
        raise GermMismatch(
            f"{name} translates by {neg.translation} near -inf but {pos.translation} near +inf")
    return neg.translation


def _core_interval(maps) -> tuple[int, int]:
    points = [b for f in maps for b in f.breakpoints]
    if not points:
        return 0, 0
    return min(b.floor() for b in points), max(b.ceil() for b in points)


def _right(c, p):
    return step_right(c, p) if c else PiecewisePP.identity()


def _left(c, p):
    return step_left(c, p) if c else PiecewisePP.identity()


def _attempt(f, g, c1, c2, r, s, width):
    h1, h2 = _right(c1, r - width), _right(c2, r - width)
    k1, k2 = _left(c1, s + width), _left(c2, s + width)
    j1, j2 = glue(h1, f, r - width, r), glue(h2, g, r - width, r)
    l1, l2 = glue(f, k1, s, s + width), glue(g, k2, s, s + width)
    s1, s2 = glue(j1, l1, r, s), glue(j2, l2, r, s)
    t1, t2 = glue(h1, k1, r, s), glue(h2, k2, r, s)
    return Compactification(h1, h2, k1, k2, s1, s2, t1, t2, r, s, width)


def _disjoint(a: list, b: list) -> bool:
    return all(hi1 <= lo2 or hi2 <= lo1 for lo1, hi1 in a for lo2, hi2 in b)


def verify_compactification(f, g, rec: Compactification) -> bool:
    fg = commutator(f, g)
    hh = commutator(rec.h1, rec.h2)
    kk = commutator(rec.k1, rec.k2)
    ss = commutator(rec.s1, rec.s2)
    tt = commutator(rec.t1, rec.t2)
    return (ss == compose(compose(fg, hh), kk)
            and tt == compose(hh, kk)
            and is_compactly_supported(ss)
            and is_compactly_supported(tt)
            and all(is_compactly_supported(m) for m in (rec.s1, rec.s2, rec.t1, rec.t2))
            and _disjoint(moved_set(hh), moved_set(fg)))


def compactify_commutator(f: PiecewisePP, g: PiecewisePP,
                          max_doublings: int = 16) -> Compactification:
    """Compactly supported ``s1, s2, t1, t2`` with
    ``[s1, s2] = [f, g][h1, h2][k1, k2]`` and ``[t1, t2] = [h1, h2][k1, k2]``.

    ``f`` and ``g`` must be translations near both ends, by the same amount
    at each end.  The gluing width starts at ``2(|c1| + |c2|) + 1`` and is
    doubled until the identities hold exactly.
    """
    c1 = _translation_germ(f, "f")
    c2 = _translation_germ(g, "g")
    lo, hi = _core_interval([f, g, f.inverse, g.inverse])
    margin = ceil(abs(c1) + abs(c2)) + 1
    r, s = lo - margin, hi + margin
    width = 2 * (margin - 1) + 1
    for _ in range(max_doublings):
        rec = _attempt(f, g, c1, c2, r, s, width)
        if verify_compactification(f, g, rec):
            return rec
        width *= 2
    raise RuntimeError("compactification did not verify; gluing width kept growing")


# -- the set P_Z -----------------------------------------------------------

def in_P_Z(t) -> bool:
    """Fixed points of hyperbolic elements of PSL2(Z) are the real quadratic irrationals."""
    if isinstance(t, Infinity):
        return False
    return t.q != 0 and t.d >= 2


def _cf_state(t: QuadExt) -> tuple[int, int, int]:
    """Integers ``(P, Q, D)`` with ``t = (P + sqrt(D))/Q`` and ``Q | D - P^2``."""
    den = t.p.denominator * t.q.denominator
    A, B = int(t.p * den), int(t.q * den)
    D = B * B * t.d
    P, Q = (A, den) if B > 0 else (-A, -den)
    if (D - P * P) % Q:
        P, D, Q = P * abs(Q), D * Q * Q, Q * abs(Q)
    return P, Q, D


def hyperbolic_witness(t) -> ProjMap:
    """A hyperbolic integer matrix fixing ``t``, read off the continued-fraction period."""
    if not in_P_Z(t):
        raise NotInPZ(f"{t} is not a real quadratic irrational")
    P, Q, D = _cf_state(t)
    seen: dict[tuple[int, int], int] = {}
    quotients: list[int] = []
    while (P, Q) not in seen:
        seen[(P, Q)] = len(quotients)
        a = QuadExt.normalize(Fraction(P, Q), Fraction(1, Q), D).floor()
        quotients.append(a)
        P = a * Q - P
        Q = (D - P * P) // Q
    start = seen[(P, Q)]

    def product(qs):
        m = (1, 0, 0, 1)
        for a in qs:
            a1, b1, c1, d1 = m
            m = (a1 * a + b1, a1, c1 * a + d1, c1)
        return m

    head, period = product(quotients[:start]), product(quotients[start:])
    if len(quotients[start:]) % 2:
        a, b, c, d = period
        period = (a * a + b * c, a * b + b * d, c * a + d * c, c * b + d * d)
    a, b, c, d = head
    adj = (d, -b, -c, a)
    w = _mat_mul(_mat_mul(head, period), adj)
    witness = ProjMap(*w)
    # t solves c t^2 + (d - a) t - b = 0; avoids factoring the discriminant
    a, b, c, d = w
    if moebius.classify(witness) is not MapClass.HYPERBOLIC or c * t * t + (d - a) * t - b != 0:
        raise AssertionError(f"witness {witness} does not certify {t}")
    return witness


def _mat_mul(m, n):
    a, b, c, d = m
    e, f, g, h = n
    return (a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)


@dataclass(frozen=True)
class UnitDiagonal:
    """The matrix ``diag(c, 1/c)``, acting by ``t -> c^2 t``; entries in Q(sqrt 2)."""

    c: QuadExt

    @property
    def multiplier(self) -> QuadExt:
        return self.c * self.c

    @property
    def trace(self) -> QuadExt:
        return self.c + 1 / self.c

    @property
    def det(self) -> QuadExt:
        return QuadExt(1)

    @property
    def is_hyperbolic(self) -> bool:
        return self.trace * self.trace > 4 * self.det

    @property
    def fixes_infinity(self) -> bool:
        return True  # the lower-left entry is zero

    def __call__(self, t):
        if isinstance(t, Infinity):
            return t
        return self.multiplier * t


def units_check(c) -> UnitDiagonal:
    """For a unit ``c != +-1`` of Z[sqrt 2], the hyperbolic diagonal map fixing infinity."""
    c = c if isinstance(c, QuadExt) else QuadExt(c)
    if c.d not in (0, 2) or c.p.denominator != 1 or c.q.denominator != 1:
        raise NotAUnit(f"{c} is not in Z[sqrt(2)]")
    if abs(c.norm()) != 1:
        raise NotAUnit(f"{c} has norm {c.norm()}, not +-1")
    if c.d == 0:
        raise NotAUnit(f"{c} is a trivial unit")
    diag = UnitDiagonal(c)
    if not diag.is_hyperbolic:
        raise AssertionError(f"diag({c}, 1/{c}) is not hyperbolic")
    return diag
