"""Finitely-piecewise projective homeomorphisms of the real line.

A :class:`PiecewisePP` is a list of finite breakpoints ``t_1 < ... < t_n``
together with ``n + 1`` Moebius pieces, piece ``i`` acting on the ``i``-th
interval of the subdivision. Infinity is always an implicit cut and is fixed.
Every instance is in canonical form (adjacent pieces differ), so equality of
maps is equality of the stored data.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from fractions import Fraction
from functools import cached_property
from typing import NamedTuple, Sequence

from . import moebius
from .errors import (Discontinuous, GermNotAffine, GluingMismatch, InvalidMap,
                     NoRealFixedPoint, NotIncreasing)
from .moebius import ProjMap
from .numeric import INF, NEG_INF, Infinity, QuadExt, as_quad, format_quad, parse_quad


class Germ(NamedTuple):
    slope: Fraction
    translation: Fraction


class GermPair(NamedTuple):
    neg: Germ
    pos: Germ


class PiecewisePP:
    """Canonical piecewise projective homeomorphism of R fixing infinity.

    Use :func:`make` (or the constructor, which calls it) to build one; the
    breakpoints and pieces are validated and adjacent equal pieces merged.
    """

    def __init__(self, breakpoints: Sequence = (), pieces: Sequence[ProjMap] = None):
        if pieces is None:
            pieces = [ProjMap.identity()]
        bps, pcs = _canonicalize([as_quad(b) for b in breakpoints], list(pieces))
        _validate(bps, pcs)
        self.breakpoints: tuple[QuadExt, ...] = tuple(bps)
        self.pieces: tuple[ProjMap, ...] = tuple(pcs)

    @classmethod
    def _trusted(cls, breakpoints, pieces) -> "PiecewisePP":
        """Build from data already known to be a valid map (merging only)."""
        self = cls.__new__(cls)
        bps, pcs = _canonicalize(list(breakpoints), list(pieces))
        self.breakpoints = tuple(bps)
        self.pieces = tuple(pcs)
        return self

    # -- constructors -----------------------------------------------------
    @classmethod
    def identity(cls) -> "PiecewisePP":
        return cls()

    @classmethod
    def translation(cls, r) -> "PiecewisePP":
        return cls((), [ProjMap.translation(r)])

    @classmethod
    def affine(cls, slope, translation) -> "PiecewisePP":
        return cls((), [ProjMap(Fraction(slope), Fraction(translation), 0, 1)])

    # -- basic queries ----------------------------------------------------
    def intervals(self):
        """Yield ``(lo, hi, piece)`` for each interval of the subdivision."""
        edges = [NEG_INF, *self.breakpoints, INF]
        for i, piece in enumerate(self.pieces):
            yield edges[i], edges[i + 1], piece

    def piece_at(self, t) -> ProjMap:
        """The piece acting just to the right of ``t``."""
        if isinstance(t, Infinity):
            return self.pieces[0] if t.sign < 0 else self.pieces[-1]
        return self.pieces[bisect_right(self.breakpoints, t)]

    def __call__(self, t):
        return apply(self, t)

    @property
    def is_identity(self) -> bool:
        return not self.breakpoints and self.pieces[0].is_identity

    def __eq__(self, other):
        if not isinstance(other, PiecewisePP):
            return NotImplemented
        return self.breakpoints == other.breakpoints and self.pieces == other.pieces

    def __hash__(self):
        return hash((self.breakpoints, self.pieces))

    def __repr__(self):
        bps = ", ".join(format_quad(b) for b in self.breakpoints)
        return f"PiecewisePP([{bps}], {list(self.pieces)!r})"

    def __str__(self):
        return to_text(self)

    # -- group structure --------------------------------------------------
    def __matmul__(self, other: "PiecewisePP") -> "PiecewisePP":
        return compose(self, other)

    @cached_property
    def inverse(self) -> "PiecewisePP":
        return invert(self)

    def __pow__(self, n: int) -> "PiecewisePP":
        base = self if n >= 0 else self.inverse
        result = PiecewisePP.identity()
        for _ in range(abs(n)):
            result = compose(base, result)
        return result


def make(breakpoints, pieces) -> PiecewisePP:
    return PiecewisePP(breakpoints, pieces)


def _canonicalize(bps: list, pcs: list) -> tuple[list, list]:
    if len(pcs) != len(bps) + 1:
        raise InvalidMap(f"{len(bps)} breakpoints need {len(bps) + 1} pieces, got {len(pcs)}")
    for left, right in zip(bps, bps[1:]):
        if not left < right:
            raise InvalidMap("breakpoints must be strictly increasing", right)
    out_b, out_p = [], [pcs[0]]
    for b, p in zip(bps, pcs[1:]):
        if p == out_p[-1]:
            continue
        out_b.append(b)
        out_p.append(p)
    return out_b, out_p


def _validate(bps: list, pcs: list) -> None:
    if not pcs[0].is_affine:
        raise GermNotAffine("piece at -infinity is not affine",
                            bps[0] if bps else None)
    if not pcs[-1].is_affine:
        raise GermNotAffine("piece at +infinity is not affine",
                            bps[-1] if bps else None)
    for i, b in enumerate(bps):
        left, right = pcs[i], pcs[i + 1]
        if moebius.apply(left, b) != moebius.apply(right, b):
            raise Discontinuous(
                f"pieces {left} and {right} disagree at {format_quad(b)}", b)
    edges = [NEG_INF, *bps, INF]
    for i, p in enumerate(pcs):
        if p.c == 0:
            continue
        pole = p.pole
        lo, hi = edges[i], edges[i + 1]
        if lo <= pole <= hi:
            raise NotIncreasing(
                f"piece {p} has its pole {format_quad(pole)} in "
                f"[{format_quad(lo)}, {format_quad(hi)}]", lo)


# -- evaluation and group operations --------------------------------------

def apply(f: PiecewisePP, t):
    if isinstance(t, Infinity):
        return t
    t = as_quad(t)
    return moebius.apply(f.pieces[bisect_right(f.breakpoints, t)], t)


def compose(f: PiecewisePP, g: PiecewisePP) -> PiecewisePP:
    """``f`` after ``g``."""
    images = _breakpoint_images(g)
    cuts = set(g.breakpoints)
    for t in f.breakpoints:
        i = bisect_left(images, t)
        if i < len(images) and images[i] == t:
            cuts.add(g.breakpoints[i])
        else:
            cuts.add(moebius.apply(moebius.invert(g.pieces[i]), t))
    cuts = sorted(cuts)
    pieces = []
    for k in range(len(cuts) + 1):
        if k == 0:
            gi, fi = 0, 0
        else:
            left = cuts[k - 1]
            gi = bisect_right(g.breakpoints, left)
            image = moebius.apply(g.pieces[gi], left)
            fi = bisect_right(f.breakpoints, image)
        pieces.append(moebius.compose(f.pieces[fi], g.pieces[gi]))
    return PiecewisePP._trusted(cuts, pieces)


def _breakpoint_images(f: PiecewisePP) -> list:
    return [moebius.apply(f.pieces[i], b) for i, b in enumerate(f.breakpoints)]


def invert(f: PiecewisePP) -> PiecewisePP:
    return PiecewisePP._trusted(_breakpoint_images(f),
                                [moebius.invert(p) for p in f.pieces])


def commutator(f: PiecewisePP, g: PiecewisePP) -> PiecewisePP:
    """``f g f^-1 g^-1`` as a composition of functions."""
    return compose(compose(f, g), compose(f.inverse, g.inverse))


def conjugate(f: PiecewisePP, g: PiecewisePP) -> PiecewisePP:
    """``g f g^-1``"""
    return compose(compose(g, f), g.inverse)


def equal(f: PiecewisePP, g: PiecewisePP) -> bool:
    return f == g


# -- supports and germs ---------------------------------------------------

def moved_set(f: PiecewisePP) -> list[tuple]:
    """Maximal open intervals of points moved by ``f``, left to right."""
    fixed = []
    for lo, hi, piece in f.intervals():
        if piece.is_identity:
            fixed.append((lo, hi))
            continue
        try:
            pts = moebius.fixed_points(piece)
        except NoRealFixedPoint:
            pts = []
        fixed.extend((p, p) for p in pts if not isinstance(p, Infinity) and lo <= p <= hi)
    fixed.sort(key=lambda seg: (seg[0], seg[1]))
    merged = []
    for lo, hi in fixed:
        if merged and lo <= merged[-1][1]:
            if hi > merged[-1][1]:
                merged[-1] = (merged[-1][0], hi)
        else:
            merged.append((lo, hi))
    moved, cursor = [], NEG_INF
    for lo, hi in merged:
        if cursor < lo:
            moved.append((cursor, lo))
        cursor = hi
    if cursor < INF:
        moved.append((cursor, INF))
    return moved


def is_compactly_supported(f: PiecewisePP) -> bool:
    return all(not isinstance(lo, Infinity) and not isinstance(hi, Infinity)
               for lo, hi in moved_set(f))


def germs(f: PiecewisePP) -> GermPair:
    return GermPair(Germ(*moebius.affine_germ(f.pieces[0])),
                    Germ(*moebius.affine_germ(f.pieces[-1])))


def _restriction(f: PiecewisePP, lo, hi):
    """Breakpoints strictly inside ``(lo, hi)`` and the pieces covering ``[lo, hi]``."""
    start = bisect_right(f.breakpoints, lo)
    inner = [b for b in f.breakpoints[start:] if b < hi]
    return inner, list(f.pieces[start:start + len(inner) + 1])


def glue(f: PiecewisePP, g: PiecewisePP, lo, hi) -> PiecewisePP:
    """Agree with ``f`` left of ``hi`` and with ``g`` right of ``lo``.

    ``f`` and ``g`` must coincide on ``[lo, hi]``.
    """
    lo, hi = as_quad(lo), as_quad(hi)
    if not lo < hi:
        raise GluingMismatch("gluing interval must have lo < hi")
    if _restriction(f, lo, hi) != _restriction(g, lo, hi):
        raise GluingMismatch(
            f"maps differ on [{format_quad(lo)}, {format_quad(hi)}]")
    cut_f = bisect_left(f.breakpoints, hi)
    cut_g = bisect_right(g.breakpoints, hi)
    bps = [*f.breakpoints[:cut_f], hi, *g.breakpoints[cut_g:]]
    pieces = [*f.pieces[:cut_f + 1], *g.pieces[cut_g:]]
    return PiecewisePP(bps, pieces)


# -- text format ----------------------------------------------------------

def to_text(f: PiecewisePP) -> str:
    """One line per piece: ``interval := [[a,b],[c,d]]``."""
    lines = []
    for lo, hi, piece in f.intervals():
        left = "(" if isinstance(lo, Infinity) else "["
        right = ")" if isinstance(hi, Infinity) else "]"
        lines.append(f"{left}{format_quad(lo)}, {format_quad(hi)}{right} := {piece}")
    return "\n".join(lines)


def parse_text(text: str) -> PiecewisePP:
    bps, pieces = [], []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            interval, matrix = (s.strip() for s in line.split(":=", 1))
            lo_s, hi_s = interval[1:-1].split(",")
            entries = matrix.replace("[", " ").replace("]", " ").replace(",", " ").split()
            a, b, c, d = (Fraction(e) for e in entries)
        except ValueError as exc:
            raise ValueError(f"line {lineno}: cannot parse {line!r}") from exc
        lo, hi = parse_quad(lo_s), parse_quad(hi_s)
        if bps and lo != bps[-1]:
            raise ValueError(f"line {lineno}: interval does not continue the previous one")
        if not bps and lo != NEG_INF:
            raise ValueError(f"line {lineno}: first interval must start at -inf")
        pieces.append(ProjMap(a, b, c, d))
        bps.append(hi)
    if not pieces or bps[-1] != INF:
        raise ValueError("last interval must end at inf")
    return PiecewisePP(bps[:-1], pieces)
