"""Realization of group words as piecewise projective maps of the line.

Each generator with nonempty subscript ``s`` is a local model on ``[0, inf]``
transported by a Moebius chart onto the interval ``I_s`` of reals whose
sequences start with ``s``; it is the identity off ``I_s``. ``x`` (empty
subscript) is translation by one, and ``y`` is defined through its expansion
``x y_0 y_10^-1 y_11``.
"""

from __future__ import annotations

from functools import lru_cache

from .. import moebius
from ..moebius import ProjMap
from ..numeric import Infinity, QuadExt
from ..piecewise import PiecewisePP, compose
from ..symdyn import tilde, word_matrix
from .words import GroupWord, parse

_HALF = QuadExt(1) / 2

# (breakpoints inside (0, inf), pieces) of the local models on [0, inf].
_LOCAL_X = ((_HALF, QuadExt(1)),
            (ProjMap(1, 0, -1, 1), ProjMap(3, -1, 1, 0), ProjMap(1, 1, 0, 1)))
_LOCAL_Y = ((), (ProjMap(2, 0, 0, 1),))


def _local_model(kind: str, sign: int):
    bps, pieces = _LOCAL_X if kind == "x" else _LOCAL_Y
    if sign > 0:
        return bps, pieces
    images = tuple(moebius.apply(p, b) for p, b in zip(pieces, bps))
    return images, tuple(moebius.invert(p) for p in pieces)


def chart(sub: str) -> ProjMap:
    """Orientation-preserving Moebius map sending ``[0, inf]`` onto ``I_sub``."""
    if not sub:
        raise ValueError("the empty subscript has no chart")
    rest = sub[1:]
    if sub[0] == "1":
        return word_matrix(rest)
    # t -> -1/t composed with the matrix of the swapped word, orientation kept
    flipped = word_matrix(tilde(rest))
    a, b, c, d = flipped.entries
    return ProjMap(-b, -a, d, c)


def cylinder(sub: str):
    """Endpoints ``(lo, hi)`` of ``I_sub``; unbounded ends are infinities."""
    if not sub:
        raise ValueError("the empty subscript names the whole line")
    k = chart(sub)
    lo, hi = moebius.apply(k, QuadExt(0)), moebius.apply(k, Infinity(1))
    if isinstance(lo, Infinity):
        lo = Infinity(-1)
    return lo, hi


@lru_cache(maxsize=None)
def realize_letter(kind: str, sub: str, sign: int = 1) -> PiecewisePP:
    """The map of ``kind_sub ** sign`` for ``sign`` in {1, -1}."""
    if not sub:
        if kind == "x":
            return PiecewisePP.translation(sign)
        expansion = realize(parse("x y[0] y[10]^-1 y[11]"))
        return expansion if sign > 0 else expansion.inverse
    k = chart(sub)
    kinv = moebius.invert(k)
    local_bps, local_pieces = _local_model(kind, sign)
    conj = [moebius.compose(moebius.compose(k, p), kinv) for p in local_pieces]
    lo, hi = cylinder(sub)
    bps: list = []
    pieces: list = []
    if not isinstance(lo, Infinity):
        bps.append(lo)
        pieces.append(ProjMap.identity())
    pieces.append(conj[0])
    for b, p in zip(local_bps, conj[1:]):
        bps.append(moebius.apply(k, b))
        pieces.append(p)
    if not isinstance(hi, Infinity):
        bps.append(hi)
        pieces.append(ProjMap.identity())
    return PiecewisePP(bps, pieces)


def realize(word: GroupWord) -> PiecewisePP:
    """Composite map; the leftmost letter acts first."""
    result = PiecewisePP.identity()
    for letter in word.letters:
        step = realize_letter(letter.kind, letter.sub, 1 if letter.exp > 0 else -1)
        for _ in range(abs(letter.exp)):
            result = compose(step, result)
    return result


def equal_words(u: GroupWord, v: GroupWord) -> bool:
    """Decide ``u = v`` in the group by comparing realizations."""
    return realize(u) == realize(v)
