"""Abelianizations of G0 and G, and membership in the derived subgroups.

Both maps are letterwise sums over the generator tables below.  Membership
questions are answered from the realization wherever the word itself is not
canonical: integral germ translations detect G0 inside G, compact support is read off the
moved set, and the remaining y-exponent is the first coordinate of the G map.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from typing import NamedTuple

from ..errors import MarkerViolation, NonUnitGermSlope
from ..piecewise import germs, is_compactly_supported
from .realize import realize
from .words import GenLetter, Group, GroupWord, is_constant


class AbelImage(NamedTuple):
    a: int
    b: int
    c: int

    def __str__(self):
        return f"({self.a},{self.b},{self.c})"


class Subgroup(str, enum.Enum):
    F = "F"
    Fprime = "Fprime"
    G0 = "G0"
    G0prime = "G0prime"
    Gprime = "Gprime"
    Gsecond = "Gsecond"


def g0_image(letter: GenLetter) -> tuple[int, int, int]:
    """Image of a single G0 generator (exponent ignored)."""
    s = letter.sub
    if letter.kind == "y":
        if is_constant(s):
            raise MarkerViolation(f"{letter} is not a generator of G0")
        return 0, 0, 1
    if not s:
        return 1, 0, 0
    if not is_constant(s):
        return 0, 0, 0
    return (1, -1, 0) if s[0] == "0" else (0, 1, 0)


def g_image(letter: GenLetter) -> tuple[int, int, int]:
    """Image of a single G generator (exponent ignored)."""
    s = letter.sub
    if letter.kind == "x":
        return 0, 0, 0
    if not s:
        return -1, 1, 1
    if not is_constant(s):
        return 1, 0, 0
    return (0, 1, 0) if s[0] == "0" else (0, 0, 1)


TABLES = {Group.G0: g0_image, Group.G: g_image}


def abelianize(w: GroupWord, group: Group | None = None, table=None) -> AbelImage:
    """Sum of the table images of the letters, weighted by exponents.

    ``group`` defaults to the marker of ``w``; ``table`` overrides both with a
    custom map from letters to triples.
    """
    image = table or TABLES[Group(group or w.marker)]
    total = [0, 0, 0]
    for letter in w.letters:
        for i, v in enumerate(image(letter)):
            total[i] += letter.exp * v
    return AbelImage(*total)


def _integer_translations(w: GroupWord):
    pair = germs(realize(w))
    for g in pair:
        if g.slope != 1 or Fraction(g.translation).denominator != 1:
            return None
    return pair


def in_g0(w: GroupWord) -> bool:
    """Membership in G0: both germs at infinity are integer translations.

    The germ map sends G0 onto pairs of integer translations and every
    compactly supported element of G already lies in G0, so this is exact.
    ``y[1] y[11]^-1`` has unit slopes but translates by 1/2, and is excluded.
    """
    return w.is_g0_word or _integer_translations(w) is not None


def g0_abelianize(w: GroupWord) -> AbelImage:
    """The G0 map evaluated on any word representing an element of G0.

    For such elements the first two coordinates are the germ translations
    (tau-, tau+ - tau-) and the third equals the first coordinate of the G map.
    """
    if w.is_g0_word:
        return abelianize(w, Group.G0)
    pair = _integer_translations(w)
    if pair is None:
        raise NonUnitGermSlope(f"{w} does not lie in G0")
    lo, hi = pair.neg.translation, pair.pos.translation
    return AbelImage(int(lo), int(hi - lo), abelianize(w, Group.G).a)


def in_f(w: GroupWord) -> bool:
    """Thompson's F: every piece unimodular and every breakpoint rational."""
    f = realize(w)
    return (all(p.det == 1 for p in f.pieces)
            and all(b.is_rational for b in f.breakpoints))


def member(w: GroupWord, subgroup: Subgroup | str) -> bool:
    subgroup = Subgroup(subgroup)
    if subgroup is Subgroup.F:
        return in_f(w)
    if subgroup is Subgroup.Fprime:
        return in_f(w) and is_compactly_supported(realize(w))
    if subgroup is Subgroup.G0:
        return in_g0(w)
    if subgroup is Subgroup.Gprime:
        return abelianize(w, Group.G) == (0, 0, 0)
    # G0' and G'' coincide
    if not in_g0(w):
        return False
    return is_compactly_supported(realize(w)) and g0_abelianize(w) == (0, 0, 0)


def germ_pair_image(w: GroupWord) -> tuple[Fraction, Fraction]:
    """Germ coordinates ``(tau-, tau+ - tau-)`` of an element of G', in the basis x, x_1.

    The kernel is G''.  The values are exact rationals: commutators such as
    ``[y_1, x]`` translate by 1/2 near infinity, so they need not be integers.
    """
    pair = germs(realize(w))
    for g in pair:
        if g.slope != 1:
            raise NonUnitGermSlope(f"germ slope {g.slope} of {w} is not 1")
    lo, hi = pair.neg.translation, pair.pos.translation
    return lo, hi - lo
