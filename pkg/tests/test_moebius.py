from fractions import Fraction

import pytest
from hypothesis import assume, given, settings, strategies as st

from ppgroups import moebius
from ppgroups.errors import NoRealFixedPoint, NotAffine
from ppgroups.moebius import MapClass, ProjMap
from ppgroups.numeric import INF, QuadExt

GOLDEN_SECTION = QuadExt(Fraction(-1, 2), Fraction(1, 2), 5)  # breakpoint of gamma_1
C_PIECE = ProjMap(2, 0, 1, 1)  # t -> 2t/(t+1)


def test_canonical_storage():
    assert ProjMap(2, 0, 0, 2) == ProjMap.identity()
    assert ProjMap(-1, -1, 0, -1) == ProjMap(1, 1, 0, 1)
    assert ProjMap(Fraction(1, 2), 0, 0, 1).entries == (1, 0, 0, 2)


def test_rejects_orientation_reversal():
    with pytest.raises(ValueError):
        ProjMap(0, 1, 1, 0)


def test_apply_examples():
    assert moebius.apply(C_PIECE, Fraction(1, 2)) == QuadExt(Fraction(2, 3))
    assert moebius.apply(ProjMap(1, 1, 0, 1), INF) == INF
    assert moebius.apply(ProjMap(1, 0, -1, 1), GOLDEN_SECTION) == GOLDEN_SECTION + 1


def test_apply_pole_and_infinity():
    m = ProjMap(1, 0, -1, 1)
    assert moebius.apply(m, 1) == INF
    assert moebius.apply(m, INF) == QuadExt(-1)


def test_compose_and_invert_examples():
    assert moebius.compose(ProjMap(1, 1, 0, 1), ProjMap(1, -1, 0, 1)) == ProjMap.identity()
    assert moebius.invert(C_PIECE) == ProjMap(1, 0, -1, 2)
    assert moebius.compose(C_PIECE, C_PIECE) == ProjMap(4, 0, 3, 1)


@pytest.mark.parametrize("m, cls", [
    (ProjMap(1, 1, 0, 1), MapClass.PARABOLIC),
    (ProjMap(2, 1, 1, 1), MapClass.HYPERBOLIC),
    (ProjMap(3, 0, 0, 3), MapClass.IDENTITY),
    (ProjMap(0, -1, 1, 0), MapClass.ELLIPTIC),
])
def test_classify(m, cls):
    assert moebius.classify(m) is cls


def test_fixed_points_examples():
    assert moebius.fixed_points(ProjMap(2, 1, 1, 1)) == [(1 - QuadExt.sqrt_of(5)) / 2,
                                                         (1 + QuadExt.sqrt_of(5)) / 2]
    assert moebius.fixed_points(ProjMap(1, 1, 0, 1)) == [INF]
    with pytest.raises(NoRealFixedPoint):
        moebius.fixed_points(ProjMap(0, -1, 1, 0))


def test_gamma_one_breakpoint_is_a_hyperbolic_fixed_point():
    # x/(1-x) = x + 1 says the breakpoint is fixed by (t -> t+1)^-1 after t/(1-t)
    m = moebius.compose(moebius.invert(ProjMap(1, 1, 0, 1)), ProjMap(1, 0, -1, 1))
    assert moebius.classify(m) is MapClass.HYPERBOLIC
    assert GOLDEN_SECTION in moebius.fixed_points(m)
    # the product in the other order fixes the image x + 1 instead
    other = moebius.compose(ProjMap(1, 1, 0, 1), moebius.invert(ProjMap(1, 0, -1, 1)))
    assert other == ProjMap(2, 1, 1, 1)
    assert GOLDEN_SECTION + 1 in moebius.fixed_points(other)


def test_affine_germ():
    assert moebius.affine_germ(ProjMap(1, 1, 0, 1)) == (1, 1)
    assert moebius.affine_germ(ProjMap(2, 0, 0, 1)) == (2, 0)
    assert moebius.affine_germ(ProjMap.identity()) == (1, 0)
    with pytest.raises(NotAffine):
        moebius.affine_germ(C_PIECE)


small = st.integers(min_value=-6, max_value=6)


@st.composite
def proj_maps(draw):
    a, b, c, d = draw(small), draw(small), draw(small), draw(small)
    det = a * d - b * c
    assume(det != 0)
    if det < 0:
        a, b = -a, -b
    return ProjMap(a, b, c, d)


@st.composite
def points(draw):
    p = draw(st.fractions(min_value=-20, max_value=20, max_denominator=12))
    q = draw(st.fractions(min_value=-5, max_value=5, max_denominator=6))
    d = draw(st.sampled_from([0, 2, 3, 5]))
    return QuadExt.normalize(p, q, d)


@settings(max_examples=500)
@given(proj_maps(), proj_maps(), points())
def test_compose_acts_as_composition(m1, m2, t):
    assert moebius.apply(moebius.compose(m1, m2), t) == moebius.apply(m1, moebius.apply(m2, t))


@given(proj_maps(), points())
def test_inverse_undoes(m, t):
    assert moebius.apply(moebius.invert(m), moebius.apply(m, t)) == t


@given(proj_maps())
def test_fixed_points_are_fixed(m):
    assume(moebius.classify(m) not in (MapClass.IDENTITY, MapClass.ELLIPTIC))
    for t in moebius.fixed_points(m):
        assert moebius.apply(m, t) == t


@given(proj_maps(), st.integers(min_value=1, max_value=9))
def test_classify_is_scale_invariant(m, k):
    scaled = ProjMap(*(k * e for e in m.entries))
    assert scaled == m
    assert moebius.classify(scaled) is moebius.classify(m)
