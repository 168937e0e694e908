"""Exact arithmetic on rationals and real quadratic irrationals.

A :class:`QuadExt` is the real number ``p + q*sqrt(d)`` with rational ``p``,
``q`` and a squarefree integer ``d >= 2`` (or ``q = d = 0`` for rationals).
Arithmetic is closed inside one field Q(sqrt(d)); ordering works across
different fields, using integer squaring only.

The projective point at infinity is represented by :data:`INF` (and its signed
twin :data:`NEG_INF`, used where a sequence or interval runs off to the left).
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import total_ordering
from math import isqrt

from .errors import DivisionByZero, MixedDiscriminant

Rational = Fraction

LESS, EQUAL, GREATER = -1, 0, 1


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def squarefree_split(n: int) -> tuple[int, int]:
    """Return ``(k, m)`` with ``n == k*k*m`` and ``m`` squarefree."""
    if n < 0:
        raise ValueError("negative radicand")
    if n == 0:
        return 0, 0
    k, m, rest = 1, 1, n
    p = 2
    while p * p * p <= rest:
        if rest % p == 0:
            e = 0
            while rest % p == 0:
                rest //= p
                e += 1
            k *= p ** (e // 2)
            m *= p ** (e % 2)
        p += 1 if p == 2 else 2
    # no prime below p divides rest and p**3 > rest: rest is 1, q, q*q' or q**2
    r = isqrt(rest)
    if rest > 1 and r * r == rest:
        k *= r
    else:
        m *= rest
    return k, m


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, str)):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


@total_ordering
class QuadExt:
    """Immutable real number ``p + q*sqrt(d)`` in canonical form."""

    __slots__ = ("p", "q", "d", "_hash")

    def __init__(self, p=0, q=0, d=0):
        p, q = _as_fraction(p), _as_fraction(q)
        if d < 0:
            raise ValueError("radicand must be nonnegative")
        if q == 0 or d == 0:
            q, d = Fraction(0), 0
        elif d == 1:
            p, q, d = p + q, Fraction(0), 0
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("QuadExt is immutable")

    # -- construction -----------------------------------------------------
    @classmethod
    def normalize(cls, p, q, n: int) -> "QuadExt":
        """Build ``p + q*sqrt(n)`` for any integer ``n >= 0``."""
        if n < 0:
            raise ValueError("radicand must be nonnegative")
        k, m = squarefree_split(n)
        return cls(p, _as_fraction(q) * k, m)

    @classmethod
    def sqrt_of(cls, x) -> "QuadExt":
        """Exact square root of a nonnegative rational."""
        x = _as_fraction(x)
        if x < 0:
            raise ValueError("square root of a negative number")
        # sqrt(a/b) = sqrt(a*b)/b
        return cls.normalize(0, Fraction(1, x.denominator), x.numerator * x.denominator)

    @property
    def is_rational(self) -> bool:
        return self.d == 0

    @property
    def is_finite(self) -> bool:
        return True

    def conjugate(self) -> "QuadExt":
        return QuadExt(self.p, -self.q, self.d)

    def norm(self) -> Fraction:
        return self.p * self.p - self.q * self.q * self.d

    # -- arithmetic -------------------------------------------------------
    def _common(self, other):
        if not isinstance(other, QuadExt):
            other = QuadExt(_as_fraction(other))
        if self.d and other.d and self.d != other.d:
            raise MixedDiscriminant(
                f"cannot combine Q(sqrt({self.d})) and Q(sqrt({other.d}))")
        return other, self.d or other.d

    def __add__(self, other):
        if isinstance(other, Infinity):
            return NotImplemented
        other, d = self._common(other)
        return QuadExt(self.p + other.p, self.q + other.q, d)

    __radd__ = __add__

    def __neg__(self):
        return QuadExt(-self.p, -self.q, self.d)

    def __sub__(self, other):
        if isinstance(other, Infinity):
            return NotImplemented
        other, d = self._common(other)
        return QuadExt(self.p - other.p, self.q - other.q, d)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Infinity):
            return NotImplemented
        other, d = self._common(other)
        p = self.p * other.p + self.q * other.q * d
        q = self.p * other.q + self.q * other.p
        return QuadExt(p, q, d)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Infinity):
            return NotImplemented
        other, d = self._common(other)
        den = other.p * other.p - other.q * other.q * d
        if den == 0:
            raise DivisionByZero("division by zero")
        num = self * QuadExt(other.p, -other.q, d)
        return QuadExt(num.p / den, num.q / den, d)

    def __rtruediv__(self, other):
        return QuadExt(_as_fraction(other)) / self

    # -- comparison -------------------------------------------------------
    def sign(self) -> int:
        return _sign_sqrt(self.p, self.q, self.d)

    def __eq__(self, other):
        if isinstance(other, QuadExt):
            return self.p == other.p and self.q == other.q and self.d == other.d
        if isinstance(other, (int, Fraction)):
            return self.d == 0 and self.p == other
        return NotImplemented

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash(self.p) if self.d == 0 else hash((self.p, self.q, self.d))
            object.__setattr__(self, "_hash", h)
        return h

    def __lt__(self, other):
        if isinstance(other, Infinity):
            return other.sign > 0
        if isinstance(other, (int, Fraction)):
            other = QuadExt(other)
        if not isinstance(other, QuadExt):
            return NotImplemented
        return quad_cmp(self, other) < 0

    # -- conversions ------------------------------------------------------
    def floor(self) -> int:
        if self.d == 0:
            return self.p.numerator // self.p.denominator
        # approximate sqrt(d) to 64 bits, then settle exactly
        scale = 1 << 64
        approx = self.p + self.q * Fraction(isqrt(self.d * scale * scale), scale)
        n = approx.numerator // approx.denominator
        while QuadExt(n) > self:
            n -= 1
        while QuadExt(n + 1) <= self:
            n += 1
        return n

    def ceil(self) -> int:
        return -((-self).floor())

    def __float__(self):
        return float(self.p) + float(self.q) * self.d ** 0.5

    def to_decimal(self, digits: int = 12) -> str:
        """Decimal string correct to about ``digits`` significant places."""
        scale = 10 ** (digits + 4)
        if self.d:
            root = Fraction(isqrt(self.d * scale * scale), scale)
            value = self.p + self.q * root
        else:
            value = self.p
        return f"{float(value):.{digits}g}"

    def __str__(self):
        return format_quad(self)

    def __repr__(self):
        return f"QuadExt({format_quad(self)!r})"


@total_ordering
class Infinity:
    """A point at infinity; ``sign`` records which end it is approached from."""

    __slots__ = ("sign",)

    def __init__(self, sign: int = 1):
        object.__setattr__(self, "sign", 1 if sign > 0 else -1)

    def __setattr__(self, name, value):
        raise AttributeError("Infinity is immutable")

    is_finite = False
    is_rational = False

    def __neg__(self):
        return NEG_INF if self.sign > 0 else INF

    def __eq__(self, other):
        return isinstance(other, Infinity) and other.sign == self.sign

    def __hash__(self):
        return hash(("inf", self.sign))

    def __lt__(self, other):
        if isinstance(other, Infinity):
            return self.sign < other.sign
        if isinstance(other, (QuadExt, int, Fraction)):
            return self.sign < 0
        return NotImplemented

    def __str__(self):
        return "inf" if self.sign > 0 else "-inf"

    __repr__ = __str__


INF = Infinity(1)
NEG_INF = Infinity(-1)

ExtReal = "QuadExt | Infinity"


def quad_normalize(p, q, n: int) -> QuadExt:
    return QuadExt.normalize(p, q, n)


def _sign_sqrt(a: Fraction, b: Fraction, m: int) -> int:
    """Sign of ``a + b*sqrt(m)`` for integer ``m >= 0`` (not necessarily squarefree)."""
    sa = _sign(a)
    sb = _sign(b) if m else 0
    if sb == 0:
        return sa
    if sa == 0 or sa == sb:
        return sb
    return sa * _sign(a * a - b * b * m)


def _sign_two_roots(a: Fraction, b: Fraction, m: int, c: Fraction, n: int) -> int:
    """Sign of ``a + b*sqrt(m) + c*sqrt(n)``."""
    sb = _sign(b) if m else 0
    sc = _sign(c) if n else 0
    # sign of the radical part b*sqrt(m) + c*sqrt(n)
    if sb == 0:
        s_rad = sc
    elif sc == 0 or sb == sc:
        s_rad = sb
    else:
        s_rad = sb * _sign(b * b * m - c * c * n)
    sa = _sign(a)
    if s_rad == 0:
        return sa
    if sa == 0 or sa == s_rad:
        return s_rad
    # opposite signs: compare a^2 with (b sqrt m + c sqrt n)^2
    rest = a * a - b * b * m - c * c * n
    diff = _sign_sqrt(rest, -2 * b * c, m * n)
    if diff == 0:
        return 0
    return sa if diff > 0 else s_rad


def quad_cmp(a: QuadExt, b: QuadExt) -> int:
    """Exact three-way comparison, valid across different radicands."""
    if a.d == 0 and b.d == 0:
        return _sign(a.p - b.p)
    if a.d == b.d or a.d == 0 or b.d == 0:
        # a rational operand has q == 0, so this covers the one-field case
        return _sign_sqrt(a.p - b.p, a.q - b.q, a.d or b.d)
    return _sign_two_roots(a.p - b.p, a.q, a.d, -b.q, b.d)


def ext_cmp(a, b) -> int:
    """Three-way comparison on QuadExt and signed infinities."""
    if isinstance(a, Infinity) or isinstance(b, Infinity):
        sa = a.sign * 2 if isinstance(a, Infinity) else 0
        sb = b.sign * 2 if isinstance(b, Infinity) else 0
        return _sign(sa - sb)
    return quad_cmp(a, b)


def quad_arith(a: QuadExt, b: QuadExt, op: str) -> QuadExt:
    if op == "+":
        return a + b
    if op == "-":
        return a - b
    if op == "*":
        return a * b
    if op == "/":
        return a / b
    raise ValueError(f"unknown operator {op!r}")


def as_quad(x) -> QuadExt:
    if isinstance(x, (QuadExt, Infinity)):
        return x
    return QuadExt(_as_fraction(x))


# -- text form: "p+q*sqrt(d)" ---------------------------------------------

def format_quad(x) -> str:
    if isinstance(x, Infinity):
        return str(x)
    if x.d == 0:
        return str(x.p)
    q = x.q
    head = "" if x.p == 0 else str(x.p)
    sign = "-" if q < 0 else ("+" if head else "")
    mag = abs(q)
    coef = "" if mag == 1 else f"{mag}*"
    return f"{head}{sign}{coef}sqrt({x.d})"


_RAT = r"\d+(?:/\d+)?"
_RATIONAL_RE = re.compile(rf"[+-]?{_RAT}")
_RADICAL_RE = re.compile(rf"(?P<sign>[+-]?)(?:(?P<q>{_RAT})\*)?sqrt\((?P<d>\d+)\)")
_SUM_RE = re.compile(rf"(?P<p>[+-]?{_RAT})(?P<rad>[+-].*)")


def parse_quad(text: str):
    """Parse ``p``, ``p+q*sqrt(d)``, ``q*sqrt(d)``, ``inf`` or ``-inf``."""
    s = "".join(text.split()).lower()
    if s in ("inf", "+inf", "oo", "infinity"):
        return INF
    if s in ("-inf", "-oo", "-infinity"):
        return NEG_INF
    if _RATIONAL_RE.fullmatch(s):
        return QuadExt(Fraction(s))
    p, rad = Fraction(0), s
    m = _SUM_RE.fullmatch(s)
    if m and _RADICAL_RE.fullmatch(m.group("rad")):
        p, rad = Fraction(m.group("p")), m.group("rad")
    r = _RADICAL_RE.fullmatch(rad)
    if not r:
        raise ValueError(f"cannot parse number {text!r}")
    q = Fraction(r.group("q")) if r.group("q") else Fraction(1)
    if r.group("sign") == "-":
        q = -q
    return QuadExt.normalize(p, q, int(r.group("d")))
