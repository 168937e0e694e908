"""Words over the generators x_s, y_s and the defining relations between them.

Words act on binary sequences on the right: the leftmost letter acts first.
This is the convention under which the relations hold as written, e.g.
``y_s = x_s y_s0 y_s10^-1 y_s11``.

Text syntax: letters separated by whitespace, ``x[s]`` / ``y[s]`` with
``s`` a binary word, ``x`` meaning ``x[]``, and an optional ``^k`` exponent.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Iterable

from ..errors import MarkerViolation, WordSyntaxError
from ..symdyn import partial_action


class Group(str, enum.Enum):
    G0 = "g0"
    G = "g"


def is_constant(s: str) -> bool:
    """True for the empty word and for 0^n, 1^n."""
    return len(set(s)) <= 1


@dataclass(frozen=True)
class GenLetter:
    kind: str  # "x" or "y"
    sub: str
    exp: int = 1

    def __post_init__(self):
        if self.kind not in ("x", "y"):
            raise ValueError(f"unknown generator kind {self.kind!r}")
        if set(self.sub) - {"0", "1"}:
            raise ValueError(f"subscript {self.sub!r} is not binary")
        if self.exp == 0:
            raise ValueError("exponent must be nonzero")

    @property
    def base(self) -> tuple[str, str]:
        return self.kind, self.sub

    def inverse(self) -> "GenLetter":
        return GenLetter(self.kind, self.sub, -self.exp)

    def __str__(self):
        name = self.kind if not self.sub else f"{self.kind}[{self.sub}]"
        return name if self.exp == 1 else f"{name}^{self.exp}"


def x(sub: str = "", exp: int = 1) -> GenLetter:
    return GenLetter("x", sub, exp)


def y(sub: str = "", exp: int = 1) -> GenLetter:
    return GenLetter("y", sub, exp)


def free_reduce(letters: Iterable[GenLetter]) -> tuple[GenLetter, ...]:
    out: list[GenLetter] = []
    for letter in letters:
        if out and out[-1].base == letter.base:
            total = out[-1].exp + letter.exp
            out.pop()
            if total:
                out.append(GenLetter(letter.kind, letter.sub, total))
        else:
            out.append(letter)
    return tuple(out)


class GroupWord:
    """Freely reduced word tagged with the group it is meant to live in."""

    __slots__ = ("letters", "marker")

    def __init__(self, letters: Iterable[GenLetter] = (), marker: Group = Group.G):
        letters = free_reduce(letters)
        marker = Group(marker)
        if marker is Group.G0:
            for letter in letters:
                if letter.kind == "y" and is_constant(letter.sub):
                    raise MarkerViolation(
                        f"{letter} has a constant subscript and is not a generator of G0")
        self.letters = letters
        self.marker = marker

    def __iter__(self):
        return iter(self.letters)

    def __len__(self):
        return len(self.letters)

    def __bool__(self):
        return bool(self.letters)

    def __eq__(self, other):
        if not isinstance(other, GroupWord):
            return NotImplemented
        return self.letters == other.letters and self.marker == other.marker

    def __hash__(self):
        return hash((self.letters, self.marker))

    def __repr__(self):
        return f"GroupWord({format_word(self)!r}, {self.marker.name})"

    def __str__(self):
        return format_word(self)

    def __mul__(self, other: "GroupWord") -> "GroupWord":
        marker = Group.G0 if self.marker is other.marker is Group.G0 else Group.G
        return GroupWord(self.letters + other.letters, marker)

    def inverse(self) -> "GroupWord":
        return GroupWord([l.inverse() for l in reversed(self.letters)], self.marker)

    def __pow__(self, n: int) -> "GroupWord":
        base = self if n >= 0 else self.inverse()
        return GroupWord(base.letters * abs(n), self.marker)

    def units(self) -> list[GenLetter]:
        """Letters expanded to exponent +-1."""
        out = []
        for l in self.letters:
            unit = GenLetter(l.kind, l.sub, 1 if l.exp > 0 else -1)
            out.extend([unit] * abs(l.exp))
        return out

    def with_marker(self, marker: Group) -> "GroupWord":
        return GroupWord(self.letters, marker)

    @property
    def is_g0_word(self) -> bool:
        return all(l.kind == "x" or not is_constant(l.sub) for l in self.letters)


def commutator(u: GroupWord, v: GroupWord) -> GroupWord:
    """The word ``u v u^-1 v^-1``."""
    return u * v * u.inverse() * v.inverse()


_TOKEN = re.compile(r"([xy])(?:\[([01]*)\])?(?:\^([+-]?\d+))?")


def parse(text: str, marker: Group = Group.G) -> GroupWord:
    letters = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        if text[pos] == "1" and (pos + 1 == n or text[pos + 1].isspace()):
            pos += 1  # explicit identity
            continue
        m = _TOKEN.match(text, pos)
        if not m:
            raise WordSyntaxError(f"unexpected {text[pos]!r}", pos)
        end = m.end()
        if end < n and not text[end].isspace():
            raise WordSyntaxError(f"unexpected {text[end]!r}", end)
        exp = int(m.group(3)) if m.group(3) else 1
        if exp:
            letters.append(GenLetter(m.group(1), m.group(2) or "", exp))
        pos = end
    return GroupWord(letters, marker)


def format_word(w: GroupWord) -> str:
    return " ".join(str(l) for l in w.letters)


# -- relations --------------------------------------------------------------

def relation_instance(rid: int, s: str, t: str | None = None):
    """``(lhs, rhs)`` words of relation ``rid`` (1..5), or None when inapplicable."""
    W = lambda *letters: GroupWord(letters)
    if rid == 1:
        return W(x(s, 2)), W(x(s + "0"), x(s), x(s + "1"))
    if rid == 5:
        return W(y(s)), W(x(s), y(s + "0"), y(s + "10", -1), y(s + "11"))
    if t is None:
        raise ValueError(f"relation {rid} needs two subscripts")
    if rid in (2, 3):
        image = partial_action(t, s)
        if image is None:
            return None
        kind = x if rid == 2 else y
        return W(kind(t), x(s)), W(x(s), kind(image))
    if rid == 4:
        if s.startswith(t) or t.startswith(s):
            return None
        return W(y(s), y(t)), W(y(t), y(s))
    raise ValueError(f"no relation number {rid}")


def binary_words(max_len: int, min_len: int = 0):
    for n in range(min_len, max_len + 1):
        for i in range(2 ** n):
            yield format(i, f"0{n}b") if n else ""


def relation_instances(max_depth: int):
    """Every applicable ``(rid, s, t, lhs, rhs)`` with subscripts of length <= max_depth."""
    subs = list(binary_words(max_depth))
    for rid in (1, 5):
        for s in subs:
            yield (rid, s, None, *relation_instance(rid, s))
    for rid in (2, 3, 4):
        for s in subs:
            for t in subs:
                pair = relation_instance(rid, s, t)
                if pair is not None:
                    yield (rid, s, t, *pair)
