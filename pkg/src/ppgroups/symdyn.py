"""Eventually periodic binary sequences and the x/y transducers acting on them.

Sequences are written ``pre(per)``, e.g. ``10(01)`` for 10010101...; the
preperiod may be empty: ``(10)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from . import moebius
from .moebius import ProjMap
from .numeric import Infinity

_SWAP = str.maketrans("01", "10")


def _primitive_root(word: str) -> str:
    n = len(word)
    for k in range(1, n + 1):
        if n % k == 0 and word[:k] * (n // k) == word:
            return word[:k]
    return word


@dataclass(frozen=True)
class EvpSeq:
    """The infinite sequence ``pre + per + per + ...`` (always canonical)."""

    pre: str
    per: str

    def __post_init__(self):
        if not self.per:
            raise ValueError("period must be nonempty")
        if set(self.pre + self.per) - {"0", "1"}:
            raise ValueError("sequences are over the alphabet {0, 1}")
        pre, per = self.pre, _primitive_root(self.per)
        while pre and pre[-1] == per[-1]:
            pre, per = pre[:-1], per[-1] + per[:-1]
        object.__setattr__(self, "pre", pre)
        object.__setattr__(self, "per", per)

    @classmethod
    def parse(cls, text: str) -> "EvpSeq":
        m = re.fullmatch(r"\s*([01]*)\(([01]+)\)\s*", text)
        if not m:
            raise ValueError(f"cannot parse sequence {text!r}; expected e.g. 10(01)")
        return cls(m.group(1), m.group(2))

    def __str__(self):
        return f"{self.pre}({self.per})"

    def render(self, min_pre: int = 0) -> str:
        """Like ``str`` but writing out at least ``min_pre`` letters before the period."""
        k = max(len(self.pre), min_pre)
        return f"{self.prefix(k)}({self.drop(k).per})"

    def letter(self, i: int) -> str:
        if i < len(self.pre):
            return self.pre[i]
        return self.per[(i - len(self.pre)) % len(self.per)]

    def prefix(self, n: int) -> str:
        return "".join(self.letter(i) for i in range(n))

    def startswith(self, word: str) -> bool:
        return self.prefix(len(word)) == word

    def drop(self, n: int) -> "EvpSeq":
        if n <= len(self.pre):
            return EvpSeq(self.pre[n:], self.per)
        k = (n - len(self.pre)) % len(self.per)
        return EvpSeq("", self.per[k:] + self.per[:k])

    def prepend(self, word: str) -> "EvpSeq":
        return EvpSeq(word + self.pre, self.per)


def tilde(s):
    """Swap 0 and 1 letterwise (works on EvpSeq and finite words)."""
    if isinstance(s, EvpSeq):
        return EvpSeq(s.pre.translate(_SWAP), s.per.translate(_SWAP))
    return s.translate(_SWAP)


def lex_compare(a: EvpSeq, b: EvpSeq) -> int:
    n = len(a.pre) + len(b.pre) + len(a.per) * len(b.per)
    pa, pb = a.prefix(n), b.prefix(n)
    return (pa > pb) - (pa < pb)


# -- transducers ----------------------------------------------------------
# state -> list of (input pattern, output, next state); the patterns of each
# state form a complete prefix code over {0, 1}.

APPLY_X, APPLY_X_INV = "APPLY_X", "APPLY_X_INV"
APPLY_Y, APPLY_Y_INV, COPY = "APPLY_Y", "APPLY_Y_INV", "COPY"

TRANSITIONS = {
    APPLY_X: (("00", "0", COPY), ("01", "10", COPY), ("1", "11", COPY)),
    APPLY_X_INV: (("0", "00", COPY), ("10", "01", COPY), ("11", "1", COPY)),
    APPLY_Y: (("00", "0", APPLY_Y), ("01", "10", APPLY_Y_INV), ("1", "11", APPLY_Y)),
    APPLY_Y_INV: (("0", "00", APPLY_Y_INV), ("10", "01", APPLY_Y), ("11", "1", APPLY_Y_INV)),
    COPY: (("0", "0", COPY), ("1", "1", COPY)),
}


def start_state(kind: str, sign: int) -> str:
    if kind == "x":
        return APPLY_X if sign > 0 else APPLY_X_INV
    return APPLY_Y if sign > 0 else APPLY_Y_INV


def run_transducer(state: str, seq: EvpSeq) -> EvpSeq:
    """Run the machine from ``state`` on ``seq``; the output is eventually periodic.

    Once inside the periodic part, the pair (state, position mod period)
    determines the rest of the run, so its first repetition closes the cycle.
    """
    out: list[str] = []
    out_len = 0
    seen: dict[tuple[str, int], int] = {}
    pos = 0
    npre, nper = len(seq.pre), len(seq.per)
    while True:
        if pos >= npre:
            key = (state, (pos - npre) % nper)
            if key in seen:
                start = seen[key]
                emitted = "".join(out)
                return EvpSeq(emitted[:start], emitted[start:])
            seen[key] = out_len
        for pattern, output, nxt in TRANSITIONS[state]:
            if all(seq.letter(pos + i) == ch for i, ch in enumerate(pattern)):
                out.append(output)
                out_len += len(output)
                pos += len(pattern)
                state = nxt
                break


def run_letter(kind: str, sub: str, exponent: int, seq: EvpSeq) -> EvpSeq:
    """Apply ``kind_sub ** exponent`` (kind ``"x"`` or ``"y"``)."""
    state = start_state(kind, exponent)
    for _ in range(abs(exponent)):
        if not seq.startswith(sub):
            return seq
        seq = run_transducer(state, seq.drop(len(sub))).prepend(sub)
    return seq


def run_word(letters, seq: EvpSeq) -> EvpSeq:
    """Apply the letters of a word in reading order (leftmost letter first).

    ``letters`` is any iterable of objects with ``kind``, ``sub`` and
    ``exp`` attributes, e.g. the letters of a group word.
    """
    for letter in letters:
        seq = run_letter(letter.kind, letter.sub, letter.exp, seq)
    return seq


def partial_action(t: str, s: str, inverse: bool = False):
    """Finite word ``t'`` with ``x_s(t 2^N) = t' 2^N`` by a prefix rewrite, else None.

    With ``inverse=True`` the same for ``x_s^-1``.
    """
    if not t.startswith(s):
        return None if s.startswith(t) else t
    u = t[len(s):]
    rules = (("0", "00"), ("10", "01"), ("11", "1")) if inverse else \
        (("00", "0"), ("01", "10"), ("1", "11"))
    for head, image in rules:
        if u.startswith(head):
            return s + image + u[len(head):]
    return None


# -- the identification with the real line --------------------------------

LETTER_MATRIX = {"0": ProjMap(1, 0, 1, 1), "1": ProjMap(1, 1, 0, 1)}


def word_matrix(word: str) -> ProjMap:
    """Moebius map ``m`` with ``phi(word + xi) = m(phi(xi))``."""
    m = ProjMap.identity()
    for ch in word:
        m = moebius.compose(m, LETTER_MATRIX[ch])
    return m


def _attracting_point(per: str):
    m = word_matrix(per)
    pts = [p for p in moebius.fixed_points(m) if isinstance(p, Infinity) or p >= 0]
    if len(pts) != 1:
        raise AssertionError(f"period {per!r} has fixed points {pts} in [0, inf]")
    return pts[0]


def phi(seq: EvpSeq):
    """Exact value in [0, inf] of the continued-fraction identification."""
    return moebius.apply(word_matrix(seq.pre), _attracting_point(seq.per))


def Phi(seq: EvpSeq):
    """Exact value in [-inf, inf]; sequences starting with 0 land on the negative side."""
    head, tail = seq.letter(0), seq.drop(1)
    if head == "1":
        return phi(tail)
    return -phi(tilde(tail))
