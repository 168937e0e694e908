"""Rewriting words into standard form ``h y_{s_1}^{a_1} ... y_{s_n}^{a_n}``.

``h`` is a word in the x-generators and a subscript appears only after every
subscript it is a prefix of.  The strategy:

* x-letters are pushed to the left through y-letters with ``y_t x_s = x_s y_{t.x_s}``
  whenever the prefix rewrite ``t.x_s`` exists; otherwise the y-letter is
  expanded once with ``y_t = x_t y_t0 y_t10^-1 y_t11`` (or its inverse form)
  and the push resumes on the longer subscripts;
* the remaining y-letters are sorted: incomparable neighbours commute, and a
  letter standing before an extension of its own subscript is expanded, its
  x-letter joining the head;
* equal neighbouring subscripts are merged.

Standard forms are not unique; equality is always decided by realization.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import NormalizationOverflow
from ..symdyn import partial_action
from .realize import equal_words
from .words import GenLetter, GroupWord, is_constant

DEFAULT_BUDGET = 10 ** 6


@dataclass(frozen=True)
class StandardForm:
    head: GroupWord
    tail: tuple[tuple[str, int], ...]

    def to_word(self) -> GroupWord:
        ys = [GenLetter("y", s, e) for s, e in self.tail]
        return GroupWord(self.head.letters + tuple(ys), self.head.marker)

    def __str__(self):
        return str(self.to_word())


def post_order_key(sub: str) -> str:
    """Sort key placing every subscript before its proper prefixes."""
    return sub + "2"


def is_standard_tail(tail) -> bool:
    subs = [s for s, _ in tail]
    return all(not subs[j].startswith(subs[i]) or subs[j] == subs[i]
               for i in range(len(subs)) for j in range(i + 1, len(subs)))


def _expand(y: GenLetter) -> tuple[GenLetter, list[GenLetter]]:
    """Write the unit letter ``y_t^e`` as an x-letter followed by three y-letters."""
    t = y.sub
    if y.exp > 0:
        return GenLetter("x", t, 1), [GenLetter("y", t + "0", 1),
                                      GenLetter("y", t + "10", -1),
                                      GenLetter("y", t + "11", 1)]
    return GenLetter("x", t, -1), [GenLetter("y", t + "1", -1),
                                   GenLetter("y", t + "01", 1),
                                   GenLetter("y", t + "00", -1)]


class _Rewriter:
    def __init__(self, budget: int):
        self.budget = budget
        self.steps = 0

    def tick(self):
        self.steps += 1
        if self.steps > self.budget:
            raise NormalizationOverflow(
                f"standardize exceeded its budget of {self.budget} rewrite steps")

    def push_y(self, y: GenLetter, xs: list[GenLetter]):
        """Rewrite ``y . xs`` as ``xs' . ys'``."""
        passed: list[GenLetter] = []
        for i, xl in enumerate(xs):
            self.tick()
            image = partial_action(y.sub, xl.sub, inverse=xl.exp < 0)
            if image is None:
                head_x, trio = _expand(y)
                rest = xs[i:]
                suffix: list[GenLetter] = []
                for z in reversed(trio):
                    rest, zs = self.push_y(z, rest)
                    suffix = zs + suffix
                return passed + [head_x] + rest, suffix
            passed.append(xl)
            y = GenLetter("y", image, y.exp)
        return passed, [y]

    def push_left(self, ys: list[GenLetter], xs: list[GenLetter]):
        """Rewrite ``ys . xs`` as ``xs' . ys'``."""
        suffix: list[GenLetter] = []
        for y in reversed(ys):
            xs, zs = self.push_y(y, xs)
            suffix = zs + suffix
        return xs, suffix

    def sort_tail(self, head: list[GenLetter], ys: list[GenLetter]):
        while True:
            for i in range(len(ys) - 1):
                a, b = ys[i], ys[i + 1]
                ka, kb = post_order_key(a.sub), post_order_key(b.sub)
                if ka == kb and a.exp != b.exp:
                    self.tick()
                    del ys[i:i + 2]
                    break
                if ka <= kb:
                    continue
                self.tick()
                if not b.sub.startswith(a.sub):
                    ys[i], ys[i + 1] = b, a
                    break
                head_x, trio = _expand(a)
                xs, prefix = self.push_left(ys[:i], [head_x])
                head.extend(xs)
                ys[:] = prefix + trio + ys[i + 1:]
                break
            else:
                return


def _unit_letters(w: GroupWord) -> list[GenLetter]:
    """Unit letters of ``w`` with every ``y`` (empty subscript) expanded."""
    out = []
    for letter in w.units():
        if letter.kind == "y" and not letter.sub:
            head_x, trio = _expand(letter)
            out.append(head_x)
            out.extend(trio)
        else:
            out.append(letter)
    return out


def standardize(w: GroupWord, budget: int = DEFAULT_BUDGET,
                validate: bool = True) -> StandardForm:
    """A standard form equal to ``w`` in the group.

    Subscripts that were non-constant stay non-constant, so G0 words have G0
    standard forms.  With ``validate`` the result is checked by realization.
    """
    rw = _Rewriter(budget)
    head: list[GenLetter] = []
    ys: list[GenLetter] = []
    for letter in _unit_letters(w):
        if letter.kind == "y":
            ys.append(letter)
        else:
            xs, ys = rw.push_left(ys, [letter])
            head.extend(xs)
    rw.sort_tail(head, ys)

    tail: list[list] = []
    for y in ys:
        if tail and tail[-1][0] == y.sub:
            tail[-1][1] += y.exp
            if not tail[-1][1]:
                tail.pop()
        else:
            tail.append([y.sub, y.exp])
    sf = StandardForm(GroupWord(head, w.marker), tuple((s, e) for s, e in tail))
    if validate and not equal_words(sf.to_word(), w):
        raise RuntimeError(f"standard form {sf} does not represent {w}")
    return sf


def exponent_sums(sf: StandardForm) -> tuple[int, int, int]:
    """``(left, right, central)``: y-exponents over 0^n, 1^n and non-constant subscripts."""
    left = right = central = 0
    for sub, exp in sf.tail:
        if not is_constant(sub):
            central += exp
        elif sub[0] == "0":
            left += exp
        else:
            right += exp
    return left, right, central
