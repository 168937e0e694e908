import random

import pytest
from hypothesis import given, settings, strategies as st

from ppgroups.errors import NormalizationOverflow
from ppgroups.group import (Group, abelianize, equal_words,
                            exponent_sums, is_constant, is_standard_tail, member, parse,
                            standardize)
from ppgroups.group.standard import StandardForm, post_order_key

W = parse

G_LETTERS = ["x", "x[1]", "x[0]", "x[01]", "y", "y[0]", "y[1]", "y[10]", "y[01]", "y[110]"]
G0_LETTERS = ["x", "x[1]", "y[10]", "y[01]", "x[011]", "y[1101]"]


def _words(alphabet, max_len, group=Group.G):
    letter = st.tuples(st.sampled_from(alphabet), st.sampled_from(["", "^-1", "^2"]))
    return st.lists(letter, max_size=max_len).map(
        lambda ls: parse(" ".join(a + e for a, e in ls) or "1", group))


def test_y_moves_past_x():
    sf = standardize(W("y[10] x"))
    assert sf.head == W("x")
    assert sf.tail == (("110", 1),)


def test_x_word_is_its_own_standard_form():
    w = W("x[1] x^-1 x[01]^2")
    sf = standardize(w)
    assert sf.head == w and sf.tail == ()


def test_example_with_conjugated_pair():
    w = W("x y[10] y[01]^-1 x^-1")
    sf = standardize(w)
    assert equal_words(sf.to_word(), w)
    assert all(s for s, _ in sf.tail)


def test_identity_word():
    sf = standardize(W("1"))
    assert sf.head == W("1") and sf.tail == ()


@pytest.mark.parametrize("tail, ok", [
    ((), True),
    ((("10", 1), ("1", 2)), True),
    ((("1", 2), ("10", 1)), False),
    ((("01", 1), ("10", -1), ("0", 1)), True),
    ((("", 1), ("0", 1)), False),
])
def test_is_standard_tail(tail, ok):
    assert is_standard_tail(tail) is ok


def test_post_order_key_puts_extensions_first():
    subs = sorted(["1", "", "10", "0", "11", "101"], key=post_order_key)
    assert subs == ["0", "101", "10", "11", "1", ""]
    assert is_standard_tail(tuple((s, 1) for s in subs))


def test_exponent_sums():
    sf = StandardForm(W("1"), (("0", 2), ("10", -2)))
    assert exponent_sums(sf) == (2, 0, -2)
    assert exponent_sums(StandardForm(W("1"), ())) == (0, 0, 0)
    assert exponent_sums(standardize(W("y[1]"))) == (0, 1, 0)


def test_budget_exhaustion_raises():
    with pytest.raises(NormalizationOverflow):
        standardize(W("y[10] x y[0] x^-1 y x[1]"), budget=3)


@settings(max_examples=150, deadline=None)
@given(_words(G_LETTERS, 7))
def test_standard_form_is_standard_and_equal(w):
    sf = standardize(w, validate=False)
    assert is_standard_tail(sf.tail)
    assert all(letter.kind == "x" for letter in sf.head.letters)
    assert all(e != 0 for _, e in sf.tail)
    assert equal_words(sf.to_word(), w)


@settings(max_examples=100, deadline=None)
@given(_words(G0_LETTERS, 7, Group.G0))
def test_g0_words_keep_non_constant_subscripts(w):
    sf = standardize(w, validate=False)
    assert all(not is_constant(s) for s, _ in sf.tail)
    assert sf.to_word().is_g0_word


@settings(max_examples=150, deadline=None)
@given(_words(G_LETTERS, 7))
def test_exponent_sums_give_the_abelianization(w):
    left, right, central = exponent_sums(standardize(w, validate=False))
    assert abelianize(w, Group.G) == (central, left, right)


def test_empty_tail_means_thompson_f():
    rng = random.Random(3)
    seen = 0
    for _ in range(200):
        w = parse(" ".join(rng.choice(G_LETTERS) + rng.choice(["", "^-1"])
                           for _ in range(rng.randint(0, 5))) or "1")
        sf = standardize(w, validate=False)
        if not sf.tail:
            seen += 1
            assert member(w, "F")
    assert seen > 10
