from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from fcgames.arena import KindMismatch
from fcgames.properties import (ClosureVerdict, CycleProperty, check_concat_closure,
                                check_cyclic_closure, complement, member, parse_property,
                                satisfies_char_hypothesis, witness_violates)


def P(s):
    return parse_property(s)


@pytest.mark.parametrize("prop, word, expected", [
    ("evenlen", [7, 7], True),
    ("evenlen", [7], False),
    ("parity", [1, 4, 3], True),
    ("parity", [1, 3], False),
    ("energy", [-2, 1, 1], True),
    ("energy", [-2, 1], False),
    ("goodforenergy", [(1, 1)], True),             # positive sum
    ("goodforenergy", [(2, 1), (1, -1)], True),    # zero sum, even max
    ("goodforenergy", [(3, 1), (2, -1)], False),   # zero sum, odd max
    ("goodforenergy", [(4, -1)], False),
    ("meanpayoff:1/2", [0, 1], True),
    ("meanpayoff:1/2", [0, 0, 1], False),
    ("meanpayoff:1/2:atmost", [0, 0, 1], True),
    ("maxfirst", [3, 1, 3], True),
    ("maxfirst", [1, 3], False),
    ("endszero", [3, 0], True),
    ("endszero", [0, 3], False),
    ("not:evenlen", [5], True),
])
def test_membership_table(prop, word, expected):
    assert member(P(prop), word) is expected


def test_meanpayoff_exact_rationals():
    p = P("meanpayoff:1/3")
    assert member(p, [Fraction(1, 3)])
    assert not member(p, [Fraction(1, 3) - Fraction(1, 10**9)])


@pytest.mark.parametrize("prop, word", [
    ("parity", [-1]), ("energy", [(1, 2)]), ("maxfirst", [Fraction(1, 2)]),
    ("goodforenergy", [3]), ("endszero", [-2]),
])
def test_kind_mismatch(prop, word):
    with pytest.raises(KindMismatch):
        member(P(prop), word)


def test_empty_word_rejected():
    with pytest.raises(ValueError):
        member(P("evenlen"), [])


@pytest.mark.parametrize("text", ["parity", "not:evenlen", "meanpayoff:1/2",
                                  "not:meanpayoff:-3:atmost", "goodforenergy", "endszero"])
def test_parse_str_roundtrip(text):
    assert str(P(text)) == text
    assert P(str(P(text))) == P(text)


@pytest.mark.parametrize("bad", ["colour", "meanpayoff", "parity:2", "meanpayoff:1:sideways"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        P(bad)


words = st.lists(st.integers(0, 5), min_size=1, max_size=8)
props = st.sampled_from(["evenlen", "parity", "maxfirst", "endszero"]).map(P)


@given(props, words)
def test_complement_is_involutive_and_exact(p, w):
    assert complement(complement(p)) == p
    assert member(complement(p), w) != member(p, w)


@given(st.lists(st.integers(0, 5), min_size=1, max_size=8), st.integers(0, 7))
def test_parity_rotation_invariant(w, k):
    k %= len(w)
    assert member(P("parity"), w) == member(P("parity"), w[k:] + w[:k])


def test_verdict_witness_iff_counterexample():
    with pytest.raises(ValueError):
        ClosureVerdict("counterexample")
    with pytest.raises(ValueError):
        ClosureVerdict("knownClosed", witness=((1,), (2,)))


def test_maxfirst_cyclic_counterexample_revalidated():
    v = check_cyclic_closure(P("maxfirst"))
    assert v.status == "counterexample" and v.witness == ((2, 1), (1, 2))
    assert witness_violates(P("maxfirst"), v)


def test_not_evenlen_concat_counterexample():
    v = check_concat_closure(P("not:evenlen"))
    assert v.status == "counterexample" and witness_violates(P("not:evenlen"), v)
    a, b = v.witness
    assert len(a) % 2 == 1 and len(b) % 2 == 1


def test_search_without_registry_finds_maxfirst_break():
    v = check_cyclic_closure(P("maxfirst"), budget=100, use_registry=False)
    assert v.status == "counterexample" and witness_violates(P("maxfirst"), v)


def test_unregistered_closed_property_reports_no_counterexample():
    # endszero is closed under concatenation (the last letter of ab is b's)
    v = check_concat_closure(P("endszero"), budget=500)
    assert v.status == "noCounterexampleFound"


def test_budget_validated():
    with pytest.raises(ValueError):
        check_cyclic_closure(P("parity"), budget=0)


@pytest.mark.parametrize("prop, answer", [
    ("parity", "yes"), ("energy", "yes"), ("meanpayoff:0", "yes"), ("goodforenergy", "yes"),
    ("evenlen", "no"), ("maxfirst", "no"),
])
def test_char_hypothesis(prop, answer):
    assert satisfies_char_hypothesis(P(prop), budget=200).answer == answer


def test_kind_support():
    assert CycleProperty("evenlen").supports("pair")
    assert not CycleProperty("parity").supports("weight")
    assert CycleProperty("meanpayoff", 0).supports("payoff")
