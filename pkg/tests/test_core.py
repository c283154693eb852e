import itertools
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lexopt.core import (
    INFINITE,
    Lex,
    alpha,
    as_weight,
    dispersed_weights,
    eligibility_violations,
    format_rational,
    lex_compare,
    lex_signature,
    parse_rational,
    weight_classes,
    weight_of,
)
from lexopt.errors import InvalidBase, InvalidWeight, UnknownElement

positive_rationals = st.fractions(min_value=Fraction(1, 12), max_value=50,
                                  max_denominator=12).filter(lambda f: f > 0)


def test_weight_classes_sorted_and_partitioned():
    wc = weight_classes({"a": 4, "b": 2, "c": 2, "d": 1})
    assert wc.levels == (4, 2, 1)
    assert wc.classes == (frozenset("a"), frozenset("bc"), frozenset("d"))


def test_weight_classes_path_instance():
    wc = weight_classes([1, Fraction(3, 2), 1])
    assert wc.levels == (Fraction(3, 2), 1)
    assert wc.classes == (frozenset({1}), frozenset({0, 2}))


def test_single_class():
    wc = weight_classes({"a": 5})
    assert wc.levels == (5,) and wc.k == 1
    assert alpha(wc) == INFINITE


@pytest.mark.parametrize("bad", [0, -1, "0", "-3/2", 1.5, "1.5", True, None])
def test_rejects_bad_weights(bad):
    with pytest.raises(InvalidWeight):
        weight_classes([1, bad])


def test_as_weight_strings():
    assert as_weight("7") == 7
    assert as_weight("3/2") == Fraction(3, 2)
    with pytest.raises(InvalidWeight):
        as_weight("1/0")


def test_alpha():
    assert alpha(weight_classes([4, 2, 1])) == 2
    assert alpha(weight_classes([Fraction(3, 2), 1])) == Fraction(3, 2)


@given(st.lists(positive_rationals, min_size=1, max_size=8), positive_rationals)
def test_alpha_scale_invariant(ws, c):
    assert alpha(weight_classes(ws)) == alpha(weight_classes([w * c for w in ws]))


def test_lex_signature_and_compare():
    wc = weight_classes([1, Fraction(3, 2), 1])
    assert lex_signature({1}, wc) == (1, 0)
    assert lex_signature(set(), wc) == (0, 0)
    assert lex_signature({0, 1, 2}, wc) == (1, 2)
    assert lex_compare({1}, {0, 2}, wc) is Lex.LARGER
    assert lex_compare({0, 2}, {1}, wc) is Lex.SMALLER
    assert lex_compare(set(), set(), wc) is Lex.EQUAL
    with pytest.raises(UnknownElement):
        lex_signature({5}, wc)


def _manual_signature(X, ws):
    levels = sorted(set(ws), reverse=True)
    return tuple(sum(1 for e in X if ws[e] == lv) for lv in levels)


@given(st.lists(st.sampled_from([1, 2, 3]), min_size=6, max_size=6),
       st.sets(st.integers(0, 5)), st.sets(st.integers(0, 5)))
def test_lex_compare_matches_direct_signatures(ws, X, Y):
    wc = weight_classes(ws)
    sx, sy = _manual_signature(X, ws), _manual_signature(Y, ws)
    expected = Lex.LARGER if sx > sy else Lex.SMALLER if sx < sy else Lex.EQUAL
    assert lex_compare(X, Y, wc) is expected
    assert lex_compare(Y, X, wc) is {Lex.LARGER: Lex.SMALLER, Lex.SMALLER: Lex.LARGER,
                                     Lex.EQUAL: Lex.EQUAL}[expected]


def test_dispersed_weights_formula():
    wc = weight_classes([4, 2, 1])
    assert dispersed_weights(wc, 3) == {0: 9, 1: 3, 2: 1}
    wc = weight_classes([1, Fraction(3, 2), 1])
    assert dispersed_weights(wc, 3) == {0: 1, 1: 3, 2: 1}
    assert set(dispersed_weights(wc, 3).values()) == {3, 1}


@pytest.mark.parametrize("base", [2, 1, 0, -5, 2.5, True])
def test_dispersed_weights_rejects_small_base(base):
    with pytest.raises(InvalidBase):
        dispersed_weights(weight_classes([1, 2]), base)


@given(st.lists(st.sampled_from([1, 2, 3, 5]), min_size=1, max_size=6),
       st.integers(3, 9))
def test_dispersed_alpha_is_base(ws, base):
    wc = weight_classes(ws)
    dw = dispersed_weights(wc, base)
    expected = INFINITE if wc.k == 1 else base
    assert alpha(weight_classes(dw)) == expected


@given(st.lists(st.sampled_from([1, 2, 3, 5]), min_size=1, max_size=6), st.data())
def test_dispersed_order_matches_lex_order(ws, data):
    n = len(ws)
    wc = weight_classes(ws)
    dw = dispersed_weights(wc, max(3, n + 1))
    subsets = [frozenset(c) for r in range(n + 1) for c in itertools.combinations(range(n), r)]
    X = data.draw(st.sampled_from(subsets))
    Y = data.draw(st.sampled_from(subsets))
    assert (lex_compare(X, Y, wc) is Lex.LARGER) == (weight_of(X, dw) > weight_of(Y, dw))


def test_weight_of():
    assert weight_of({0, 2}, [1, 1, 1]) == 2
    assert weight_of(set(), [1]) == 0
    with pytest.raises(UnknownElement):
        weight_of({3}, [1, 1])
    with pytest.raises(UnknownElement):
        weight_of({-1}, [1, 1])


@given(st.lists(positive_rationals, min_size=5, max_size=5), st.sets(st.integers(0, 4)))
def test_weight_of_termwise(ws, X):
    total = Fraction(0)
    for e in sorted(X):
        total = total + ws[e]
    assert weight_of(X, ws) == total


@pytest.mark.parametrize("v", [Fraction(3, 2), Fraction(7), Fraction(-1, 3), Fraction(0)])
def test_rational_round_trip(v):
    assert parse_rational(format_rational(v)) == v
    assert "." not in format_rational(v)


def test_eligibility_violations():
    wc = weight_classes([1, 2, 1])
    assert eligibility_violations({0, 2}, {1}, 1, wc) == []
    assert eligibility_violations({0, 2}, {0, 2}, 1, wc)
    wc = weight_classes([3, 1, 1, 1])
    assert any("lighter" in p for p in eligibility_violations({1, 2, 3}, {0}, 1, wc))
