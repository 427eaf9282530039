from math import comb

import pytest
from hypothesis import given

from weylorder.closed_forms import (
    bell,
    bell_summation,
    bell_word,
    closed_form_sw,
    f_genfunc,
    f_nested,
    f_stirling1,
    stirling1_unsigned,
    stirling2,
    summation_sw,
)
from weylorder.rewrite import normal_order
from weylorder.words import all_dyck_words, parse_word

from .conftest import WORKED_WORD, words
from .oracles import set_partitions, stirling2_recurrence


def test_small_tables():
    assert [stirling2(5, k) for k in range(6)] == [0, 1, 15, 25, 10, 1]
    assert [stirling1_unsigned(4, k) for k in range(5)] == [0, 6, 11, 6, 1]
    assert [bell(n) for n in range(8)] == [1, 1, 2, 5, 15, 52, 203, 877]
    assert stirling2(3, 5) == 0
    with pytest.raises(ValueError):
        stirling2(-1, 0)


def test_stirling2_against_recurrence_and_bell_against_partitions():
    for n in range(10):
        assert [stirling2(n, k) for k in range(n + 1)] == [stirling2_recurrence(n, k) for k in range(n + 1)]
    for n in range(7):
        assert bell(n) == sum(1 for _ in set_partitions(list(range(n))))


def test_worked_word_closed_form():
    assert [closed_form_sw(WORKED_WORD, k) for k in range(-1, 7)] == [0, 0, 0, 0, 2, 4, 1, 0]


@given(words)
def test_closed_form_matches_rewriting(w):
    nf = normal_order(w)
    assert [closed_form_sw(w, k) for k in range(w.count("D") + 2)] == nf.sequence(w.count("D") + 2)


def test_closed_form_sweep_to_12():
    for w in all_dyck_words(12):
        nf = normal_order(w)
        for k in range(w.count("D") + 1):
            assert closed_form_sw(w, k) == nf[k], (w, k)


def test_f_worked_values():
    assert [f_nested(2, 3, l) for l in range(3)] == [1, 3, 2]
    assert [f_nested(3, 2, l) for l in range(3)] == [1, 2, 1]


@pytest.mark.parametrize("n", range(1, 7))
@pytest.mark.parametrize("s", range(1, 6))
def test_three_f_routes_and_support(n, s):
    top = (s - 1) * (n - 1)
    for l in range(top + 3):
        v = f_nested(n, s, l)
        assert v == f_genfunc(n, s, l) == f_stirling1(n, s, l)
        assert (v >= 1) == (l <= top)


def test_f_s2_is_binomial():
    for n in range(1, 7):
        assert [f_nested(n, 2, l) for l in range(n)] == [comb(n - 1, l) for l in range(n)]


@pytest.mark.parametrize("n", range(1, 5))
@pytest.mark.parametrize("s", range(1, 5))
def test_summation_formula(n, s):
    nf = normal_order(parse_word(f"(x^{s}D^{s})^{n}"))
    assert [summation_sw(n, s, k) for k in range(s * n + 2)] == nf.sequence(s * n + 2)


@pytest.mark.parametrize("n", range(1, 7))
def test_bell_identity_s2(n):
    w = parse_word(f"(x^2D^2)^{n}")
    expected = sum(comb(n - 1, l) * bell(2 * n - 1 - l) for l in range(n))
    assert bell_word(w) == bell_summation(n, 2) == expected


def test_bad_arguments():
    with pytest.raises(ValueError):
        f_nested(0, 2, 0)
    with pytest.raises(ValueError):
        summation_sw(1, 0, 1)
