import random

import pytest
from hypothesis import given, settings

from weylorder.errors import BudgetExceededError
from weylorder.poly import Poly
from weylorder.rewrite import (
    NormalForm,
    QNormalForm,
    compose,
    leibniz_compose,
    normal_order,
    normal_order_q,
)
from weylorder.words import parse_word

from .conftest import WORKED_WORD, dyck_words, words
from .oracles import normal_form_by_action, stirling2_recurrence

q = Poly([0, 1])


def test_worked_word():
    nf = normal_order(WORKED_WORD)
    assert nf.offset == 0
    assert nf.coeffs == {3: 2, 4: 4, 5: 1}


@pytest.mark.parametrize("w, offset, coeffs", [
    ("", 0, {0: 1}),
    ("Dx", 0, {0: 1, 1: 1}),
    ("xxDxxDxxD", 3, {1: 6, 2: 6, 3: 1}),   # frozen from the action oracle
    ("DDxxx", 1, {0: 6, 1: 6, 2: 1}),
    ("D", -1, {1: 1}),
    ("x", 1, {0: 1}),
])
def test_normal_order_examples(w, offset, coeffs):
    nf = normal_order(w)
    assert (nf.offset, nf.coeffs) == (offset, coeffs)


def test_xd_power_gives_stirling2():
    nf = normal_order(parse_word("(xD)^4"))
    assert nf[2] == 7 == stirling2_recurrence(4, 2)
    for n in range(7):
        nf = normal_order(parse_word(f"(xD)^{n}") if n else "")
        assert nf.sequence(n + 1) == [stirling2_recurrence(n, k) for k in range(n + 1)]


@given(words)
def test_normal_order_matches_action_oracle(w):
    nf = normal_order(w)
    offset, coeffs = normal_form_by_action(w)
    assert nf.offset == offset
    assert nf.coeffs == coeffs
    assert all(v > 0 for v in nf.coeffs.values())


@settings(max_examples=60)
@given(words)
def test_normal_order_q_matches_action_oracle(w):
    nf = normal_order_q(w)
    offset, coeffs = normal_form_by_action(w, deformed=True)
    assert nf.offset == offset
    assert dict(nf.coeffs) == coeffs
    assert all(c >= 0 for p in nf.coeffs.values() for c in p)


@pytest.mark.parametrize("w, coeffs", [
    ("Dx", {0: Poly([1]), 1: q}),
    ("xDxDxD", {1: Poly([1]), 2: Poly([0, 2, 1]), 3: Poly([0, 0, 0, 1])}),
    ("xxDD", {2: Poly([1])}),
    ("xxDDxD", {2: Poly([1, 1]), 3: Poly([0, 0, 1])}),
])
def test_normal_order_q_examples(w, coeffs):
    nf = normal_order_q(w)
    assert nf.offset == 0
    assert dict(nf.coeffs) == coeffs


@given(words)
def test_q_equals_one_degenerates(w):
    assert normal_order_q(w).at_one() == normal_order(w)


@given(words)
def test_confluence_under_random_orders(w):
    expected = normal_order(w)
    for seed in range(3):
        assert normal_order(w, rng=random.Random(seed)) == expected
    assert normal_order_q(w, rng=random.Random(7)) == normal_order_q(w)


@given(dyck_words())
def test_dyck_offset_and_min_k(w):
    nf = normal_order(w)
    assert nf.offset == 0
    if w:
        assert min(nf.coeffs) >= 1


def test_leibniz_compose_examples():
    assert leibniz_compose(1, 1).coeffs == {1: 1, 2: 1}
    assert dict(leibniz_compose(1, 1, True).coeffs) == {1: Poly([1]), 2: q}
    for s in range(4):
        assert leibniz_compose(0, s).coeffs == {s: 1}


@pytest.mark.parametrize("r", range(6))
@pytest.mark.parametrize("s", range(6))
def test_leibniz_matches_rewriting(r, s):
    w = "x" * r + "D" * r + "x" * s + "D" * s
    assert normal_order_q(w) == leibniz_compose(r, s, True)
    assert normal_order(w) == leibniz_compose(r, s, False)


@given(words, words)
def test_concatenation_law(a, b):
    assert compose(normal_order(a), normal_order(b)) == normal_order(a + b)
    assert compose(normal_order_q(a), normal_order_q(b)) == normal_order_q(a + b)


def test_compose_rejects_mixed():
    with pytest.raises(TypeError):
        compose(normal_order("xD"), normal_order_q("xD"))


def test_budget_exceeded():
    with pytest.raises(BudgetExceededError):
        normal_order(parse_word("(Dx)^6"), budget=10)
    with pytest.raises(BudgetExceededError):
        normal_order(parse_word("(Dx)^6"), budget=10, rng=random.Random(0))


def test_normal_form_types():
    nf = NormalForm(0, {1: 2, 3: 0})
    assert nf.coeffs == {1: 2}
    assert nf[5] == 0
    assert QNormalForm(0, {})[2] == Poly()
    assert NormalForm(0, {1: 1}) != QNormalForm(0, {1: Poly([1])})
