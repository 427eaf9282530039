"""Acceptance criteria, each checked exactly and timed.

Every test appends one PASS/FAIL line to ``RESULTS``; the lines are printed
in the terminal summary (see ``conftest.py``).  ``python -m tests.test_acceptance``
prints them without pytest.
"""

import random
import time
from contextlib import contextmanager
from math import comb

from weylorder.closed_forms import bell, bell_summation, bell_word, f_genfunc, f_nested, f_stirling1, summation_sw
from weylorder.forests import (
    enumerate_forests,
    forest_to_partition_g,
    forest_to_partition_h,
    partition_to_forest_g,
    partition_to_forest_h,
)
from weylorder.graphs import (
    build_g,
    build_g_nr,
    build_h,
    build_h_nr,
    chromatic_from_heights,
    chromatic_polynomial,
    graph_stirling,
)
from weylorder.poly import Poly
from weylorder.qpoly import q_stirling_carlitz
from weylorder.qweights import MatchMatrix, matching_encode, matrix_weight, q_graph_stirling, q_matching_sum, \
    random_order, weight_split
from weylorder.rewrite import normal_order, normal_order_q
from weylorder.verify import METHODS, five_way
from weylorder.words import all_dyck_words, associated_dyck, parse_word

from .oracles import brute_colorings

RESULTS: list[str] = []

WORKED = "xxDxxDxDDD"
SEED = 20240601


def random_words(count, max_len, seed):
    rng = random.Random(seed)
    return ["".join(rng.choice("xD") for _ in range(rng.randint(0, max_len))) for _ in range(count)]


WORDS_2 = list(all_dyck_words(12, include_empty=True))
WORDS_3 = random_words(200, 10, SEED)


@contextmanager
def criterion(label, limit=None):
    start = time.perf_counter()
    failure = None
    try:
        yield
    except AssertionError as exc:
        failure = exc
    elapsed = time.perf_counter() - start
    if failure is None and limit is not None and elapsed >= limit:
        failure = AssertionError(f"took {elapsed:.2f}s, limit {limit}s")
    status = "PASS" if failure is None else "FAIL"
    note = f" ({failure})" if failure is not None else ""
    RESULTS.append(f"{status} {label} [{elapsed:.3f}s]{note}")
    if failure is not None:
        raise failure


def test_1_worked_example():
    with criterion("1 worked example, five methods", limit=1):
        table = five_way(WORKED)
        for m in METHODS:
            assert table[m] == [0, 0, 0, 2, 4, 1], m


def test_2_five_way_sweep():
    with criterion("2 five-way agreement, Dyck words up to length 12", limit=120):
        assert sum(1 for w in WORDS_2 if len(w) == 12) == 132
        for w in WORDS_2:
            table = five_way(w)
            for k in range(w.count("D") + 1):
                assert len({table[m][k] for m in METHODS}) == 1, (w, k)


def test_3_arbitrary_word_shift():
    with criterion("3 shift to the associated Dyck word, 200 random words", limit=30):
        for w in WORDS_3:
            a, b, dyck = associated_dyck(w)
            assert dyck == "x" * a + w + "D" * b
            nf, nf_dyck = normal_order(w), normal_order(dyck)
            for k in range(w.count("D") + 1):
                assert nf[k] == nf_dyck[k + b], (w, k)
            assert sum(nf.coeffs.values()) == sum(nf_dyck.coeffs.values())


def test_4_chromatic_identities():
    with criterion("4 chromatic identities and brute-force colorings"):
        for w in WORDS_2:
            p = chromatic_from_heights(w)
            g, h = build_g(w), build_h(w)
            assert chromatic_polynomial(g) == p == chromatic_polynomial(h), w
            if len(w) <= 8:
                for graph in (g, h):
                    for t in range(6):
                        assert brute_colorings(graph.n, graph.edges, t) == p(t), (w, t)


def test_5_summation_and_bell():
    with criterion("5 summation formula, f routes, Bell identity"):
        for n in range(1, 5):
            for s in range(1, 5):
                nf = normal_order(parse_word(f"(x^{s}D^{s})^{n}"))
                for k in range(n * s + 1):
                    assert summation_sw(n, s, k) == nf[k], (n, s, k)
        for n in range(1, 7):
            for s in range(1, 6):
                for l in range((s - 1) * (n - 1) + 2):
                    assert f_nested(n, s, l) == f_genfunc(n, s, l) == f_stirling1(n, s, l)
        for n in range(1, 7):
            expected = sum(comb(n - 1, l) * bell(2 * n - 1 - l) for l in range(n))
            assert bell_word(parse_word(f"(x^2D^2)^{n}")) == bell_summation(n, 2) == expected


def test_6_forest_bijections():
    with criterion("6 forest bijections and counts, r <= 3, n <= 5", limit=60):
        for r in range(1, 4):
            for n in range(1, 6):
                g, h = build_g_nr(n, r), build_h_nr(n, r)
                nf = normal_order(("x" * r + "D") * n)
                for k in range(n + 1):
                    fs = enumerate_forests(r, n, k, "decreasing")
                    for f in fs:
                        pg, ph = forest_to_partition_g(f, n, r), forest_to_partition_h(f, n, r)
                        assert partition_to_forest_g(pg, n, r) == f
                        assert partition_to_forest_h(ph, n, r) == f
                        assert forest_to_partition_g(partition_to_forest_g(pg, n, r), n, r) == pg
                        assert forest_to_partition_h(partition_to_forest_h(ph, n, r), n, r) == ph
                    blocks = k + (r - 1) * n
                    assert len(enumerate_forests(r, n, k)) == len(fs)
                    assert len(fs) == graph_stirling(g, blocks, max_vertices=g.n) \
                        == graph_stirling(h, blocks, max_vertices=h.n) == nf[k], (r, n, k)


def test_7_q_suite():
    with criterion("7 q-suite", limit=120):
        assert q_stirling_carlitz(3, 2) == Poly([0, 2, 1]) == normal_order_q("xDxDxD")[2]
        for w in all_dyck_words(10):
            nf = normal_order_q(w)
            orders = [None] + [random_order(w.count("x"), SEED + i) for i in range(5)]
            for order in orders:
                for k in range(w.count("D") + 1):
                    got = q_graph_stirling(w, k) if order is None else q_graph_stirling(w, k, order)
                    assert got == nf[k], (w, k)
        for r in range(6):
            for s in range(6):
                for k in range(min(r, s) + 1):
                    lhs, rhs = q_matching_sum(r, s, k)
                    assert lhs == rhs, (r, s, k)
        m = MatchMatrix.from_ones(7, 6, [(2, 3), (4, 4), (5, 1), (6, 6)])
        assert matrix_weight(m) == 19
        assert matching_encode(m) == ("0101110", "101101", (3, 1, 2, 4))
        assert weight_split(m) == (6, 7, 4, 2)


def test_8_confluence():
    with criterion("8 confluence under random reduction orders"):
        rng = random.Random(SEED + 8)
        for w in random_words(100, 12, SEED + 1):
            expected, expected_q = normal_order(w), normal_order_q(w)
            assert normal_order(w, rng=rng) == expected, w
            assert normal_order_q(w, rng=rng) == expected_q, w


def test_9_q_equals_one():
    with criterion("9 q=1 degeneration on the words of criteria 2 and 3"):
        for w in WORDS_2 + WORDS_3:
            assert normal_order_q(w).at_one() == normal_order(w), w


if __name__ == "__main__":
    for name, fn in list(globals().items()):
        if name.startswith("test_"):
            try:
                fn()
            except AssertionError:
                pass
    print("\n".join(RESULTS))
