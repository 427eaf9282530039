"""Cross-checks of the Stirling sequence of a word by independent methods."""

from __future__ import annotations

from dataclasses import dataclass

from .closed_forms import closed_form_sw
from .graphs import build_g, build_h, graph_stirling_row
from .rewrite import DEFAULT_STEP_BUDGET, normal_order
from .rooks import stirling_via_rooks
from .words import D, Word, all_dyck_words, associated_dyck

METHODS = ("rewrite", "graph-g", "graph-h", "rook", "closed")


@dataclass(frozen=True)
class Mismatch:
    word: Word
    k: int
    values: dict

    def __str__(self) -> str:
        vals = ", ".join(f"{m}={v}" for m, v in self.values.items())
        return f"mismatch for {self.word!r} at k={self.k}: {vals}"


def five_way(w: Word, *, max_vertices: int | None = None,
             budget: int = DEFAULT_STEP_BUDGET) -> dict[str, list[int]]:
    """``S_w(0..n)`` by rewriting, G- and H-partitions, rooks and the closed form.

    Graph methods go through the associated Dyck word with the shift by b.
    """
    n = w.count(D)
    ks = range(n + 1)
    a, b, dyck = associated_dyck(w)
    g_row = graph_stirling_row(build_g(dyck), max_vertices=max_vertices)
    h_row = graph_stirling_row(build_h(dyck), max_vertices=max_vertices)

    def shifted(row, k):
        return row[k + b] if k + b < len(row) else 0

    nf = normal_order(w, budget=budget)
    return {
        "rewrite": [nf[k] for k in ks],
        "graph-g": [shifted(g_row, k) for k in ks],
        "graph-h": [shifted(h_row, k) for k in ks],
        "rook": [stirling_via_rooks(w, k) for k in ks],
        "closed": [closed_form_sw(w, k) for k in ks],
    }


def check_word(w: Word, **kwargs) -> list[Mismatch]:
    table = five_way(w, **kwargs)
    out = []
    for k in range(len(table["rewrite"])):
        vals = {m: table[m][k] for m in METHODS}
        if len(set(vals.values())) != 1:
            out.append(Mismatch(w, k, vals))
    return out


def check_all_dyck(max_length: int, **kwargs) -> tuple[int, list[Mismatch]]:
    """Number of words checked and every mismatch found."""
    count = 0
    bad: list[Mismatch] = []
    for w in all_dyck_words(max_length):
        count += 1
        bad += check_word(w, **kwargs)
    return count, bad
