"""q-weights of independent-set partitions of G_w.

Vertex labels follow ``graphs.build_g``: vertex i is the i-th x of the word,
so any contiguous Dyck factor of w owns a contiguous run of labels.

A total order on independent sets is passed as a key function mapping a
block (sorted tuple of labels) to something comparable.  ``lex_order`` is
the default; ``random_order`` draws a seeded random total order.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Callable, Hashable, Sequence

from .errors import EnumerationBoundError, MalformedInputError
from .graphs import SetPartition, build_g, enumerate_partitions
from .poly import Poly
from .qpoly import q_binomial, q_factorial, q_int, q_stirling_carlitz  # noqa: F401  (re-exported)
from .words import X, Word, irreducible_decomposition, require_dyck

BlockOrder = Callable[[tuple[int, ...]], Hashable]

MAX_MATCHING_SIDE = 6


@dataclass(frozen=True)
class MatchMatrix:
    """0/1 matrix whose 1's sit in distinct rows and distinct columns."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in row) for row in self.entries)
        object.__setattr__(self, "entries", rows)
        width = len(rows[0]) if rows else 0
        if any(len(row) != width for row in rows):
            raise MalformedInputError("ragged matrix")
        if any(v not in (0, 1) for row in rows for v in row):
            raise MalformedInputError("entries must be 0 or 1")
        cols = [j for row in rows for j, v in enumerate(row) if v]
        if len(cols) != len(set(cols)) or any(sum(row) > 1 for row in rows):
            raise MalformedInputError("1's must occupy distinct rows and columns")

    @classmethod
    def from_ones(cls, r: int, s: int, ones: Sequence[tuple[int, int]]) -> MatchMatrix:
        """Build from 1-based ``(row, column)`` positions of the 1's."""
        grid = [[0] * s for _ in range(r)]
        for i, j in ones:
            grid[i - 1][j - 1] = 1
        return cls(tuple(map(tuple, grid)))

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.entries), len(self.entries[0]) if self.entries else 0

    @property
    def ones(self) -> list[tuple[int, int]]:
        return [(i, j) for i, row in enumerate(self.entries, start=1)
                for j, v in enumerate(row, start=1) if v]

    def __str__(self) -> str:
        return "\n".join(" ".join(map(str, row)) for row in self.entries)


def marked_zeros(m: MatchMatrix) -> set[tuple[int, int]]:
    """Zeros below a 1 in their column or right of a 1 in their row."""
    r, s = m.shape
    marked = set()
    for i, j in m.ones:
        marked.update((ii, j) for ii in range(i + 1, r + 1))
        marked.update((i, jj) for jj in range(j + 1, s + 1))
    return marked


def matrix_weight(m: MatchMatrix) -> int:
    r, s = m.shape
    return r * s - len(m.ones) - len(marked_zeros(m))


def zeros_statistic(bits: str) -> int:
    """Sum over the 1's of the number of 0's to their left."""
    total = zeros = 0
    for c in bits:
        if c == "0":
            zeros += 1
        else:
            total += zeros
    return total


def inversions(perm: Sequence[int]) -> int:
    return sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j])


def matching_encode(m: MatchMatrix) -> tuple[str, str, tuple[int, ...]]:
    """``(sigma, tau, pi)``: occupied rows, occupied columns, and the minor's permutation."""
    r, s = m.shape
    ones = m.ones
    rows = sorted(i for i, _ in ones)
    cols = sorted(j for _, j in ones)
    sigma = "".join("1" if i in rows else "0" for i in range(1, r + 1))
    tau = "".join("1" if j in cols else "0" for j in range(1, s + 1))
    row_rank = {i: t for t, i in enumerate(rows, start=1)}
    by_col = dict((j, i) for i, j in ones)
    pi = tuple(row_rank[by_col[j]] for j in cols)
    return sigma, tau, pi


def matching_decode(sigma: str, tau: str, pi: Sequence[int]) -> MatchMatrix:
    rows = [i for i, c in enumerate(sigma, start=1) if c == "1"]
    cols = [j for j, c in enumerate(tau, start=1) if c == "1"]
    if not (len(rows) == len(cols) == len(pi)):
        raise MalformedInputError("sigma, tau and pi disagree on the number of 1's")
    if sorted(pi) != list(range(1, len(pi) + 1)):
        raise MalformedInputError(f"{tuple(pi)} is not a permutation")
    ones = [(rows[pi[t] - 1], cols[t]) for t in range(len(cols))]
    return MatchMatrix.from_ones(len(sigma), len(tau), ones)


def weight_split(m: MatchMatrix) -> tuple[int, int, int, int]:
    """``((r-k)(s-k), zeros(sigma), zeros(tau), inv(pi))``; these sum to ``matrix_weight``."""
    r, s = m.shape
    k = len(m.ones)
    sigma, tau, pi = matching_encode(m)
    return (r - k) * (s - k), zeros_statistic(sigma), zeros_statistic(tau), inversions(pi)


def iter_matchings(r: int, s: int, k: int):
    for rows in combinations(range(1, r + 1), k):
        for cols in combinations(range(1, s + 1), k):
            for perm in permutations(rows):
                yield MatchMatrix.from_ones(r, s, list(zip(perm, cols)))


def q_matching_sum(r: int, s: int, k: int) -> tuple[Poly, Poly]:
    """Exhaustive sum of ``q^f(M)`` over size-k matchings of K_{r,s}, and its closed form."""
    if r < 0 or s < 0 or k < 0:
        raise ValueError("arguments must be non-negative")
    if max(r, s) > MAX_MATCHING_SIDE:
        raise EnumerationBoundError(f"matching enumeration is limited to r, s <= {MAX_MATCHING_SIDE}")
    counts: dict[int, int] = {}
    for m in iter_matchings(r, s, k):
        f = matrix_weight(m)
        counts[f] = counts.get(f, 0) + 1
    lhs = Poly(counts.get(i, 0) for i in range(max(counts, default=-1) + 1))
    if k > min(r, s):
        rhs = Poly()
    else:
        rhs = (q_binomial(r, k) * q_binomial(s, k) * q_factorial(k)).shift((r - k) * (s - k))
    return lhs, rhs


# -- orders on independent sets ----------------------------------------------------

def lex_order(block: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(block)


def random_order(n_vertices: int, seed: int) -> BlockOrder:
    """A seeded random total order on all non-empty subsets of ``1..n_vertices``."""
    if n_vertices > 16:
        raise EnumerationBoundError("random block orders are limited to 16 vertices")
    subsets = [tuple(c) for size in range(1, n_vertices + 1)
               for c in combinations(range(1, n_vertices + 1), size)]
    random.Random(seed).shuffle(subsets)
    rank = {b: i for i, b in enumerate(subsets)}
    return lambda block: rank[tuple(block)]


# -- partition weight ------------------------------------------------------------------

def _weight(word: str, first: int, blocks: list[tuple[int, ...]], order: BlockOrder) -> int:
    # ``word`` is a Dyck factor whose vertices are first .. first + #x - 1
    parts = irreducible_decomposition(word)
    if len(parts) == 1:
        if word == "xD":
            return 0
        v = first  # the outer x dominates the rest
        if (v,) not in blocks:
            raise MalformedInputError(f"dominating vertex {v} must be a singleton block")
        rest = [b for b in blocks if b != (v,)]
        return _weight(word[1:-1], first + 1, rest, order)
    w1 = parts[0]
    w2 = word[len(w1):]
    split = first + w1.count(X)
    p1 = sorted({tuple(v for v in b if v < split) for b in blocks} - {()}, key=order)
    p2 = sorted({tuple(v for v in b if v >= split) for b in blocks} - {()}, key=order)
    whole = set(blocks)
    grid = tuple(tuple(1 if tuple(sorted(x + y)) in whole else 0 for y in p2) for x in p1)
    return _weight(w1, first, p1, order) + _weight(w2, split, p2, order) + matrix_weight(MatchMatrix(grid))


def partition_weight(w: Word, p: SetPartition, order: BlockOrder = lex_order) -> int:
    """Inductive weight of a partition of G_w into independent sets."""
    require_dyck(w)
    g = build_g(w)
    if p.n != g.n:
        raise MalformedInputError(f"partition is of 1..{p.n} but G_w has {g.n} vertices")
    for b in p.blocks:
        if not g.is_independent(b):
            raise MalformedInputError(f"block {b} is not independent in G_w")
    if not w:
        return 0
    return _weight(w, 1, list(p.blocks), order)


def q_graph_stirling(w: Word, k: int, order: BlockOrder = lex_order, *,
                     max_vertices: int | None = None) -> Poly:
    """``sum_P q^wt(P)`` over partitions of G_w into k independent sets."""
    require_dyck(w)
    g = build_g(w)
    counts: dict[int, int] = {}
    for p in enumerate_partitions(g, k, max_vertices=max_vertices):
        wt = _weight(w, 1, list(p.blocks), order) if w else 0
        counts[wt] = counts.get(wt, 0) + 1
    return Poly(counts.get(i, 0) for i in range(max(counts, default=-1) + 1))
