"""Labelled graphs attached to words, independent-set partitions, chromatic polynomials.

Vertices are always ``1..n``.  ``build_g`` labels vertex ``i`` by the i-th x
of the Dyck word and joins two vertices when one matched x/D interval
strictly contains the other; ``build_g_inductive`` realises the same graph
(up to relabelling) through the dominating-vertex / disjoint-union rules.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import comb, factorial
from typing import Iterable, Iterator, Sequence

from .errors import EnumerationBoundError, InexactDivisionError, MalformedInputError
from .poly import Poly, falling_factorial, product_of_linear
from .words import (
    Word,
    heights,
    irreducible_decomposition,
    matched_pairs,
    path_geometry,
    require_dyck,
)

DEFAULT_MAX_ENUM_VERTICES = 14

IntPolynomial = Poly


@dataclass(frozen=True)
class LabeledGraph:
    n: int
    edges: frozenset[tuple[int, int]]

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        norm = set()
        for e in edges:
            u, v = e
            if u == v:
                raise MalformedInputError(f"loop at vertex {u}")
            if not (1 <= u <= n and 1 <= v <= n):
                raise MalformedInputError(f"edge {e} out of range 1..{n}")
            norm.add((min(u, v), max(u, v)))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozenset(norm))

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def adjacency(self) -> list[set[int]]:
        """``adj[v]`` for v in 1..n (index 0 unused)."""
        adj: list[set[int]] = [set() for _ in range(self.n + 1)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def is_independent(self, vertices: Iterable[int]) -> bool:
        vs = sorted(vertices)
        return not any(self.has_edge(u, v) for i, u in enumerate(vs) for v in vs[i + 1:])

    def disjoint_union(self, other: LabeledGraph) -> LabeledGraph:
        """Other's vertices are shifted up by ``self.n``."""
        shifted = ((u + self.n, v + self.n) for u, v in other.edges)
        return LabeledGraph(self.n + other.n, list(self.edges) + list(shifted))

    def add_dominating_vertex(self) -> LabeledGraph:
        """New vertex ``n + 1`` adjacent to every existing vertex."""
        v = self.n + 1
        return LabeledGraph(v, list(self.edges) + [(u, v) for u in range(1, v)])

    def to_json_dict(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.sorted_edges()]}

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    @classmethod
    def from_json_dict(cls, data: dict) -> LabeledGraph:
        return cls(int(data["n"]), [tuple(e) for e in data["edges"]])

    def to_dot(self, name: str = "G") -> str:
        lines = [f"graph {name} {{"]
        lines += [f"  {v};" for v in range(1, self.n + 1)]
        lines += [f"  {u} -- {v};" for u, v in self.sorted_edges()]
        lines.append("}")
        return "\n".join(lines) + "\n"


def empty_graph(n: int) -> LabeledGraph:
    return LabeledGraph(n)


def complete_graph(n: int) -> LabeledGraph:
    return LabeledGraph(n, [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)])


def disjoint_union(graphs: Iterable[LabeledGraph]) -> LabeledGraph:
    out = LabeledGraph(0)
    for g in graphs:
        out = out.disjoint_union(g)
    return out


@dataclass(frozen=True)
class SetPartition:
    """A partition of ``{1..n}``; blocks are sorted tuples ordered by their minimum."""

    n: int
    blocks: tuple[tuple[int, ...], ...]

    def __init__(self, n: int, blocks: Iterable[Iterable[int]]):
        bs = [tuple(sorted(b)) for b in blocks]
        if any(not b for b in bs):
            raise MalformedInputError("empty block")
        flat = sorted(v for b in bs for v in b)
        if flat != list(range(1, n + 1)):
            raise MalformedInputError(f"blocks do not partition 1..{n}")
        bs.sort()
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "blocks", tuple(bs))

    def __len__(self) -> int:
        return len(self.blocks)

    def __iter__(self):
        return iter(self.blocks)

    def block_of(self, v: int) -> tuple[int, ...]:
        for b in self.blocks:
            if v in b:
                return b
        raise KeyError(v)

    def restricted_growth_string(self) -> tuple[int, ...]:
        index = {v: i for i, b in enumerate(self.blocks) for v in b}
        return tuple(index[v] for v in range(1, self.n + 1))

    def __str__(self) -> str:
        return "|".join(",".join(map(str, b)) for b in self.blocks) or "(empty)"


# -- constructions -------------------------------------------------------------

def build_g(w: Word) -> LabeledGraph:
    """Quasi-threshold graph of a Dyck word, by strict nesting of matched pairs."""
    pairs = matched_pairs(w)
    edges = []
    for i, (a, b) in enumerate(pairs):
        for j in range(i + 1, len(pairs)):
            c, d = pairs[j]
            if c > b:
                break
            edges.append((i + 1, j + 1))  # pairs sorted by x, so (c, d) nests in (a, b)
    return LabeledGraph(len(pairs), edges)


def build_g_inductive(w: Word) -> LabeledGraph:
    """Same graph, via K_1 / add-dominating-vertex / disjoint-union rules."""
    require_dyck(w)
    if not w:
        return LabeledGraph(0)
    parts = irreducible_decomposition(w)
    if len(parts) > 1:
        return disjoint_union(build_g_inductive(p) for p in parts)
    inner = w[1:-1]
    if not inner:
        return LabeledGraph(1)
    return build_g_inductive(inner).add_dominating_vertex()


def build_h(w: Word) -> LabeledGraph:
    """Indifference graph whose edges are the squares strictly between path and diagonal."""
    geom = path_geometry(w)
    return LabeledGraph(len(geom.heights), geom.inner_squares)


def build_g_nr(n: int, r: int) -> LabeledGraph:
    """Threshold graph G(n, r) on ``1..rn``.

    Multiples of ``r`` are the isolated additions (the set M); every other
    vertex is a dominating addition, adjacent to all larger labels.
    """
    if n < 1 or r < 1:
        raise ValueError("n and r must be positive")
    size = n * r
    edges = [(u, v) for u in range(1, size + 1) if u % r for v in range(u + 1, size + 1)]
    return LabeledGraph(size, edges)


def build_h_nr(n: int, r: int) -> LabeledGraph:
    """H(n, r): union over i = 1..n of cliques on ``{i, ..., i*r}``."""
    if n < 1 or r < 1:
        raise ValueError("n and r must be positive")
    edges = {(u, v) for i in range(1, n + 1) for u in range(i, i * r + 1) for v in range(u + 1, i * r + 1)}
    return LabeledGraph(n * r, edges)


def build_fan(a: int, b: int, c: int) -> LabeledGraph:
    """``a`` copies of K_b glued at vertex 1, plus ``c`` isolated vertices."""
    if a < 1 or b < 1 or c < 0:
        raise ValueError("need a, b >= 1 and c >= 0")
    edges = []
    nxt = 2
    for _ in range(a):
        clique = [1] + list(range(nxt, nxt + b - 1))
        nxt += b - 1
        edges += [(u, v) for i, u in enumerate(clique) for v in clique[i + 1:]]
    return LabeledGraph(nxt - 1 + c, edges)


# -- partitions into independent sets ----------------------------------------------

def _check_bound(g: LabeledGraph, max_vertices: int | None):
    bound = DEFAULT_MAX_ENUM_VERTICES if max_vertices is None else max_vertices
    if g.n > bound:
        raise EnumerationBoundError(f"graph has {g.n} vertices, enumeration bound is {bound}")


def _search(g: LabeledGraph, k: int | None) -> Iterator[list[list[int]]]:
    """Restricted-growth backtracking; yields the live block list (do not keep it)."""
    adj = g.adjacency()
    n = g.n
    blocks: list[list[int]] = []
    block_sets: list[set[int]] = []

    def rec(v):
        if v > n:
            if k is None or len(blocks) == k:
                yield blocks
            return
        if k is not None and len(blocks) + (n - v + 1) < k:
            return
        nbrs = adj[v]
        for i, bs in enumerate(block_sets):
            if nbrs.isdisjoint(bs):
                blocks[i].append(v)
                bs.add(v)
                yield from rec(v + 1)
                bs.discard(v)
                blocks[i].pop()
        if k is None or len(blocks) < k:
            blocks.append([v])
            block_sets.append({v})
            yield from rec(v + 1)
            blocks.pop()
            block_sets.pop()

    yield from rec(1)


def enumerate_partitions(g: LabeledGraph, k: int, *, max_vertices: int | None = None) -> list[SetPartition]:
    """All partitions of g into exactly k non-empty independent sets, in RGS order."""
    _check_bound(g, max_vertices)
    if k < 0:
        return []
    return [SetPartition(g.n, [list(b) for b in blocks]) for blocks in _search(g, k)]


def iter_independent_partitions(g: LabeledGraph, *, max_vertices: int | None = None) -> Iterator[SetPartition]:
    """Every partition into independent sets, any number of blocks."""
    _check_bound(g, max_vertices)
    for blocks in _search(g, None):
        yield SetPartition(g.n, [list(b) for b in blocks])


def graph_stirling(g: LabeledGraph, k: int, *, max_vertices: int | None = None) -> int:
    _check_bound(g, max_vertices)
    if k < 0:
        return 0
    return sum(1 for _ in _search(g, k))


def graph_stirling_row(g: LabeledGraph, *, max_vertices: int | None = None) -> list[int]:
    """``[{G brace 0}, ..., {G brace n}]`` from a single enumeration pass."""
    _check_bound(g, max_vertices)
    row = [0] * (g.n + 1)
    for blocks in _search(g, None):
        row[len(blocks)] += 1
    return row


def chromatic_polynomial(g: LabeledGraph, *, max_vertices: int | None = None) -> IntPolynomial:
    """``sum_k {G brace k} t^(falling k)``."""
    row = graph_stirling_row(g, max_vertices=max_vertices)
    p = Poly()
    for k, count in enumerate(row):
        if count:
            p = p + falling_factorial(k) * count
    return p


def chromatic_from_heights(w: Word) -> IntPolynomial:
    return product_of_linear(heights(w))


def stirling_from_chromatic(p: IntPolynomial, k: int) -> int:
    """Inclusion-exclusion ``(1/k!) sum_i (-1)^i C(k,i) p(k-i)``, exactly."""
    if k < 0:
        return 0
    total = sum((-1) ** i * comb(k, i) * p(k - i) for i in range(k + 1))
    q, rem = divmod(total, factorial(k))
    if rem:
        raise InexactDivisionError(f"{total} is not divisible by {k}!; input is not a chromatic polynomial")
    return q
