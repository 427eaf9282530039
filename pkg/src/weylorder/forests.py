"""Increasing and decreasing r-ary forests, and their bijections with partitions.

Both bijections work on *decreasing* forests, where labels drop along every
root-to-leaf path.  Increasing forests are handled by ``reverse_labels``.

In a forest, ``parents[x - 1]`` is ``None`` for a root, else ``(a, p)``:
vertex ``x`` sits in child slot ``p`` (1..r) of vertex ``a``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterator, Optional

from .errors import EnumerationBoundError, MalformedInputError
from .graphs import LabeledGraph, SetPartition, build_g_nr, build_h_nr

DEFAULT_MAX_FOREST_VERTICES = 8

Parent = Optional[tuple[int, int]]


@dataclass(frozen=True)
class RaryForest:
    r: int
    n: int
    parents: tuple[Parent, ...]

    def __post_init__(self):
        if self.r < 1:
            raise MalformedInputError("arity must be positive")
        if len(self.parents) != self.n:
            raise MalformedInputError("need one parent entry per vertex")
        taken = set()
        for x, par in enumerate(self.parents, start=1):
            if par is None:
                continue
            a, p = par
            if not (1 <= a <= self.n) or not (1 <= p <= self.r) or a == x:
                raise MalformedInputError(f"vertex {x} has invalid parent slot {par}")
            if par in taken:
                raise MalformedInputError(f"slot {p} of vertex {a} used twice")
            taken.add(par)
        for x in range(1, self.n + 1):
            seen = set()
            v = x
            while self.parents[v - 1] is not None:
                if v in seen:
                    raise MalformedInputError("parent relation has a cycle")
                seen.add(v)
                v = self.parents[v - 1][0]

    @property
    def components(self) -> int:
        return sum(1 for p in self.parents if p is None)

    @property
    def roots(self) -> list[int]:
        return [x for x, p in enumerate(self.parents, start=1) if p is None]

    def parent(self, x: int) -> Parent:
        return self.parents[x - 1]

    def children(self, a: int) -> dict[int, int]:
        """slot -> child label"""
        return {p[1]: x for x, p in enumerate(self.parents, start=1) if p is not None and p[0] == a}

    def is_increasing(self) -> bool:
        return all(p is None or p[0] < x for x, p in enumerate(self.parents, start=1))

    def is_decreasing(self) -> bool:
        return all(p is None or p[0] > x for x, p in enumerate(self.parents, start=1))

    def to_json_dict(self) -> dict:
        return {
            "r": self.r,
            "n": self.n,
            "vertices": [
                {"label": x, "parent": p[0] if p else None, "slot": p[1] if p else None}
                for x, p in enumerate(self.parents, start=1)
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    @classmethod
    def from_json_dict(cls, data: dict) -> RaryForest:
        verts = sorted(data["vertices"], key=lambda v: v["label"])
        parents = tuple(None if v["parent"] is None else (int(v["parent"]), int(v["slot"])) for v in verts)
        return cls(int(data["r"]), len(verts), parents)

    def __str__(self) -> str:
        parts = []
        for x, p in enumerate(self.parents, start=1):
            parts.append(f"{x}:root" if p is None else f"{x}<-{p[0]}.{p[1]}")
        return " ".join(parts)


def reverse_labels(f: RaryForest) -> RaryForest:
    """Relabel ``x -> n + 1 - x``; swaps increasing and decreasing forests."""
    n = f.n
    new: list[Parent] = [None] * n
    for x, p in enumerate(f.parents, start=1):
        new[n - x] = None if p is None else (n + 1 - p[0], p[1])
    return RaryForest(f.r, n, tuple(new))


def _sort_key(f: RaryForest):
    return tuple((0, 0) if p is None else p for p in f.parents)


def enumerate_forests(r: int, n: int, k: int, direction: str = "increasing", *,
                      max_vertices: int = DEFAULT_MAX_FOREST_VERTICES) -> list[RaryForest]:
    """All r-ary forests on n labelled vertices with k components.

    Vertices are inserted in label order (ascending for increasing forests,
    descending for decreasing ones), each either as a new root or into a
    free slot of an already-placed vertex.
    """
    if r < 1 or n < 0 or k < 0:
        raise ValueError("need r >= 1, n >= 0, k >= 0")
    if direction not in ("increasing", "decreasing"):
        raise ValueError(f"unknown direction {direction!r}")
    if n > max_vertices:
        raise EnumerationBoundError(f"n = {n} exceeds forest enumeration bound {max_vertices}")
    order = list(range(1, n + 1)) if direction == "increasing" else list(range(n, 0, -1))
    parents: list[Parent] = [None] * n
    free: set[tuple[int, int]] = set()
    out: list[RaryForest] = []

    def rec(i: int, roots: int):
        if roots > k or roots + (n - i) < k:
            return
        if i == n:
            out.append(RaryForest(r, n, tuple(parents)))
            return
        x = order[i]
        mine = {(x, p) for p in range(1, r + 1)}
        free.update(mine)
        parents[x - 1] = None
        rec(i + 1, roots + 1)
        for slot in sorted(free - mine):
            free.discard(slot)
            parents[x - 1] = slot
            rec(i + 1, roots)
            free.add(slot)
        parents[x - 1] = None
        free.difference_update(mine)

    rec(0, 0)
    out.sort(key=_sort_key)
    return out


def count_forests(r: int, n: int, k: int) -> int:
    """Count increasing r-ary forests by the number of free slots, without listing them."""
    # state: (components, number of non-roots); free slots = r*i - nonroots
    counts = {(0, 0): 1}
    for i in range(n):
        nxt: dict[tuple[int, int], int] = {}
        for (c, nr), v in counts.items():
            key = (c + 1, nr)
            nxt[key] = nxt.get(key, 0) + v
            slots = r * i - nr
            if slots:
                key = (c, nr + 1)
                nxt[key] = nxt.get(key, 0) + v * slots
        counts = nxt
    return sum(v for (c, _), v in counts.items() if c == k)


# -- partitions of G(n, r) --------------------------------------------------------------

def _require_decreasing(f: RaryForest, n: int, r: int):
    if f.n != n or f.r != r:
        raise MalformedInputError(f"forest has n={f.n}, r={f.r}; expected n={n}, r={r}")
    if not f.is_decreasing():
        raise MalformedInputError("bijection expects a decreasing forest")


def _chains_to_partition(size: int, nxt: dict[int, int]) -> SetPartition:
    heads = set(range(1, size + 1)) - set(nxt.values())
    blocks = []
    for h in sorted(heads):
        block = [h]
        while block[-1] in nxt:
            block.append(nxt[block[-1]])
        blocks.append(block)
    return SetPartition(size, blocks)


def _check_partition(p: SetPartition, build, n: int, r: int) -> int:
    if p.n != n * r:
        raise MalformedInputError(f"partition is of 1..{p.n}, expected 1..{n * r}")
    graph = build(n, r) if n else LabeledGraph(0)  # empty forest <-> empty partition
    adj = graph.adjacency()
    for block in p.blocks:
        bs = set(block)
        if any(adj[v] & bs for v in block):
            raise MalformedInputError(f"block {block} is not independent")
    k = len(p) - (r - 1) * n
    if k < 1 and n > 0:
        raise MalformedInputError(f"{len(p)} blocks is too few for G/H({n},{r})")
    return k


def forest_to_partition_g(f: RaryForest, n: int, r: int) -> SetPartition:
    """Decreasing forest -> partition of G(n, r) into k + (r-1)n independent sets.

    Child x in slot p of a makes ``(a-1)r + p`` the next element above ``xr``
    in its block.
    """
    _require_decreasing(f, n, r)
    nxt = {}
    for x, par in enumerate(f.parents, start=1):
        if par is not None:
            a, p = par
            nxt[x * r] = (a - 1) * r + p
    return _chains_to_partition(n * r, nxt)


def partition_to_forest_g(part: SetPartition, n: int, r: int) -> RaryForest:
    """Inverse of ``forest_to_partition_g``."""
    k = _check_partition(part, build_g_nr, n, r)
    parents: list[Parent] = [None] * n
    root_count = 0
    for block in part.blocks:
        if all(v % r == 0 for v in block):
            root_count += 1
        for i, v in enumerate(block):
            if v % r:
                continue
            if i + 1 == len(block):
                if all(u % r == 0 for u in block):
                    continue  # largest element of an M-only block: a root
                raise MalformedInputError(f"block {block} has no element above {v}")
            z = block[i + 1]
            a, p = divmod(z - 1, r)
            parents[v // r - 1] = (a + 1, p + 1)
    if root_count != k:
        raise MalformedInputError(f"found {root_count} M-only blocks, expected {k}")
    return RaryForest(r, n, tuple(parents))


# -- partitions of H(n, r) -----------------------------------------------------------

def forest_to_partition_h(f: RaryForest, n: int, r: int) -> SetPartition:
    """Decreasing forest -> partition of H(n, r); child x in slot p of a is followed by ``(a-1)r + p``."""
    _require_decreasing(f, n, r)
    nxt = {}
    for x, par in enumerate(f.parents, start=1):
        if par is not None:
            a, p = par
            nxt[x] = (a - 1) * r + p
    return _chains_to_partition(n * r, nxt)


def partition_to_forest_h(part: SetPartition, n: int, r: int) -> RaryForest:
    """Inverse of ``forest_to_partition_h``."""
    k = _check_partition(part, build_h_nr, n, r)
    parents: list[Parent] = [None] * n
    roots = 0
    for block in part.blocks:
        for i, v in enumerate(block):
            if v > n:
                continue
            if i + 1 == len(block):
                roots += 1
                continue
            y = block[i + 1]
            a, p = divmod(y - 1, r)
            parents[v - 1] = (a + 1, p + 1)
    if roots != k:
        raise MalformedInputError(f"found {roots} blocks topped by labels <= {n}, expected {k}")
    return RaryForest(r, n, tuple(parents))


def iter_round_trips(r: int, n: int, k: int) -> Iterator[tuple[RaryForest, SetPartition, SetPartition]]:
    """Each decreasing forest with its G- and H-partitions."""
    for f in enumerate_forests(r, n, k, "decreasing"):
        yield f, forest_to_partition_g(f, n, r), forest_to_partition_h(f, n, r)
