"""Non-attacking rooks on the Ferrers board above a word's staircase path."""

from __future__ import annotations

from dataclasses import dataclass

from .words import D, X, Word, check_word, column_heights


@dataclass(frozen=True)
class FerrersBoard:
    """Squares labelled by top-right corner inside the box ``[0, n_cols] x [0, m_rows]``."""

    squares: frozenset[tuple[int, int]]
    n_cols: int
    m_rows: int

    @property
    def column_heights(self) -> tuple[int, ...]:
        counts = [0] * self.n_cols
        for i, _ in self.squares:
            counts[i - 1] += 1
        return tuple(counts)

    def is_ferrers(self) -> bool:
        """Each column is a top-justified run and the runs are nested."""
        hs = self.column_heights
        for i, h in enumerate(hs, start=1):
            rows = {j for c, j in self.squares if c == i}
            if rows != set(range(self.m_rows - h + 1, self.m_rows + 1)):
                return False
        return all(a >= b for a, b in zip(hs, hs[1:]))


def board_of(w: Word) -> FerrersBoard:
    check_word(w)
    m = w.count(X)
    hs = column_heights(w)
    squares = frozenset((i, j) for i, h in enumerate(hs, start=1) for j in range(h + 1, m + 1))
    return FerrersBoard(squares, len(hs), m)


def rook_count(b: FerrersBoard, k: int) -> int:
    """Number of k-subsets of squares with distinct columns and distinct rows."""
    if k < 0:
        return 0
    cols: dict[int, list[int]] = {}
    for i, j in b.squares:
        cols.setdefault(i, []).append(j)
    columns = [sorted(rows) for _, rows in sorted(cols.items())]
    used: set[int] = set()

    def rec(ci: int, left: int) -> int:
        if left == 0:
            return 1
        if len(columns) - ci < left:
            return 0
        total = rec(ci + 1, left)
        for j in columns[ci]:
            if j not in used:
                used.add(j)
                total += rec(ci + 1, left - 1)
                used.discard(j)
        return total

    return rec(0, k)


def rook_numbers_by_recurrence(b: FerrersBoard) -> list[int]:
    """``[r_0, r_1, ...]`` from the column heights alone.

    Columns are added shortest first; a new column of height h leaves
    ``h - (k - 1)`` free rows for the k-th rook.
    """
    r = [1]
    for h in sorted(b.column_heights):
        nxt = r + [0]
        for k in range(1, len(nxt)):
            nxt[k] = r[k] if k < len(r) else 0
            free = h - (k - 1)
            if free > 0:
                nxt[k] += free * r[k - 1]
        r = nxt
    while len(r) > 1 and r[-1] == 0:
        r.pop()
    return r


def stirling_via_rooks(w: Word, k: int) -> int:
    """``S_w(k) = r_{n-k}(B_w)`` where n is the number of D's in w."""
    check_word(w)
    n = w.count(D)
    if k < 0 or k > n:
        return 0
    return rook_count(board_of(w), n - k)
