"""Exact Stirling and Bell numbers and explicit formulas for word Stirling numbers."""

from __future__ import annotations

import threading
from functools import lru_cache
from math import comb, factorial, prod

from .errors import InexactDivisionError
from .poly import ONE, Poly
from .rewrite import normal_order
from .words import Word, associated_dyck, heights


class _TriangleTable:
    """Row-wise memo of a triangular recurrence, extended under a lock."""

    def __init__(self, step):
        self._step = step
        self._rows: list[tuple[int, ...]] = [(1,)]
        self._lock = threading.Lock()

    def row(self, n: int) -> tuple[int, ...]:
        if n < len(self._rows):
            return self._rows[n]
        with self._lock:
            while len(self._rows) <= n:
                prev = self._rows[-1]
                m = len(self._rows)
                self._rows.append(tuple(self._step(prev, m, k) for k in range(m + 1)))
        return self._rows[n]

    def get(self, n: int, k: int) -> int:
        if n < 0 or k < 0:
            raise ValueError("arguments must be non-negative")
        if k > n:
            return 0
        return self.row(n)[k]


def _s2_step(prev, n, k):
    left = prev[k - 1] if k >= 1 else 0
    right = k * prev[k] if k < len(prev) else 0
    return left + right


def _s1_step(prev, a, b):
    left = prev[b - 1] if b >= 1 else 0
    right = (a - 1) * prev[b] if b < len(prev) else 0
    return left + right


_S2 = _TriangleTable(_s2_step)
_S1 = _TriangleTable(_s1_step)


def stirling2(n: int, k: int) -> int:
    return _S2.get(n, k)


def stirling1_unsigned(a: int, b: int) -> int:
    return _S1.get(a, b)


def bell(n: int) -> int:
    return sum(_S2.row(n))


def closed_form_sw(w: Word, k: int) -> int:
    """Alternating-sum formula for ``S_w(k)`` through the associated Dyck word.

    The division by ``(k+b)!`` is done last and must be exact.
    """
    if k < 0:
        return 0
    a, b, dyck = associated_dyck(w)
    hs = heights(dyck)
    kb = k + b
    total = sum((-1) ** l * comb(kb, l) * prod(kb - l - h for h in hs) for l in range(kb + 1))
    q, rem = divmod(total, factorial(kb))
    if rem:
        raise InexactDivisionError(f"closed form for {w!r} at k={k} is not integral")
    return q


def _check_nsl(n, s, l):
    if n < 1 or s < 1 or l < 0:
        raise ValueError("need n >= 1, s >= 1, l >= 0")


def f_nested(n: int, s: int, l: int) -> int:
    """Sum over compositions i_1 + ... + i_{s-1} = l of nested binomials."""
    _check_nsl(n, s, l)

    def rec(j, used, left):
        # j-th part; the binomial on top is j(n-1) minus parts so far
        if j == s:
            return 1 if left == 0 else 0
        top = j * (n - 1) - used
        total = 0
        for i in range(min(top, left) + 1):
            total += comb(top, i) * rec(j + 1, used + i, left - i)
        return total

    return rec(1, 0, l)


@lru_cache(maxsize=None)
def _genfunc_poly(n: int, s: int) -> Poly:
    base = ONE
    for i in range(1, s):
        base = base * Poly((1, i))
    return base ** (n - 1)


def f_genfunc(n: int, s: int, l: int) -> int:
    """``[x^l] ((1+x)(1+2x)...(1+(s-1)x))^(n-1)``."""
    _check_nsl(n, s, l)
    return _genfunc_poly(n, s)[l]


@lru_cache(maxsize=None)
def _stirling1_poly(n: int, s: int) -> Poly:
    base = Poly(stirling1_unsigned(s, s - j) for j in range(s))
    return base ** (n - 1)


def f_stirling1(n: int, s: int, l: int) -> int:
    """``[x^l] (sum_j [s, s-j] x^j)^(n-1)`` with unsigned first-kind numbers."""
    _check_nsl(n, s, l)
    return _stirling1_poly(n, s)[l]


def summation_sw(n: int, s: int, k: int) -> int:
    """``S_w(k)`` for ``w = (x^s D^s)^n`` as a positive combination of ordinary Stirling numbers."""
    if n < 1 or s < 1:
        raise ValueError("need n >= 1 and s >= 1")
    kk = k - (s - 1)
    if kk < 0:
        return 0
    return sum(f_nested(n, s, l) * stirling2(s * (n - 1) + 1 - l, kk)
               for l in range((s - 1) * (n - 1) + 1))


def bell_summation(n: int, s: int) -> int:
    """Bell number of ``(x^s D^s)^n`` as ``sum_l f(n,s,l) B_{s(n-1)+1-l}``."""
    return sum(f_nested(n, s, l) * bell(s * (n - 1) + 1 - l) for l in range((s - 1) * (n - 1) + 1))


def bell_word(w: Word) -> int:
    """``B(w)``: the sum of the word's normal-order coefficients."""
    return sum(normal_order(w).coeffs.values())
