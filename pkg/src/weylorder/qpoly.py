"""q-integers, q-factorials, Gaussian binomials and Carlitz q-Stirling numbers."""

from __future__ import annotations

import threading
from functools import lru_cache

from .poly import ONE, ZERO, Poly


def q_int(m: int) -> Poly:
    """``[m]_q = 1 + q + ... + q^(m-1)``; zero for ``m <= 0``."""
    return Poly((1,) * m) if m > 0 else ZERO


@lru_cache(maxsize=None)
def q_factorial(a: int) -> Poly:
    """``[a]_q!``, with ``[0]_q! = 1`` and the zero polynomial for negative ``a``."""
    if a < 0:
        return ZERO
    p = ONE
    for i in range(2, a + 1):
        p = p * q_int(i)
    return p


@lru_cache(maxsize=None)
def q_binomial(a: int, b: int) -> Poly:
    """Gaussian binomial by exact division of q-factorials."""
    if a < 0 or b < 0 or b > a:
        return ZERO
    return q_factorial(a).exact_div(q_factorial(b) * q_factorial(a - b))


def q_binomial_pascal(a: int, b: int) -> Poly:
    """Gaussian binomial via ``C(a,b) = C(a-1,b-1) + q^b C(a-1,b)``."""
    if a < 0 or b < 0 or b > a:
        return ZERO
    row = [ONE]
    for n in range(1, a + 1):
        new = [ONE]
        for j in range(1, n):
            new.append(row[j - 1] + row[j].shift(j))
        new.append(ONE)
        row = new
    return row[b]


def q_falling(m: int, j: int) -> Poly:
    """``[m]_q [m-1]_q ... [m-j+1]_q``."""
    p = ONE
    for i in range(j):
        p = p * q_int(m - i)
    return p


class _CarlitzTable:
    # rows are appended whole under the lock, so readers never see a partial row

    def __init__(self):
        self._rows: list[tuple[Poly, ...]] = [(ONE,)]
        self._lock = threading.Lock()

    def row(self, n: int) -> tuple[Poly, ...]:
        if n < len(self._rows):
            return self._rows[n]
        with self._lock:
            while len(self._rows) <= n:
                prev = self._rows[-1]
                m = len(self._rows)
                new = [ZERO]
                for k in range(1, m + 1):
                    left = prev[k - 1].shift(k - 1) if k - 1 < len(prev) else ZERO
                    right = q_int(k) * prev[k] if k < len(prev) else ZERO
                    new.append(left + right)
                self._rows.append(tuple(new))
        return self._rows[n]


_carlitz = _CarlitzTable()


def q_stirling_carlitz(n: int, k: int) -> Poly:
    """Carlitz q-Stirling number of the second kind."""
    if n < 0 or k < 0:
        raise ValueError("n and k must be non-negative")
    if k > n:
        return ZERO
    return _carlitz.row(n)[k]
