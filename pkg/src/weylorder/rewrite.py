"""Normal ordering by literal rewriting of ``Dx -> q xD + 1``.

The state of a reduction is a multiset of ``(coefficient, word)`` terms held
in a dict.  Each rule application replaces one ``Dx`` occurrence in one
term.  The default strategy always rewrites the leftmost ``Dx``; terms are
visited in decreasing (length, number of D-before-x pairs), a key that
strictly drops with every rule application, so each distinct word is
rewritten at most once after all of its contributions have been merged.
"""

from __future__ import annotations

import heapq
import random
from dataclasses import dataclass, field
from typing import Mapping

from .errors import BudgetExceededError
from .poly import ONE, Q, Poly
from .qpoly import q_binomial, q_factorial
from .words import D, X, Word, check_word

DEFAULT_STEP_BUDGET = 10_000_000


@dataclass(frozen=True)
class NormalForm:
    """``w = x^offset * sum_k coeffs[k] x^k D^k`` with exact integer coefficients."""

    offset: int
    coeffs: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        cleaned = {int(k): v for k, v in sorted(self.coeffs.items()) if v}
        object.__setattr__(self, "coeffs", cleaned)

    def __getitem__(self, k: int):
        return self.coeffs.get(k, self._zero())

    @staticmethod
    def _zero():
        return 0

    def sequence(self, length: int | None = None) -> list:
        """Dense coefficient list ``[S(0), S(1), ...]``."""
        top = max(self.coeffs, default=-1) + 1
        n = top if length is None else length
        return [self[k] for k in range(n)]

    def max_k(self) -> int:
        return max(self.coeffs, default=-1)

    def items(self):
        return self.coeffs.items()

    def __eq__(self, other):
        if not isinstance(other, NormalForm):
            return NotImplemented
        return type(self) is type(other) and self.offset == other.offset and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((type(self).__name__, self.offset, tuple(self.coeffs.items())))


@dataclass(frozen=True, eq=False)
class QNormalForm(NormalForm):
    """Same shape as ``NormalForm`` but every coefficient is a polynomial in q."""

    @staticmethod
    def _zero():
        return Poly()

    def at_one(self) -> NormalForm:
        return NormalForm(self.offset, {k: p(1) for k, p in self.coeffs.items()})

    def evaluate(self, q) -> dict:
        return {k: p(q) for k, p in self.coeffs.items()}


def _inversions(w: str) -> int:
    count = ds = 0
    for c in w:
        if c == D:
            ds += 1
        else:
            count += ds
    return count


def _final_term(w: str) -> bool:
    return "Dx" not in w


def _reduce(w: Word, deformed: bool, budget: int, rng: random.Random | None):
    check_word(w)
    one = ONE if deformed else 1
    offset = w.count(X) - w.count(D)
    result: dict[int, object] = {}

    def finish(word, coeff):
        k = word.count(D)
        result[k] = result[k] + coeff if k in result else coeff

    steps = 0
    if rng is None:
        pending: dict[str, object] = {}
        heap: list[tuple[int, int, str]] = []

        def add(word, coeff):
            if _final_term(word):
                finish(word, coeff)
            elif word in pending:
                pending[word] = pending[word] + coeff
            else:
                pending[word] = coeff
                heapq.heappush(heap, (-len(word), -_inversions(word), word))

        add(w, one)
        while heap:
            _, _, word = heapq.heappop(heap)
            coeff = pending.pop(word)
            steps += 1
            if steps > budget:
                raise BudgetExceededError(f"rewrite step budget {budget} exhausted")
            i = word.find("Dx")
            head, tail = word[:i], word[i + 2:]
            add(head + "xD" + tail, coeff * Q if deformed else coeff)
            add(head + tail, coeff)
    else:
        # Randomised strategy: arbitrary term, arbitrary Dx occurrence.
        terms: dict[str, object] = {}

        def add(word, coeff):
            if _final_term(word):
                finish(word, coeff)
            else:
                terms[word] = terms[word] + coeff if word in terms else coeff

        add(w, one)
        while terms:
            word = rng.choice(sorted(terms))
            coeff = terms.pop(word)
            steps += 1
            if steps > budget:
                raise BudgetExceededError(f"rewrite step budget {budget} exhausted")
            spots = [i for i in range(len(word) - 1) if word[i] == D and word[i + 1] == X]
            i = rng.choice(spots)
            head, tail = word[:i], word[i + 2:]
            add(head + "xD" + tail, coeff * Q if deformed else coeff)
            add(head + tail, coeff)
    return offset, result


def normal_order(w: Word, *, budget: int = DEFAULT_STEP_BUDGET,
                 rng: random.Random | None = None) -> NormalForm:
    """Normal order ``w`` in the Weyl algebra ``Dx = xD + 1``.

    >>> normal_order("xxDxxDxDDD").coeffs
    {3: 2, 4: 4, 5: 1}

    Passing ``rng`` switches to a randomised reduction order; the result is
    the same whatever the order.
    """
    offset, coeffs = _reduce(w, False, budget, rng)
    return NormalForm(offset, coeffs)


def normal_order_q(w: Word, *, budget: int = DEFAULT_STEP_BUDGET,
                   rng: random.Random | None = None) -> QNormalForm:
    """Normal order ``w`` in the q-deformed algebra ``Dx = q xD + 1``."""
    offset, coeffs = _reduce(w, True, budget, rng)
    return QNormalForm(offset, coeffs)


def _leibniz_coeff(r: int, u: int, j: int, deformed: bool):
    # coefficient of the j-fold contraction in D^r x^u
    if deformed:
        return (q_binomial(r, j) * q_binomial(u, j) * q_factorial(j)).shift((r - j) * (u - j))
    from math import comb, factorial
    return comb(r, j) * comb(u, j) * factorial(j)


def leibniz_compose(r: int, s: int, deformed: bool = False) -> NormalForm:
    """Normal form of ``x^r D^r x^s D^s`` straight from the (q-)Leibniz formula."""
    if r < 0 or s < 0:
        raise ValueError("r and s must be non-negative")
    coeffs = {r + s - j: _leibniz_coeff(r, s, j, deformed) for j in range(min(r, s) + 1)}
    return QNormalForm(0, coeffs) if deformed else NormalForm(0, coeffs)


def compose(left: NormalForm, right: NormalForm) -> NormalForm:
    """Normal form of the product of two normal forms.

    Uses ``D^r x^u = sum_j q^{(r-j)(u-j)} C(r,j)_q C(u,j)_q [j]_q! x^{u-j} D^{r-j}``
    term by term, so no rewriting is involved.
    """
    deformed = isinstance(left, QNormalForm)
    if deformed != isinstance(right, QNormalForm):
        raise TypeError("cannot compose classical and q-deformed normal forms")
    out: dict[int, object] = {}
    for r, a in left.items():
        for s, b in right.items():
            u = s + right.offset
            ab = a * b
            for j in range(min(r, u) + 1):
                k = r + s - j
                term = ab * _leibniz_coeff(r, u, j, deformed)
                out[k] = out[k] + term if k in out else term
    cls = QNormalForm if deformed else NormalForm
    return cls(left.offset + right.offset, out)
