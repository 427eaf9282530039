"""Words over {x, D}: parsing, Dyck predicates and staircase-path geometry.

A word is stored as a plain ``str`` over the letters ``"x"`` and ``"D"``,
always fully expanded.  Positions, vertex labels and square labels are
1-based.  The staircase path of a word starts at (0, 0) and takes a unit
step up for every ``x`` and a unit step right for every ``D``; a unit square
is labelled by its top-right corner.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, NamedTuple

from .errors import NotDyckError, WordSyntaxError, WordTooLongError

X = "x"
D = "D"
LETTERS = frozenset((X, D))

DEFAULT_MAX_WORD_LENGTH = 10_000

Word = str


def check_word(w: str) -> str:
    if not isinstance(w, str):
        raise TypeError(f"word must be a str, not {type(w).__name__}")
    if not LETTERS.issuperset(w):
        bad = sorted(set(w) - LETTERS)
        raise WordSyntaxError(f"invalid letter(s) {bad!r} in word")
    return w


def require_dyck(w: str) -> str:
    check_word(w)
    if not is_dyck(w):
        raise NotDyckError(f"{w!r} is not a Dyck word")
    return w


# -- grammar ---------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(x|D)|(\()|(\))|(\^)\s*(-?\d+)?|(\S))")


def _tokenize(text: str) -> list[tuple[str, object]]:
    tokens: list[tuple[str, object]] = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # only trailing whitespace left
            break
        pos = m.end()
        letter, lpar, rpar, caret, exp, other = m.groups()
        if letter:
            tokens.append(("letter", letter))
        elif lpar:
            tokens.append(("(", None))
        elif rpar:
            tokens.append((")", None))
        elif caret:
            if exp is None:
                raise WordSyntaxError(f"'^' must be followed by an integer (offset {m.start()})")
            e = int(exp)
            if e <= 0:
                raise WordSyntaxError(f"exponent must be positive, got {e}")
            tokens.append(("^", e))
        elif other is not None:
            raise WordSyntaxError(f"unexpected character {other!r} at offset {m.start(6)}")
    return tokens


class _Parser:
    # Nodes are (length, builder) pairs so over-long expansions are rejected
    # before any string is materialised.

    def __init__(self, tokens, max_length):
        self.tokens = tokens
        self.i = 0
        self.max_length = max_length

    def peek(self):
        return self.tokens[self.i][0] if self.i < len(self.tokens) else None

    def expr(self):
        parts = []
        while self.peek() in ("letter", "("):
            parts.append(self.factor())
        if not parts:
            found = self.peek() or "end of input"
            raise WordSyntaxError(f"expected a letter or '(' but found {found}")
        length = sum(p[0] for p in parts)
        self._check(length)
        return length, parts

    def factor(self):
        kind, val = self.tokens[self.i]
        if kind == "letter":
            self.i += 1
            node = (1, val)
        else:
            self.i += 1
            node = self.expr()
            if self.peek() != ")":
                raise WordSyntaxError("unbalanced parentheses: missing ')'")
            self.i += 1
        if self.peek() == "^":
            e = self.tokens[self.i][1]
            self.i += 1
            self._check(node[0] * e)
            node = (node[0] * e, (node, e))
        return node

    def _check(self, length):
        if length > self.max_length:
            raise WordTooLongError(
                f"expanded word length {length} exceeds maximum {self.max_length}"
            )


def _materialise(node) -> str:
    _, body = node
    if isinstance(body, str):
        return body
    if isinstance(body, tuple):
        inner, e = body
        return _materialise(inner) * e
    return "".join(_materialise(p) for p in body)


def parse_word(text: str, max_length: int = DEFAULT_MAX_WORD_LENGTH) -> Word:
    """Expand a word written in the grammar, e.g. ``"(x^2D)^3"``.

    Grammar (whitespace ignored)::

        expr   := factor+
        factor := term ['^' positive-integer]
        term   := 'x' | 'D' | '(' expr ')'
    """
    tokens = _tokenize(text)
    parser = _Parser(tokens, max_length)
    if not tokens:
        raise WordSyntaxError("empty word text")
    node = parser.expr()
    if parser.i != len(tokens):
        kind = parser.peek()
        if kind == ")":
            raise WordSyntaxError("unbalanced parentheses: unexpected ')'")
        raise WordSyntaxError(f"unexpected token {kind!r}")
    return _materialise(node)


def format_word(w: str) -> str:
    """Compress runs into powers, e.g. ``xxDD`` -> ``x^2D^2``."""
    if not w:
        return ""
    out = []
    for m in re.finditer(r"x+|D+", w):
        run = m.group()
        out.append(run[0] if len(run) == 1 else f"{run[0]}^{len(run)}")
    return "".join(out)


# -- Dyck words ---------------------------------------------------------------

def is_dyck(w: Word) -> bool:
    check_word(w)
    depth = 0
    for c in w:
        depth += 1 if c == X else -1
        if depth < 0:
            return False
    return depth == 0


class AssociatedDyck(NamedTuple):
    a: int
    b: int
    dyck: Word


def associated_dyck(w: Word) -> AssociatedDyck:
    """Return ``(a, b, x^a w D^b)`` with ``a`` minimal making every prefix non-negative."""
    check_word(w)
    depth = lowest = 0
    for c in w:
        depth += 1 if c == X else -1
        lowest = min(lowest, depth)
    a = -lowest
    b = a + depth
    return AssociatedDyck(a, b, X * a + w + D * b)


def heights(w: Word) -> list[int]:
    """Excess of x's over D's in the prefix just before each x."""
    require_dyck(w)
    out = []
    depth = 0
    for c in w:
        if c == X:
            out.append(depth)
            depth += 1
        else:
            depth -= 1
    return out


def irreducible_decomposition(w: Word) -> list[Word]:
    require_dyck(w)
    parts = []
    depth = start = 0
    for i, c in enumerate(w):
        depth += 1 if c == X else -1
        if depth == 0:
            parts.append(w[start:i + 1])
            start = i + 1
    return parts


def is_irreducible(w: Word) -> bool:
    return is_dyck(w) and len(irreducible_decomposition(w)) == 1


def matched_pairs(w: Word) -> list[tuple[int, int]]:
    """Stack matching of each D with the nearest open x; sorted by x position."""
    require_dyck(w)
    stack: list[int] = []
    pairs = []
    for pos, c in enumerate(w, start=1):
        if c == X:
            stack.append(pos)
        else:
            pairs.append((stack.pop(), pos))
    pairs.sort()
    return pairs


def column_heights(w: Word) -> list[int]:
    """Height of the path while it crosses column i: the number of x's before the i-th D."""
    check_word(w)
    out = []
    seen = 0
    for c in w:
        if c == X:
            seen += 1
        else:
            out.append(seen)
    return out


@dataclass(frozen=True)
class PathGeometry:
    heights: tuple[int, ...]
    peaks: tuple[tuple[int, int], ...]
    inner_squares: frozenset[tuple[int, int]]
    ferrers_squares: frozenset[tuple[int, int]]


def path_geometry(w: Word) -> PathGeometry:
    require_dyck(w)
    hts = []
    peaks = []
    inner = set()
    ferrers = set()
    m = w.count(X)
    xs = ds = 0
    prev = None
    for c in w:
        if c == X:
            hts.append(xs - ds)
            xs += 1
        else:
            ds += 1
            if prev == X:
                peaks.append((ds, xs))
            # column ds is crossed at height xs
            inner.update((ds, j) for j in range(ds + 1, xs + 1))
            ferrers.update((ds, j) for j in range(xs + 1, m + 1))
        prev = c
    return PathGeometry(tuple(hts), tuple(peaks), frozenset(inner), frozenset(ferrers))


def dyck_words(length: int) -> Iterator[Word]:
    """All Dyck words of the given length in lexicographic order (x < D)."""
    if length % 2:
        return
    half = length // 2

    def rec(prefix, opened, closed):
        if len(prefix) == length:
            yield "".join(prefix)
            return
        if opened < half:
            prefix.append(X)
            yield from rec(prefix, opened + 1, closed)
            prefix.pop()
        if closed < opened:
            prefix.append(D)
            yield from rec(prefix, opened, closed + 1)
            prefix.pop()

    yield from rec([], 0, 0)


def all_dyck_words(max_length: int, include_empty: bool = False) -> Iterator[Word]:
    start = 0 if include_empty else 2
    for n in range(start, max_length + 1, 2):
        yield from dyck_words(n)
