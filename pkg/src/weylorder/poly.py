"""Dense univariate polynomials with exact integer coefficients.

One class serves both as the chromatic polynomial in ``t`` and as the
q-polynomials of the deformed Weyl algebra; only the variable name used
for rendering differs.
"""

from __future__ import annotations

from typing import Iterable, Union

from .errors import InexactDivisionError

Coeff = Union[int, "Poly"]


class Poly:
    """Immutable polynomial stored as a tuple of ints, constant term first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(v) for v in coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def const(cls, c: int) -> Poly:
        return cls((c,))

    @classmethod
    def monomial(cls, degree: int, c: int = 1) -> Poly:
        if degree < 0:
            raise ValueError("negative degree")
        return cls((0,) * degree + (c,))

    @staticmethod
    def coerce(other) -> Poly:
        if isinstance(other, Poly):
            return other
        if isinstance(other, int):
            return Poly((other,))
        raise TypeError(f"cannot coerce {type(other).__name__} to Poly")

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i: int) -> int:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = Poly((other,))
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        if len(self.coeffs) <= 1:
            return hash(self[0])
        return hash(self.coeffs)

    def __add__(self, other) -> Poly:
        try:
            o = Poly.coerce(other)
        except TypeError:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] += v
        return Poly(out)

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly(-v for v in self.coeffs)

    def __sub__(self, other) -> Poly:
        try:
            o = Poly.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> Poly:
        return Poly.coerce(other) - self

    def __mul__(self, other) -> Poly:
        if isinstance(other, int):
            return Poly(v * other for v in self.coeffs)
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> Poly:
        if e < 0:
            raise ValueError("negative exponent")
        result, base = Poly((1,)), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def shift(self, n: int) -> Poly:
        """Multiply by ``var**n``."""
        if not self.coeffs or n == 0:
            return self
        return Poly((0,) * n + self.coeffs)

    def __call__(self, x):
        acc = 0
        for v in reversed(self.coeffs):
            acc = acc * x + v
        return acc

    def divmod(self, other: Poly) -> tuple[Poly, Poly]:
        """Long division over the integers; fails if a quotient digit is fractional."""
        other = Poly.coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        lead = other.coeffs[-1]
        dq = other.degree
        if len(rem) - 1 < dq:
            return Poly(), self
        quot = [0] * (len(rem) - dq)
        for i in range(len(rem) - 1, dq - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            if c % lead:
                raise InexactDivisionError(f"{self!s} / {other!s} is not integral")
            f = c // lead
            quot[i - dq] = f
            for j, v in enumerate(other.coeffs):
                rem[i - dq + j] -= f * v
        return Poly(quot), Poly(rem)

    def exact_div(self, other) -> Poly:
        quot, rem = self.divmod(other)
        if rem:
            raise InexactDivisionError(f"{self!s} / {Poly.coerce(other)!s} leaves remainder {rem!s}")
        return quot

    def __floordiv__(self, other) -> Poly:
        return self.exact_div(other)

    def format(self, var: str = "q") -> str:
        """Ascending-order rendering, e.g. ``2*q + q^2``; zero terms omitted."""
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                mono = str(abs(c))
            else:
                power = var if i == 1 else f"{var}^{i}"
                mono = power if abs(c) == 1 else f"{abs(c)}*{power}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, mono))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, mono in parts[1:]:
            out += f" {sign} {mono}"
        return out

    def __str__(self) -> str:
        return self.format("q")

    def __repr__(self) -> str:
        return f"Poly({list(self.coeffs)})"


ZERO = Poly()
ONE = Poly((1,))
Q = Poly((0, 1))


def falling_factorial(k: int) -> Poly:
    """The falling power t(t-1)...(t-k+1) as a polynomial in t."""
    p = ONE
    for i in range(k):
        p = p * Poly((-i, 1))
    return p


def product_of_linear(roots: Iterable[int]) -> Poly:
    """Expand prod (t - a) over the given integers."""
    p = ONE
    for a in roots:
        p = p * Poly((-a, 1))
    return p
