"""Exact arithmetic in Q(sqrt(D)) for a single square-free radicand D.

Every coordinate and squared distance in the package is a :class:`QuadExt`.
Values are immutable, hashable and kept in a canonical form so that two
equal numbers are structurally equal (and hash the same).
"""
from __future__ import annotations

import re
from fractions import Fraction
from functools import total_ordering
from numbers import Rational
from typing import Union

__all__ = [
    "QuadExt",
    "ContractError",
    "MixedRadicandError",
    "as_quad",
    "parse",
    "render",
    "sign",
    "compare",
    "is_squarefree",
]


class ContractError(ValueError):
    """A precondition of an operation was violated."""


class MixedRadicandError(ContractError):
    """Two values with different radicands met in one operation."""


def is_squarefree(D: int) -> bool:
    if D < 0:
        return False
    if D in (0, 1):
        return True
    p = 2
    while p * p <= D:
        if D % (p * p) == 0:
            return False
        p += 1
    return True


Number = Union["QuadExt", int, Fraction]


def _sign_of(a: Fraction, b: Fraction, D: int) -> int:
    # sign of a + b*sqrt(D), decided on integers only
    if b == 0 or D == 0:
        return (a > 0) - (a < 0)
    sa = (a > 0) - (a < 0)
    sb = (b > 0) - (b < 0)
    if sa == 0:
        return sb
    if sa == sb:
        return sa
    # opposite signs: compare a^2 with b^2 D
    lhs = a * a
    rhs = b * b * D
    if lhs > rhs:
        return sa
    if lhs < rhs:
        return sb
    return 0  # unreachable for square-free D > 1, kept for safety


@total_ordering
class QuadExt:
    """The real number ``a + b*sqrt(D)`` with rational ``a``, ``b``."""

    __slots__ = ("_a", "_b", "_D", "_hash")

    def __init__(self, a: Rational | int | str = 0, b: Rational | int | str = 0, D: int = 0):
        a = Fraction(a)
        b = Fraction(b)
        D = int(D)
        if not is_squarefree(D):
            raise ContractError(f"radicand must be a nonnegative square-free integer, got {D}")
        if D == 0:
            b = Fraction(0)
        elif D == 1:
            a, b = a + b, Fraction(0)
        self._a = a
        self._b = b
        self._D = D
        self._hash = None

    @classmethod
    def _raw(cls, a: Fraction, b: Fraction, D: int) -> "QuadExt":
        # skips validation; callers guarantee D is already checked
        obj = cls.__new__(cls)
        if D == 1:
            a, b = a + b, Fraction(0)
        obj._a = a
        obj._b = b if D > 1 else Fraction(0)
        obj._D = D
        obj._hash = None
        return obj

    @property
    def a(self) -> Fraction:
        return self._a

    @property
    def b(self) -> Fraction:
        return self._b

    @property
    def D(self) -> int:
        return self._D

    def is_rational(self) -> bool:
        return self._b == 0

    # -- coercion -----------------------------------------------------
    def _coerce(self, other) -> "QuadExt":
        if isinstance(other, QuadExt):
            if other._D != self._D:
                raise MixedRadicandError(f"radicand mismatch: {self._D} vs {other._D}")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadExt._raw(Fraction(other), Fraction(0), self._D)
        return NotImplemented

    # -- field operations ---------------------------------------------
    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadExt._raw(self._a + o._a, self._b + o._b, self._D)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadExt._raw(self._a - o._a, self._b - o._b, self._D)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __neg__(self):
        return QuadExt._raw(-self._a, -self._b, self._D)

    def __pos__(self):
        return self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        a, b, c, d = self._a, self._b, o._a, o._b
        if b == 0 and d == 0:
            return QuadExt._raw(a * c, Fraction(0), self._D)
        return QuadExt._raw(a * c + b * d * self._D, a * d + b * c, self._D)

    __rmul__ = __mul__

    def conjugate(self) -> "QuadExt":
        return QuadExt._raw(self._a, -self._b, self._D)

    def norm(self) -> Fraction:
        """Field norm ``a^2 - D b^2``; zero only for zero."""
        return self._a * self._a - self._D * self._b * self._b

    def inverse(self) -> "QuadExt":
        if self._a == 0 and self._b == 0:
            raise ZeroDivisionError("inverse of zero in Q(sqrt(D))")
        if self._b == 0:
            return QuadExt._raw(1 / self._a, Fraction(0), self._D)
        n = self.norm()
        return QuadExt._raw(self._a / n, -self._b / n, self._D)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = QuadExt._raw(Fraction(1), Fraction(0), self._D)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- order ----------------------------------------------------------
    def sign(self) -> int:
        return _sign_of(self._a, self._b, self._D)

    def __bool__(self) -> bool:
        return self._a != 0 or self._b != 0

    def __eq__(self, other) -> bool:
        if isinstance(other, QuadExt):
            if other._D != self._D:
                # rationals compare across radicands; irrationals never equal
                return self._b == 0 and other._b == 0 and self._a == other._a
            return self._a == other._a and self._b == other._b
        if isinstance(other, (int, Fraction)):
            return self._b == 0 and self._a == other
        return NotImplemented

    def __lt__(self, other) -> bool:
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return _sign_of(self._a - o._a, self._b - o._b, self._D) < 0

    def __hash__(self) -> int:
        if self._hash is None:
            # rational values hash like the Fraction so 2 == QuadExt(2) stays consistent
            self._hash = hash(self._a) if self._b == 0 else hash((self._a, self._b, self._D))
        return self._hash

    def __float__(self) -> float:
        if self._b == 0:
            return float(self._a)
        return float(self._a) + float(self._b) * self._D ** 0.5

    def __repr__(self) -> str:
        return f"QuadExt({render(self)!r}, D={self._D})"

    def __str__(self) -> str:
        return render(self)

    def __reduce__(self):
        return (QuadExt, (self._a, self._b, self._D))


def as_quad(x: Number | str, D: int = 0) -> QuadExt:
    """Coerce ints, Fractions and text to a value with radicand ``D``."""
    if isinstance(x, QuadExt):
        if x.D != D and not (x.is_rational()):
            raise MixedRadicandError(f"radicand mismatch: {x.D} vs {D}")
        return x if x.D == D else QuadExt(x.a, 0, D)
    if isinstance(x, str):
        return parse(x, D)
    return QuadExt(Fraction(x), 0, D)


def sign(x: QuadExt) -> int:
    return x.sign()


def compare(x: QuadExt, y: QuadExt) -> int:
    """Three-way comparison, ``sign(x - y)``."""
    return (x - y).sign()


def _fmt_frac(f: Fraction) -> str:
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def render(x: QuadExt) -> str:
    """Text form: ``p/q`` or ``p/q + r/s*sqrt(D)``."""
    if x.b == 0:
        return _fmt_frac(x.a)
    op = "+" if x.b > 0 else "-"
    return f"{_fmt_frac(x.a)} {op} {_fmt_frac(abs(x.b))}*sqrt({x.D})"


_RAT = r"[+-]?\d+(?:/\d+)?"
_QUAD_RE = re.compile(
    rf"^\s*(?P<a>{_RAT})\s*(?:(?P<op>[+-])\s*(?P<b>\d+(?:/\d+)?)\s*\*\s*sqrt\(\s*(?P<D>\d+)\s*\))?\s*$"
)


def parse(text: str, D: int = 0) -> QuadExt:
    """Inverse of :func:`render`.

    ``D`` is the radicand declared by the surrounding context; a ``sqrt(k)``
    term with ``k != D`` is rejected.
    """
    m = _QUAD_RE.match(text)
    if m is None:
        raise ValueError(f"not an exact number: {text!r}")
    a = Fraction(m.group("a"))
    if m.group("b") is None:
        return QuadExt(a, 0, D)
    if int(m.group("D")) != D:
        raise MixedRadicandError(f"sqrt({m.group('D')}) in a context declaring D={D}")
    b = Fraction(m.group("b"))
    if m.group("op") == "-":
        b = -b
    return QuadExt(a, b, D)
