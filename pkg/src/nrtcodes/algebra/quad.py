"""Exact arithmetic in the quadratic field Q(sqrt 2).

Rationals are :class:`fractions.Fraction`; a :class:`Quad` is ``a + b*sqrt2``
with rational ``a`` and ``b``.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

from ..errors import FieldError

SQRT2_FLOAT = math.sqrt(2.0)


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot make an exact rational from {type(x).__name__}")


def format_rational(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


class Quad:
    """An element ``a + b*sqrt2`` of Q(sqrt 2). Immutable."""

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        object.__setattr__(self, "a", _frac(a))
        object.__setattr__(self, "b", _frac(b))

    def __setattr__(self, name, value):
        raise AttributeError("Quad is immutable")

    @classmethod
    def _raw(cls, a: Fraction, b: Fraction) -> Quad:
        q = object.__new__(cls)
        object.__setattr__(q, "a", a)
        object.__setattr__(q, "b", b)
        return q

    @classmethod
    def coerce(cls, x) -> Quad:
        if isinstance(x, Quad):
            return x
        if isinstance(x, (int, Fraction)):
            return cls._raw(Fraction(x), Fraction(0))
        raise TypeError(f"cannot coerce {type(x).__name__} to Quad")

    @classmethod
    def sqrt2(cls) -> Quad:
        return cls._raw(Fraction(0), Fraction(1))

    @classmethod
    def pow2_half(cls, e: int) -> Quad:
        """``2**(e/2)`` for any integer ``e``."""
        if e % 2 == 0:
            return cls._raw(Fraction(2) ** (e // 2), Fraction(0))
        return cls._raw(Fraction(0), Fraction(2) ** ((e - 1) // 2))

    # -- predicates ---------------------------------------------------------
    def is_rational(self) -> bool:
        return self.b == 0

    def is_integer(self) -> bool:
        return self.b == 0 and self.a.denominator == 1

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other):
        if isinstance(other, Quad):
            return Quad._raw(self.a + other.a, self.b + other.b)
        if isinstance(other, (int, Fraction)):
            return Quad._raw(self.a + other, self.b)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return Quad._raw(-self.a, -self.b)

    def __sub__(self, other):
        if isinstance(other, Quad):
            return Quad._raw(self.a - other.a, self.b - other.b)
        if isinstance(other, (int, Fraction)):
            return Quad._raw(self.a - other, self.b)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Quad):
            a, b, c, d = self.a, self.b, other.a, other.b
            if not b and not d:
                return Quad._raw(a * c, b)
            return Quad._raw(a * c + 2 * b * d, a * d + b * c)
        if isinstance(other, (int, Fraction)):
            return Quad._raw(self.a * other, self.b * other)
        return NotImplemented

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        return self.a * self.a - 2 * self.b * self.b

    def conjugate(self) -> Quad:
        return Quad._raw(self.a, -self.b)

    def inverse(self) -> Quad:
        if not self:
            raise FieldError("inverse of zero in Q(sqrt2)")
        if not self.b:
            return Quad._raw(1 / self.a, self.b)
        n = self.norm()
        return Quad._raw(self.a / n, -self.b / n)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise FieldError("division by zero")
            return Quad._raw(self.a / other, self.b / other)
        if isinstance(other, Quad):
            return self * other.inverse()
        return NotImplemented

    def __rtruediv__(self, other):
        return Quad.coerce(other) * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        out = Quad._raw(Fraction(1), Fraction(0))
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    # -- comparison / hashing -------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Quad):
            return self.a == other.a and self.b == other.b
        if isinstance(other, (int, Fraction)):
            return not self.b and self.a == other
        return NotImplemented

    def __hash__(self):
        if not self.b:
            return hash(self.a)
        return hash((self.a, self.b))

    def __float__(self):
        return float(self.a) + float(self.b) * SQRT2_FLOAT

    def to_fraction(self) -> Fraction:
        if self.b:
            raise FieldError(f"{self} is not rational")
        return self.a

    def __repr__(self):
        return f"Quad({format_rational(self.a)!r}, {format_rational(self.b)!r})"

    def __str__(self):
        if not self.b:
            return format_rational(self.a)
        bpart = "sqrt2" if self.b == 1 else (
            "-sqrt2" if self.b == -1 else f"{format_rational(self.b)}*sqrt2")
        if not self.a:
            return bpart
        if bpart.startswith("-"):
            return f"{format_rational(self.a)}{bpart}"
        return f"{format_rational(self.a)}+{bpart}"

    @classmethod
    def parse(cls, text: str) -> Quad:
        """Parse ``a``, ``b*sqrt2`` or ``a+b*sqrt2`` (rationals as ``n/d``)."""
        t = text.replace(" ", "")
        m = re.fullmatch(
            r"(?:([+-]?\d+(?:/\d+)?)(?=[+-]|$))?"
            r"(?:([+-]?(?:\d+(?:/\d+)?)?)\*?sqrt2)?", t)
        if not t or m is None or (m.group(1) is None and m.group(2) is None):
            raise ValueError(f"bad Q(sqrt2) literal {text!r}")
        a = Fraction(m.group(1)) if m.group(1) else Fraction(0)
        b = Fraction(0)
        if m.group(2) is not None:
            g = m.group(2)
            b = Fraction(g + "1") if g in ("", "+", "-") else Fraction(g)
        return cls._raw(a, b)


ZERO = Quad(0)
ONE = Quad(1)
