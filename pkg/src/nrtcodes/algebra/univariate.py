"""Univariate polynomials in λ and rational functions over Q(sqrt 2)."""

from __future__ import annotations

from fractions import Fraction

from ..errors import DimensionError, FieldError
from .quad import ZERO, Quad

LAMBDA = "λ"


class UniPoly:
    """Coefficients of λ^0..λ^d (Quad), trailing zeros stripped."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [Quad.coerce(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def const(cls, c) -> UniPoly:
        return cls([c])

    @classmethod
    def x(cls) -> UniPoly:
        return cls([0, 1])

    @classmethod
    def one_minus_power(cls, d: int) -> UniPoly:
        """``1 - λ^d``."""
        return cls([1] + [0] * (d - 1) + [-1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def lead(self) -> Quad:
        return self.coeffs[-1] if self.coeffs else ZERO

    def __getitem__(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else ZERO

    def _lift(self, other):
        if isinstance(other, UniPoly):
            return other
        if isinstance(other, (int, Fraction, Quad)):
            return UniPoly([other])
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly([self[k] + other[k] for k in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return UniPoly()
        out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] = out[i + j] + a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = UniPoly([1])
        for _ in range(k):
            out = out * self
        return out

    def divmod(self, other: UniPoly):
        if not other:
            raise FieldError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        inv = other.lead().inverse()
        quo = [ZERO] * max(len(rem) - dq, 0)
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k]
            if not c:
                continue
            f = c * inv
            quo[k - dq] = f
            for j, b in enumerate(other.coeffs):
                rem[k - dq + j] = rem[k - dq + j] - f * b
        return UniPoly(quo), UniPoly(rem)

    def exact_div(self, other: UniPoly) -> UniPoly:
        q, r = self.divmod(other)
        if r:
            raise FieldError("inexact polynomial division")
        return q

    def monic(self) -> UniPoly:
        return self * self.lead().inverse()

    def evaluate(self, x) -> Quad:
        x = Quad.coerce(x)
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def reverse(self, degree: int | None = None) -> UniPoly:
        """λ^degree * p(1/λ)."""
        d = self.degree if degree is None else degree
        cs = list(self.coeffs) + [ZERO] * (d + 1 - len(self.coeffs))
        return UniPoly(cs[::-1])

    def is_rational(self) -> bool:
        return all(c.is_rational() for c in self.coeffs)

    def __eq__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def to_str(self, var: str = LAMBDA) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
            neg = False
            if c.is_rational():
                neg = c.a < 0
                mag = -c if neg else c
                if not mono:
                    body = str(mag)
                else:
                    body = mono if mag == 1 else f"{mag}*{mono}"
            else:
                body = f"({c})*{mono}" if mono else f"({c})"
            if not parts:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append(("-" if neg else "+") + body)
        return "".join(parts)

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"UniPoly({self.to_str()!r})"


def poly_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    while b:
        _, r = a.divmod(b)
        a, b = b, r
    return a.monic() if a else a


class RationalFunction:
    """``num/den`` with gcd removed and monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = num if isinstance(num, UniPoly) else UniPoly.const(num)
        den = UniPoly([1]) if den is None else (
            den if isinstance(den, UniPoly) else UniPoly.const(den))
        if not den:
            raise FieldError("zero denominator")
        g = poly_gcd(num, den) if num else den
        num = num.exact_div(g)
        den = den.exact_div(g)
        lc = den.lead()
        if lc != 1:
            inv = lc.inverse()
            num, den = num * inv, den * inv
        self.num = num
        self.den = den

    def __add__(self, other):
        if not isinstance(other, RationalFunction):
            other = RationalFunction(other)
        g = poly_gcd(self.den, other.den)
        a = self.den.exact_div(g)
        b = other.den.exact_div(g)
        return RationalFunction(self.num * b + other.num * a, a * other.den)

    __radd__ = __add__

    def __mul__(self, other):
        if not isinstance(other, RationalFunction):
            other = RationalFunction(other)
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, RationalFunction):
            other = RationalFunction(other)
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __eq__(self, other):
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def series(self, D: int):
        return series_expand(self, D)

    def factored_str(self, var: str = LAMBDA) -> str:
        """Write the denominator as a product of ``(1-λ^d)`` factors when possible."""
        rest = self.den
        factors = []
        for d in range(max(rest.degree, 0), 0, -1):
            f = UniPoly.one_minus_power(d)
            while rest.degree >= d:
                q, r = rest.divmod(f)
                if r:
                    break
                factors.append(d)
                rest = q
        # rest is a constant times any leftover factor; fold constants into num
        num = self.num
        if rest.degree == 0:
            num = num * rest.lead().inverse()
            rest = UniPoly([1])
        factors.sort()
        den_parts = []
        i = 0
        while i < len(factors):
            d = factors[i]
            j = i
            while j < len(factors) and factors[j] == d:
                j += 1
            base = UniPoly.one_minus_power(d).to_str(var)
            m = j - i
            den_parts.append(f"({base})" + (f"^{m}" if m > 1 else ""))
            i = j
        if rest.degree > 0:
            den_parts.append(f"({rest.to_str(var)})")
        num_s = num.to_str(var)
        if len(num.coeffs) > 1:
            num_s = f"({num_s})"
        if not den_parts:
            return num_s
        den_s = den_parts[0] if len(den_parts) == 1 else "(" + "".join(den_parts) + ")"
        return f"{num_s}/{den_s}"

    def __str__(self):
        return f"({self.num}) / ({self.den})"

    def __repr__(self):
        return f"RationalFunction({self.num.to_str()!r}, {self.den.to_str()!r})"


def series_expand(r: RationalFunction, D: int):
    """Power-series coefficients of ``r`` at λ = 0 for λ^0..λ^D."""
    den = r.den
    if not den[0]:
        raise FieldError("rational function has a pole at λ = 0")
    inv0 = den[0].inverse()
    out = []
    for k in range(D + 1):
        acc = r.num[k]
        for j in range(1, min(k, den.degree) + 1):
            acc = acc - den[j] * out[k - j]
        out.append(acc * inv0)
    return out


def det_poly(A) -> UniPoly:
    """``det(I - λA)`` by fraction-free (Bareiss) elimination over Q(√2)[λ]."""
    if not A.is_square():
        raise DimensionError("det_poly needs a square matrix")
    n = A.rows
    M = [[(UniPoly([1 if i == j else 0]) - UniPoly([0, A[i, j]]))
          for j in range(n)] for i in range(n)]
    sign = 1
    prev = UniPoly([1])
    for k in range(n - 1):
        if not M[k][k]:
            swap = next((i for i in range(k + 1, n) if M[i][k]), None)
            if swap is None:
                return UniPoly()
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]).exact_div(prev)
        prev = M[k][k]
    result = M[n - 1][n - 1]
    return result if sign == 1 else -result
