"""Multivariate polynomials over Q(sqrt 2) in variables z0..z_{m-1}.

Canonical term order is graded lexicographic with z0 > z1 > ...; the string
form is e.g. ``z0^2 + z1^2 + 2*z2^2`` and :func:`parse_poly` reads it back.
"""

from __future__ import annotations

import re
from fractions import Fraction
from itertools import combinations_with_replacement

from ..errors import DimensionError
from .quad import ONE, ZERO, Quad


def _sort_key(exp):
    return (-sum(exp), tuple(-e for e in exp))


def monomials(nvars: int, degree: int):
    """All exponent vectors of the given total degree, in canonical order."""
    out = []
    for combo in combinations_with_replacement(range(nvars), degree):
        e = [0] * nvars
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    out.sort(key=_sort_key)
    return out


class MultiPoly:
    """Immutable sparse polynomial: exponent tuple -> nonzero Quad."""

    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars: int, terms=None):
        self.nvars = nvars
        clean = {}
        if terms:
            for exp, c in terms.items():
                exp = tuple(exp)
                if len(exp) != nvars:
                    raise DimensionError(
                        f"exponent {exp} does not have {nvars} entries")
                c = Quad.coerce(c)
                if c:
                    clean[exp] = c
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, nvars, terms):
        p = object.__new__(cls)
        p.nvars = nvars
        p.terms = terms
        p._hash = None
        return p

    @classmethod
    def const(cls, nvars: int, c=1) -> MultiPoly:
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def var(cls, nvars: int, i: int) -> MultiPoly:
        e = [0] * nvars
        e[i] = 1
        return cls._raw(nvars, {tuple(e): ONE})

    @classmethod
    def monomial(cls, exp, c=1) -> MultiPoly:
        return cls(len(exp), {tuple(exp): c})

    @classmethod
    def linear(cls, coeffs) -> MultiPoly:
        n = len(coeffs)
        terms = {}
        for i, c in enumerate(coeffs):
            e = [0] * n
            e[i] = 1
            terms[tuple(e)] = c
        return cls(n, terms)

    # -- basic queries ------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def coefficient(self, exp) -> Quad:
        return self.terms.get(tuple(exp), ZERO)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: _sort_key(t[0]))

    def coefficient_sum(self) -> Quad:
        acc = ZERO
        for c in self.terms.values():
            acc = acc + c
        return acc

    def has_integer_coefficients(self) -> bool:
        return all(c.is_integer() for c in self.terms.values())

    # -- arithmetic ---------------------------------------------------------
    def _check(self, other):
        if other.nvars != self.nvars:
            raise DimensionError(
                f"variable count mismatch: {self.nvars} vs {other.nvars}")

    def _lift(self, other):
        if isinstance(other, MultiPoly):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction, Quad)):
            return MultiPoly.const(self.nvars, other)
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for e, c in other.terms.items():
            v = terms.get(e)
            v = c if v is None else v + c
            if v:
                terms[e] = v
            else:
                terms.pop(e, None)
        return MultiPoly._raw(self.nvars, terms)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Quad)):
            c = Quad.coerce(other)
            if not c:
                return MultiPoly._raw(self.nvars, {})
            return MultiPoly._raw(self.nvars,
                                  {e: v * c for e, v in self.terms.items()})
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._check(other)
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = terms.get(e)
                terms[e] = c1 * c2 if v is None else v + c1 * c2
        return MultiPoly._raw(self.nvars, {e: c for e, c in terms.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, c):
        c = Quad.coerce(c)
        inv = c.inverse()
        return self * inv

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        out = MultiPoly.const(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, Fraction, Quad)):
            return self == MultiPoly.const(self.nvars, other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    # -- calculus / evaluation ----------------------------------------------
    def derivative(self, j: int) -> MultiPoly:
        terms = {}
        for e, c in self.terms.items():
            if e[j]:
                ne = list(e)
                ne[j] -= 1
                terms[tuple(ne)] = c * e[j]
        return MultiPoly._raw(self.nvars, terms)

    def evaluate(self, point) -> Quad:
        pt = [Quad.coerce(x) for x in point]
        if len(pt) != self.nvars:
            raise DimensionError("evaluation point has the wrong length")
        acc = ZERO
        for e, c in self.terms.items():
            t = c
            for x, k in zip(pt, e):
                if k:
                    t = t * x ** k
            acc = acc + t
        return acc

    def scale_to_primitive(self):
        """Return ``(c, p)`` with ``self = c * p`` and ``p``'s leading coefficient 1."""
        if not self.terms:
            return ONE, self
        lead = self.sorted_terms()[0][1]
        return lead, self / lead

    # -- printing -------------------------------------------------------------
    def to_str(self, names=None) -> str:
        if names is None:
            names = [f"z{i}" for i in range(self.nvars)]
        if not self.terms:
            return "0"
        parts = []
        for exp, c in self.sorted_terms():
            mono = "*".join(
                names[i] if k == 1 else f"{names[i]}^{k}"
                for i, k in enumerate(exp) if k)
            neg = False
            if c.is_rational():
                neg = c.a < 0
                mag = -c if neg else c
                cs = str(mag)
                if mono:
                    body = mono if mag == 1 else f"{cs}*{mono}"
                else:
                    body = cs
            else:
                if c.a <= 0 and c.b < 0:
                    neg = True
                    c = -c
                cs = str(c) if not c.a else f"({c})"
                body = f"{cs}*{mono}" if mono else cs
            if not parts:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append((" - " if neg else " + ") + body)
        return "".join(parts)

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"MultiPoly({self.nvars}, {self.to_str()!r})"

    def to_json(self):
        """``{"e0,e1,...": "coeff"}`` mapping in canonical order."""
        return {",".join(map(str, e)): str(c) for e, c in self.sorted_terms()}


# -- substitution / Jacobian --------------------------------------------------

def substitute_linear(f: MultiPoly, M) -> MultiPoly:
    """Return ``f(M z)``: each ``z_i`` becomes ``sum_j M[i][j] z_j``."""
    if not M.is_square() or M.rows != f.nvars:
        raise DimensionError(
            f"matrix {M.shape} does not act on {f.nvars} variables")
    n = f.nvars
    forms = [MultiPoly.linear(M.row(i)) for i in range(n)]
    cache = {}

    def power(i, k):
        key = (i, k)
        if key not in cache:
            cache[key] = forms[i] if k == 1 else power(i, k - 1) * forms[i]
        return cache[key]

    acc = MultiPoly(n)
    for exp, c in f.terms.items():
        term = MultiPoly.const(n, c)
        for i, k in enumerate(exp):
            if k:
                term = term * power(i, k)
        acc = acc + term
    return acc


def jacobian_matrix(fs):
    """Matrix of partial derivatives ``d f_i / d z_j``."""
    fs = list(fs)
    if not fs:
        return []
    n = fs[0].nvars
    if any(f.nvars != n for f in fs):
        raise DimensionError("polynomials have different variable counts")
    return [[f.derivative(j) for j in range(n)] for f in fs]


# -- parsing --------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|(sqrt2)|z(\d+)|([-+*/^()]))")


def parse_poly(text: str, nvars: int | None = None) -> MultiPoly:
    """Parse a polynomial written with ``+ - * / ^``, parentheses, ``sqrt2``
    and variables ``z0, z1, ...``. ``λ`` is not accepted here."""
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"unexpected character at {pos}: {text[pos:pos+10]!r}")
        num, s2, var, op = m.groups()
        if num is not None:
            tokens.append(("num", int(num)))
        elif s2 is not None:
            tokens.append(("sqrt2", None))
        elif var is not None:
            tokens.append(("var", int(var)))
        else:
            tokens.append(("op", op))
        pos = m.end()
    maxvar = max((v for t, v in tokens if t == "var"), default=-1)
    if nvars is None:
        nvars = max(maxvar + 1, 1)
    elif maxvar >= nvars:
        raise DimensionError(f"z{maxvar} used but only {nvars} variables")

    i = 0

    def peek():
        return tokens[i] if i < len(tokens) else (None, None)

    def take():
        nonlocal i
        t = tokens[i]
        i += 1
        return t

    def expr():
        sign = 1
        if peek() == ("op", "-"):
            take()
            sign = -1
        elif peek() == ("op", "+"):
            take()
        acc = term() * sign
        while peek() in (("op", "+"), ("op", "-")):
            _, o = take()
            t = term()
            acc = acc + t if o == "+" else acc - t
        return acc

    def term():
        acc = factor()
        while True:
            nxt = peek()
            if nxt == ("op", "*"):
                take()
                acc = acc * factor()
            elif nxt == ("op", "/"):
                take()
                d = factor()
                if d.degree() > 0 or d.is_zero():
                    raise ValueError("can only divide by a nonzero constant")
                acc = acc / d.coefficient((0,) * nvars)
            elif nxt[0] in ("num", "var", "sqrt2") or nxt == ("op", "("):
                acc = acc * factor()  # implicit multiplication
            else:
                return acc

    def factor():
        base = atom()
        if peek() == ("op", "^"):
            take()
            kind, val = take()
            if kind != "num":
                raise ValueError("exponent must be a nonnegative integer")
            base = base ** val
        return base

    def atom():
        if i >= len(tokens):
            raise ValueError("unexpected end of polynomial")
        kind, val = take()
        if kind == "num":
            return MultiPoly.const(nvars, val)
        if kind == "sqrt2":
            return MultiPoly.const(nvars, Quad.sqrt2())
        if kind == "var":
            return MultiPoly.var(nvars, val)
        if val == "(":
            e = expr()
            if take() != ("op", ")"):
                raise ValueError("missing ')'")
            return e
        if val == "-":
            return -factor()
        raise ValueError(f"unexpected token {val!r}")

    if not tokens:
        raise ValueError("empty polynomial")
    result = expr()
    if i != len(tokens):
        raise ValueError(f"trailing input after token {i}")
    return result
