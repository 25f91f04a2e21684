"""Prime fields GF(p) and dense linear algebra over them.

Matrices over GF(p) are plain lists of int rows with entries in [0, p); the
:class:`FieldElement` wrapper is for scalar work at API boundaries.
"""

from __future__ import annotations

from functools import lru_cache, total_ordering

from ..errors import FieldError


@lru_cache(maxsize=None)
def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def check_prime(p: int) -> int:
    if not isinstance(p, int) or not is_prime(p):
        raise FieldError(f"modulus {p!r} is not prime")
    return p


@total_ordering
class FieldElement:
    """An element of GF(p)."""

    __slots__ = ("value", "modulus")

    def __init__(self, value: int, modulus: int):
        check_prime(modulus)
        self.value = int(value) % modulus
        self.modulus = modulus

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.modulus != self.modulus:
                raise FieldError(
                    f"modulus mismatch: {self.modulus} vs {other.modulus}")
            return other.value
        if isinstance(other, int):
            return other % self.modulus
        return NotImplemented

    def _new(self, v: int) -> FieldElement:
        out = object.__new__(FieldElement)
        out.value = v % self.modulus
        out.modulus = self.modulus
        return out

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self._new(self.value + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self._new(self.value - o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self._new(o - self.value)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self._new(self.value * o)

    __rmul__ = __mul__

    def __neg__(self):
        return self._new(-self.value)

    def inverse(self) -> FieldElement:
        if self.value == 0:
            raise FieldError("inverse of zero")
        return self._new(pow(self.value, -1, self.modulus))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * self._new(o).inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return self._new(pow(self.value, e, self.modulus))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.modulus == other.modulus and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.modulus
        return NotImplemented

    def __lt__(self, other):
        if not isinstance(other, FieldElement):
            return NotImplemented
        return (self.modulus, self.value) < (other.modulus, other.value)

    def __hash__(self):
        return hash((self.value, self.modulus))

    def __int__(self):
        return self.value

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"FieldElement({self.value}, {self.modulus})"

    def __str__(self):
        return str(self.value)


def field_arith(x: FieldElement, y: FieldElement | None, op: str) -> FieldElement:
    """Dispatch one of ``add``, ``mul``, ``inv``, ``neg``."""
    if op == "add":
        return x + y
    if op == "mul":
        return x * y
    if op == "inv":
        return x.inverse()
    if op == "neg":
        return -x
    raise ValueError(f"unknown op {op!r}")


# -- matrices over GF(p) as lists of int rows -------------------------------

def rref(rows, p: int, ncols: int | None = None):
    """Reduced row-echelon form over GF(p).

    Returns ``(R, pivots)`` where ``R`` holds only the nonzero rows.
    """
    R = [[x % p for x in row] for row in rows]
    if ncols is None:
        ncols = len(R[0]) if R else 0
    pivots = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(R)):
            if R[i][c]:
                piv = i
                break
        if piv is None:
            continue
        R[r], R[piv] = R[piv], R[r]
        inv = pow(R[r][c], -1, p)
        if inv != 1:
            R[r] = [(x * inv) % p for x in R[r]]
        pr = R[r]
        for i in range(len(R)):
            if i != r and R[i][c]:
                f = R[i][c]
                R[i] = [(a - f * b) % p for a, b in zip(R[i], pr)]
        pivots.append(c)
        r += 1
        if r == len(R):
            break
    return R[:r], pivots


def rank(rows, p: int) -> int:
    return len(rref(rows, p)[1])


def nullspace(rows, ncols: int, p: int):
    """Basis of ``{x : M x = 0}`` for ``M`` given by ``rows`` (ncols wide)."""
    R, pivots = rref(rows, p, ncols)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        x = [0] * ncols
        x[f] = 1
        for i, pc in enumerate(pivots):
            x[pc] = (-R[i][f]) % p
        basis.append(x)
    return basis


def matmul(A, B, p: int):
    if not A:
        return []
    Bt = list(zip(*B)) if B else []
    if not Bt:
        return [[] for _ in A]
    return [[sum(a * b for a, b in zip(row, col)) % p for col in Bt] for row in A]


def transpose(A):
    return [list(c) for c in zip(*A)]


def all_rref_matrices(N: int, q: int, k: int):
    """Yield every k x N RREF matrix over GF(q), i.e. every k-dim subspace."""
    from itertools import combinations, product

    for pivots in combinations(range(N), k):
        pset = set(pivots)
        # free positions: in row i, columns > pivots[i] that are not pivots
        slots = [(i, c) for i, pc in enumerate(pivots)
                 for c in range(pc + 1, N) if c not in pset]
        for vals in product(range(q), repeat=len(slots)):
            M = [[0] * N for _ in range(k)]
            for i, pc in enumerate(pivots):
                M[i][pc] = 1
            for (i, c), v in zip(slots, vals):
                M[i][c] = v
            yield M


def all_subspaces(N: int, q: int):
    for k in range(N + 1):
        yield from all_rref_matrices(N, q, k)
