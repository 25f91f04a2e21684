"""NRT words, shapes, linear codes, duals and the NRT isometry group.

A word of ``M_{n,s}(F_q)`` is flattened row-major (row 1's block first) when
it is used as a coordinate vector; generator matrices use the same layout.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from itertools import permutations, product

from .algebra.field import FieldElement, check_prime, nullspace, rref
from .errors import CapExceededError, CodeFormatError, DimensionError, NrtError

DEFAULT_MAX_ENUM = 2 ** 24
DEFAULT_MAX_ISOMETRIES = 10 ** 7


def default_enum_cap() -> int:
    env = os.environ.get("NRT_MAX_ENUM")
    if env:
        try:
            cap = int(env)
        except ValueError:
            raise NrtError(f"NRT_MAX_ENUM={env!r} is not an integer") from None
        if cap <= 0:
            raise NrtError("NRT_MAX_ENUM must be positive")
        return cap
    return DEFAULT_MAX_ENUM


@dataclass(frozen=True)
class NrtWord:
    """An n x s matrix over GF(q); entries stored as residues."""

    q: int
    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(int(x) % self.q for x in r) for r in self.rows)
        if not rows or not rows[0]:
            raise DimensionError("an NRT word needs n >= 1 and s >= 1")
        if any(len(r) != len(rows[0]) for r in rows):
            raise DimensionError("ragged word")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_flat(cls, q: int, n: int, s: int, flat) -> NrtWord:
        flat = list(flat)
        if len(flat) != n * s:
            raise DimensionError(f"expected {n * s} entries, got {len(flat)}")
        return cls(q, tuple(tuple(flat[i * s:(i + 1) * s]) for i in range(n)))

    @classmethod
    def zero(cls, q: int, n: int, s: int) -> NrtWord:
        return cls(q, ((0,) * s,) * n)

    @property
    def n(self) -> int:
        return len(self.rows)

    @property
    def s(self) -> int:
        return len(self.rows[0])

    def flat(self) -> tuple:
        return tuple(x for r in self.rows for x in r)

    def entry(self, i: int, j: int) -> FieldElement:
        return FieldElement(self.rows[i][j], self.q)

    def __add__(self, other: NrtWord) -> NrtWord:
        _check_same(self, other)
        return NrtWord(self.q, tuple(tuple(a + b for a, b in zip(r, t))
                                     for r, t in zip(self.rows, other.rows)))

    def scale(self, c: int) -> NrtWord:
        return NrtWord(self.q, tuple(tuple(c * x for x in r) for r in self.rows))

    def __str__(self):
        return "[" + "; ".join(" ".join(map(str, r)) for r in self.rows) + "]"


def _check_same(u: NrtWord, v: NrtWord):
    if (u.q, u.n, u.s) != (v.q, v.n, v.s):
        raise DimensionError(
            f"parameter mismatch: (q,n,s)={(u.q, u.n, u.s)} vs {(v.q, v.n, v.s)}")


@dataclass(frozen=True)
class ShapeVector:
    e: tuple
    e0: int

    @property
    def n(self) -> int:
        return self.e0 + sum(self.e)

    def exponents(self) -> tuple:
        """Exponent vector of ``z0^e0 z1^e1 ... zs^es``."""
        return (self.e0,) + tuple(self.e)

    def weight(self) -> int:
        return sum(j * ej for j, ej in enumerate(self.e, start=1))


def row_weight(row) -> int:
    for j in range(len(row), 0, -1):
        if row[j - 1]:
            return j
    return 0


def nrt_weight(w: NrtWord) -> int:
    return sum(row_weight(r) for r in w.rows)


def shape(w: NrtWord) -> ShapeVector:
    e = [0] * w.s
    for r in w.rows:
        j = row_weight(r)
        if j:
            e[j - 1] += 1
    return ShapeVector(tuple(e), w.n - sum(e))


def shape_exponents(flat, n: int, s: int) -> tuple:
    """Shape exponent vector ``(e0, e1, .., es)`` of a flattened word."""
    exp = [0] * (s + 1)
    for i in range(n):
        j = s
        base = i * s
        while j and not flat[base + j - 1]:
            j -= 1
        exp[j] += 1
    return tuple(exp)


def nrt_inner(u: NrtWord, v: NrtWord) -> FieldElement:
    _check_same(u, v)
    s = u.s
    total = 0
    for r, t in zip(u.rows, v.rows):
        total += sum(r[j] * t[s - 1 - j] for j in range(s))
    return FieldElement(total, u.q)


def flat_inner(x, y, n: int, s: int, q: int) -> int:
    total = 0
    for i in range(n):
        b = i * s
        for j in range(s):
            total += x[b + j] * y[b + s - 1 - j]
    return total % q


def hamming_inner(x, y, q: int) -> int:
    return sum(a * b for a, b in zip(x, y)) % q


def pairing_image(row, n: int, s: int):
    """Coordinates permuted so the NRT pairing becomes the dot product."""
    return [row[i * s + (s - 1 - j)] for i in range(n) for j in range(s)]


# -- codes ----------------------------------------------------------------------

@dataclass(frozen=True)
class NrtCode:
    """A linear code in ``M_{n,s}(F_q)`` held by its RREF generator matrix."""

    q: int
    n: int
    s: int
    gen: tuple

    def __post_init__(self):
        check_prime(self.q)
        if self.n < 1 or self.s < 1:
            raise DimensionError("n and s must be positive")
        N = self.n * self.s
        rows = [list(r) for r in self.gen]
        if any(len(r) != N for r in rows):
            raise DimensionError(f"generator rows must have length {N}")
        R, _ = rref(rows, self.q, N)
        object.__setattr__(self, "gen", tuple(tuple(r) for r in R))

    @property
    def k(self) -> int:
        return len(self.gen)

    @property
    def length(self) -> int:
        return self.n * self.s

    @property
    def size(self) -> int:
        return self.q ** self.k

    def params(self):
        return (self.q, self.n, self.s)

    def generator_words(self):
        return [NrtWord.from_flat(self.q, self.n, self.s, r) for r in self.gen]

    def contains(self, flat) -> bool:
        flat = [x % self.q for x in flat]
        if not any(flat):
            return True
        R, _ = rref([list(r) for r in self.gen] + [flat], self.q, self.length)
        return len(R) == self.k

    def __str__(self):
        return f"[{self.length},{self.k}] NRT code in M_{{{self.n},{self.s}}}(F_{self.q})"


def code_from_rows(q: int, n: int, s: int, rows) -> NrtCode:
    flat = []
    for r in rows:
        if isinstance(r, NrtWord):
            if (r.q, r.n, r.s) != (q, n, s):
                raise DimensionError("row word does not match (q, n, s)")
            flat.append(list(r.flat()))
        else:
            flat.append(list(r))
    return NrtCode(q, n, s, tuple(tuple(r) for r in flat))


def zero_code(q: int, n: int, s: int) -> NrtCode:
    return NrtCode(q, n, s, ())


def full_space(q: int, n: int, s: int) -> NrtCode:
    N = n * s
    return NrtCode(q, n, s, tuple(tuple(int(i == j) for j in range(N))
                                  for i in range(N)))


def _check_cap(count: int, cap: int | None, what: str):
    cap = default_enum_cap() if cap is None else cap
    if count > cap:
        raise CapExceededError(f"{what}: {count} exceeds the cap {cap}")


def iter_flat_codewords(C: NrtCode, cap: int | None = None):
    """Yield every codeword as a flat tuple."""
    _check_cap(C.size, cap, "codeword enumeration")
    N, q = C.length, C.q
    gen = C.gen
    for coeffs in product(range(q), repeat=C.k):
        w = [0] * N
        for c, g in zip(coeffs, gen):
            if c:
                for j, x in enumerate(g):
                    if x:
                        w[j] += c * x
        yield tuple(x % q for x in w)


def enumerate_codewords(C: NrtCode, cap: int | None = None):
    for flat in iter_flat_codewords(C, cap):
        yield NrtWord.from_flat(C.q, C.n, C.s, flat)


def dual_code(C: NrtCode) -> NrtCode:
    """NRT dual via a null-space solve against the flipped generator."""
    N = C.length
    A = [pairing_image(r, C.n, C.s) for r in C.gen]
    basis = nullspace(A, N, C.q) if A else [
        [int(i == j) for j in range(N)] for i in range(N)]
    return NrtCode(C.q, C.n, C.s, tuple(tuple(b) for b in basis))


def is_self_orthogonal(C: NrtCode) -> bool:
    return all(flat_inner(x, y, C.n, C.s, C.q) == 0
               for i, x in enumerate(C.gen) for y in C.gen[i:])


def is_self_dual(C: NrtCode) -> bool:
    return 2 * C.k == C.length and is_self_orthogonal(C)


@dataclass(frozen=True)
class ParityProfile:
    all_even_weight: bool
    even_rows_weight1_and_2: bool | None


def parity_profile(C: NrtCode, cap: int | None = None) -> ParityProfile:
    """Even-weight flags; the row-parity flag is only defined for s = 2."""
    all_even = True
    rows_even = True
    for flat in iter_flat_codewords(C, cap):
        exp = shape_exponents(flat, C.n, C.s)
        if sum(j * e for j, e in enumerate(exp)) % 2:
            all_even = False
        if C.s == 2 and (exp[1] % 2 or exp[2] % 2):
            rows_even = False
    return ParityProfile(all_even, rows_even if C.s == 2 else None)


def even_rows_weight1_and_2(C: NrtCode, cap: int | None = None) -> bool:
    if C.s != 2:
        raise NrtError("the row-parity flag is only defined for s = 2")
    return parity_profile(C, cap).even_rows_weight1_and_2


# -- isometries -----------------------------------------------------------------

@dataclass(frozen=True)
class NrtIsometry:
    """Row permutation followed by an upper-triangular block on each row.

    ``apply`` sends row ``i`` of the image to ``v[perm[i]] @ blocks[i].T``.
    """

    q: int
    perm: tuple
    blocks: tuple

    def __post_init__(self):
        for M in self.blocks:
            s = len(M)
            for i in range(s):
                if M[i][i] % self.q == 0 or any(M[i][j] % self.q for j in range(i)):
                    raise DimensionError(
                        "isometry blocks must be upper triangular and invertible")


def isometry_group_order(n: int, s: int, q: int) -> int:
    return (q - 1) ** (n * s) * q ** (n * s * (s - 1) // 2) * math.factorial(n)


def upper_triangular_blocks(s: int, q: int):
    cells = [(i, j) for i in range(s) for j in range(i, s)]
    ranges = [range(1, q) if i == j else range(q) for i, j in cells]
    for vals in product(*ranges):
        M = [[0] * s for _ in range(s)]
        for (i, j), v in zip(cells, vals):
            M[i][j] = v
        yield tuple(tuple(r) for r in M)


def isometry_group(n: int, s: int, q: int, cap: int | None = None):
    check_prime(q)
    order = isometry_group_order(n, s, q)
    cap = DEFAULT_MAX_ISOMETRIES if cap is None else cap
    if order > cap:
        raise CapExceededError(f"isometry group order {order} exceeds {cap}")
    blocks = list(upper_triangular_blocks(s, q))
    for perm in permutations(range(n)):
        for bs in product(blocks, repeat=n):
            yield NrtIsometry(q, perm, bs)


def _apply_flat(perm, blocks, flat, n, s, q):
    out = []
    for i in range(n):
        src = perm[i] * s
        row = flat[src:src + s]
        M = blocks[i]
        out.extend(sum(M[a][b] * row[b] for b in range(a, s)) % q
                   for a in range(s))
    return out


def apply_isometry(sigma: NrtIsometry, w: NrtWord) -> NrtWord:
    if sigma.q != w.q or len(sigma.perm) != w.n:
        raise DimensionError("isometry does not act on this word space")
    return NrtWord.from_flat(w.q, w.n, w.s,
                             _apply_flat(sigma.perm, sigma.blocks, w.flat(),
                                         w.n, w.s, w.q))


def apply_isometry_to_code(sigma: NrtIsometry, C: NrtCode) -> NrtCode:
    rows = [tuple(_apply_flat(sigma.perm, sigma.blocks, g, C.n, C.s, C.q))
            for g in C.gen]
    return NrtCode(C.q, C.n, C.s, tuple(rows))


def codes_equivalent(C1: NrtCode, C2: NrtCode, cap: int | None = None,
                     enum_cap: int | None = None) -> bool:
    """Search the isometry group for a map sending C1 onto C2."""
    if C1.params() != C2.params():
        raise DimensionError("codes live in different spaces")
    if C1.k != C2.k:
        return False
    if C1.gen == C2.gen:
        return True
    from .shape_enum import shape_enumerator

    if shape_enumerator(C1, enum_cap).poly != shape_enumerator(C2, enum_cap).poly:
        return False
    for sigma in isometry_group(C1.n, C1.s, C1.q, cap):
        if apply_isometry_to_code(sigma, C1).gen == C2.gen:
            return True
    return False


# -- text file format -------------------------------------------------------------

def format_code(C: NrtCode) -> str:
    lines = [f"{C.q} {C.n} {C.s}"]
    lines += [" ".join(map(str, r)) for r in C.gen]
    return "\n".join(lines) + "\n"


def parse_code(text: str) -> NrtCode:
    lines = text.splitlines()
    header = None
    rows = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line:
            continue
        parts = line.split()
        try:
            nums = [int(x) for x in parts]
        except ValueError:
            raise CodeFormatError(f"non-integer entry in {line!r}", lineno) from None
        if header is None:
            if len(nums) != 3:
                raise CodeFormatError("header must be 'q n s'", lineno)
            q, n, s = nums
            try:
                check_prime(q)
            except NrtError as exc:
                raise CodeFormatError(str(exc), lineno) from None
            if n < 1 or s < 1:
                raise CodeFormatError("n and s must be positive", lineno)
            header = (q, n, s)
            continue
        q, n, s = header
        if len(nums) != n * s:
            raise CodeFormatError(
                f"expected {n * s} entries, found {len(nums)}", lineno)
        if any(x < 0 or x >= q for x in nums):
            raise CodeFormatError(f"entries must lie in [0, {q})", lineno)
        rows.append(tuple(nums))
    if header is None:
        raise CodeFormatError("missing 'q n s' header", 1)
    return NrtCode(*header, tuple(rows))


def read_code(path) -> NrtCode:
    with open(path, encoding="utf-8") as fh:
        return parse_code(fh.read())


def write_code(C: NrtCode, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_code(C))


def all_codes(q: int, n: int, s: int, k: int | None = None):
    """Every linear code of ``M_{n,s}(F_q)`` (optionally of one dimension)."""
    from .algebra.field import all_rref_matrices, all_subspaces

    N = n * s
    mats = all_subspaces(N, q) if k is None else all_rref_matrices(N, q, k)
    for M in mats:
        yield NrtCode(q, n, s, tuple(tuple(r) for r in M))


def self_dual_codes(q: int, n: int, s: int):
    if (n * s) % 2:
        return
    for C in all_codes(q, n, s, n * s // 2):
        if is_self_orthogonal(C):
            yield C
