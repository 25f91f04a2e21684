"""Flip operators and constructions of self-orthogonal / self-dual NRT codes.

Hamming-space codes of length s are represented as :class:`NrtCode` with
``n = 1``; only their generator matters, the Hamming pairing is applied
explicitly where needed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra.field import matmul, nullspace
from .core import (NrtCode, code_from_rows, codes_equivalent, hamming_inner,
                   is_self_dual, is_self_orthogonal, self_dual_codes)
from .errors import DimensionError, NrtError, VerificationError


def flip_vector(v):
    return list(v)[::-1]


def flip_matrix(A):
    return [list(r)[::-1] for r in A]


def flip_transpose(A):
    """A^o: the transpose of Flip(A)."""
    F = flip_matrix(A)
    return [list(c) for c in zip(*F)] if F else []


@dataclass(frozen=True)
class BlockGenerator:
    """A k x (n*s) generator split into n blocks of width s."""

    n: int
    s: int
    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        if any(len(r) != self.n * self.s for r in rows):
            raise DimensionError(f"rows must have length {self.n * self.s}")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_code(cls, C: NrtCode) -> BlockGenerator:
        return cls(C.n, C.s, C.gen)

    @classmethod
    def from_blocks(cls, blocks) -> BlockGenerator:
        blocks = [[list(r) for r in B] for B in blocks]
        k = len(blocks[0])
        s = len(blocks[0][0]) if k else 0
        rows = [sum((B[i] for B in blocks), []) for i in range(k)]
        return cls(len(blocks), s, tuple(tuple(r) for r in rows))

    @property
    def k(self) -> int:
        return len(self.rows)

    def block(self, i: int):
        lo = i * self.s
        return [list(r[lo:lo + self.s]) for r in self.rows]

    @property
    def blocks(self):
        return [self.block(i) for i in range(self.n)]

    def to_code(self, q: int) -> NrtCode:
        return NrtCode(q, self.n, self.s, self.rows)


def ordered_flip(G: BlockGenerator) -> BlockGenerator:
    return BlockGenerator.from_blocks([flip_matrix(B) for B in G.blocks]) \
        if G.k else BlockGenerator(G.n, G.s, ())


def od_transpose(G: BlockGenerator):
    """G^od: the transpose of OFlip(G), shape (n*s) x k."""
    if not G.k:
        return [[] for _ in range(G.n * G.s)]
    return [list(c) for c in zip(*ordered_flip(G).rows)]


def gram_od(G: BlockGenerator, q: int):
    """G . G^od over GF(q)."""
    if not G.k:
        return []
    return matmul([list(r) for r in G.rows], od_transpose(G), q)


def is_self_orthogonal_od(C: NrtCode) -> bool:
    """Self-orthogonality decided through G . G^od = 0."""
    return not any(x for r in gram_od(BlockGenerator.from_code(C), C.q) for x in r)


# -- Hamming-space helpers ---------------------------------------------------------

def hamming_code(q: int, rows, length: int | None = None) -> NrtCode:
    rows = [list(r) for r in rows]
    s = length if length is not None else len(rows[0])
    return code_from_rows(q, 1, s, rows)


def _require_hamming(C: NrtCode):
    if C.n != 1:
        raise DimensionError("expected a Hamming-space code (n = 1)")


def hamming_dual(C: NrtCode) -> NrtCode:
    _require_hamming(C)
    basis = nullspace([list(r) for r in C.gen], C.s, C.q) if C.k else [
        [int(i == j) for j in range(C.s)] for i in range(C.s)]
    return hamming_code(C.q, basis, C.s)


def is_hamming_self_orthogonal(C: NrtCode) -> bool:
    _require_hamming(C)
    return all(hamming_inner(x, y, C.q) == 0 for x in C.gen for y in C.gen)


def is_hamming_self_dual(C: NrtCode) -> bool:
    return 2 * C.k == C.s and is_hamming_self_orthogonal(C)


def extended_hamming_code() -> NrtCode:
    """The binary [8, 4] extended Hamming code."""
    rows = [
        [1, 0, 0, 0, 0, 1, 1, 1],
        [0, 1, 0, 0, 1, 0, 1, 1],
        [0, 0, 1, 0, 1, 1, 0, 1],
        [0, 0, 0, 1, 1, 1, 1, 0],
    ]
    return hamming_code(2, rows)


# -- constructions -------------------------------------------------------------------

def _verify(C: NrtCode, k: int, self_dual: bool, what: str) -> NrtCode:
    if C.k != k:
        raise VerificationError(f"{what}: dimension {C.k}, expected {k}")
    ok = is_self_dual(C) if self_dual else is_self_orthogonal(C)
    if not ok:
        pred = "self-dual" if self_dual else "self-orthogonal"
        raise VerificationError(f"{what}: output is not {pred}")
    return C


def construct_co(C: NrtCode) -> NrtCode:
    """{(v, flip(u)) : v in C, u in C^⊥ (Hamming)} in M_{1,2s}."""
    _require_hamming(C)
    D = hamming_dual(C)
    s = C.s
    rows = [list(v) + [0] * s for v in C.gen]
    rows += [[0] * s + flip_vector(u) for u in D.gen]
    out = code_from_rows(C.q, 1, 2 * s, rows)
    return _verify(out, C.k + D.k, False, "construct_co")


def construct_cort(C: NrtCode) -> NrtCode:
    """{(v, flip(v)) : v in C} for a Hamming self-orthogonal C."""
    _require_hamming(C)
    if not is_hamming_self_orthogonal(C):
        raise NrtError("construct_cort needs a Hamming self-orthogonal code")
    rows = [list(v) + flip_vector(v) for v in C.gen]
    out = code_from_rows(C.q, 1, 2 * C.s, rows)
    return _verify(out, C.k, False, "construct_cort")


def construct_cn(C: NrtCode) -> NrtCode:
    """{(v, flip(v')) : v, v' in C} for a Hamming self-dual C."""
    _require_hamming(C)
    if not is_hamming_self_dual(C):
        raise NrtError("construct_cn needs a Hamming self-dual code")
    s = C.s
    rows = [list(v) + [0] * s for v in C.gen]
    rows += [[0] * s + flip_vector(v) for v in C.gen]
    out = code_from_rows(C.q, 1, 2 * s, rows)
    return _verify(out, 2 * C.k, True, "construct_cn")


def interleave_rows(G1, G2, n: int, s: int):
    """Rows of [G1_1|0|G1_2|0|...; 0|G2_1|0|G2_2|...] (n blocks of width s each)."""
    zero = [0] * s
    rows = []
    for r in G1:
        row = []
        for i in range(n):
            row += list(r[i * s:(i + 1) * s]) + zero
        rows.append(row)
    for r in G2:
        row = []
        for i in range(n):
            row += zero + list(r[i * s:(i + 1) * s])
        rows.append(row)
    return rows


def construct_interleave(C1: NrtCode, C2: NrtCode) -> NrtCode:
    if C1.params() != C2.params():
        raise DimensionError("interleaving needs codes with identical (q, n, s)")
    for C in (C1, C2):
        if not is_self_orthogonal(C):
            raise NrtError("interleaving needs self-orthogonal inputs")
    rows = interleave_rows(C1.gen, C2.gen, C1.n, C1.s)
    out = code_from_rows(C1.q, 2 * C1.n, C1.s, rows)
    both_dual = is_self_dual(C1) and is_self_dual(C2)
    return _verify(out, C1.k + C2.k, both_dual, "construct_interleave")


def padded_concat_rows(codes):
    s_bar = max(C.s for C in codes)
    n_tot = sum(C.n for C in codes)
    rows = []
    offset = 0
    for C in codes:
        for g in C.gen:
            row = [0] * (n_tot * s_bar)
            for j in range(C.n):
                blk = g[j * C.s:(j + 1) * C.s]
                base = (offset + j) * s_bar
                row[base:base + C.s] = blk
            rows.append(row)
        offset += C.n
    return rows, n_tot, s_bar


def construct_padded_concat(codes) -> NrtCode:
    """Block-diagonal layout with narrow blocks right-padded by zeros.

    Right padding changes the NRT pairing of a width-s block when
    s < s_bar < 2s, so the output is re-verified and may be rejected.
    """
    codes = list(codes)
    if not codes:
        raise ValueError("need at least one code")
    q = codes[0].q
    if any(C.q != q for C in codes):
        raise DimensionError("all codes must share q")
    for C in codes:
        if not is_self_orthogonal(C):
            raise NrtError("padded concatenation needs self-orthogonal inputs")
    n_bar = max(C.n for C in codes)
    s_bar = max(C.s for C in codes)
    k = sum(C.k for C in codes)
    if k > n_bar * s_bar:
        raise NrtError(f"total dimension {k} exceeds n̄·s̄ = {n_bar * s_bar}")
    rows, n_tot, s_bar = padded_concat_rows(codes)
    out = code_from_rows(q, n_tot, s_bar, rows)
    return _verify(out, k, 2 * k == n_tot * s_bar, "construct_padded_concat")


# -- ns = 4 classification ------------------------------------------------------------

MAX_CLASSIFY_Q = 5


@dataclass(frozen=True)
class Family:
    case: str           # "i", "ii" or "iii"
    label: str          # position in the reference list, e.g. "i.5"
    lam: int | None
    generator: tuple    # generator matrix as listed (before reduction)
    code: NrtCode
    duplicate_of: str | None = None

    def to_json(self):
        from .shape_enum import shape_enumerator

        return {
            "case": self.case,
            "label": self.label,
            "lambda": self.lam,
            "generator": [list(r) for r in self.generator],
            "rref": [list(r) for r in self.code.gen],
            "n": self.code.n,
            "s": self.code.s,
            "shape_enumerator": str(shape_enumerator(self.code)),
            "duplicate_of": self.duplicate_of,
        }


def _case_i(q):
    fixed = [
        [[1, 0, 0, 0], [0, 1, 0, 0]],
        [[1, 0, 0, 0], [0, 0, 1, 0]],
        [[0, 1, 0, 0], [0, 0, 0, 1]],
        [[0, 0, 1, 0], [0, 0, 0, 1]],
    ]
    lam = [
        lambda l: [[1, 0, l, 0], [0, 0, 1, 0]],
        lambda l: [[1, l, 0, 0], [0, 1, 0, 0]],
        lambda l: [[0, 1, 0, l], [0, 0, 0, 1]],
        lambda l: [[0, 0, 1, l], [0, 0, 0, 1]],
    ]
    return fixed, lam


def _case_ii(q):
    fixed = [
        [[1, 0, 0, 0], [0, 0, 1, 0]],
        [[1, 0, 0, 0], [0, 0, 0, 1]],
        [[0, 1, 0, 0], [0, 0, 1, 0]],
        [[0, 1, 0, 0], [0, 0, 0, 1]],
        [[0, 1, 1, 0], [0, 0, 1, 0]],
        [[0, 1, 0, 1], [0, 0, 0, 1]],
        [[1, 0, 1, 0], [0, 0, 1, 0]],
        [[1, 0, 0, 1], [0, 0, 0, 1]],
    ]
    lam = [
        lambda l: [[0, 1, (1 + l) % q, 0], [0, 0, 1, 0]],
        lambda l: [[0, 1, 0, (1 + l) % q], [0, 0, 0, 1]],
        lambda l: [[1, 0, (1 + l) % q, 0], [0, 0, 1, 0]],
        lambda l: [[1, 0, 0, (1 + l) % q], [0, 0, 0, 1]],
    ]
    return fixed, lam


def listed_families(q: int, case: str):
    """Family instances of the reference list for case 'i' (M_{1,4}) or 'ii' (M_{2,2})."""
    n, s = (1, 4) if case == "i" else (2, 2)
    fixed, lam = _case_i(q) if case == "i" else _case_ii(q)
    out = []
    seen = {}
    entries = [(None, G) for G in fixed]
    entries += [(l, f(l)) for f in lam for l in range(1, q)]
    # labels follow the reference order; lambda families share their position
    positions = list(range(1, len(fixed) + 1)) + [
        len(fixed) + 1 + j for j in range(len(lam)) for _ in range(1, q)]
    for (l, G), pos in zip(entries, positions):
        code = NrtCode(q, n, s, tuple(tuple(r) for r in G))
        label = f"{case}.{pos}" + (f"[λ={l}]" if l is not None else "")
        dup = seen.get(code.gen)
        if dup is None:
            seen[code.gen] = label
        out.append(Family(case, label, l, tuple(tuple(r) for r in G), code, dup))
    return out


def classify_ns4(q: int, max_q: int = MAX_CLASSIFY_Q):
    """Families for the bidimensional self-dual case ns = 4.

    Cases (i) and (ii) are the reference generator lists; case (iii) (M_{4,1}) is
    every self-dual code found by exhaustive search. Every emitted code is
    checked to be self-dual.
    """
    from .algebra.field import check_prime

    check_prime(q)
    if q > max_q:
        raise NrtError(f"q = {q} exceeds the classification cap {max_q}")
    fams = listed_families(q, "i") + listed_families(q, "ii")
    for j, C in enumerate(self_dual_codes(q, 4, 1), start=1):
        fams.append(Family("iii", f"iii.{j}", None, C.gen, C))
    for f in fams:
        if not is_self_dual(f.code):
            raise VerificationError(f"family {f.label} is not self-dual")
    return fams


def distinct_codes(families):
    return [f for f in families if f.duplicate_of is None]


@dataclass
class CompletenessReport:
    q: int
    n: int
    s: int
    total: int
    matched: int
    unmatched: list
    class_counts: dict   # class name (joined member labels) -> number of codes

    @property
    def complete(self) -> bool:
        return not self.unmatched


def equivalence_classes(families):
    """Group distinct family codes into isometry classes (lists of families)."""
    classes = []
    for f in distinct_codes(families):
        for cls in classes:
            if f.code.params() == cls[0].code.params() and \
                    codes_equivalent(f.code, cls[0].code):
                cls.append(f)
                break
        else:
            classes.append([f])
    return classes


def classification_completeness(q: int, n: int, s: int, families=None) -> CompletenessReport:
    """Match every self-dual code of M_{n,s}(F_q) with ns = 4 to a listed family."""
    if n * s != 4:
        raise DimensionError("classification is for ns = 4")
    case = {(1, 4): "i", (2, 2): "ii", (4, 1): "iii"}[(n, s)]
    if families is None:
        families = classify_ns4(q)
    classes = equivalence_classes([f for f in families if f.case == case])
    names = ["+".join(f.label for f in cls) for cls in classes]
    counts = dict.fromkeys(names, 0)
    unmatched = []
    total = 0
    for C in self_dual_codes(q, n, s):
        total += 1
        for name, cls in zip(names, classes):
            if codes_equivalent(C, cls[0].code):
                counts[name] += 1
                break
        else:
            unmatched.append(C)
    return CompletenessReport(q, n, s, total, total - len(unmatched), unmatched, counts)
