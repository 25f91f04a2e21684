"""Shape enumerators, the Θ_s transform and the NRT MacWilliams identity."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .algebra.matrix import DenseMatrix
from .algebra.poly import MultiPoly, substitute_linear
from .algebra.quad import Quad
from .algebra.univariate import UniPoly, det_poly
from .core import NrtCode, iter_flat_codewords, shape_exponents
from .errors import NrtError, VerificationError


@dataclass(frozen=True)
class ShapeEnumerator:
    """``sum_e A_e z0^e0 ... zs^es`` as a homogeneous polynomial of degree n."""

    s: int
    poly: MultiPoly

    @property
    def n(self) -> int:
        return self.poly.degree()

    def coefficient_sum(self) -> int:
        return int(self.poly.coefficient_sum().to_fraction())

    def __str__(self):
        return str(self.poly)

    def to_json(self):
        return {",".join(map(str, e)): int(c.to_fraction())
                for e, c in self.poly.sorted_terms()}


def shape_enumerator(C: NrtCode, cap: int | None = None) -> ShapeEnumerator:
    counts = Counter(shape_exponents(w, C.n, C.s)
                     for w in iter_flat_codewords(C, cap))
    return ShapeEnumerator(C.s, MultiPoly(C.s + 1, dict(counts)))


def theta_entries(s: int, q: int):
    """Integer entries of Θ_s (rows l, columns k, both 0..s)."""
    if s < 1 or q < 2:
        raise ValueError("need s >= 1 and q >= 2")
    M = []
    for l in range(s + 1):
        row = []
        for k in range(s + 1):
            if k == 0:
                row.append(1)
            elif k <= s - l:
                row.append(q ** (k - 1) * (q - 1))
            elif l + k == s + 1:
                row.append(-q ** (k - 1))
            else:
                row.append(0)
        M.append(row)
    return M


@dataclass(frozen=True)
class ThetaMatrix:
    s: int
    q: int
    entries: tuple

    def matrix(self) -> DenseMatrix:
        return DenseMatrix(self.entries)

    def __str__(self):
        width = max(len(str(x)) for r in self.entries for x in r)
        return "\n".join("[" + " ".join(str(x).rjust(width) for x in r) + "]"
                         for r in self.entries)


def theta_matrix(s: int, q: int) -> ThetaMatrix:
    return ThetaMatrix(s, q, tuple(tuple(r) for r in theta_entries(s, q)))


def macwilliams_transform(H, q: int, code_size: int) -> ShapeEnumerator:
    """Enumerator of the dual: ``H(Θ_s Z) / |C|``."""
    poly = H.poly if isinstance(H, ShapeEnumerator) else H
    if code_size <= 0:
        raise ValueError("code size must be positive")
    if not poly.is_homogeneous():
        raise NrtError("shape enumerators are homogeneous")
    s = poly.nvars - 1
    out = substitute_linear(poly, theta_matrix(s, q).matrix()) / code_size
    bad = [c for c in out.terms.values() if not c.is_integer() or c.a < 0]
    if bad:
        raise NrtError(
            f"transform produced non-integer or negative coefficient {bad[0]}; "
            "the input is not an enumerator of a code of the given size")
    return ShapeEnumerator(s, out)


def normalized_T(s: int, q: int = 2) -> DenseMatrix:
    """Θ_s / 2^(s/2), with entries in Q(√2) for odd s."""
    if q != 2:
        raise NrtError("normalized_T is defined for q = 2")
    scale = Quad.pow2_half(-s)
    return theta_matrix(s, q).matrix().scale(scale)


@dataclass(frozen=True)
class ThetaSpectrum:
    s: int
    r1: int
    r2: int
    beta1: Quad
    beta2: Quad
    trace: int
    det: int
    charpoly: str
    checks: dict = field(default_factory=dict)

    def ok(self) -> bool:
        return all(self.checks.values())

    def summary(self) -> str:
        return f"trace={self.trace} det={self.det} charpoly={self.charpoly}"


def _charpoly_str(beta: Quad, r1: int, r2: int) -> str:
    b = str(beta)
    parts = []
    for sign, r in (("-", r1), ("+", r2)):
        if r:
            parts.append(f"(λ{sign}{b})" + (f"^{r}" if r > 1 else ""))
    return "".join(parts)


def verify_theta_properties(s: int, q: int = 2) -> ThetaSpectrum:
    """Check Θ_s^2 = 2^s I, trace, determinant, characteristic and minimal
    polynomials. Raises :class:`VerificationError` naming the failing identity."""
    if q != 2:
        raise NrtError("the Θ_s spectral properties are stated for q = 2")
    Th = theta_matrix(s, q).matrix()
    I = DenseMatrix.identity(s + 1)
    checks = {}
    checks["square"] = Th @ Th == I.scale(2 ** s)

    trace = Th.trace().to_fraction()
    want_trace = 2 ** (s // 2) if s % 2 == 0 else 0
    checks["trace"] = trace == want_trace

    det = Th.det().to_fraction()
    sign = (-1) ** (s // 2) if s % 2 == 0 else (-1) ** ((s + 1) // 2)
    checks["det"] = det == sign * 2 ** (s * (s + 1) // 2)

    beta = Quad.pow2_half(s)
    if s % 2 == 0:
        r1, r2 = (s + 2) // 2, s // 2
    else:
        r1 = r2 = (s + 1) // 2
    # det(λI - Θ) = λ^(s+1) det(I - Θ/λ): reverse the det(I - λΘ) coefficients
    charpoly = det_poly(Th).reverse(s + 1)
    expected = (UniPoly([-beta, 1]) ** r1) * (UniPoly([beta, 1]) ** r2)
    checks["charpoly"] = charpoly == expected
    checks["eigen_trace"] = r1 + r2 == s + 1 and (beta * r1 - beta * r2) == trace
    lo = Th - I.scale(beta)
    hi = Th + I.scale(beta)
    checks["minpoly"] = (lo @ hi).is_zero() and not lo.is_zero() and not hi.is_zero()

    failed = [k for k, v in checks.items() if not v]
    if failed:
        raise VerificationError(f"Θ_{s} fails: {', '.join(failed)}")
    return ThetaSpectrum(s, r1, r2, beta, -beta, int(trace), int(det),
                         _charpoly_str(beta, r1, r2), checks)
