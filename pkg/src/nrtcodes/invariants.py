"""Finite matrix groups acting on Q(√2)[z0..zs]: closure, Molien series,
Reynolds operator, invariant bases by degree and the Jacobian criterion.

The action is ``A . f(Z) = f(A Z)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb

from .algebra.matrix import DenseMatrix, rank_quad, rref_quad, solve_quad
from .algebra.poly import MultiPoly, jacobian_matrix, monomials, parse_poly
from .algebra.quad import ZERO, Quad
from .algebra.univariate import RationalFunction, UniPoly, det_poly, series_expand
from .errors import CapExceededError, DimensionError, NoSolutionError, VerificationError
from .shape_enum import normalized_T

DEFAULT_GROUP_CAP = 100_000


@dataclass(frozen=True)
class MatrixGroup:
    dim: int
    elements: tuple
    generators: tuple

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, M):
        return M in set(self.elements)


def group_closure(generators, cap: int = DEFAULT_GROUP_CAP) -> MatrixGroup:
    gens = tuple(generators)
    if not gens:
        raise DimensionError("need at least one generator")
    dim = gens[0].rows
    if any(not g.is_square() or g.rows != dim for g in gens):
        raise DimensionError("generators must be square of equal size")
    identity = DenseMatrix.identity(dim)
    seen = {identity: None}
    order = [identity]
    frontier = [identity]
    while frontier:
        nxt = []
        for X in frontier:
            for g in gens:
                Y = g @ X
                if Y not in seen:
                    seen[Y] = None
                    order.append(Y)
                    nxt.append(Y)
                    if len(order) > cap:
                        raise CapExceededError(
                            f"group closure exceeded {cap} elements")
        frontier = nxt
    return MatrixGroup(dim, tuple(order), gens)


# -- the groups attached to self-dual codes -------------------------------------

def matrix_A() -> DenseMatrix:
    return DenseMatrix.diag([1, -1, 1])


def matrix_B() -> DenseMatrix:
    return DenseMatrix.diag([1, -1, -1])


def group_g1() -> MatrixGroup:
    """⟨T⟩ for s = 2: invariance group of binary self-dual enumerators."""
    return group_closure([normalized_T(2)])


def group_g2() -> MatrixGroup:
    """⟨T, A⟩: self-dual codes whose words all have even weight."""
    return group_closure([normalized_T(2), matrix_A()])


def group_g3() -> MatrixGroup:
    """⟨T, B⟩: every word has an even number of rows of weight 1 and of weight 2."""
    return group_closure([normalized_T(2), matrix_B()])


def theta_group(s: int) -> MatrixGroup:
    """{I, T} for general s."""
    return group_closure([normalized_T(s)])


def theta_pm_group(s: int) -> MatrixGroup:
    """{±I, ±T} for general s."""
    return group_closure([normalized_T(s), DenseMatrix.identity(s + 1).scale(-1)])


def self_dual_group(s: int) -> MatrixGroup:
    """The group whose Molien series has the closed form: {I, T} for even s,
    {±I, ±T} for odd s."""
    return theta_group(s) if s % 2 == 0 else theta_pm_group(s)


def named_group(name: str, s: int = 2) -> MatrixGroup:
    name = name.lower()
    if name == "g1":
        return group_g1()
    if name == "g2":
        return group_g2()
    if name == "g3":
        return group_g3()
    if name == "theta":
        return theta_group(s)
    if name == "theta-pm":
        return theta_pm_group(s)
    if name == "selfdual":
        return self_dual_group(s)
    raise ValueError(f"unknown group {name!r}")


# -- Molien series ------------------------------------------------------------

@dataclass(frozen=True)
class MolienSeries:
    closed: RationalFunction
    coeffs: tuple

    def __str__(self):
        return self.closed.factored_str()


def molien_rational(G: MatrixGroup) -> RationalFunction:
    acc = RationalFunction(UniPoly())
    for A in G.elements:
        acc = acc + RationalFunction(UniPoly([1]), det_poly(A))
    return acc * RationalFunction(UniPoly([Fraction(1, G.order)]))


def _as_count(c: Quad, what: str) -> int:
    if not c.is_integer() or c.a < 0:
        raise VerificationError(f"{what} is {c}, not a nonnegative integer")
    return int(c.a)


def molien_series(G: MatrixGroup, D: int) -> MolienSeries:
    closed = molien_rational(G)
    if not (closed.num.is_rational() and closed.den.is_rational()):
        raise VerificationError("Molien series has irrational coefficients")
    coeffs = tuple(_as_count(c, f"Molien coefficient {k}")
                   for k, c in enumerate(series_expand(closed, D)))
    if coeffs and coeffs[0] != 1:
        raise VerificationError("Molien series must start with 1")
    return MolienSeries(closed, coeffs)


def degree1_count(G: MatrixGroup) -> Fraction:
    acc = ZERO
    for A in G.elements:
        acc = acc + A.trace()
    return (acc / G.order).to_fraction()


def rational_function_from_factors(num_coeffs, den_degrees) -> RationalFunction:
    """``num / prod (1 - λ^d)``; handy for writing closed forms."""
    den = UniPoly([1])
    for d in den_degrees:
        den = den * UniPoly.one_minus_power(d)
    return RationalFunction(UniPoly(num_coeffs), den)


def closed_form_molien(s: int) -> RationalFunction:
    """Closed-form Molien series of :func:`self_dual_group` (s)."""
    if s < 1:
        raise ValueError("s must be >= 1")

    def even_binomial_poly(m: int) -> UniPoly:
        cs = [0] * (m + 1)
        for l in range(m // 2 + 1):
            cs[2 * l] = comb(m, 2 * l)
        return UniPoly(cs)

    one_m_l = UniPoly.one_minus_power(1)
    one_m_l2 = UniPoly.one_minus_power(2)
    if s % 2:
        h = (s + 1) // 2
        if h % 2 == 0:
            t = h // 2
            return RationalFunction(even_binomial_poly(2 * t) ** 2, one_m_l2 ** (4 * t))
        t = (h - 1) // 2
        return RationalFunction(even_binomial_poly(2 * t + 1) ** 2,
                                one_m_l2 ** (4 * t + 2))
    h = s // 2
    if h % 2 == 0:
        t = h // 2
        return RationalFunction(even_binomial_poly(2 * t),
                                one_m_l2 ** (2 * t) * one_m_l ** (2 * t + 1))
    t = (h - 1) // 2
    return RationalFunction(even_binomial_poly(2 * t + 1),
                            one_m_l2 ** (2 * t + 1) * one_m_l ** (2 * t + 2))


# -- Reynolds operator and invariant spaces ------------------------------------

class _ActionCache:
    """Powers of the linear forms of each group element, shared across calls."""

    def __init__(self, G: MatrixGroup):
        self.G = G
        self.forms = [[MultiPoly.linear(A.row(i)) for i in range(G.dim)]
                      for A in G.elements]
        self.powers = [dict() for _ in G.elements]

    def power(self, g: int, i: int, k: int) -> MultiPoly:
        cache = self.powers[g]
        key = (i, k)
        if key not in cache:
            cache[key] = self.forms[g][i] if k == 1 else \
                self.power(g, i, k - 1) * self.forms[g][i]
        return cache[key]

    def act(self, g: int, f: MultiPoly) -> MultiPoly:
        n = self.G.dim
        acc = MultiPoly(n)
        for exp, c in f.terms.items():
            term = MultiPoly.const(n, c)
            for i, k in enumerate(exp):
                if k:
                    term = term * self.power(g, i, k)
            acc = acc + term
        return acc


_CACHES: dict = {}


def _cache_for(G: MatrixGroup) -> _ActionCache:
    key = id(G)
    entry = _CACHES.get(key)
    if entry is None or entry[0] is not G:
        entry = (G, _ActionCache(G))
        _CACHES[key] = entry
    return entry[1]


def reynolds(G: MatrixGroup, f: MultiPoly, mode: str = "average") -> MultiPoly:
    if f.nvars != G.dim:
        raise DimensionError("polynomial and group dimensions differ")
    if mode not in ("sum", "average"):
        raise ValueError("mode must be 'sum' or 'average'")
    cache = _cache_for(G)
    acc = MultiPoly(G.dim)
    for g in range(G.order):
        acc = acc + cache.act(g, f)
    return acc if mode == "sum" else acc / G.order


def is_invariant(G: MatrixGroup, f: MultiPoly) -> bool:
    if f.nvars != G.dim:
        raise DimensionError("polynomial and group dimensions differ")
    cache = _cache_for(G)
    return all(cache.act(g, f) == f for g in range(G.order))


def coefficient_vector(f: MultiPoly, monos) -> list:
    return [f.coefficient(m) for m in monos]


def poly_from_vector(vec, monos, nvars: int) -> MultiPoly:
    return MultiPoly(nvars, {m: c for m, c in zip(monos, vec) if c})


def invariant_space_basis(G: MatrixGroup, d: int, check: bool = True):
    """Canonical (RREF) basis of the degree-d invariants of G."""
    if d < 0:
        raise ValueError("degree must be >= 0")
    monos = monomials(G.dim, d)
    rows = [coefficient_vector(reynolds(G, MultiPoly.monomial(m), "sum"), monos)
            for m in monos]
    R, _ = rref_quad(rows)
    basis = [poly_from_vector(r, monos, G.dim) for r in R]
    if check:
        expected = molien_series(G, d).coeffs[d]
        if len(basis) != expected:
            raise VerificationError(
                f"degree {d}: found {len(basis)} invariants, Molien predicts {expected}")
    return basis


def span_rank(polys, degree: int, nvars: int) -> int:
    monos = monomials(nvars, degree)
    return rank_quad([coefficient_vector(p, monos) for p in polys])


# -- Jacobian criterion ------------------------------------------------------------

_PRIMES = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53]


def _point_sets(nvars: int):
    yield [i + 1 for i in range(nvars)]
    yield [_PRIMES[i % len(_PRIMES)] for i in range(nvars)]
    yield [(i + 1) ** 2 + 1 for i in range(nvars)]
    yield [(-1) ** i * (2 * i + 3) for i in range(nvars)]
    yield [7 * i * i - 3 * i + 5 for i in range(nvars)]


def _poly_det(M):
    """Laplace expansion for small matrices of polynomials."""
    n = len(M)
    if n == 1:
        return M[0][0]
    acc = None
    for j in range(n):
        if M[0][j].is_zero():
            continue
        minor = [row[:j] + row[j + 1:] for row in M[1:]]
        term = M[0][j] * _poly_det(minor)
        if j % 2:
            term = -term
        acc = term if acc is None else acc + term
    return acc if acc is not None else MultiPoly(M[0][0].nvars)


def jacobian_independent(fs) -> bool:
    """Algebraic independence via full rank of the Jacobian over the fraction field."""
    fs = list(fs)
    if not fs:
        return True
    n = fs[0].nvars
    if len(fs) > n:
        return False
    J = jacobian_matrix(fs)
    m = len(fs)
    for pt in _point_sets(n):
        vals = [[entry.evaluate(pt) for entry in row] for row in J]
        if rank_quad(vals) == m:
            return True
    for cols in combinations(range(n), m):
        minor = [[J[i][j] for j in cols] for i in range(m)]
        if not _poly_det(minor).is_zero():
            return True
    return False


# -- known bases ------------------------------------------------------------------

@dataclass(frozen=True)
class KnownBasis:
    name: str
    polys: tuple
    degrees: tuple
    kinds: tuple
    labels: tuple

    @property
    def primaries(self):
        return [p for p, k in zip(self.polys, self.kinds) if k == "primary"]

    @property
    def secondaries(self):
        return [p for p, k in zip(self.polys, self.kinds) if k == "secondary"]

    def group(self) -> MatrixGroup:
        return named_group(self.name)


def _p(text):
    return parse_poly(text, 3)


# Reference polynomials for G3. phi2 is not G3-invariant, so this set is not
# a basis (see g3_basis); it is kept for the Jacobian and Reynolds checks.
REFERENCE_G3 = {
    "phi1": _p("z0^2 + z1^2 + 2*z2^2"),
    "phi2": _p("5*z0^2 - 2*z0*z1 + z1^2 + 8*z2^2 + 8*z2*z1"),
    "phi3_star": _p("2*z0^2 - 2*z1^2 + 8*z1*z2"),
}


def g1_basis() -> KnownBasis:
    polys = (_p("z0 + z2"), _p("z0 + z1"), _p("z0^2 + z1^2 + 2*z2^2"))
    return KnownBasis("G1", polys, (1, 1, 2), ("primary",) * 3,
                      ("phi1", "phi2", "phi3"))


def g2_basis() -> KnownBasis:
    polys = (_p("z0 + z2"), _p("z0^2 + z1^2 + 2*z2^2"),
             _p("z0^3 + 4*z2^3 + 3*z1^2*z0"))
    return KnownBasis("G2", polys, (1, 2, 3), ("primary",) * 3,
                      ("p1", "p2", "p3"))


def _extend_span(G, degree, known):
    """First canonical invariant of the given degree outside span(known)."""
    monos = monomials(G.dim, degree)
    base = [coefficient_vector(p, monos) for p in known]
    r0 = rank_quad(base) if base else 0
    for cand in invariant_space_basis(G, degree):
        if rank_quad(base + [coefficient_vector(cand, monos)]) > r0:
            return cand
    return None


def _products(polys, degrees, target):
    """All (alpha, product) with sum(alpha_i * deg_i) == target."""
    out = []

    def rec(i, remaining, alpha):
        if i == len(polys):
            if remaining == 0:
                out.append(tuple(alpha))
            return
        for a in range(remaining // degrees[i] + 1):
            rec(i + 1, remaining - a * degrees[i], alpha + [a])

    if target >= 0:
        rec(0, target, [])
    prods = []
    nvars = polys[0].nvars
    for alpha in out:
        p = MultiPoly.const(nvars, 1)
        for f, a in zip(polys, alpha):
            if a:
                p = p * f ** a
        prods.append((alpha, p))
    return prods


_G3_CACHE = []


def g3_basis() -> KnownBasis:
    """Good basis for G3: primaries of degrees 2, 2, 6 and a degree-4 secondary.

    The degree-2 primaries are phi1 and the Reynolds sum of z0^2; the degree-6
    primary and the secondary are the first canonical invariants outside the
    span of lower products.
    """
    if _G3_CACHE:
        return _G3_CACHE[0]
    G = group_g3()
    phi1 = REFERENCE_G3["phi1"]
    phi2 = reynolds(G, _p("z0^2"), "sum")
    prims = [phi1, phi2]
    deg4 = [p for _, p in _products(prims, [2, 2], 4)]
    phi4 = _extend_span(G, 4, deg4)
    deg6 = [p for _, p in _products(prims, [2, 2], 6)]
    deg6 += [phi4 * p for _, p in _products(prims, [2, 2], 2)]
    phi3 = _extend_span(G, 6, deg6)
    basis = KnownBasis("G3", (phi1, phi2, phi3, phi4), (2, 2, 6, 4),
                       ("primary", "primary", "primary", "secondary"),
                       ("phi1", "phi2", "phi3", "phi4"))
    _G3_CACHE.append(basis)
    return basis


def known_bases():
    return {"G1": g1_basis(), "G2": g2_basis(), "G3": g3_basis()}


def basis_family(B: KnownBasis, degree: int):
    """Products spanning degree ``degree`` under the good-basis decomposition.

    Returns a list of (exponent vector over all basis polys, product).
    """
    prim_idx = [i for i, k in enumerate(B.kinds) if k == "primary"]
    sec_idx = [i for i, k in enumerate(B.kinds) if k == "secondary"]
    prims = [B.polys[i] for i in prim_idx]
    pdeg = [B.degrees[i] for i in prim_idx]
    family = []
    for alpha, p in _products(prims, pdeg, degree):
        e = [0] * len(B.polys)
        for i, a in zip(prim_idx, alpha):
            e[i] = a
        family.append((tuple(e), p))
    for j in sec_idx:
        for alpha, p in _products(prims, pdeg, degree - B.degrees[j]):
            e = [0] * len(B.polys)
            for i, a in zip(prim_idx, alpha):
                e[i] = a
            e[j] = 1
            family.append((tuple(e), B.polys[j] * p))
    return family


def verify_good_basis(B: KnownBasis, max_degree: int):
    """Check that the basis products are independent in every degree up to
    ``max_degree`` and their count matches the Molien coefficient."""
    G = B.group()
    coeffs = molien_series(G, max_degree).coeffs
    report = {}
    for d in range(max_degree + 1):
        fam = basis_family(B, d)
        r = span_rank([p for _, p in fam], d, G.dim) if fam else 0
        report[d] = (len(fam), r, coeffs[d])
    return report


@dataclass(frozen=True)
class BasisExpression:
    basis: KnownBasis
    poly: MultiPoly  # in variables y_i standing for basis.polys[i]

    def __str__(self):
        return self.poly.to_str(list(self.basis.labels))

    def evaluate(self) -> MultiPoly:
        nvars = self.basis.polys[0].nvars
        acc = MultiPoly(nvars)
        for exp, c in self.poly.terms.items():
            t = MultiPoly.const(nvars, c)
            for f, a in zip(self.basis.polys, exp):
                if a:
                    t = t * f ** a
            acc = acc + t
        return acc


def express_in_basis(H: MultiPoly, B: KnownBasis) -> BasisExpression:
    if not H.is_homogeneous():
        raise NoSolutionError("only homogeneous polynomials can be expressed")
    d = max(H.degree(), 0)
    fam = basis_family(B, d)
    monos = monomials(H.nvars, d)
    cols = [coefficient_vector(p, monos) for _, p in fam]
    target = coefficient_vector(H, monos)
    sol = solve_quad(cols, target) if cols else None
    if sol is None:
        if H.is_zero():
            return BasisExpression(B, MultiPoly(len(B.polys)))
        raise NoSolutionError(
            f"{H} is not in the span of the {B.name} basis products of degree {d}")
    terms = {e: c for (e, _), c in zip(fam, sol) if c}
    return BasisExpression(B, MultiPoly(len(B.polys), terms))
