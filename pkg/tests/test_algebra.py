from __future__ import annotations

import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from nrtcodes.algebra import (DenseMatrix, FieldElement, MultiPoly, Quad,
                              RationalFunction, UniPoly, det_poly, field_arith,
                              jacobian_matrix, monomials, parse_poly,
                              series_expand, substitute_linear)
from nrtcodes.algebra.field import nullspace, rank, rref
from nrtcodes.errors import FieldError
from nrtcodes.shape_enum import normalized_T

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
quads = st.builds(Quad, rationals, rationals)


# -- prime field ------------------------------------------------------------

def test_field_examples():
    assert int(field_arith(FieldElement(1, 2), FieldElement(1, 2), "add")) == 0
    assert int(FieldElement(1, 2) + FieldElement(1, 2)) == 0
    assert int(FieldElement(2, 3).inverse()) == 2
    assert int(FieldElement(2, 5) * FieldElement(2, 5)) == 4


def test_field_inverse_of_zero_raises():
    with pytest.raises(FieldError):
        FieldElement(0, 7).inverse()


def test_field_modulus_mismatch():
    with pytest.raises(FieldError):
        FieldElement(1, 2) + FieldElement(1, 3)


@given(st.sampled_from([2, 3, 5, 7]), st.integers(1, 100))
def test_field_inverse_property(p, x):
    if x % p == 0:
        return
    a = FieldElement(x, p)
    assert int(a * a.inverse()) == 1


def test_rref_and_nullspace_agree():
    rows = [[1, 1, 0, 1], [0, 1, 1, 1], [1, 0, 1, 0]]
    R, piv = rref(rows, 2)
    assert rank(rows, 2) == len(R) == 2
    N = nullspace(rows, 4, 2)
    assert len(N) == 2
    for v in N:
        for r in rows:
            assert sum(a * b for a, b in zip(r, v)) % 2 == 0


# -- Q(sqrt2) ---------------------------------------------------------------

def test_sqrt2_squares_to_two():
    r = Quad.sqrt2()
    assert r * r == 2
    assert Quad.pow2_half(-1) * Quad.pow2_half(1) == 1
    assert Quad.pow2_half(3) == 2 * r


@given(quads, quads)
def test_quad_field_axioms(x, y):
    assert x + y == y + x
    assert x * y == y * x
    if y:
        assert (x / y) * y == x


@given(quads)
def test_quad_string_round_trip(x):
    assert Quad.parse(str(x)) == x


def test_quad_hash_matches_fraction():
    assert hash(Quad(Fraction(1, 2))) == hash(Fraction(1, 2))
    assert {Quad(3): 1}[3] == 1


# -- dense matrices --------------------------------------------------------

def test_T2_entries_and_involution():
    T = normalized_T(2)
    half = Fraction(1, 2)
    assert [T[0, j] for j in range(3)] == [half, half, 1]
    assert T.to_lists()[0] == ["1/2", "1/2", "1"]
    assert (T @ T) == DenseMatrix.identity(3)


def test_T1_irrational_entries():
    T = normalized_T(1)
    assert T[0, 0] == Quad(0, Fraction(1, 2))
    assert T @ T == DenseMatrix.identity(2)


def test_det_small():
    M = DenseMatrix([[1, 2], [3, 4]])
    assert M.det() == -2


# -- multivariate polynomials ------------------------------------------------

def test_monomial_order_and_count():
    ms = monomials(3, 2)
    assert len(ms) == 6
    assert ms[0] == (2, 0, 0)
    assert ms[-1] == (0, 0, 2)


def test_canonical_strings():
    assert str(parse_poly("z0^2 + z1^2 + 2*z2^2")) == "z0^2 + z1^2 + 2*z2^2"
    assert str(parse_poly("z0/2", 3)) == "1/2*z0"
    assert str(parse_poly("z0^3 + 4*z2^3 + 3*z1^2*z0")) == "z0^3 + 3*z0*z1^2 + 4*z2^3"


def test_parse_round_trip_irrational():
    f = parse_poly("sqrt2*z0 + (1 - sqrt2)*z1^2", 2)
    assert parse_poly(str(f), 2) == f


def test_substitute_linear_examples():
    z0 = parse_poly("z0", 3)
    assert substitute_linear(z0, DenseMatrix.identity(3)) == z0
    T = normalized_T(2)
    assert substitute_linear(z0, T) == parse_poly("1/2*z0 + 1/2*z1 + z2")
    phi1 = parse_poly("z0 + z2")
    assert substitute_linear(phi1, T) == phi1


small_int = st.integers(-3, 3)


@settings(max_examples=30)
@given(st.lists(st.tuples(small_int, small_int, small_int), min_size=1, max_size=4),
       st.lists(st.lists(small_int, min_size=3, max_size=3), min_size=3, max_size=3),
       st.tuples(small_int, small_int, small_int))
def test_substitute_linear_matches_evaluation(coeffs, M, point):
    # oracle: f(MZ) evaluated at p equals f evaluated at M p
    f = MultiPoly(3)
    for c, e in zip(coeffs, monomials(3, 2)):
        f = f + MultiPoly.monomial(e, c[0])
    f = f * parse_poly("z0 + z1", 3) + MultiPoly.monomial((0, 0, 3), coeffs[0][1])
    A = DenseMatrix(M)
    g = substitute_linear(f, A)
    mp = [sum(Quad(M[i][j]) * point[j] for j in range(3)) for i in range(3)]
    assert g.evaluate(point) == f.evaluate(mp)


def test_jacobian_examples():
    J = jacobian_matrix([parse_poly("z0", 3)])
    assert [[str(x) for x in r] for r in J] == [["1", "0", "0"]]
    J = jacobian_matrix([parse_poly("z0^2", 3), parse_poly("z1^2", 3)])
    assert J[0][0] == parse_poly("2*z0", 3) and J[1][1] == parse_poly("2*z1", 3)
    fs = [parse_poly(t, 3) for t in ("z0 + z2", "z0 + z1", "z0^2 + z1^2 + 2*z2^2")]
    last = jacobian_matrix(fs)[2]
    assert last == [parse_poly(t, 3) for t in ("2*z0", "2*z1", "4*z2")]


# -- univariate / Molien helpers ---------------------------------------------

def _convolve_series(factors_den, num, D):
    """Oracle: multiply geometric series 1/(1-λ^d) by convolution."""
    out = [0] * (D + 1)
    for i, c in enumerate(num):
        if i <= D:
            out[i] = c
    for d in factors_den:
        geo = [1 if k % d == 0 else 0 for k in range(D + 1)]
        out = [sum(out[i] * geo[k - i] for i in range(k + 1)) for k in range(D + 1)]
    return out


@pytest.mark.parametrize("num,den,D", [
    ([1], [1], 3),
    ([1], [1, 1, 2], 4),
    ([1, 0, 0, 0, 1], [2, 2, 6], 12),
    ([1, 0, 2, 0, 1], [2, 2, 2, 2], 10),
])
def test_series_expand_against_convolution(num, den, D):
    denom = UniPoly([1])
    for d in den:
        denom = denom * UniPoly.one_minus_power(d)
    r = RationalFunction(UniPoly(num), denom)
    got = [int(c.to_fraction()) for c in series_expand(r, D)]
    assert got == _convolve_series(den, num, D)


def test_series_known_values():
    r = RationalFunction(UniPoly([1]), UniPoly.one_minus_power(1))
    assert [int(x.to_fraction()) for x in series_expand(r, 3)] == [1, 1, 1, 1]
    den = UniPoly.one_minus_power(1) ** 2 * UniPoly.one_minus_power(2)
    r = RationalFunction(UniPoly([1]), den)
    assert [int(x.to_fraction()) for x in series_expand(r, 4)] == [1, 2, 4, 6, 9]


def test_rational_function_normalizes():
    den = UniPoly.one_minus_power(2) * UniPoly([2])
    r = RationalFunction(UniPoly([2, 2]), den)
    assert r.factored_str() == "1/(1-λ)"


def test_det_poly_examples():
    one_minus = UniPoly([1, -1])
    assert det_poly(DenseMatrix.identity(3)) == one_minus ** 3
    assert det_poly(DenseMatrix.identity(4).scale(-1)) == UniPoly([1, 1]) ** 4
    assert det_poly(normalized_T(2)) == one_minus ** 2 * UniPoly([1, 1])


@settings(max_examples=25)
@given(st.lists(st.lists(st.integers(-3, 3), min_size=3, max_size=3),
                min_size=3, max_size=3), st.integers(-4, 4))
def test_det_poly_matches_pointwise_det(M, lam):
    # oracle: evaluate det(I - λA) directly at an integer λ
    A = DenseMatrix(M)
    I = DenseMatrix.identity(3)
    direct = (I - A.scale(lam)).det()
    assert det_poly(A).evaluate(lam) == direct


def test_det_poly_by_permutation_expansion():
    # oracle: Leibniz formula on integer evaluations for a 4x4 matrix
    M = [[1, 2, 0, -1], [0, 1, 3, 2], [2, -1, 1, 0], [1, 1, 1, 1]]
    p = det_poly(DenseMatrix(M))
    for lam in range(-3, 4):
        B = [[(1 if i == j else 0) - lam * M[i][j] for j in range(4)] for i in range(4)]
        total = 0
        for perm in itertools.permutations(range(4)):
            sign = 1
            for i in range(4):
                for j in range(i + 1, 4):
                    if perm[i] > perm[j]:
                        sign = -sign
            prod = 1
            for i in range(4):
                prod *= B[i][perm[i]]
            total += sign * prod
        assert p.evaluate(lam) == total
