from __future__ import annotations

import random
from collections import Counter

import pytest

from nrtcodes.algebra import DenseMatrix, Quad, parse_poly
from nrtcodes.core import (all_codes, code_from_rows, dual_code, full_space,
                           iter_flat_codewords, shape_exponents, zero_code)
from nrtcodes.errors import NrtError, VerificationError
from nrtcodes.shape_enum import (macwilliams_transform, normalized_T,
                                 shape_enumerator, theta_matrix,
                                 verify_theta_properties)


def _oracle_enumerator(C):
    """Count shapes by direct tally of all codewords."""
    return Counter(shape_exponents(w, C.n, C.s) for w in iter_flat_codewords(C))


@pytest.mark.parametrize("rows,n,expected", [
    ([[0, 1]], 1, "z0 + z2"),
    ([[1, 0]], 1, "z0 + z1"),
    ([[1, 0, 1, 0], [0, 1, 0, 1]], 2, "z0^2 + z1^2 + 2*z2^2"),
    ([[0, 0, 1, 0, 1, 0], [1, 0, 0, 0, 1, 0], [0, 1, 0, 1, 0, 1]], 3,
     "z0^3 + 3*z0*z1^2 + 4*z2^3"),
])
def test_reference_enumerators(rows, n, expected):
    H = shape_enumerator(code_from_rows(2, n, 2, rows))
    assert str(H) == expected
    assert H.poly == parse_poly(expected, 3)


def test_enumerator_matches_tally():
    rng = random.Random(7)
    for q, n, s in [(2, 3, 2), (3, 2, 2), (2, 2, 3)]:
        for _ in range(5):
            N = n * s
            C = code_from_rows(q, n, s, [[rng.randrange(q) for _ in range(N)]
                                         for _ in range(rng.randint(0, N))])
            H = shape_enumerator(C)
            tally = _oracle_enumerator(C)
            assert {e: int(c.to_fraction()) for e, c in H.poly.terms.items()} == dict(tally)
            assert H.coefficient_sum() == C.size


@pytest.mark.parametrize("s,q,expected", [
    (2, 2, [[1, 1, 2], [1, 1, -2], [1, -1, 0]]),
    (1, 2, [[1, 1], [1, -1]]),
    (2, 3, [[1, 2, 6], [1, 2, -3], [1, -1, 0]]),
])
def test_theta_entries(s, q, expected):
    assert [list(r) for r in theta_matrix(s, q).entries] == expected


def test_normalized_T_s1():
    half_root = Quad(0, Quad(1, 0).a / 2)
    T = normalized_T(1)
    assert T == DenseMatrix([[half_root, half_root], [half_root, -half_root]])


def test_macwilliams_examples():
    z = lambda t: parse_poly(t, 3)  # noqa: E731
    assert macwilliams_transform(z("z0 + z1"), 2, 2).poly == z("z0 + z1")
    assert macwilliams_transform(z("z0"), 2, 1).poly == z("z0 + z1 + 2*z2")
    assert macwilliams_transform(z("z0 + z1 + 2*z2"), 2, 4).poly == z("z0")


def test_macwilliams_rejects_non_enumerator():
    with pytest.raises(NrtError):
        macwilliams_transform(parse_poly("z0 + z1", 3), 2, 3)


@pytest.mark.parametrize("q,n,s", [(2, 1, 2), (2, 2, 2), (2, 1, 3), (3, 1, 2),
                                   (3, 2, 1), (2, 1, 4)])
def test_macwilliams_exhaustive(q, n, s):
    for C in all_codes(q, n, s):
        direct = shape_enumerator(dual_code(C)).poly
        assert macwilliams_transform(shape_enumerator(C).poly, q, C.size).poly == direct


def test_full_space_and_zero_code_are_dual():
    F = full_space(3, 1, 2)
    Z = zero_code(3, 1, 2)
    assert dual_code(F) == Z
    assert macwilliams_transform(shape_enumerator(F).poly, 3, F.size).poly == \
        shape_enumerator(Z).poly


@pytest.mark.parametrize("s", range(1, 9))
def test_theta_properties(s):
    spec = verify_theta_properties(s)
    assert spec.ok()
    assert spec.trace == (2 ** (s // 2) if s % 2 == 0 else 0)
    assert abs(spec.det) == 2 ** (s * (s + 1) // 2)


def test_theta_s2_summary():
    spec = verify_theta_properties(2)
    assert spec.summary() == "trace=2 det=-8 charpoly=(λ-2)^2(λ+2)"


def test_theta_s3_values():
    spec = verify_theta_properties(3)
    assert (spec.trace, spec.det, spec.r1, spec.r2) == (0, 64, 2, 2)


def test_theta_s1_square():
    M = theta_matrix(1, 2).matrix()
    assert M @ M == DenseMatrix.identity(2).scale(2)


def test_theta_verification_rejects_other_q():
    with pytest.raises(NrtError):
        verify_theta_properties(2, 3)
    assert issubclass(VerificationError, NrtError)
