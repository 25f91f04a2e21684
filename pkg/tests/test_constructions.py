from __future__ import annotations

import random

import pytest

from nrtcodes.constructions import (BlockGenerator, classification_completeness,
                                    classify_ns4, construct_cn, construct_co,
                                    construct_cort, construct_interleave,
                                    construct_padded_concat, distinct_codes,
                                    extended_hamming_code, flip_vector,
                                    gram_od, hamming_code, hamming_dual,
                                    is_hamming_self_dual,
                                    is_hamming_self_orthogonal,
                                    is_self_orthogonal_od, listed_families,
                                    od_transpose, ordered_flip)
from nrtcodes.core import (all_codes, code_from_rows, is_self_dual,
                           is_self_orthogonal, self_dual_codes, zero_code)
from nrtcodes.errors import NrtError, VerificationError
from nrtcodes.shape_enum import shape_enumerator

G_CN_REPETITION = [[1, 1, 0, 0], [0, 0, 1, 1]]
G_INTERLEAVED = [
    [1, 1, 0, 0, 0, 0, 0, 0],
    [0, 0, 1, 1, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, 1, 0, 0],
    [0, 0, 0, 0, 0, 0, 1, 1],
]
G_INTERLEAVED_TWICE = [
    [1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1],
]
BLOCK_DIAG16 = [[1 if j in (2 * i, 2 * i + 1) else 0 for j in range(16)]
                for i in range(8)]


def test_flip():
    assert flip_vector([1, 0, 0]) == [0, 0, 1]
    v = [1, 2, 3, 4]
    assert flip_vector(flip_vector(v)) == v


def test_ordered_flip_examples():
    G = BlockGenerator(2, 4, G_INTERLEAVED)
    F = ordered_flip(G)
    for r, f in zip(G.rows, F.rows):
        assert list(f[:4]) == list(r[:4])[::-1]
        assert list(f[4:]) == list(r[4:])[::-1]
    assert ordered_flip(F) == G
    one = BlockGenerator(1, 4, G_CN_REPETITION)
    assert [list(r) for r in ordered_flip(one).rows] == [r[::-1] for r in G_CN_REPETITION]
    T = od_transpose(G)
    assert len(T) == 8 and all(len(c) == 4 for c in T)
    assert not any(x for r in gram_od(G, 2) for x in r)


def test_construct_co_examples():
    Co = construct_co(hamming_code(2, [[1, 0]]))
    assert Co.gen == code_from_rows(2, 1, 4, [[0, 0, 1, 0], [1, 0, 0, 0]]).gen
    assert is_self_orthogonal(Co)
    Z = construct_co(zero_code(2, 1, 3))
    assert Z.k == 3
    assert all(not any(r[:3]) for r in Z.gen)


def test_construct_cort_examples():
    C = construct_cort(hamming_code(2, [[1, 1, 0]]))
    assert C.gen == ((1, 1, 0, 0, 1, 1),)
    assert construct_cort(zero_code(2, 1, 3)).k == 0
    with pytest.raises(NrtError):
        construct_cort(hamming_code(2, [[1, 0, 0]]))


def test_construct_cn_examples():
    C = construct_cn(hamming_code(2, [[1, 1]]))
    assert C.gen == code_from_rows(2, 1, 4, G_CN_REPETITION).gen
    H = extended_hamming_code()
    assert is_hamming_self_dual(H) and (H.length, H.k) == (8, 4)
    big = construct_cn(H)
    assert (big.length, big.k) == (16, 8) and is_self_dual(big)


def test_interleave_reproduces_reference_generators():
    CN = code_from_rows(2, 1, 4, G_CN_REPETITION)
    C1 = construct_interleave(CN, CN)
    assert C1.gen == code_from_rows(2, 2, 4, G_INTERLEAVED).gen
    C2 = construct_interleave(C1, C1)
    assert C2.gen == code_from_rows(2, 4, 4, G_INTERLEAVED_TWICE).gen
    assert is_self_dual(C1) and is_self_dual(C2)


def test_padded_concat_examples():
    CN = code_from_rows(2, 1, 4, G_CN_REPETITION)
    assert construct_padded_concat([CN]) == CN
    C1 = code_from_rows(2, 2, 4, G_INTERLEAVED)
    star = construct_padded_concat([C1, C1])
    assert star.gen == code_from_rows(2, 4, 4, BLOCK_DIAG16).gen
    assert is_self_dual(star)


def test_padded_concat_width_gap_rejected():
    # width 1 padded to 3 stays orthogonal; width 2 padded to 3 does not
    C11 = code_from_rows(2, 1, 2, [[0, 1]])
    wide = code_from_rows(2, 1, 3, [[1, 0, 0]])
    with pytest.raises(VerificationError):
        construct_padded_concat([C11, wide])
    narrow = code_from_rows(2, 1, 1, [[0]])
    wide4 = code_from_rows(2, 1, 4, G_CN_REPETITION)
    out = construct_padded_concat([C11, wide4])
    assert out.k == 3 and is_self_orthogonal(out)
    assert construct_padded_concat([narrow, wide4]).k == 2


# -- randomized library -----------------------------------------------------------

def _self_orthogonal_pool(q, n, s):
    pool = []
    for C in self_dual_codes(q, n, s):
        pool.append(C)
    return pool


POOLS = {}


def _pool(q, n, s):
    key = (q, n, s)
    if key not in POOLS:
        POOLS[key] = _self_orthogonal_pool(q, n, s)
    return POOLS[key]


def _subcode(rng, C):
    rows = [r for r in C.gen if rng.random() < 0.6]
    return code_from_rows(C.q, C.n, C.s, rows)


def _random_hamming(rng, q, s):
    k = rng.randint(0, s)
    return hamming_code(q, [[rng.randrange(q) for _ in range(s)] for _ in range(k)], s)


def _hamming_self_duals(q, s):
    return [C for C in all_codes(q, 1, s, s // 2) if is_hamming_self_dual(C)]


def build_library(seed=2024, size=50):
    """Randomized (kind, inputs, expected k, expected self-dual) cases."""
    rng = random.Random(seed)
    kinds = ["co", "cort", "cn", "interleave", "padded"]
    cases = []
    while len(cases) < size:
        kind = kinds[len(cases) % len(kinds)]
        q = rng.choice([2, 3])
        if kind == "co":
            C = _random_hamming(rng, q, rng.randint(1, 4))
            # dim = k + (s - k) = s, so self-orthogonality forces self-duality
            cases.append((kind, [C], C.s, True))
        elif kind == "cort":
            sd = _hamming_self_duals(q, 4) if q == 2 else _hamming_self_duals(3, 4)
            C = _subcode(rng, rng.choice(sd))
            cases.append((kind, [C], C.k, False))
        elif kind == "cn":
            s = rng.choice([2, 4]) if q == 2 else 4
            C = rng.choice(_hamming_self_duals(q, s))
            cases.append((kind, [C], 2 * C.k, True))
        elif kind == "interleave":
            n, s = rng.choice([(1, 2), (2, 2), (1, 4), (2, 1)])
            a, b = rng.choice(_pool(q, n, s)), rng.choice(_pool(q, n, s))
            if rng.random() < 0.4:
                a = _subcode(rng, a)
            cases.append((kind, [a, b], a.k + b.k, is_self_dual(a) and is_self_dual(b)))
        else:
            s_bar = rng.choice([2, 4])
            widths = [s_bar] + [rng.choice([s_bar, 1] if s_bar == 2 else [s_bar, 2, 1])
                                for _ in range(rng.randint(0, 2))]
            codes = []
            for s in widths:
                n = rng.choice([1, 2]) if s * 2 <= 4 else 1
                if (n * s) % 2:
                    codes.append(zero_code(q, n, s))
                else:
                    codes.append(_subcode(rng, rng.choice(_pool(q, n, s))))
            k = sum(C.k for C in codes)
            n_bar = max(C.n for C in codes)
            if k > n_bar * s_bar:
                continue
            total = sum(C.n for C in codes) * s_bar
            cases.append((kind, codes, k, 2 * k == total))
    return cases


LIBRARY = build_library()
BUILDERS = {
    "co": lambda cs: construct_co(cs[0]),
    "cort": lambda cs: construct_cort(cs[0]),
    "cn": lambda cs: construct_cn(cs[0]),
    "interleave": lambda cs: construct_interleave(*cs),
    "padded": construct_padded_concat,
}


def test_library_size():
    assert len(LIBRARY) == 50
    assert {c[0] for c in LIBRARY} == set(BUILDERS)


@pytest.mark.parametrize("case", LIBRARY, ids=lambda c: c[0])
def test_library_case(case):
    kind, inputs, k, self_dual = case
    out = BUILDERS[kind](inputs)
    assert out.k == k
    assert is_self_orthogonal(out)
    assert is_self_dual(out) == self_dual
    assert is_self_orthogonal_od(out)


def test_co_dimension_formula():
    rng = random.Random(5)
    for _ in range(10):
        C = _random_hamming(rng, 3, 3)
        assert construct_co(C).k == C.k + hamming_dual(C).k


def test_gram_od_criterion_on_random_codes():
    rng = random.Random(11)
    checked = 0
    for q, n, s in [(2, 2, 2), (2, 1, 4), (3, 2, 2)]:
        pool = _pool(q, n, s)
        for i in range(67):
            if i % 3 == 0:
                C = _subcode(rng, rng.choice(pool))
            else:
                N = n * s
                C = code_from_rows(q, n, s, [[rng.randrange(q) for _ in range(N)]
                                             for _ in range(rng.randint(0, 3))])
            assert is_self_orthogonal_od(C) == is_self_orthogonal(C)
            checked += 1
    assert checked >= 200


def test_hamming_helpers():
    C = hamming_code(2, [[1, 1, 0, 0], [0, 0, 1, 1]])
    assert is_hamming_self_dual(C) and is_hamming_self_orthogonal(C)
    assert hamming_dual(hamming_dual(C)) == C


# -- classification ---------------------------------------------------------------

def test_listed_family_counts():
    assert len(listed_families(2, "i")) == 8
    assert len(listed_families(2, "ii")) == 12
    assert len(listed_families(3, "i")) == 12
    assert len(listed_families(3, "ii")) == 16
    gens = [[list(r) for r in f.generator] for f in listed_families(2, "i")]
    assert [[1, 0, 0, 0], [0, 1, 0, 0]] in gens
    gens = [[list(r) for r in f.generator] for f in listed_families(2, "ii")]
    assert [[1, 0, 0, 0], [0, 0, 1, 0]] in gens


@pytest.mark.parametrize("q", [2, 3, 5])
def test_listed_families_self_dual(q):
    for case in ("i", "ii"):
        for f in listed_families(q, case):
            assert is_self_dual(f.code), f.label
    fams = classify_ns4(q)
    assert all(is_self_dual(f.code) for f in fams)


def test_duplicates_marked():
    fams = listed_families(2, "i")
    assert len(distinct_codes(fams)) == 4
    for f in fams:
        if f.duplicate_of:
            first = next(g for g in fams if g.label == f.duplicate_of)
            assert first.code == f.code


def test_manifest_entries():
    f = classify_ns4(2)[0]
    js = f.to_json()
    assert js["shape_enumerator"] == str(shape_enumerator(f.code))
    assert set(js) >= {"label", "lambda", "generator", "shape_enumerator"}


def test_classification_cap():
    with pytest.raises(NrtError):
        classify_ns4(7)


# class counts below are regression values from the exhaustive search
@pytest.mark.parametrize("q,n,s,total,matched,counts", [
    (2, 1, 4, 15, 15, {"i.1": 1, "i.2": 2, "i.3": 4, "i.4": 8}),
    (2, 2, 2, 15, 9, {"ii.1": 1, "ii.2+ii.3": 4, "ii.4": 4}),
    (2, 4, 1, 3, 3, {"iii.1+iii.2+iii.3": 3}),
    (3, 1, 4, 8, 8, {"i.1": 1, "i.2": 1, "i.3": 3, "i.4": 3}),
    (3, 2, 2, 8, 4, {"ii.1": 1, "ii.2+ii.3": 2, "ii.4": 1}),
])
def test_classification_regression(q, n, s, total, matched, counts):
    rep = classification_completeness(q, n, s)
    assert (rep.total, rep.matched, rep.class_counts) == (total, matched, counts)


def test_unlisted_m22_codes_include_c21():
    rep = classification_completeness(2, 2, 2)
    enums = {str(shape_enumerator(C)) for C in rep.unmatched}
    assert enums == {"z0^2 + 2*z1*z2 + z2^2", "z0^2 + z1^2 + 2*z2^2"}
    C21 = code_from_rows(2, 2, 2, [[1, 0, 1, 0], [0, 1, 0, 1]])
    assert C21 in rep.unmatched
