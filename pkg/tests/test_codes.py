import random
from collections import Counter
from itertools import combinations, product
from math import comb

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from codedesigns import codes
from codedesigns.codes import LinearCode
from codedesigns.errors import BudgetExceeded, VerificationError
from codedesigns.families.mds import build_mds
from codedesigns.families.op18 import build_op18
from codedesigns.gf import build_field


def brute_force(C):
    """Weight tally and word list by direct message-by-message encoding."""
    F = C.field.elements
    words = [codes.encode(C, m) for m in product(F, repeat=C.k)]
    return Counter(codes.weight(w) for w in words), words


def test_repetition_code():
    ctx = build_field(3, 1)
    C = LinearCode(ctx, 3, [[1, 1]])
    assert dict(codes.enumerate_weights(C)) == {0: 1, 2: 2}
    assert codes.minimum_supports(C) == [(0, 1)]


def test_rejects_bad_generators():
    ctx = build_field(3, 2)
    with pytest.raises(ValueError):
        LinearCode(ctx, 3, [[1, 2], [2, 1]])  # dependent
    with pytest.raises(ValueError):
        LinearCode(ctx, 3, [[1, ctx.omega]])  # entry outside F_3
    with pytest.raises(ValueError):
        LinearCode(ctx, 3, np.zeros((0, 3)))


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**6))
def test_enumeration_matches_brute_force(seed):
    rng = random.Random(seed)
    ctx = build_field(3, 2)
    Q = rng.choice([3, 9])
    k, n = rng.randint(1, 3), rng.randint(3, 6)
    F = ctx.subfield(Q).elements
    while True:
        G = [[rng.choice(F) for _ in range(n)] for _ in range(k)]
        try:
            C = LinearCode(ctx, Q, G)
            break
        except ValueError:
            continue
    tally, words = brute_force(C)
    assert dict(codes.enumerate_weights(C)) == dict(tally)
    s = codes.scan(C, "min")
    d = min(w for w in tally if w)
    assert len(s.words) == tally[d]
    # kept words are in message order and match encode()
    for idx, local in zip(s.indices.tolist(), s.words):
        assert tuple(C.field.to_top(local).tolist()) == words[idx]


def test_block_splitting_and_threads(monkeypatch):
    C = build_mds(23, 5)
    base = codes.enumerate_weights(C)
    monkeypatch.setattr(codes, "BLOCK_ROWS", 23**2)
    assert codes.enumerate_weights(C, threads=3) == base
    s1 = codes.scan(C, 7, threads=1)
    s3 = codes.scan(C, 7, threads=4)
    assert np.array_equal(s1.indices, s3.indices)


def test_budget_guard():
    C = build_mds(23, 5)
    with pytest.raises(BudgetExceeded) as exc:
        codes.enumerate_weights(C, budget=10**6)
    assert exc.value.required == 23**5


def test_scalar_duplicate_law_cs_q9():
    C = build_op18(3, 2, 1)
    s = codes.scan(C, "min")
    codes.check_scalar_duplicates(C, s.words)
    assert len(codes.minimum_supports(C, scan_result=s)) == 240 // 8


def test_scalar_duplicate_law_n73():
    C = build_mds(7, 3)
    s = codes.scan(C, "min")
    codes.check_scalar_duplicates(C, s.words)


def test_scalar_duplicate_violation_detected():
    ctx = build_field(3, 1)
    C = LinearCode(ctx, 3, [[1, 0, 1], [0, 1, 1]])
    words = np.array([[1, 1, 0], [1, 2, 0]])  # same support, not proportional
    with pytest.raises(VerificationError):
        codes.check_scalar_duplicates(C, words)


def test_op18_weights():
    C = build_op18(3, 2, 1)
    enum = codes.enumerate_weights(C)
    assert dict(enum) == {0: 1, 6: 240, 8: 2160, 9: 2000, 10: 2160}
    assert enum.total == 9**4 and enum.minimum_distance == 6


def test_constacyclic():
    C = build_mds(11, 3)
    assert codes.is_constacyclic(C, C.ctx.minus_one)
    assert not codes.is_constacyclic(C, 1)
    with pytest.raises(ValueError):
        codes.is_constacyclic(C, 0)


@pytest.mark.parametrize("q,k,n,d", [(7, 2, 3, 2), (11, 3, 5, 3), (23, 5, 11, 7)])
def test_mds_rank_and_enumeration_agree(q, k, n, d):
    C = build_mds(q, k)
    assert (C.n, C.k) == (n, k)
    assert codes.is_mds(C, "both")
    assert codes.enumerate_weights(C).minimum_distance == d


def test_planted_non_mds():
    ctx = build_field(7, 1)
    C = LinearCode(ctx, 7, [[1, 1, 0], [0, 0, 1]])
    assert not codes.is_mds(C, "both")


def test_exact_support_counts_n113():
    C = build_mds(11, 3)
    tally, words = brute_force(C)
    per_support = Counter(tuple(i for i, x in enumerate(w) if x) for w in words)
    for w in (3, 4, 5):
        E = codes.mds_exact_support_count(11, 3, w)
        for S in combinations(range(5), w):
            assert per_support[S] == E
            assert codes.exact_support_count(C, S) == E
        assert codes.support_saturation(C, w)


def test_exact_support_formula_values():
    assert codes.mds_exact_support_count(23, 7, 7) == 22
    assert codes.mds_exact_support_count(23, 7, 8) == 352
    for q in (7, 11, 23):
        for d in range(1, q + 1):
            for w in range(d, q + 1):
                assert codes.mds_exact_support_count(q, d, w) > 0


def test_n235_weight_counts():
    C = build_mds(23, 5)
    enum = codes.enumerate_weights(C)
    assert enum[7] == comb(11, 7) * 22 == 7260
    assert enum[8] == comb(11, 8) * 352 == 58080
    assert enum.total == 23**5


def test_message_index_round_trip():
    C = build_mds(7, 2)
    for i in range(C.size):
        m = codes.message_from_index(C, i)
        digits = [C.field.index[x] for x in m]
        assert sum(d * 7 ** (C.k - 1 - j) for j, d in enumerate(digits)) == i
