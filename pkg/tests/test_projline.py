import random
from itertools import combinations, product

import pytest

from codedesigns import projline as pl
from codedesigns.errors import VerificationError
from codedesigns.gf import build_field

INF = pl.INF


@pytest.fixture(scope="module")
def f81():
    return build_field(3, 4)


@pytest.fixture(scope="module")
def f9():
    return build_field(3, 2)


def test_mobius_basics(f9):
    assert pl.mobius_apply(f9, pl.IDENTITY, 5) == 5
    assert pl.mobius_apply(f9, pl.Mobius(0, 1, 1, 0), 0) == INF
    assert pl.mobius_apply(f9, pl.Mobius(0, 1, 1, 0), INF) == 0
    assert pl.mobius_sending(f9, INF, 0, 1) == pl.mobius_normalize(f9, pl.IDENTITY)


def random_mobius(ctx, rng, Q):
    els = ctx.subfield(Q).elements
    while True:
        L = pl.Mobius(*(rng.choice(els) for _ in range(4)))
        if pl.mobius_det(ctx, L):
            return L


def test_composition_law(f9):
    rng = random.Random(7)
    line = pl.projective_line(f9, 9)
    for _ in range(100):
        L1, L2 = random_mobius(f9, rng, 9), random_mobius(f9, rng, 9)
        x = rng.choice(line)
        L = pl.mobius_compose(f9, L2, L1)
        assert pl.mobius_apply(f9, L, x) == pl.mobius_apply(f9, L2, pl.mobius_apply(f9, L1, x))
        Li = pl.mobius_inverse(f9, L1)
        assert pl.mobius_apply(f9, Li, pl.mobius_apply(f9, L1, x)) == x


def test_sending_and_sharp_transitivity(f9):
    line = pl.projective_line(f9, 9)
    assert len(line) == 10 and line[0] == INF
    maps = set()
    for p1, p2, p3 in product(line, repeat=3):
        if len({p1, p2, p3}) < 3:
            continue
        L = pl.mobius_sending(f9, p1, p2, p3)
        assert [pl.mobius_apply(f9, L, x) for x in (p1, p2, p3)] == [INF, 0, 1]
        maps.add(tuple(pl.mobius_apply(f9, L, x) for x in line))
    # one map per ordered triple, 720 = q(q^2-1) distinct permutations
    assert len(maps) == 720


def test_cayley(f81):
    eps = pl.find_eps(f81, 9)
    assert f81.pow(eps, 9) == f81.neg(eps)
    assert pl.cayley(f81, eps, INF) == 1
    assert pl.cayley(f81, eps, 0) == f81.minus_one
    line = pl.projective_line(f81, 9)
    image = [pl.cayley(f81, eps, x) for x in line]
    assert sorted(image) == f81.unit_circle(10)
    assert [pl.cayley_inv(f81, eps, u) for u in image] == line


@pytest.mark.parametrize("p,Q", [(3, 9), (5, 25)])
def test_cayley_norm_law(p, Q):
    ctx = build_field(p, 4)
    for eps in pl.trace_zero_roots(ctx, Q)[:3]:
        for x in pl.projective_line(ctx, Q):
            assert ctx.pow(pl.cayley(ctx, eps, x), Q + 1) == 1


def test_subline_through_examples(f9):
    S = pl.subline_through(f9, INF, 0, 1, 3)
    assert S.points == (INF, 0, 1, 2)
    ctx = build_field(5, 2)
    rng = random.Random(3)
    line = pl.projective_line(ctx, 25)
    for _ in range(20):
        t = rng.sample(line, 3)
        B = pl.subline_through(ctx, *t, 5)
        assert len(B.points) == 6 and set(t) <= set(B.points)
        assert pl.is_subline(ctx, B.points, 5)[0]


@pytest.mark.parametrize("p,D,q,q0", [(3, 2, 9, 3), (5, 2, 25, 5), (7, 2, 49, 7), (3, 3, 27, 3)])
def test_subline_counts(p, D, q, q0):
    ctx = build_field(p, D)
    subs = pl.enumerate_sublines(ctx, q, q0)
    assert len(subs) == pl.subline_count(q, q0)
    assert all(len(S.points) == q0 + 1 for S in subs)


def test_sublines_form_steiner_system(f9):
    subs = pl.enumerate_sublines(f9, 9, 3)
    triples = {}
    for S in subs:
        for t in combinations(S.points, 3):
            triples[t] = triples.get(t, 0) + 1
    assert len(triples) == 120 and set(triples.values()) == {1}


def test_degenerate_subline_call_rejected(f9):
    with pytest.raises(ValueError):
        pl.enumerate_sublines(f9, 9, 9)


def test_is_subline_rejects_non_sublines(f9):
    subs = {S.points for S in pl.enumerate_sublines(f9, 9, 3)}
    line = pl.projective_line(f9, 9)
    non = [c for c in combinations(line, 4) if c not in subs]
    assert len(non) == 210 - 30
    assert not any(pl.is_subline(f9, c, 3)[0] for c in non)
    for S in subs:
        ok, L = pl.is_subline(f9, S, 3)
        assert ok
        assert sorted(pl.mobius_apply(f9, L, x) for x in S) == [INF, 0, 1, 2]


def test_fixed_field_form(f9):
    assert pl.solve_semilinear(f9, 0, 1, f9.minus_one, 0, 1, 9) == (INF, 0, 1, 2)


def test_subline_form_round_trip(f9):
    rng = random.Random(11)
    subs = sorted(pl.enumerate_sublines(f9, 9, 3), key=lambda S: S.points)
    for S in rng.sample(subs, 20):
        _, L = pl.is_subline(f9, S.points, 3)
        form = pl.subline_form(f9, L, 1)
        assert pl.solve_semilinear(f9, *form, 1, 9) == S.points


def test_semilinear_trichotomy_f9(f9):
    """Every nonzero form over F_9 with sigma = x^3 has 0, 1, 2, 4 or 10 zeros."""
    sizes = {}
    for form in product(range(9), repeat=4):
        if not any(form):
            continue
        roots = pl.solve_semilinear(f9, *form, 1, 9)
        sizes[len(roots)] = sizes.get(len(roots), 0) + 1
        if len(roots) > 2:
            assert len(roots) in (4, 10)
            if len(roots) == 4:
                assert pl.is_subline(f9, roots, 3)[0]
    assert set(sizes) <= {0, 1, 2, 4, 10}
    assert 4 in sizes


def test_classify_unit_zero_set_small_cases(f81):
    assert pl.classify_unit_zero_set(f81, 3, 0, 0, 0, 1).kind == "empty"
    for beta in f81.unit_circle(10):
        res = pl.classify_unit_zero_set(f81, 3, 1, 0, 0, f81.neg(beta))
        assert res.kind == "small" and res.roots == (beta,)
    with pytest.raises(ValueError):
        pl.classify_unit_zero_set(f81, 3, 0, 0, 0, 0)


def _verdict(ctx, q, coeffs, omega):
    try:
        return pl.classify_unit_zero_set(ctx, q, *coeffs, omega=omega).kind
    except VerificationError:
        return "not baer"


def test_theta_independence(f81):
    """The Baer verdict does not depend on which trace-zero omega is used."""
    q = 3
    omegas = pl.trace_zero_roots(f81, 9)
    assert len(omegas) == 8
    seen = set()
    for a, b in product(range(0, 81, 3), range(0, 81, 5)):
        coeffs = (a, f81.pow(a, 9), b, f81.pow(b, 9))
        if not any(coeffs):
            continue
        verdicts = {_verdict(f81, q, coeffs, w) for w in omegas}
        assert len(verdicts) == 1, coeffs
        seen |= verdicts
    assert "baer" in seen
