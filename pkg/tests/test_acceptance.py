"""Acceptance suite: seven criteria, exact values, each under its runtime limit.

Every test prints one PASS/FAIL line (with elapsed time) straight to the
terminal.  Run with ``pytest tests/test_acceptance.py -v`` or directly with
``python tests/test_acceptance.py``.
"""

import random
import sys
import time
from contextlib import contextmanager
from itertools import product
from math import comb

import pytest

from codedesigns import codes, designs, pg3, projline as pl
from codedesigns.errors import VerificationError
from codedesigns.families import lift, mds, op18, op27, op28
from codedesigns.gf import build_field

_capsys_holder = {}


@pytest.fixture(autouse=True)
def _hold_capsys(capsys):
    _capsys_holder["c"] = capsys
    yield
    _capsys_holder.pop("c", None)


def _say(line):
    cap = _capsys_holder.get("c")
    if cap is None:
        print(line)
        return
    with cap.disabled():
        sys.stdout.write("\n" + line + "\n")


@contextmanager
def criterion(num, title, limit):
    t0 = time.perf_counter()
    try:
        yield
    except BaseException as exc:
        _say(f"FAIL criterion {num}: {title} ({time.perf_counter() - t0:.2f}s) -- {exc!r}")
        raise
    elapsed = time.perf_counter() - t0
    ok = elapsed < limit
    _say(f"{'PASS' if ok else 'FAIL'} criterion {num}: {title} ({elapsed:.2f}s, limit {limit}s)")
    assert ok, f"criterion {num} took {elapsed:.1f}s, limit {limit}s"


def test_criterion_1_cyclic_subline_code():
    with criterion(1, "C_1 over F_9: A_6=240, 30 sublines, 3-(10,6,5)", 10):
        code = op18.build_op18(3, 2, 1)
        rep = op18.op18_classify(code, 3, 2, 1)
        assert rep.weights.total == 6561
        assert rep.min_weight == 6
        assert rep.a_min == 240 == op18.expected_min_weight_count(9, 3)
        assert len(rep.zero_sets) == 30
        st = op18.setup(3, 2, 1)
        pulled = {pl.canonical(pl.cayley_inv(st.ctx, st.eps, st.coordinate(i)) for i in Z)
                  for Z in rep.zero_sets}
        assert pulled == {S.points for S in pl.enumerate_sublines(st.ctx, 9, 3)}
        res = designs.t_design_lambda(rep.design, 3)
        assert rep.design.v == 10 and rep.design.block_sizes == {6}
        assert res.uniform and res.lam == 5


def test_criterion_2_negacyclic_baer_code():
    with criterion(2, "N+ at q=5: A_20=3120, 130=130=130, 3-(26,20,57)", 120):
        q = 5
        code = op27.build_op27(q)
        rep = op27.op27_classify(code, q)
        assert rep.weights.total == 390625
        assert rep.min_weight == 20
        assert rep.a_min == 3120 == q**5 - q
        assert sorted(rep.transport.values()) == rep.setup.ctx.unit_circle(26)
        assert len(set(rep.transport.values())) == 26
        assert len(rep.zero_sets) == len(rep.baer_sublines) == len(rep.quadric_sections) == 130
        assert rep.triple_equality
        res = designs.t_design_lambda(rep.design, 3)
        assert rep.design.block_sizes == {20}
        assert res.uniform and res.lam == 57


def test_criterion_3_constacyclic_ovoid_codes():
    with criterion(3, "lambda-constacyclic ovoid codes exist iff lambda is a nonsquare", 10):
        for q in (3, 5, 7, 9, 11):
            ctx = op28.tower(q)
            F = ctx.subfield(q).elements
            squares = {ctx.mul(x, x) for x in F[1:]}
            for lam in F[1:]:
                assert op28.op28_exists(q, lam, ctx) == (lam not in squares), (q, lam)
        w = op28.op28_construct(3, 2)
        assert pg3.is_ovoid(w.code.ctx, w.ovoid.points, 3)
        assert codes.is_constacyclic(w.code, 2)
        assert dict(codes.enumerate_weights(w.code)) == {0: 1, 6: 60, 9: 20}
        assert op28.tower(3).order - 1 == 80
        assert op28.op28_exhaustive_necessity(3)
        for q in (3, 5, 7, 9, 11, 23):
            assert op28.gcd_battery(q) == {1: 2, 2: 2, 3: 2, 6: 2}


def test_criterion_4_lifted_ovoid_codes():
    with criterion(4, "lift enumerators q=3,5 e=2; rank-kernel law; z=1 identity", 120):
        expected = {3: {6: 240, 8: 2160, 9: 2000, 10: 2160},
                    5: {20: 3120, 24: 156000, 25: 75504, 26: 156000}}
        for q in (3, 5):
            f = lift.lift_formula(q, 2)
            assert f.coefficients == {0: 1, **expected[q]}
            ctx = lift.lift_tower(q, 2)
            O = lift.default_ovoid(ctx, q)
            C = lift.lift_code(ctx, O, 2)
            enum = codes.enumerate_weights(C)
            assert dict(enum) == f.coefficients
            assert enum.total == q**8
            F = ctx.subfield(q * q).elements
            rng = random.Random(q)
            for _ in range(1000):
                a = tuple(rng.choice(F) for _ in range(4))
                assert lift.rank_kernel_weight(ctx, a, O, 2) == codes.weight(codes.encode(C, a))
        for q in (3, 5, 7, 9):
            for e in (1, 2, 3):
                f = lift.lift_formula(q, e)
                assert f.sanity_sum() == q ** (4 * e)
                assert f.at_one() == q ** (4 * e)


def test_criterion_5_mds_5_design():
    with criterion(5, "N_{23,5} is [11,5,7] MDS, A_7=7260, 330 supports, 5-(11,7,15)", 300):
        C = mds.build_mds(23, 5)
        assert (C.n, C.k) == (11, 5)
        assert codes.is_mds(C, "rank")
        assert codes.is_constacyclic(C, C.ctx.minus_one)
        enum = codes.enumerate_weights(C)
        assert enum.total == 23**5 == 6436343
        assert enum.minimum_distance == 7
        E = codes.mds_exact_support_count(23, 7, 7)
        assert enum[7] == comb(11, 7) * E == 7260
        chk = mds.saturation_check(C, 7)
        assert chk.mode == "enumerated" and chk.saturated
        assert len(chk.observed) == 330 == comb(11, 7)
        assert designs.is_complete(chk.design, 7)
        res = designs.t_design_lambda(chk.design, 5)
        assert res.uniform and res.lam == 15


def test_criterion_6_bounded_mds_family():
    with criterion(6, "N_{q,floor(n_q/2)} MDS and saturated for q=23,25,27", 300):
        for q in (23, 25, 27):
            n, k, d = mds.op41_params(q)
            C = mds.build_mds(q, k)
            assert codes.is_mds(C, "rank")
            assert codes.mds_exact_support_count(q, d, d) > 0
            chk = mds.saturation_check(C, d)
            assert chk.saturated
            if q == 23:
                assert chk.mode == "enumerated"
                assert designs.t_design_lambda(chk.design, 5).lam == comb(n - 5, d - 5)
            else:
                assert chk.mode == "sampled" and len(chk.observed) == 50
                assert all(c == chk.formula for c in chk.observed.values())
            assert mds.design_lambda(chk, 5) == comb(n - 5, d - 5)


def test_criterion_7_property_suites():
    with criterion(7, "semilinear, scalar-duplicate, Cayley, Theta, complement, Moebius laws", 60):
        # semilinear trichotomy over F_9, sigma = x^3
        f9 = build_field(3, 2)
        for form in product(range(9), repeat=4):
            if any(form):
                roots = pl.solve_semilinear(f9, *form, 1, 9)
                assert len(roots) in (0, 1, 2, 4, 10)
                if len(roots) == 4:
                    assert pl.is_subline(f9, roots, 3)[0]

        # scalar-duplicate law
        for C in (op18.build_op18(3, 2, 1), mds.build_mds(7, 3)):
            codes.check_scalar_duplicates(C, codes.scan(C, "min").words)

        # Cayley norm law
        for p, Q in ((3, 9), (5, 25)):
            ctx = build_field(p, 4)
            eps = pl.find_eps(ctx, Q)
            for x in pl.projective_line(ctx, Q):
                assert ctx.pow(pl.cayley(ctx, eps, x), Q + 1) == 1

        # Theta-independence of the Baer verdict
        f81 = build_field(3, 4)
        omegas = pl.trace_zero_roots(f81, 9)
        saw_baer = False
        for a, b in product(range(81), range(0, 81, 4)):
            coeffs = (a, f81.pow(a, 9), b, f81.pow(b, 9))
            if not any(coeffs):
                continue
            verdicts = set()
            for w in omegas:
                try:
                    verdicts.add(pl.classify_unit_zero_set(f81, 3, *coeffs, omega=w).kind)
                except VerificationError:
                    verdicts.add("not baer")
            assert len(verdicts) == 1
            saw_baer |= verdicts == {"baer"}
        assert saw_baer

        # complement involution
        rep = op18.op18_classify(op18.build_op18(3, 2, 1), 3, 2, 1)
        zs = designs.Design(10, tuple(rep.zero_sets))
        assert designs.complement(designs.complement(zs)) == zs
        assert designs.complement(rep.design) == zs

        # Moebius composition law
        rng = random.Random(0)
        line = pl.projective_line(f9, 9)
        for _ in range(100):
            L1, L2 = (pl.Mobius(*(rng.randrange(9) for _ in range(4))) for _ in range(2))
            if not (pl.mobius_det(f9, L1) and pl.mobius_det(f9, L2)):
                continue
            x = rng.choice(line)
            assert (pl.mobius_apply(f9, pl.mobius_compose(f9, L2, L1), x)
                    == pl.mobius_apply(f9, L2, pl.mobius_apply(f9, L1, x)))


if __name__ == "__main__":
    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except BaseException:
                failed += 1
    sys.exit(1 if failed else 0)
