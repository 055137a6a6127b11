"""Command-line driver: one subcommand per problem plus a generic design check.

Every run prints one JSON report to stdout.  Exit codes: 0 all claims pass,
1 a claim failed, 2 bad parameters, 3 enumeration budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from math import comb
from pathlib import Path

from . import codes, designs, pg3, projline
from .errors import BudgetExceeded, VerificationError
from .families import lift, mds, op18, op27, op28

EXIT_PASS, EXIT_FAIL, EXIT_PARAM, EXIT_BUDGET = 0, 1, 2, 3


class Report:
    def __init__(self, problem: str, params: dict):
        self.problem = problem
        self.params = params
        self.claims: list[dict] = []
        self.artifacts: dict = {}
        self.blocks_path: str | None = None
        self.notes: list[str] = []
        self.error: dict | None = None
        self._t0 = time.perf_counter()

    def claim(self, name: str, expected, observed) -> bool:
        ok = expected == observed
        self.claims.append({"name": name, "expected": _plain(expected),
                            "observed": _plain(observed), "pass": ok})
        return ok

    @property
    def passed(self) -> bool:
        return self.error is None and all(c["pass"] for c in self.claims)

    def to_dict(self) -> dict:
        out = {
            "problem": self.problem,
            "params": self.params,
            "claims": self.claims,
            "timing": {"seconds": round(time.perf_counter() - self._t0, 3)},
            "artifacts": self.artifacts,
            "blocks_path": self.blocks_path,
            "pass": self.passed,
        }
        if self.notes:
            out["notes"] = self.notes
        if self.error:
            out["error"] = self.error
        return out


def _plain(x):
    """JSON-friendly copy: dict keys to str, tuples to lists, numpy ints to int."""
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, set, frozenset)):
        items = sorted(x) if isinstance(x, (set, frozenset)) else x
        return [_plain(v) for v in items]
    if hasattr(x, "item"):
        return x.item()
    return x


def _emit(report: Report, D: designs.Design, path: str | None):
    if path:
        designs.write_blocks(path, D)
        report.blocks_path = str(Path(path))


def _design_claims(report: Report, D: designs.Design, t: int, label: str):
    """Uniformity at t, with lambda predicted by double counting b C(k,t) / C(v,t)."""
    (k,) = D.block_sizes
    res = designs.t_design_lambda(D, t)
    num = len(D) * comb(k, t)
    expected = num // comb(D.v, t) if num % comb(D.v, t) == 0 else None
    report.claim(f"{label} is a {t}-design", True, res.uniform)
    report.claim(f"{label} lambda", expected, res.lam)
    report.artifacts[label] = {"v": D.v, "k": k, "t": t, "lambda": res.lam, "blocks": len(D)}
    if not res.uniform:
        report.artifacts[label]["witness"] = _plain(res.witness)
    return res


# -- subcommands --

def cmd_op18(args, report: Report):
    st = op18.setup(args.p, args.m, args.s)
    q, q0 = st.q, st.q0
    code = op18.build_op18(args.p, args.m, args.s)
    rep = op18.op18_classify(code, args.p, args.m, args.s, budget=args.budget, threads=args.threads)
    report.params.update(q=q, q0=q0, n=st.n)
    report.artifacts["weight_enumerator"] = _plain(dict(rep.weights))
    report.claim("codewords", q**4, rep.weights.total)
    report.claim("minimum weight", q - q0, rep.min_weight)
    report.claim("A_min", op18.expected_min_weight_count(q, q0), rep.a_min)
    report.claim("minimum supports", projline.subline_count(q, q0), len(rep.zero_sets))
    report.claim("zero-set pullbacks are exactly the sublines", True, rep.sublines_match)
    zs = designs.Design(st.n, tuple(rep.zero_sets))
    report.claim("zero sets form a Steiner 3-design", True, designs.is_steiner(zs, 3))
    _design_claims(report, rep.design, 3, "support design")
    _emit(report, rep.design, args.emit_blocks)


def cmd_op27(args, report: Report):
    q = args.q
    code = op27.build_op27(q)
    rep = op27.op27_classify(code, q, budget=args.budget, threads=args.threads)
    n = q * q + 1
    report.params.update(n=n, alphabet=q * q)
    report.artifacts["weight_enumerator"] = _plain(dict(rep.weights))
    report.claim("codewords", q**8, rep.weights.total)
    report.claim("minimum weight", q * q - q, rep.min_weight)
    report.claim("A_min = q^5 - q", q**5 - q, rep.a_min)
    report.claim("coordinate transport is a bijection", n, len(set(rep.transport.values())))
    report.claim("minimum zero sets", q * n, len(rep.zero_sets))
    report.claim("Baer sublines", q * n, len(rep.baer_sublines))
    report.claim("non-tangent plane sections", q * n, len(rep.quadric_sections))
    report.claim("zero sets = Baer sublines = plane sections", True, rep.triple_equality)
    _design_claims(report, rep.design, 3, "support design")
    _emit(report, rep.design, args.emit_blocks)


def _squares(q: int):
    ctx = op28.tower(q)
    F = ctx.subfield(q).elements
    return ctx, set(F[1:]), {ctx.mul(x, x) for x in F[1:]}


def cmd_op28(args, report: Report):
    q = args.q
    if args.exhaustive:
        ctx, units, sq = _squares(q)
        verdicts = {lam: op28.op28_exists(q, lam, ctx) for lam in sorted(units)}
        report.claim("existence iff lambda is a nonsquare",
                     {lam: lam not in sq for lam in sorted(units)}, verdicts)
        report.claim("every admissible theta has nonsquare norm", True, op28.op28_exhaustive_necessity(q))
        report.claim("gcd(q^2+1, q^r-1) for r in 1,2,3,6", {1: 2, 2: 2, 3: 2, 6: 2}, op28.gcd_battery(q))
        return
    if args.lam is None:
        raise ValueError("op28 needs --lambda or --exhaustive")
    lam = args.lam
    ctx, units, sq = _squares(q)
    if lam not in units:
        raise ValueError(f"lambda must be a nonzero element of F_{q}")
    exists = op28.op28_exists(q, lam, ctx)
    report.claim("existence verdict", lam not in sq, exists)
    if not exists:
        report.notes.append(f"no code exists: {lam} is a square in F_{q}*")
        return
    w = op28.op28_construct(q, lam)
    report.params.update(b=w.b, c=w.c, theta=w.theta, v=w.v)
    report.artifacts["generator"] = _plain(w.generator.tolist())
    report.claim("columns form an ovoid", True, pg3.is_ovoid(w.code.ctx, w.ovoid.points, q))
    report.claim("code is lambda-constacyclic", True, codes.is_constacyclic(w.code, lam))
    enum = codes.enumerate_weights(w.code, budget=args.budget, threads=args.threads)
    report.artifacts["weight_enumerator"] = _plain(dict(enum))
    report.claim("minimum weight", q * q - q, enum.minimum_distance)
    report.claim("weight enumerator", lift.lift_formula(q, 1).coefficients, dict(enum))


def cmd_lift(args, report: Report):
    q, e = args.q, args.e
    f = lift.lift_formula(q, e)
    report.artifacts["formula"] = _plain(f.coefficients)
    report.claim("sum of coefficients is q^(4e)", q ** (4 * e), f.at_one())
    report.claim("1 + sum_r [4 r]_q M_r(e) = q^(4e)", q ** (4 * e), f.sanity_sum())
    if not args.brute_force:
        return
    size = q ** (4 * e)
    budget = codes.DEFAULT_BUDGET if args.budget is None else args.budget
    if size > budget:
        raise BudgetExceeded(size, budget)
    ctx = lift.lift_tower(q, e)
    O = lift.default_ovoid(ctx, q)
    code = lift.lift_code(ctx, O, e)
    enum = codes.enumerate_weights(code, budget=args.budget, threads=args.threads)
    report.artifacts["enumeration"] = _plain(dict(enum))
    report.claim("formula = enumeration", f.coefficients, dict(enum))
    rng = random.Random(args.seed)
    F = ctx.subfield(q**e).elements
    bad = []
    for _ in range(args.samples):
        a = tuple(rng.choice(F) for _ in range(4))
        if lift.rank_kernel_weight(ctx, a, O, e) != codes.weight(codes.encode(code, a)):
            bad.append(a)
    report.claim(f"rank-kernel weight = Hamming weight on {args.samples} messages", [], bad)


def cmd_mds(args, report: Report):
    q, k = args.q, args.k
    C = mds.build_mds(q, k)
    n, d = C.n, C.n - C.k + 1
    report.params.update(n=n, d=d)
    report.claim("MDS (every k columns independent)", True, codes.is_mds(C, "rank"))
    report.claim("negacyclic", True, codes.is_constacyclic(C, C.ctx.minus_one))
    report.claim("not cyclic", False, codes.is_constacyclic(C, 1))
    E = codes.mds_exact_support_count(q, d, d)
    report.claim("E(d) > 0", True, E > 0)
    chk = mds.saturation_check(C, d, budget=args.budget, threads=args.threads, seed=args.seed)
    report.artifacts["saturation"] = {"mode": chk.mode, "checked": len(chk.observed), "E": chk.formula}
    if chk.mode == "enumerated":
        report.claim("A_d = C(n,d) E(d)", comb(n, d) * E, sum(chk.observed.values()))
        report.claim("weight-d supports", comb(n, d), len(chk.observed))
    report.claim("weight-d supports saturate", True, chk.saturated)
    if args.design_t:
        t = args.design_t
        lam = mds.design_lambda(chk, t)
        report.claim(f"support design lambda at t={t}", comb(n - t, d - t), lam)
        report.artifacts["design"] = {"v": n, "k": d, "t": t, "lambda": lam, "mode": chk.mode}
    if chk.design is not None:
        _emit(report, chk.design, args.emit_blocks)


def cmd_design_verify(args, report: Report):
    D = designs.read_blocks(args.blocks, args.v)
    if len(D.block_sizes) != 1:
        raise ValueError("blocks must all have the same size")
    report.params.update(v=D.v, blocks=len(D))
    res = designs.t_design_lambda(D, args.t)
    report.claim(f"{args.t}-design", True, res.uniform)
    (k,) = D.block_sizes
    report.artifacts["design"] = {"v": D.v, "k": k, "t": args.t, "lambda": res.lam,
                                  "steiner": res.uniform and res.lam == 1,
                                  "complete": designs.is_complete(D, k)}
    if not res.uniform:
        report.artifacts["witness"] = _plain(res.witness)


# -- plumbing --

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="codedesigns", description=__doc__.splitlines()[0])
    ap.add_argument("--threads", type=int, default=None, help="enumeration threads (default: all cores)")
    ap.add_argument("--budget", type=int, default=codes.DEFAULT_BUDGET, help="max codewords to enumerate")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("op18", help="cyclic subline codes C_s")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--emit-blocks", metavar="PATH")
    p.set_defaults(func=cmd_op18)

    p = sub.add_parser("op27", help="negacyclic Baer-subline code over F_{q^2}")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--emit-blocks", metavar="PATH")
    p.set_defaults(func=cmd_op27)

    p = sub.add_parser("op28", help="lambda-constacyclic ovoid codes")
    p.add_argument("--q", type=int, required=True)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--lambda", dest="lam", type=int)
    g.add_argument("--exhaustive", action="store_true")
    p.set_defaults(func=cmd_op28)

    p = sub.add_parser("lift", help="ovoid codes lifted to F_{q^e}")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--brute-force", action="store_true")
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_lift)

    p = sub.add_parser("mds", help="negacyclic MDS codes N_{q,k}")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--design-t", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--emit-blocks", metavar="PATH")
    p.set_defaults(func=cmd_mds)

    p = sub.add_parser("design-verify", help="check a block file for t-design uniformity")
    p.add_argument("--blocks", required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--v", type=int, default=None)
    p.set_defaults(func=cmd_design_verify)
    return ap


def run(argv=None) -> tuple[int, dict]:
    args = build_parser().parse_args(argv)
    if args.threads is None:
        args.threads = codes.default_threads()
    params = {k: v for k, v in vars(args).items() if k not in ("func", "command", "threads")}
    report = Report(args.command, params)
    code = EXIT_PASS
    try:
        args.func(args, report)
        code = EXIT_PASS if report.passed else EXIT_FAIL
    except BudgetExceeded as exc:
        report.error = {"kind": "budget", "message": str(exc), "required": exc.required, "budget": exc.budget}
        code = EXIT_BUDGET
    except VerificationError as exc:
        report.error = {"kind": "verification", "message": str(exc), "witness": _plain(exc.witness)}
        code = EXIT_FAIL
    except (ValueError, OSError) as exc:
        report.error = {"kind": "parameter", "message": str(exc)}
        code = EXIT_PARAM
    return code, report.to_dict()


def main(argv=None) -> int:
    code, rep = run(argv)
    json.dump(rep, sys.stdout, indent=2)
    sys.stdout.write("\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
