"""Consecutive-root negacyclic MDS codes N_{q,k} of length n_q = (q-1)/2."""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from math import comb

from .. import codes
from ..codes import LinearCode
from ..designs import Design, complete_lambda, is_complete, t_design_lambda
from ..errors import VerificationError
from ..gf import FieldCtx, build_field, prime_power


def poly_mul(ctx: FieldCtx, f, g):
    """Product of coefficient lists (constant term first) over the tower."""
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        for j, b in enumerate(g):
            out[i + j] = ctx.add(out[i + j], ctx.mul(a, b))
    return out


def negacyclic_roots(ctx: FieldCtx, q: int) -> list[int]:
    """rho beta^j for j < n_q, where rho is the first element of order q - 1."""
    rho = next(x for x in ctx.subfield(q).elements[1:] if ctx.element_order(x) == q - 1)
    beta = ctx.mul(rho, rho)
    n = (q - 1) // 2
    return [ctx.mul(rho, ctx.pow(beta, j)) for j in range(n)]


def generator_polynomial(ctx: FieldCtx, q: int, k: int) -> list[int]:
    n = (q - 1) // 2
    g = [1]
    for r in negacyclic_roots(ctx, q)[: n - k]:
        g = poly_mul(ctx, g, [ctx.neg(r), 1])
    return g


def build_mds(q: int, k: int, *, verify: bool = True) -> LinearCode:
    """Rows X^j g_{q,k}(X), j < k, as vectors of length n_q."""
    p, m = prime_power(q)
    n = (q - 1) // 2
    if q < 5 or not 1 <= k <= n:
        raise ValueError(f"need odd q >= 5 and 1 <= k <= {n}")
    ctx = build_field(p, m)
    full = [1]
    for r in negacyclic_roots(ctx, q):
        full = poly_mul(ctx, full, [ctx.neg(r), 1])
    if full != [1] + [0] * (n - 1) + [1]:
        raise VerificationError("X^n + 1 does not split over the chosen roots")
    g = generator_polynomial(ctx, q, k)
    rows = [[0] * j + g + [0] * (n - len(g) - j) for j in range(k)]
    C = LinearCode(ctx, q, rows, multiplier=ctx.minus_one, name=f"N_{q},{k}")
    if verify:
        if not codes.is_constacyclic(C, ctx.minus_one):
            raise VerificationError("code is not negacyclic")
        if codes.minimum_distance_by_rank(C) != n - k + 1:
            raise VerificationError("code is not MDS")
    return C


def op41_params(q: int) -> tuple[int, int, int]:
    n = (q - 1) // 2
    k = n // 2
    return n, k, n - k + 1


@dataclass
class SupportCheck:
    q: int
    k: int
    n: int
    d: int
    w: int
    mode: str  # "enumerated" or "sampled"
    formula: int  # E_{q,d}(w)
    observed: dict  # support -> exact-support count (all supports, or the sample)
    saturated: bool
    design: Design | None


def saturation_check(C: LinearCode, w: int, *, samples: int = 50, seed: int = 0,
                     budget: int | None = None, threads: int | None = None) -> SupportCheck:
    """Verify that every w-subset is a support, by enumeration or by sampling.

    Within budget the whole code is enumerated and every w-set's exact
    support count is compared with the inclusion-exclusion value.  Beyond it,
    ``samples`` random w-sets are checked via their shortened subcodes.
    """
    q, n, k = C.alphabet, C.n, C.k
    d = n - k + 1
    if not d <= w <= min(n, q):
        raise ValueError(f"w must lie in {d}..{min(n, q)}")
    E = codes.mds_exact_support_count(q, d, w)
    budget_ = codes.DEFAULT_BUDGET if budget is None else budget
    if C.size <= budget_:
        counts = codes.supports_of_weight(C, w, budget=budget, threads=threads)
        saturated = len(counts) == comb(n, w) and set(counts.values()) == {E}
        design = Design(n, tuple(counts))
        return SupportCheck(q, k, n, d, w, "enumerated", E, dict(counts), saturated, design)
    rng = random.Random(seed)
    subsets = list(combinations(range(n), w))
    picked = sorted(rng.sample(subsets, min(samples, len(subsets))))
    observed = {S: codes.exact_support_count(C, S) for S in picked}
    saturated = all(c == E for c in observed.values()) and E > 0
    return SupportCheck(q, k, n, d, w, "sampled", E, observed, saturated, None)


def design_lambda(check: SupportCheck, t: int) -> int:
    """lambda of the support design: measured when enumerated, complete-design value otherwise."""
    if check.design is not None:
        if not is_complete(check.design, check.w):
            raise VerificationError("support design is not complete")
        res = t_design_lambda(check.design, t)
        if not res.uniform:
            raise VerificationError("support design is not a t-design", witness=res.witness)
        return res.lam
    return complete_lambda(check.n, check.w, t)
