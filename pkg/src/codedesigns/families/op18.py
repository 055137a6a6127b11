"""The cyclic code C_s of length q + 1 and its subline classification.

Coordinates are u_i = beta^(-i) on the circle U_(q+1); a codeword for the
message (a, b) in F_{q^2}^2 has entries Tr_{q^2/q}(a u^((p^s-1)/2) + b u^((p^s+1)/2)).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .. import codes, projline
from ..codes import LinearCode
from ..designs import Design, complement
from ..errors import VerificationError
from ..gf import FieldCtx, build_field


@dataclass(frozen=True)
class Op18Setup:
    ctx: FieldCtx
    p: int
    m: int
    s: int
    q: int
    q0: int
    beta: int
    eps: int
    gamma: int  # F_{q^2} = F_q + gamma F_q

    @property
    def n(self) -> int:
        return self.q + 1

    def coordinate(self, i: int) -> int:
        return self.ctx.pow(self.beta, (-i) % self.n)


@dataclass
class Op18Report:
    setup: Op18Setup
    weights: codes.WeightEnum
    min_weight: int
    a_min: int
    zero_sets: list[tuple[int, ...]]
    pullbacks: list[tuple[int, ...]]
    sublines_match: bool
    design: Design  # supports of minimum words


def setup(p: int, m: int, s: int) -> Op18Setup:
    if not 1 <= s < m:
        raise ValueError(f"need 1 <= s < m, got s={s}, m={m}")
    ctx = build_field(p, 2 * m)
    q = p**m
    beta = ctx.omega_pow((q * q - 1) // (q + 1))
    eps = projline.find_eps(ctx, q)
    gamma = next(x for x in ctx.subfield(q * q).elements if not ctx.is_in_subfield(x, q))
    return Op18Setup(ctx, p, m, s, q, p ** gcd(m, s), beta, eps, gamma)


def codeword(st: Op18Setup, a: int, b: int) -> tuple[int, ...]:
    ctx, q = st.ctx, st.q
    e1, e2 = (st.p**st.s - 1) // 2, (st.p**st.s + 1) // 2
    out = []
    for i in range(st.n):
        u = st.coordinate(i)
        v = ctx.add(ctx.mul(a, ctx.pow(u, e1)), ctx.mul(b, ctx.pow(u, e2)))
        out.append(ctx.trace(v, q * q, q))
    return tuple(out)


def zero_polynomial(st: Op18Setup, a: int, b: int, u: int) -> int:
    """F_{a,b}(u) = a u^(p^s) + b u^(p^s+1) + a^q u + b^q."""
    ctx, ps = st.ctx, st.p**st.s
    terms = (
        ctx.mul(a, ctx.pow(u, ps)),
        ctx.mul(b, ctx.pow(u, ps + 1)),
        ctx.mul(ctx.pow(a, st.q), u),
        ctx.pow(b, st.q),
    )
    return ctx.sum(terms)


def message_basis(st: Op18Setup) -> list[tuple[int, int]]:
    return [(1, 0), (st.gamma, 0), (0, 1), (0, st.gamma)]


def message_to_ab(st: Op18Setup, msg) -> tuple[int, int]:
    ctx = st.ctx
    a = ctx.add(msg[0], ctx.mul(msg[1], st.gamma))
    b = ctx.add(msg[2], ctx.mul(msg[3], st.gamma))
    return a, b


def build_op18(p: int, m: int, s: int) -> LinearCode:
    st = setup(p, m, s)
    G = [codeword(st, a, b) for a, b in message_basis(st)]
    return LinearCode(st.ctx, st.q, G, name=f"C_{s}(p={p},m={m})")


def op18_classify(code: LinearCode, p: int, m: int, s: int, **kw) -> Op18Report:
    """Pull every minimum zero set back to PG(1, q) and match it to the sublines.

    Raises ``VerificationError`` with the offending codeword if a zero set is
    not a subline or the collection differs from the set of all sublines.
    """
    st = setup(p, m, s)
    ctx = st.ctx
    sc = codes.scan(code, "min", **kw)
    supports = codes.minimum_supports(code, scan_result=sc)
    n = st.n
    zero_sets = sorted(tuple(sorted(set(range(n)) - set(S))) for S in supports)
    pullbacks = []
    for Z in zero_sets:
        pts = projline.canonical(projline.cayley_inv(ctx, st.eps, st.coordinate(i)) for i in Z)
        if len(pts) != st.q0 + 1 or not projline.is_subline(ctx, pts, st.q0)[0]:
            bad = _word_with_zero_set(code, sc, Z)
            raise VerificationError("minimum zero set is not a subline", witness=bad)
        pullbacks.append(pts)
    expected = {S.points for S in projline.enumerate_sublines(ctx, st.q, st.q0)}
    match = set(pullbacks) == expected and len(pullbacks) == len(expected)
    if not match:
        raise VerificationError("minimum zero sets differ from the subline set",
                                witness=sorted(expected ^ set(pullbacks))[:1])
    return Op18Report(
        setup=st,
        weights=sc.weights,
        min_weight=sc.weights.minimum_distance,
        a_min=len(sc.words),
        zero_sets=zero_sets,
        pullbacks=sorted(pullbacks),
        sublines_match=match,
        design=complement(Design(n, tuple(zero_sets))),
    )


def _word_with_zero_set(code, sc, Z):
    masks = codes.support_masks(sc.words)
    target = sum(1 << i for i in range(code.n) if i not in Z)
    for idx, mask in zip(sc.indices.tolist(), masks.tolist()):
        if mask == target:
            return {"message": codes.message_from_index(code, idx), "zero_set": Z}
    return {"zero_set": Z}


def expected_min_weight_count(q: int, q0: int) -> int:
    num, den = q**4 - q**3 - q * q + q, q0**3 - q0
    assert num % den == 0
    return num // den
