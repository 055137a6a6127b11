"""The negacyclic code N_+ of length q^2 + 1 over F_{q^2}, for q = 1 (mod 4).

Entry i of the codeword for (a, b) in F_{q^4}^2 is
Tr_{q^4/q^2}(a delta^(-i) + b delta^(-(q^2+q+1) i)) with delta of order 2(q^2 + 1).
Zero sets are transported to U_(q^2+1) by x -> x^(q+1), pulled back to
PG(1, q^2) by the Cayley map, and finally carried into PG(3, q) by iota.
"""

from __future__ import annotations

from dataclasses import dataclass

from .. import codes, pg3, projline
from ..codes import LinearCode
from ..designs import Design, complement
from ..errors import VerificationError
from ..gf import FieldCtx, build_field, prime_power


@dataclass(frozen=True)
class Op27Setup:
    ctx: FieldCtx
    q: int
    delta: int
    omega: int  # Cayley parameter, omega^(q^2) = -omega
    zeta: int  # zeta^q = -zeta, used by iota
    gamma: int  # F_{q^4} = F_{q^2} + gamma F_{q^2}

    @property
    def n(self) -> int:
        return self.q * self.q + 1

    def representative(self, i: int) -> int:
        return self.ctx.pow(self.delta, (-i) % (2 * self.n))


@dataclass
class Op27Report:
    setup: Op27Setup
    weights: codes.WeightEnum
    min_weight: int
    a_min: int
    transport: dict[int, int]  # coordinate -> point of U_(q^2+1)
    zero_sets: list[tuple[int, ...]]
    baer_sublines: list[tuple[int, ...]]
    quadric_sections: list[tuple[pg3.Point, ...]]
    triple_equality: bool
    design: Design


def setup(q: int) -> Op27Setup:
    p, m = prime_power(q)
    if q % 4 != 1:
        raise ValueError(f"q must be 1 mod 4, got {q}")
    ctx = build_field(p, 4 * m)
    N = ctx.order - 1
    delta = ctx.omega_pow(N // (2 * (q * q + 1)))
    gamma = next(x for x in range(ctx.order) if not ctx.is_in_subfield(x, q * q))
    return Op27Setup(ctx, q, delta, projline.find_eps(ctx, q * q), projline.find_eps(ctx, q), gamma)


def codeword(st: Op27Setup, a: int, b: int) -> tuple[int, ...]:
    ctx, q = st.ctx, st.q
    k = q * q + q + 1
    out = []
    for i in range(st.n):
        x = st.representative(i)
        v = ctx.add(ctx.mul(a, x), ctx.mul(b, ctx.pow(x, k)))
        out.append(ctx.trace(v, q**4, q * q))
    return tuple(out)


def message_to_ab(st: Op27Setup, msg) -> tuple[int, int]:
    ctx = st.ctx
    return (ctx.add(msg[0], ctx.mul(msg[1], st.gamma)),
            ctx.add(msg[2], ctx.mul(msg[3], st.gamma)))


def build_op27(q: int) -> LinearCode:
    st = setup(q)
    basis = [(1, 0), (st.gamma, 0), (0, 1), (0, st.gamma)]
    G = [codeword(st, a, b) for a, b in basis]
    return LinearCode(st.ctx, q * q, G, multiplier=st.ctx.minus_one, name=f"N+(q={q})")


def coordinate_transport(st: Op27Setup) -> dict[int, int]:
    """Index table i -> (delta^(-i))^(q+1), validated as a bijection onto U_(q^2+1)."""
    ctx, q = st.ctx, st.q
    table = {i: ctx.pow(st.representative(i), q + 1) for i in range(st.n)}
    if sorted(table.values()) != ctx.unit_circle(st.n):
        raise VerificationError("coordinate transport is not a bijection onto the circle")
    return table


def op27_classify(code: LinearCode, q: int, **kw) -> Op27Report:
    """Check min zero sets = Cayley images of Baer sublines = quadric plane sections."""
    st = setup(q)
    ctx = st.ctx
    transport = coordinate_transport(st)
    sc = codes.scan(code, "min", **kw)
    supports = codes.minimum_supports(code, scan_result=sc)
    zero_sets = sorted(tuple(sorted(set(range(st.n)) - set(S))) for S in supports)

    baer = []
    for Z in zero_sets:
        pts = projline.canonical(projline.cayley_inv(ctx, st.omega, transport[i]) for i in Z)
        if len(pts) != q + 1 or not projline.is_subline(ctx, pts, q)[0]:
            raise VerificationError("zero set is not a Baer subline", witness=_witness(code, sc, Z))
        baer.append(pts)
    all_baer = {S.points for S in projline.enumerate_sublines(ctx, q * q, q)}
    if set(baer) != all_baer or len(baer) != len(all_baer):
        raise VerificationError("zero sets do not exhaust the Baer sublines")

    O = pg3.iota_quadric(ctx, q, st.zeta)
    if not pg3.is_ovoid(ctx, O.points, q):
        raise VerificationError("iota image is not an ovoid")
    sections = sorted(pg3.non_tangent_sections(ctx, O).values())
    mapped = sorted(tuple(sorted(pg3.iota(ctx, q, t, st.zeta) for t in B)) for B in baer)
    triple = mapped == sections and len(sections) == len(baer)
    if not triple:
        raise VerificationError("Baer sublines differ from the non-tangent plane sections")
    return Op27Report(
        setup=st,
        weights=sc.weights,
        min_weight=sc.weights.minimum_distance,
        a_min=len(sc.words),
        transport=transport,
        zero_sets=zero_sets,
        baer_sublines=sorted(baer),
        quadric_sections=sections,
        triple_equality=triple,
        design=complement(Design(st.n, tuple(zero_sets))),
    )


def minimum_word_coefficients(code: LinearCode, q: int, **kw):
    """Yield (message, (a, a^(q^2), b, b^(q^2))) for every minimum word.

    The 4-tuple is the coefficient vector of the unit-circle equation that
    cuts out the word's zero set in transported coordinates.
    """
    st = setup(q)
    ctx = st.ctx
    sc = codes.scan(code, "min", **kw)
    for idx in sc.indices.tolist():
        msg = codes.message_from_index(code, idx)
        a, b = message_to_ab(st, msg)
        yield msg, (a, ctx.pow(a, q * q), b, ctx.pow(b, q * q))


def _witness(code, sc, Z):
    target = sum(1 << i for i in range(code.n) if i not in Z)
    for idx, mask in zip(sc.indices.tolist(), codes.support_masks(sc.words).tolist()):
        if mask == target:
            return {"message": codes.message_from_index(code, idx), "zero_set": Z}
    return {"zero_set": Z}
