"""The projective line PG(1, K) over a subfield K of a tower.

A point is an ``int``: a finite coordinate is the field element itself and
the point at infinity is ``INF == -1``.  Sorting therefore puts infinity
first and finite points in canonical element order, so a canonical point set
is just a sorted tuple.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import NamedTuple

from .errors import VerificationError
from .gf import FieldCtx

INF = -1


class Mobius(NamedTuple):
    """x -> (a x + b) / (c x + d)."""

    a: int
    b: int
    c: int
    d: int


IDENTITY = Mobius(1, 0, 0, 1)


@dataclass(frozen=True)
class Subline:
    points: tuple[int, ...]
    q0: int

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __contains__(self, x):
        return x in self.points


def projective_line(ctx: FieldCtx, Q: int) -> list[int]:
    """All points of PG(1, F_Q) in canonical order."""
    return [INF, *ctx.subfield(Q).elements]


def canonical(points) -> tuple[int, ...]:
    return tuple(sorted(set(points)))


def mobius_det(ctx: FieldCtx, L: Mobius) -> int:
    return ctx.sub(ctx.mul(L.a, L.d), ctx.mul(L.b, L.c))


def mobius_apply(ctx: FieldCtx, L: Mobius, x: int) -> int:
    a, b, c, d = L
    if x == INF:
        return INF if c == 0 else ctx.div(a, c)
    den = ctx.add(ctx.mul(c, x), d)
    if den == 0:
        return INF
    return ctx.div(ctx.add(ctx.mul(a, x), b), den)


def mobius_compose(ctx: FieldCtx, L2: Mobius, L1: Mobius) -> Mobius:
    """The map x -> L2(L1(x)), as a matrix product."""
    m, s = ctx.mul, ctx.add
    return Mobius(
        s(m(L2.a, L1.a), m(L2.b, L1.c)),
        s(m(L2.a, L1.b), m(L2.b, L1.d)),
        s(m(L2.c, L1.a), m(L2.d, L1.c)),
        s(m(L2.c, L1.b), m(L2.d, L1.d)),
    )


def mobius_inverse(ctx: FieldCtx, L: Mobius) -> Mobius:
    return Mobius(L.d, ctx.neg(L.b), ctx.neg(L.c), L.a)


def mobius_normalize(ctx: FieldCtx, L: Mobius) -> Mobius:
    """Scale so the first nonzero entry is 1 (canonical PGL representative)."""
    lead = next(v for v in L if v)
    inv = ctx.inv(lead)
    return Mobius(*(ctx.mul(inv, v) for v in L))


def mobius_sending(ctx: FieldCtx, p1: int, p2: int, p3: int) -> Mobius:
    """The unique projectivity with p1 -> inf, p2 -> 0, p3 -> 1."""
    if len({p1, p2, p3}) != 3:
        raise ValueError("points must be distinct")
    sub, neg = ctx.sub, ctx.neg
    if p1 == INF:
        L = Mobius(1, neg(p2), 0, sub(p3, p2))
    elif p2 == INF:
        L = Mobius(0, sub(p3, p1), 1, neg(p1))
    elif p3 == INF:
        L = Mobius(1, neg(p2), 1, neg(p1))
    else:
        # (x - p2)(p3 - p1) / ((x - p1)(p3 - p2))
        u, v = sub(p3, p1), sub(p3, p2)
        L = Mobius(u, neg(ctx.mul(p2, u)), v, neg(ctx.mul(p1, v)))
    return mobius_normalize(ctx, L)


# -- Cayley coordinates --

def find_eps(ctx: FieldCtx, Q: int) -> int:
    """Enumeration-first nonzero eps with eps^Q == -eps."""
    if Q % 2 == 0:
        raise ValueError("Q must be odd")
    ctx.subfield_degree(Q)
    for x in range(1, ctx.order):
        if ctx.pow(x, Q) == ctx.neg(x):
            return x
    raise ValueError(f"F_{Q}^2 is not contained in the tower")


def trace_zero_roots(ctx: FieldCtx, Q: int) -> list[int]:
    """All nonzero eps with eps^Q == -eps (the admissible Cayley parameters)."""
    return [x for x in range(1, ctx.order) if ctx.pow(x, Q) == ctx.neg(x)]


def cayley(ctx: FieldCtx, eps: int, x: int) -> int:
    """(x + eps) / (x - eps), with infinity -> 1."""
    if x == INF:
        return 1
    return ctx.div(ctx.add(x, eps), ctx.sub(x, eps))


def cayley_inv(ctx: FieldCtx, eps: int, u: int) -> int:
    """eps (u + 1) / (u - 1), with 1 -> infinity."""
    if u == 1:
        return INF
    return ctx.mul(eps, ctx.div(ctx.add(u, 1), ctx.sub(u, 1)))


# -- sublines --

def subline_through(ctx: FieldCtx, p1: int, p2: int, p3: int, q0: int) -> Subline:
    """The F_{q0}-subline through three distinct points."""
    L = mobius_sending(ctx, p1, p2, p3)
    Linv = mobius_inverse(ctx, L)
    pts = canonical(mobius_apply(ctx, Linv, x) for x in projective_line(ctx, q0))
    return Subline(pts, q0)


def enumerate_sublines(ctx: FieldCtx, q: int, q0: int) -> set[Subline]:
    """All F_{q0}-sublines of PG(1, F_q)."""
    jq, j0 = ctx.subfield_degree(q), ctx.subfield_degree(q0)
    if jq % j0 or q0 >= q:
        raise ValueError(f"F_{q0} must be a proper subfield of F_{q}")
    line = projective_line(ctx, q)
    covered: set[tuple[int, int, int]] = set()
    out: set[Subline] = set()
    for triple in combinations(line, 3):
        if triple in covered:
            continue
        S = subline_through(ctx, *triple, q0)
        out.add(S)
        covered.update(combinations(S.points, 3))
    return out


def subline_count(q: int, q0: int) -> int:
    num, den = q * (q * q - 1), q0 * (q0 * q0 - 1)
    assert num % den == 0
    return num // den


def is_subline(ctx: FieldCtx, S, q0: int) -> tuple[bool, Mobius]:
    """Normalize the three smallest points of ``S`` to (inf, 0, 1) and compare.

    Returns the verdict and the normalizing map, which sends ``S`` onto
    PG(1, F_{q0}) exactly when the verdict is true.
    """
    pts = canonical(S)
    if len(pts) < 3:
        raise ValueError("need at least three points")
    L = mobius_sending(ctx, *pts[:3])
    image = canonical(mobius_apply(ctx, L, x) for x in pts)
    return image == canonical(projective_line(ctx, q0)), L


# -- semilinear forms --

def solve_semilinear(ctx: FieldCtx, A: int, B: int, C: int, D: int, s: int, Q: int) -> tuple[int, ...]:
    """Zeros in PG(1, F_Q) of A X^(sigma+1) + B X^sigma + C X + D, sigma = x^(p^s).

    Infinity is a zero of the homogeneous form exactly when A == 0.
    """
    if not (A or B or C or D):
        raise ValueError("the zero form vanishes everywhere")
    e = ctx.p**s
    roots = [INF] if A == 0 else []
    add, mul = ctx.add, ctx.mul
    for x in ctx.subfield(Q).elements:
        xs = ctx.pow(x, e)
        val = add(add(mul(A, mul(xs, x)), mul(B, xs)), add(mul(C, x), D))
        if val == 0:
            roots.append(x)
    return canonical(roots)


def subline_form(ctx: FieldCtx, L: Mobius, s: int) -> tuple[int, int, int, int]:
    """Coefficients (A, B, C, D) of a semilinear form whose zeros are L^-1(PG(1, fixed field)).

    Expands (a^s X^s + b^s)(c X + d) - (a X + b)(c^s X^s + d^s).
    """
    e = ctx.p**s
    a, b, c, d = L
    as_, bs, cs, ds = (ctx.pow(v, e) for v in L)
    m, sub = ctx.mul, ctx.sub
    return (
        sub(m(as_, c), m(a, cs)),
        sub(m(as_, d), m(b, cs)),
        sub(m(bs, c), m(a, ds)),
        sub(m(bs, d), m(b, ds)),
    )


# -- unit-circle zero sets --

@dataclass(frozen=True)
class UnitZeroSet:
    kind: str  # "empty", "small", "full" or "baer"
    roots: tuple[int, ...]
    subline: Subline | None = None


def classify_unit_zero_set(ctx: FieldCtx, q: int, a: int, b: int, c: int, d: int,
                           omega: int | None = None) -> UnitZeroSet:
    """Classify the zeros of a Y + b Y^q + c Y^(q+1) + d on the circle U_(q^2+1).

    Root sets with more than two points that are not the whole circle are
    pulled back through the Cayley map with parameter ``omega`` (default: the
    enumeration-first root of omega^(q^2) = -omega) and must form a Baer
    subline of PG(1, q^2); anything else raises ``VerificationError``.
    """
    if not (a or b or c or d):
        raise ValueError("zero coefficient vector")
    U = ctx.unit_circle(q * q + 1)
    add, mul, pw = ctx.add, ctx.mul, ctx.pow
    roots = tuple(
        y for y in U
        if add(add(mul(a, y), mul(b, pw(y, q))), add(mul(c, pw(y, q + 1)), d)) == 0
    )
    if not roots:
        return UnitZeroSet("empty", roots)
    if len(roots) <= 2:
        return UnitZeroSet("small", roots)
    if len(roots) == len(U):
        return UnitZeroSet("full", roots)
    if omega is None:
        omega = find_eps(ctx, q * q)
    pulled = canonical(cayley_inv(ctx, omega, y) for y in roots)
    ok, _ = is_subline(ctx, pulled, q) if len(pulled) == q + 1 else (False, None)
    if not ok:
        raise VerificationError("unit-circle zero set is not a Baer subline",
                                witness={"coefficients": (a, b, c, d), "roots": roots})
    return UnitZeroSet("baer", roots, Subline(pulled, q))
