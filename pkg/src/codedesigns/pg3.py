"""Incidence geometry of PG(3, q): ovoids, elliptic quadrics and plane sections.

Points and planes are 4-tuples over F_q (top-field ints), normalized so the
first nonzero entry is 1.  A plane (r0, r1, r2, r3) contains a point x when
r0 x0 + r1 x1 + r2 x2 + r3 x3 == 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .errors import VerificationError
from .gf import FieldCtx, moore_determinant
from .projline import INF

Point = tuple[int, int, int, int]


@dataclass(frozen=True)
class Ovoid:
    points: tuple[Point, ...]
    q: int

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)


@dataclass(frozen=True)
class Inventory:
    secant_planes: int
    tangent_planes: int
    secant_lines: int
    tangent_lines: int
    external_lines: int
    points_off: int


def normalize(ctx: FieldCtx, v) -> Point:
    lead = next((x for x in v if x), None)
    if lead is None:
        raise ValueError("zero vector has no projective point")
    inv = ctx.inv(lead)
    return tuple(ctx.mul(inv, x) for x in v)


def points(ctx: FieldCtx, q: int) -> list[Point]:
    """All points of PG(3, q) in canonical (sorted) order."""
    F = ctx.subfield(q).elements
    out = []
    for lead in range(4):
        for tail in product(F, repeat=3 - lead):
            out.append((0,) * lead + (1,) + tail)
    return sorted(out)


planes = points


def dot(ctx: FieldCtx, r, x) -> int:
    add, mul = ctx.add, ctx.mul
    return add(add(mul(r[0], x[0]), mul(r[1], x[1])), add(mul(r[2], x[2]), mul(r[3], x[3])))


def lines(ctx: FieldCtx, q: int, pts=None) -> list[tuple[Point, ...]]:
    """All lines, each as the sorted tuple of its q + 1 points."""
    pts = points(ctx, q) if pts is None else pts
    F = ctx.subfield(q).elements[1:]
    seen: set[tuple[Point, Point]] = set()
    out = []
    for i, P in enumerate(pts):
        for R in pts[i + 1:]:
            if (P, R) in seen:
                continue
            line = sorted({R, *(normalize(ctx, [ctx.add(a, ctx.mul(t, b)) for a, b in zip(P, R)]) for t in F), P})
            for j, X in enumerate(line):
                for Y in line[j + 1:]:
                    seen.add((X, Y))
            out.append(tuple(line))
    return sorted(out)


def is_ovoid(ctx: FieldCtx, S, q: int) -> bool:
    """|S| == q^2 + 1 and no three points of S are collinear."""
    S = set(S)
    if len(S) != q * q + 1:
        return False
    F = ctx.subfield(q).elements[1:]
    pts = sorted(S)
    for i, P in enumerate(pts):
        for R in pts[i + 1:]:
            for t in F:
                X = normalize(ctx, [ctx.add(a, ctx.mul(t, b)) for a, b in zip(P, R)])
                if X != P and X in S:
                    return False
    return True


# -- the quadric Tr_{q^2/q}(z^(q^2+1)) on F_{q^4} --

def quadratic_form(ctx: FieldCtx, q: int, z: int) -> int:
    return ctx.trace(ctx.pow(z, q * q + 1), q * q, q)


def polar_form(ctx: FieldCtx, q: int, z: int, w: int) -> int:
    Qf = quadratic_form
    return ctx.sub(ctx.sub(Qf(ctx, q, ctx.add(z, w)), Qf(ctx, q, z)), Qf(ctx, q, w))


def combine(ctx: FieldCtx, basis, coords) -> int:
    return ctx.sum(ctx.mul(c, b) for c, b in zip(coords, basis))


def coordinate_map(ctx: FieldCtx, q: int, basis) -> dict[int, Point]:
    """Map each element of span_{F_q}(basis) to its coordinate vector."""
    F = ctx.subfield(q).elements
    return {combine(ctx, basis, c): c for c in product(F, repeat=len(basis))}


def check_basis(ctx: FieldCtx, q: int, basis) -> None:
    if len(basis) != 4 or moore_determinant(ctx, basis, q) == 0:
        raise ValueError("not an F_q-basis of F_{q^4}")


def power_basis(ctx: FieldCtx, theta: int) -> tuple[int, int, int, int]:
    return tuple(ctx.pow(theta, i) for i in range(4))


def elliptic_quadric(ctx: FieldCtx, q: int, basis) -> Ovoid:
    """Projective zeros of Tr_{q^2/q}(z^(q^2+1)), in coordinates w.r.t. ``basis``."""
    check_basis(ctx, q, basis)
    pts = tuple(x for x in points(ctx, q) if quadratic_form(ctx, q, combine(ctx, basis, x)) == 0)
    if not is_ovoid(ctx, pts, q):
        raise VerificationError("quadric zero set is not an ovoid", witness=pts)
    return Ovoid(pts, q)


def plane_section(ctx: FieldCtx, plane, O) -> tuple[Point, ...]:
    return tuple(x for x in O if dot(ctx, plane, x) == 0)


def classify_plane(ctx: FieldCtx, plane, O: Ovoid) -> str:
    size = len(plane_section(ctx, plane, O))
    if size == 1:
        return "tangent"
    if size == O.q + 1:
        return "secant"
    raise VerificationError(f"plane meets the point set in {size} points", witness=plane)


def non_tangent_sections(ctx: FieldCtx, O: Ovoid) -> dict[Point, tuple[Point, ...]]:
    out = {}
    for plane in planes(ctx, O.q):
        if classify_plane(ctx, plane, O) == "secant":
            out[plane] = plane_section(ctx, plane, O)
    return out


def inventory(ctx: FieldCtx, O: Ovoid) -> Inventory:
    """Exhaustive incidence counts of planes, lines and points against ``O``."""
    q = O.q
    S = set(O)
    plane_sizes = [len(plane_section(ctx, P, O)) for P in planes(ctx, q)]
    pts = points(ctx, q)
    line_sizes = [sum(x in S for x in line) for line in lines(ctx, q, pts)]
    if set(plane_sizes) - {1, q + 1} or set(line_sizes) - {0, 1, 2}:
        raise VerificationError("incidence sizes inconsistent with an ovoid")
    return Inventory(
        secant_planes=plane_sizes.count(q + 1),
        tangent_planes=plane_sizes.count(1),
        secant_lines=line_sizes.count(2),
        tangent_lines=line_sizes.count(1),
        external_lines=line_sizes.count(0),
        points_off=len(pts) - len(S),
    )


def inventory_formulas(q: int) -> Inventory:
    n = q * q + 1
    secant = q * q * n // 2
    return Inventory(
        secant_planes=q**3 + q,
        tangent_planes=n,
        secant_lines=secant,
        tangent_lines=n * (q + 1),
        external_lines=n * (q * q + q + 1) - secant - n * (q + 1),
        points_off=q**3 + q,
    )


# -- PG(1, q^2) as the quadric X0 X3 = X1^2 - mu X2^2 --

def iota(ctx: FieldCtx, q: int, t: int, zeta: int) -> Point:
    """t = x + y zeta  ->  <(1, x, y, t^(q+1))>,  infinity -> <(0, 0, 0, 1)>."""
    if t == INF:
        return (0, 0, 0, 1)
    tq = ctx.pow(t, q)
    half = ctx.inv(2 % ctx.p)
    x = ctx.mul(half, ctx.add(t, tq))
    y = ctx.div(ctx.mul(half, ctx.sub(t, tq)), zeta)
    return (1, x, y, ctx.pow(t, q + 1))


def iota_inverse(ctx: FieldCtx, P: Point, zeta: int) -> int:
    if P == (0, 0, 0, 1):
        return INF
    if P[0] != 1:
        raise ValueError("point is not on the quadric chart")
    return ctx.add(P[1], ctx.mul(P[2], zeta))


def check_zeta(ctx: FieldCtx, q: int, zeta: int) -> int:
    """Validate zeta^q == -zeta, zeta != 0 and return mu = zeta^2 (a nonsquare of F_q)."""
    if zeta == 0 or ctx.pow(zeta, q) != ctx.neg(zeta):
        raise ValueError("zeta must be a nonzero trace-zero element of F_{q^2}")
    mu = ctx.mul(zeta, zeta)
    assert ctx.is_in_subfield(mu, q) and not ctx.is_square_in(mu, q)
    return mu


def iota_quadric(ctx: FieldCtx, q: int, zeta: int) -> Ovoid:
    """The image of PG(1, q^2) under iota."""
    check_zeta(ctx, q, zeta)
    line = [INF, *ctx.subfield(q * q).elements]
    return Ovoid(tuple(sorted(iota(ctx, q, t, zeta) for t in line)), q)


def on_elliptic_equation(ctx: FieldCtx, P: Point, mu: int) -> bool:
    x0, x1, x2, x3 = P
    lhs = ctx.mul(x0, x3)
    rhs = ctx.sub(ctx.mul(x1, x1), ctx.mul(mu, ctx.mul(x2, x2)))
    return lhs == rhs


def plane_pullback(ctx: FieldCtx, q: int, plane, zeta: int) -> tuple[int, int, int]:
    """(A, B, D) with iota(t) on the plane iff A t^(q+1) + B t + B^q t^q + D == 0."""
    mu = check_zeta(ctx, q, zeta)
    r0, r1, r2, r3 = plane
    half = ctx.inv(2 % ctx.p)
    B = ctx.add(ctx.mul(half, r1), ctx.mul(ctx.div(ctx.mul(half, r2), mu), zeta))
    return r3, B, r0


def pullback_zero_set(ctx: FieldCtx, q: int, A: int, B: int, D: int) -> tuple[int, ...]:
    """Zeros in PG(1, q^2) of A t^(q+1) + B t + B^q t^q + D (infinity iff A == 0)."""
    Bq = ctx.pow(B, q)
    out = [INF] if A == 0 else []
    add, mul, pw = ctx.add, ctx.mul, ctx.pow
    for t in ctx.subfield(q * q).elements:
        val = add(add(mul(A, pw(t, q + 1)), mul(B, t)), add(mul(Bq, pw(t, q)), D))
        if val == 0:
            out.append(t)
    return tuple(out)
