"""lambda-constacyclic ovoid codes of length q^2 + 1 over F_q.

Such a code exists exactly when lambda is a nonsquare of F_q.  For a
nonsquare, theta = Omega^((q+1)c) with c = b (mod q-1), gcd(c, q^2+1) = 1
and lambda = xi^b acts on the quadric Tr_{q^2/q}(z^(q^2+1)) = 0 with a single
orbit, and the columns v, theta v, ..., theta^(q^2) v generate the code.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .. import codes, pg3
from ..codes import LinearCode
from ..errors import VerificationError
from ..gf import FieldCtx, build_field, prime_power


@dataclass(frozen=True)
class Op28Witness:
    q: int
    lam: int
    b: int
    c: int
    theta: int
    v: int
    basis: tuple[int, int, int, int]
    code: LinearCode
    ovoid: pg3.Ovoid

    @property
    def generator(self):
        return self.code.generator


def tower(q: int) -> FieldCtx:
    p, m = prime_power(q)
    return build_field(p, 4 * m)


def xi(ctx: FieldCtx, q: int) -> int:
    """Omega^((q+1)(q^2+1)), a generator of F_q^*."""
    return ctx.omega_pow((q + 1) * (q * q + 1))


def op28_exists(q: int, lam: int, ctx: FieldCtx | None = None) -> bool:
    ctx = ctx or tower(q)
    if lam == 0 or not ctx.is_in_subfield(lam, q):
        raise ValueError(f"lambda must lie in F_{q}^*")
    return not ctx.is_square_in(lam, q)


def projective_order(ctx: FieldCtx, theta: int, q: int) -> int:
    """Order of theta F_q^* in the quotient group: least k with theta^k in F_q."""
    if theta == 0:
        raise ValueError("theta must be nonzero")
    o = ctx.element_order(theta)
    return o // gcd(o, q - 1)


def projective_order_scan(ctx: FieldCtx, theta: int, q: int) -> int:
    """Same quantity by direct search over k = 1, 2, ..."""
    y, k = theta, 1
    while not ctx.is_in_subfield(y, q):
        y = ctx.mul(y, theta)
        k += 1
    return k


def choose_c(b: int, q: int) -> int:
    """Smallest positive c = b (mod q-1) with gcd(c, q^2+1) = 1."""
    n = q * q + 1
    c = b if b > 0 else b + (q - 1)
    for _ in range(n + 1):
        if gcd(c, n) == 1:
            return c
        c += q - 1
    raise VerificationError(f"no admissible c within {n + 1} steps", witness={"b": b, "q": q})


def op28_construct(q: int, lam: int) -> Op28Witness:
    ctx = tower(q)
    if not op28_exists(q, lam, ctx):
        raise ValueError(f"{lam} is a square in F_{q}^*: no constacyclic ovoid code")
    n = q * q + 1
    b = ctx.dlog(lam, xi(ctx, q))
    c = choose_c(b, q)
    theta = ctx.omega_pow((q + 1) * c)
    checks = {
        "projective order": projective_order(ctx, theta, q) == n == n // gcd(n, c),
        "theta^(q^2+1) = lambda": ctx.pow(theta, n) == lam,
        "theta not in F_{q^2}": not ctx.is_in_subfield(theta, q * q),
        "c odd": c % 2 == 1,
    }
    if not all(checks.values()):
        raise VerificationError("theta fails its defining conditions", witness=checks)
    basis = pg3.power_basis(ctx, theta)
    pg3.check_basis(ctx, q, basis)
    coords = pg3.coordinate_map(ctx, q, basis)
    v = next(z for z in sorted(coords) if z and pg3.quadratic_form(ctx, q, z) == 0)
    cols, z = [], v
    for _ in range(n):
        cols.append(coords[z])
        z = ctx.mul(theta, z)
    G = [[col[r] for col in cols] for r in range(4)]
    points = [pg3.normalize(ctx, col) for col in cols]
    ovoid = pg3.Ovoid(tuple(sorted(points)), q)
    if len(set(points)) != n or not pg3.is_ovoid(ctx, points, q):
        raise VerificationError("columns do not form an ovoid", witness=points)
    code = LinearCode(ctx, q, G, multiplier=lam, name=f"G_theta,v(q={q},lambda={lam})")
    if not codes.is_constacyclic(code, lam):
        raise VerificationError("code is not lambda-constacyclic")
    return Op28Witness(q, lam, b, c, theta, v, basis, code, ovoid)


def op28_exhaustive_necessity(q: int) -> bool:
    """Every degree-4 theta of projective order q^2+1 has theta^(q^2+1) a nonsquare.

    Scans all of F_{q^4}^*; raises ``VerificationError`` on a counterexample.
    """
    ctx = tower(q)
    n = q * q + 1
    for theta in range(1, ctx.order):
        if ctx.is_in_subfield(theta, q * q):
            continue
        if projective_order(ctx, theta, q) != n:
            continue
        lam = ctx.pow(theta, n)
        if not ctx.is_in_subfield(lam, q) or ctx.is_square_in(lam, q):
            raise VerificationError("admissible theta with square norm", witness=theta)
    return True


def gcd_battery(q: int) -> dict[int, int]:
    """gcd(q^2+1, q^r - 1) for r in {1, 2, 3, 6}; all equal 2 for odd q."""
    return {r: gcd(q * q + 1, q**r - 1) for r in (1, 2, 3, 6)}
