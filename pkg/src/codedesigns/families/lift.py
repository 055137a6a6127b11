"""Ovoid codes lifted to F_{q^e}: C_e(O) = {a G_O : a in F_{q^e}^4}.

The weight of a G_O is q^2 + 1 minus the number of ovoid points on the flat
annihilated by the F_q-span of the basis components of ``a``; counting flats
by rank gives a weight enumerator that does not depend on the ovoid.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import lcm

import numpy as np

from .. import pg3
from ..codes import LinearCode
from ..gf import FieldCtx, build_field, prime_power


def full_rank_count(q: int, e: int, r: int) -> int:
    """M_r(e): ordered e-tuples spanning a fixed r-space, i.e. prod (q^e - q^j)."""
    if r > e:
        return 0
    out = 1
    for j in range(r):
        out *= q**e - q**j
    return out


def gaussian_binomial(n: int, r: int, q: int) -> int:
    num = den = 1
    for i in range(r):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


@dataclass(frozen=True)
class LiftEnum:
    q: int
    e: int
    coefficients: dict  # weight -> count, including the zero word

    def __getitem__(self, w):
        return self.coefficients.get(w, 0)

    def at_one(self) -> int:
        return sum(self.coefficients.values())

    def sanity_sum(self) -> int:
        """1 + sum_r [4 choose r]_q M_r(e), which must equal q^(4e)."""
        q, e = self.q, self.e
        return 1 + sum(gaussian_binomial(4, r, q) * full_rank_count(q, e, r) for r in range(1, 5))


def lift_formula(q: int, e: int) -> LiftEnum:
    if e < 1:
        raise ValueError("e must be positive")
    M = {r: full_rank_count(q, e, r) for r in range(1, 5)}
    n = q * q + 1
    secant = q * q * n // 2
    coeffs = {
        0: 1,
        q * q - q: (q**3 + q) * M[1],
        q * q - 1: secant * M[2],
        q * q: n * M[1] + n * (q + 1) * M[2] + n * M[3],
        q * q + 1: secant * M[2] + q * n * M[3] + M[4],
    }
    return LiftEnum(q, e, {w: c for w, c in coeffs.items() if c})


def e2_closed_form(q: int) -> dict[int, int]:
    """The e = 2 enumerator written out as polynomials in q."""
    side = q**3 * (q - 1) * (q**4 - 1) // 2
    return {
        0: 1,
        q * q - q: q**5 - q,
        q * q - 1: side,
        q * q: q**7 - q**5 + q**4 - q**3 + q - 1,
        q * q + 1: side,
    }


def lift_tower(q: int, e: int) -> FieldCtx:
    """A tower hosting both F_{q^4} and F_{q^e}."""
    p, m = prime_power(q)
    return build_field(p, lcm(4 * m, e * m))


def default_ovoid(ctx: FieldCtx, q: int) -> pg3.Ovoid:
    """Elliptic quadric w.r.t. the power basis of the first degree-4 element over F_q."""
    g = next(x for x in range(ctx.order) if ctx.is_in_subfield(x, q**4) and ctx.degree_over(x, q) == 4)
    return pg3.elliptic_quadric(ctx, q, pg3.power_basis(ctx, g))


def lift_code(ctx: FieldCtx, O: pg3.Ovoid, e: int) -> LinearCode:
    """The F_{q^e}-span of the ovoid generator (points as columns)."""
    G = np.array(O.points, dtype=np.int64).T
    return LinearCode(ctx, O.q**e, G, name=f"C_{e}(O), q={O.q}")


@lru_cache(maxsize=None)
def eps_basis(ctx: FieldCtx, q: int, e: int) -> tuple[int, ...]:
    """1, g, ..., g^(e-1) for the enumeration-first g of degree e over F_q."""
    g = next(x for x in range(ctx.order)
             if ctx.is_in_subfield(x, q**e) and ctx.degree_over(x, q) == e)
    return tuple(ctx.pow(g, i) for i in range(e))


@lru_cache(maxsize=None)
def _expansion(ctx: FieldCtx, q: int, e: int) -> dict[int, tuple[int, ...]]:
    return pg3.coordinate_map(ctx, q, eps_basis(ctx, q, e))


def rank_kernel(ctx: FieldCtx, a, O: pg3.Ovoid, e: int) -> tuple[int, int]:
    """(rho(a), |O on Lambda(a)|) from the basis expansion of the message ``a``."""
    q = O.q
    exp = _expansion(ctx, q, e)
    coords = [exp[x] for x in a]  # coords[j][i]: coefficient of eps_i in a_j
    u = [[coords[j][i] for j in range(4)] for i in range(e)]
    F = ctx.subfield(q)
    rho = F.rank(F.to_local(u))
    on_flat = sum(1 for P in O if all(pg3.dot(ctx, ui, P) == 0 for ui in u))
    return rho, on_flat


def rank_kernel_weight(ctx: FieldCtx, a, O: pg3.Ovoid, e: int) -> int:
    rho, on_flat = rank_kernel(ctx, a, O, e)
    return len(O) - on_flat


def flat_table(q: int) -> dict[int, set[int]]:
    """Possible |O on Lambda(a)| for each rank: plane, line, point, empty."""
    return {0: {q * q + 1}, 1: {1, q + 1}, 2: {0, 1, 2}, 3: {0, 1}, 4: {0}}


def all_messages(ctx: FieldCtx, q: int, e: int):
    F = ctx.subfield(q**e).elements
    return product(F, repeat=4)
