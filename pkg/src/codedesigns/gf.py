"""Exact arithmetic in one finite-field tower F_p < ... < F_{p^D}.

Every element of the top field is a plain ``int``: the polynomial
representative ``c_0 + c_1 X + ... + c_{D-1} X^{D-1}`` is stored as
``c_0 + c_1 p + ... + c_{D-1} p^{D-1}``.  Integer order is the canonical
enumeration order, so "enumeration-first" always means "smallest int".
Prime-field residues are encoded as themselves in every tower.

Subfields are never separate contexts: F_Q sits inside the top field as the
fixed set of ``x -> x^Q``.
"""

from __future__ import annotations

from functools import cached_property, lru_cache
from itertools import product
from math import gcd

import numpy as np

MAX_DEGREE = 16
TABLE_LIMIT = 1 << 17


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def factorize(n: int) -> dict[int, int]:
    """Trial-division factorization of a positive integer."""
    out: dict[int, int] = {}
    f = 2
    while f * f <= n:
        while n % f == 0:
            out[f] = out.get(f, 0) + 1
            n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def prime_power(n: int) -> tuple[int, int]:
    """Return ``(p, m)`` with ``n == p**m``; raise if ``n`` is not a prime power."""
    fac = factorize(n) if n > 1 else {}
    if len(fac) != 1:
        raise ValueError(f"{n} is not a prime power")
    ((p, m),) = fac.items()
    return p, m


# -- polynomials over F_p: coefficient lists, constant term first, [] is zero --

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _trim(out)


def _pmod(a, f, p):
    """Remainder of ``a`` modulo the monic polynomial ``f``."""
    a = list(a)
    df = len(f) - 1
    for i in range(len(a) - 1, df - 1, -1):
        c = a[i]
        if c:
            for j in range(df + 1):
                a[i - df + j] = (a[i - df + j] - c * f[j]) % p
    return _trim(a[:df])


def _psub(a, b, p):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return _trim([(x - y) % p for x, y in zip(a, b)])


def _pgcd(a, b, p):
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        inv = pow(b[-1], -1, p)
        b = [(c * inv) % p for c in b]
        a, b = b, _pmod(a, b, p)
    return a


def _ppowmod(a, e, f, p):
    result = [1]
    base = _pmod(a, f, p)
    while e:
        if e & 1:
            result = _pmod(_pmul(result, base, p), f, p)
        base = _pmod(_pmul(base, base, p), f, p)
        e >>= 1
    return result


def is_irreducible(f: list[int], p: int) -> bool:
    """Rabin's test for a monic polynomial ``f`` over F_p."""
    D = len(f) - 1
    if D < 1:
        return False
    x = [0, 1]

    def frob(j):
        return _ppowmod(x, p**j, f, p)

    if _psub(frob(D), _pmod(x, f, p), p):
        return False
    for r in factorize(D):
        g = _pgcd(f, _psub(frob(D // r), x, p), p)
        if len(g) > 1:
            return False
    return True


def smallest_irreducible(p: int, D: int) -> list[int]:
    """Lexicographically smallest monic irreducible of degree ``D``.

    Coefficient lists are compared constant term first.
    """
    for coeffs in product(range(p), repeat=D):
        f = list(coeffs) + [1]
        if is_irreducible(f, p):
            return f
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


class FieldCtx:
    """The top field F_{p^D} together with its fixed modulus and generator.

    Immutable after construction; all methods are pure.  Fields of order at
    most ``TABLE_LIMIT`` use exp/log/Zech tables, larger ones fall back to
    schoolbook polynomial arithmetic.  Both paths agree exactly.
    """

    def __init__(self, p: int, D: int, *, tables: bool | None = None):
        if p == 2 or not is_prime(p):
            raise ValueError(f"p must be an odd prime, got {p}")
        if not 1 <= D <= MAX_DEGREE:
            raise ValueError(f"degree D must lie in 1..{MAX_DEGREE}, got {D}")
        self.p = p
        self.D = D
        self.order = p**D
        self.modulus = tuple(smallest_irreducible(p, D))
        self._group_primes = sorted(factorize(self.order - 1))
        self._subfields: dict[int, Subfield] = {}
        if tables is None:
            tables = self.order <= TABLE_LIMIT
        self.has_tables = tables
        self.omega = self._find_generator()
        if tables:
            self._build_tables()
            self.add, self.mul, self.pow = self._add_t, self._mul_t, self._pow_t
        else:
            self.add, self.mul, self.pow = self._add_p, self._mul_p, self._pow_p

    def __repr__(self):
        return f"FieldCtx(p={self.p}, D={self.D})"

    # -- encoding --

    def coeffs(self, x: int) -> tuple[int, ...]:
        """Coefficient vector (constant term first) of ``x``."""
        out = []
        for _ in range(self.D):
            x, c = divmod(x, self.p)
            out.append(c)
        return tuple(out)

    def from_coeffs(self, coeffs) -> int:
        if len(coeffs) > self.D:
            raise ValueError("too many coefficients")
        return sum((c % self.p) * self.p**i for i, c in enumerate(coeffs))

    def elements(self) -> range:
        return range(self.order)

    # -- polynomial fallback --

    def _mul_p(self, x: int, y: int) -> int:
        prod = _pmul(_trim(list(self.coeffs(x))), _trim(list(self.coeffs(y))), self.p)
        return self.from_coeffs(_pmod(prod, self.modulus, self.p))

    def _add_p(self, x: int, y: int) -> int:
        return self.from_coeffs([a + b for a, b in zip(self.coeffs(x), self.coeffs(y))])

    def _pow_p(self, x: int, e: int) -> int:
        if e < 0:
            raise ValueError("negative exponent")
        if x == 0:
            return 1 if e == 0 else 0
        e %= self.order - 1
        result, base = 1, x
        while e:
            if e & 1:
                result = self._mul_p(result, base)
            base = self._mul_p(base, base)
            e >>= 1
        return result

    def _find_generator(self) -> int:
        n = self.order - 1
        for x in range(1, self.order):
            if all(self._pow_p(x, n // r) != 1 for r in self._group_primes):
                return x
        raise AssertionError("no primitive element")  # pragma: no cover

    # -- table path --

    def _build_tables(self):
        n = self.order - 1
        exp = [0] * (2 * n)
        log = [-1] * self.order
        x = 1
        for k in range(n):
            exp[k] = exp[k + n] = x
            log[x] = k
            x = self._mul_p(x, self.omega)
        assert x == 1 and min(log[1:]) >= 0, "omega is not primitive"
        p = self.p
        # zech[k] = log(1 + omega^k), -1 when 1 + omega^k == 0
        self._zech = [log[v - v % p + (v % p + 1) % p] for v in exp[:n]]
        self._exp, self._log = exp, log
        self.exp_table = np.array(exp, dtype=np.int64)
        self.log_table = np.array(log, dtype=np.int64)

    def _mul_t(self, x: int, y: int) -> int:
        if x == 0 or y == 0:
            return 0
        return self._exp[self._log[x] + self._log[y]]

    def _add_t(self, x: int, y: int) -> int:
        if x == 0:
            return y
        if y == 0:
            return x
        lx = self._log[x]
        z = self._zech[(self._log[y] - lx) % (self.order - 1)]
        return 0 if z < 0 else self._exp[lx + z]

    def _pow_t(self, x: int, e: int) -> int:
        if e < 0:
            raise ValueError("negative exponent")
        if x == 0:
            return 1 if e == 0 else 0
        return self._exp[(self._log[x] * e) % (self.order - 1)]

    # -- derived arithmetic --

    @cached_property
    def minus_one(self) -> int:
        return self.p - 1

    def neg(self, x: int) -> int:
        return self.mul(self.minus_one, x)

    def sub(self, x: int, y: int) -> int:
        return self.add(x, self.neg(y))

    def inv(self, x: int) -> int:
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.has_tables:
            return self._exp[(self.order - 1 - self._log[x]) % (self.order - 1)]
        return self.pow(x, self.order - 2)

    def div(self, x: int, y: int) -> int:
        return self.mul(x, self.inv(y))

    def sum(self, xs) -> int:
        acc = 0
        for x in xs:
            acc = self.add(acc, x)
        return acc

    def prod(self, xs) -> int:
        acc = 1
        for x in xs:
            acc = self.mul(acc, x)
        return acc

    def omega_pow(self, k: int) -> int:
        return self.pow(self.omega, k % (self.order - 1))

    # -- subfields --

    def subfield_degree(self, Q: int) -> int:
        """Return ``j`` with ``Q == p**j`` and ``j | D``; raise otherwise."""
        j, q = 0, 1
        while q < Q:
            q *= self.p
            j += 1
        if q != Q or j == 0 or self.D % j:
            raise ValueError(f"{Q} is not a subfield size of F_{self.p}^{self.D}")
        return j

    def frobenius(self, x: int, Q: int) -> int:
        self.subfield_degree(Q)
        return self.pow(x, Q)

    def is_in_subfield(self, x: int, Q: int) -> bool:
        return self.frobenius(x, Q) == x

    def subfield(self, Q: int) -> Subfield:
        sub = self._subfields.get(Q)
        if sub is None:
            sub = self._subfields[Q] = Subfield(self, Q)
        return sub

    def trace(self, x: int, fromQ: int, toQ: int) -> int:
        """Relative trace Tr_{fromQ/toQ}(x) = sum of x^(toQ^i)."""
        r = self._relative_degree(fromQ, toQ)
        if not self.is_in_subfield(x, fromQ):
            raise ValueError("argument not in the source subfield")
        acc, y = 0, x
        for _ in range(r):
            acc = self.add(acc, y)
            y = self.pow(y, toQ)
        return acc

    def norm(self, x: int, fromQ: int, toQ: int) -> int:
        """Relative norm N_{fromQ/toQ}(x) = product of x^(toQ^i)."""
        r = self._relative_degree(fromQ, toQ)
        if not self.is_in_subfield(x, fromQ):
            raise ValueError("argument not in the source subfield")
        acc, y = 1, x
        for _ in range(r):
            acc = self.mul(acc, y)
            y = self.pow(y, toQ)
        return acc

    def _relative_degree(self, fromQ: int, toQ: int) -> int:
        jf, jt = self.subfield_degree(fromQ), self.subfield_degree(toQ)
        if jf % jt:
            raise ValueError(f"F_{toQ} is not contained in F_{fromQ}")
        return jf // jt

    # -- multiplicative structure --

    def element_order(self, x: int) -> int:
        if x == 0:
            raise ValueError("zero has no multiplicative order")
        n = self.order - 1
        if self.has_tables:
            return n // gcd(n, self._log[x])
        k = n
        for r in self._group_primes:
            while k % r == 0 and self.pow(x, k // r) == 1:
                k //= r
        return k

    def is_square_in(self, x: int, Q: int) -> bool:
        """Whether ``x`` lies in (F_Q^*)^2."""
        if not self.is_in_subfield(x, Q):
            raise ValueError(f"argument not in F_{Q}")
        if x == 0:
            return False
        return self.pow(x, (Q - 1) // 2) == 1

    def dlog(self, x: int, base: int) -> int:
        """Smallest k >= 0 with base^k == x, by linear scan."""
        if x == 0 or base == 0:
            raise ValueError("dlog of or to zero")
        y = 1
        for k in range(self.element_order(base)):
            if y == x:
                return k
            y = self.mul(y, base)
        raise ValueError("element is not a power of the base")

    def unit_circle(self, n: int) -> list[int]:
        """The order-``n`` subgroup {u : u^n = 1}, sorted."""
        if (self.order - 1) % n:
            raise ValueError(f"{n} does not divide {self.order - 1}")
        g = self.omega_pow((self.order - 1) // n)
        out, y = [], 1
        for _ in range(n):
            out.append(y)
            y = self.mul(y, g)
        return sorted(out)

    def degree_over(self, x: int, Q: int) -> int:
        """Degree of ``x`` over F_Q: the least r with x in F_{Q^r}."""
        j = self.subfield_degree(Q)
        for r in range(1, self.D // j + 1):
            if (self.D // j) % r == 0 and self.is_in_subfield(x, Q**r):
                return r
        raise AssertionError("unreachable")  # pragma: no cover


@lru_cache(maxsize=None)
def build_field(p: int, D: int) -> FieldCtx:
    """Deterministic (and cached) tower of degree ``D`` over F_p."""
    return FieldCtx(p, D)


class Subfield:
    """F_Q inside a tower, with local indices 0..Q-1 and numpy op tables.

    Local index ``i`` is the ``i``-th subfield element in canonical order, so
    local 0 is zero and local 1 is one.  Codes over F_Q are enumerated in this
    local encoding.
    """

    def __init__(self, ctx: FieldCtx, Q: int):
        ctx.subfield_degree(Q)
        self.ctx = ctx
        self.Q = Q
        g = ctx.omega_pow((ctx.order - 1) // (Q - 1))
        elems, y = {0}, 1
        for _ in range(Q - 1):
            elems.add(y)
            y = ctx.mul(y, g)
        self.elements = tuple(sorted(elems))
        self.index = {x: i for i, x in enumerate(self.elements)}
        self.dtype = np.uint8 if Q <= 256 else np.int32
        E = self.elements
        mul = np.zeros((Q, Q), dtype=self.dtype)
        add = np.zeros((Q, Q), dtype=self.dtype)
        for i, x in enumerate(E):
            for j in range(i, Q):
                y = E[j]
                mul[i, j] = mul[j, i] = self.index[ctx.mul(x, y)]
                add[i, j] = add[j, i] = self.index[ctx.add(x, y)]
        self.mul_table = mul
        self.add_table = add
        self.neg_table = np.array([self.index[ctx.neg(x)] for x in E], dtype=self.dtype)
        self.inv_table = np.array([0] + [self.index[ctx.inv(x)] for x in E[1:]], dtype=self.dtype)
        self.sub_table = add[:, self.neg_table]

    def __contains__(self, x: int) -> bool:
        return x in self.index

    def to_local(self, values) -> np.ndarray:
        idx = self.index
        arr = np.asarray(values, dtype=np.int64)
        try:
            flat = [idx[int(v)] for v in arr.ravel()]
        except KeyError as exc:
            raise ValueError(f"element {exc.args[0]} is not in F_{self.Q}") from None
        return np.array(flat, dtype=self.dtype).reshape(arr.shape)

    def to_top(self, local) -> np.ndarray:
        return np.asarray(self.elements, dtype=np.int64)[np.asarray(local, dtype=np.int64)]

    def rank(self, rows) -> int:
        """Rank over F_Q of a matrix given in local indices."""
        return len(self.row_reduce(rows)[1])

    def row_reduce(self, rows) -> tuple[np.ndarray, list[int]]:
        """Reduced row echelon form and pivot columns (local indices)."""
        M = np.array(rows, dtype=np.int64, copy=True)
        if M.ndim != 2 or M.size == 0:
            return M, []
        add, mul, neg, inv = self.add_table, self.mul_table, self.neg_table, self.inv_table
        nrows, ncols = M.shape
        pivots: list[int] = []
        r = 0
        for c in range(ncols):
            if r == nrows:
                break
            nz = np.nonzero(M[r:, c])[0]
            if not len(nz):
                continue
            piv = r + nz[0]
            if piv != r:
                M[[r, piv]] = M[[piv, r]]
            M[r] = mul[inv[M[r, c]], M[r]]
            for i in range(nrows):
                if i != r and M[i, c]:
                    M[i] = add[M[i], mul[neg[M[i, c]], M[r]]]
            pivots.append(c)
            r += 1
        return M, pivots

    def kernel(self, rows) -> np.ndarray:
        """Basis (as rows) of the right kernel {x : M x = 0} over F_Q."""
        M, pivots = self.row_reduce(rows)
        ncols = np.asarray(rows).shape[1]
        free = [c for c in range(ncols) if c not in pivots]
        basis = []
        for f in free:
            v = np.zeros(ncols, dtype=np.int64)
            v[f] = 1
            for i, pc in enumerate(pivots):
                v[pc] = self.neg_table[M[i, f]]
            basis.append(v)
        return np.array(basis, dtype=np.int64).reshape(len(basis), ncols)

    def span(self, basis) -> np.ndarray:
        """All F_Q-combinations of the rows of ``basis`` in lex message order."""
        basis = np.asarray(basis, dtype=np.int64)
        n = basis.shape[1]
        words = np.zeros((1, n), dtype=np.int64)
        scalars = np.arange(self.Q)
        for row in basis:
            multiples = self.mul_table[scalars[:, None], row[None, :]]
            words = self.add_table[words[:, None, :], multiples[None, :, :]].reshape(-1, n)
        return words.astype(np.int64)


def moore_determinant(ctx: FieldCtx, xs, Q: int) -> int:
    """det(x_j^(Q^i)); nonzero iff ``xs`` are linearly independent over F_Q."""
    k = len(xs)
    M = []
    row = list(xs)
    for _ in range(k):
        M.append(row)
        row = [ctx.pow(x, Q) for x in row]
    return determinant(ctx, M)


def determinant(ctx: FieldCtx, M) -> int:
    M = [list(r) for r in M]
    n = len(M)
    det = 1
    for c in range(n):
        piv = next((r for r in range(c, n) if M[r][c]), None)
        if piv is None:
            return 0
        if piv != c:
            M[c], M[piv] = M[piv], M[c]
            det = ctx.neg(det)
        det = ctx.mul(det, M[c][c])
        inv = ctx.inv(M[c][c])
        for r in range(c + 1, n):
            if M[r][c]:
                f = ctx.mul(M[r][c], inv)
                M[r] = [ctx.sub(a, ctx.mul(f, b)) for a, b in zip(M[r], M[c])]
    return det
