"""Hermite-Smith generating functions: enumeration tables and closed forms."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from math import prod

import numpy as np

from ..algebra import MultiPoly, RationalFunction, UniPoly, lagrange_interpolate, var
from ..hecke.action import _pmap
from ..lattice.plattice import compositions, containing_arrays, hnf_block, smith_exponents_batch


def X(i: int) -> str:
    return f"X_{i}"


def Y(i: int) -> str:
    return f"Y_{i}"


def hs_vars(n: int) -> list[str]:
    return [X(i) for i in range(1, n + 1)] + [Y(i) for i in range(1, n + 1)]


def mu_from_nu(nu) -> tuple:
    """mu_i = nu_{n+1-i} - nu_{n-i} with nu_0 = 0."""
    n = len(nu)
    full = (0,) + tuple(int(v) for v in nu)
    return tuple(full[n + 1 - i] - full[n - i] for i in range(1, n + 1))


@dataclass
class MultiDegreeTable:
    """Coefficients of HS_{n,p}: (mu, delta) -> number of lattices.

    ``bound`` says how the table was truncated: "delta" keeps sum(delta) <= N,
    "nu" keeps nu_n <= N (all lattices containing p^N Z^n).  ``p`` is an int,
    or the string "p" when counts are polynomials in p.
    """

    n: int
    p: object
    N: int
    entries: dict = field(default_factory=dict)
    bound: str = "delta"
    primitive: bool = False

    def __len__(self):
        return len(self.entries)

    @property
    def symbolic(self) -> bool:
        return isinstance(self.p, str)

    def total(self):
        return sum(self.entries.values(), UniPoly([], "p") if self.symbolic else 0)

    def weighted_totals(self) -> tuple:
        """(sum count * sum_i i*mu_i, sum count * |delta|); both are sum |nu|."""
        n = self.n
        a = b = 0
        for (mu, delta), c in self.entries.items():
            a += c * sum(i * m for i, m in zip(range(1, n + 1), mu))
            b += c * sum(delta)
        return a, b

    def in_range(self, mu, delta) -> bool:
        if self.bound == "delta":
            return sum(delta) <= self.N
        return sum(mu) <= self.N

    def to_poly(self) -> MultiPoly:
        vs = tuple(hs_vars(self.n))
        terms = {}
        for (mu, delta), c in self.entries.items():
            key = tuple(mu) + tuple(delta)
            if self.symbolic:
                raise TypeError("symbolic tables convert via to_poly_symbolic()")
            terms[key] = c
        return MultiPoly(terms, vs)

    def to_poly_symbolic(self) -> MultiPoly:
        vs = tuple(hs_vars(self.n))
        out = MultiPoly.const(0)
        p = var("p")
        for (mu, delta), c in self.entries.items():
            coeff = c.to_multipoly(p) if isinstance(c, UniPoly) else MultiPoly.const(c)
            out = out + coeff * MultiPoly({tuple(mu) + tuple(delta): 1}, vs)
        return out

    def to_json(self) -> dict:
        return {
            "n": self.n, "p": str(self.p), "N": self.N, "bound": self.bound,
            "primitive": self.primitive,
            "entries": [
                {"mu": list(mu), "delta": list(d), "count": str(c)}
                for (mu, d), c in sorted(self.entries.items())
            ],
        }


def _block_counts(n, p, delta, contain, backend):
    mats = hnf_block(n, p, delta, contain, backend)
    if len(mats) == 0:
        return Counter()
    nus = smith_exponents_batch(mats, p, sum(delta) + 1, backend)
    rows, counts = np.unique(nus, axis=0, return_counts=True)
    return Counter({mu_from_nu(r): int(c) for r, c in zip(rows, counts)})


def hs_enumerate(n: int, p: int, N: int, bound: str = "delta", jobs=None,
                 backend=None) -> MultiDegreeTable:
    """Exact coefficients of HS_{n,p} from lattice enumeration.

    Work is split by Hermite diagonal delta and the per-delta counts are merged
    in a fixed order, so results do not depend on ``jobs``.
    """
    if N < 0:
        raise ValueError("N must be >= 0")
    if bound == "delta":
        keys = [d for e in range(N + 1) for d in compositions(e, n)]
        contain = -1
    elif bound == "nu":
        keys = [d for _, d in sorted((sum(d), d) for d in np.ndindex(*([N + 1] * n)))]
        contain = N
    else:
        raise ValueError("bound must be 'delta' or 'nu'")
    keys = [tuple(int(x) for x in d) for d in keys]
    blocks = _pmap(lambda d: (d, _block_counts(n, p, d, contain, backend)), keys, jobs)
    entries = {}
    for delta, cnt in blocks:
        for mu in sorted(cnt):
            entries[(mu, delta)] = cnt[mu]
    return MultiDegreeTable(n, p, N, entries, bound)


def _count_bound_degree(n: int, N: int, bound: str) -> int:
    # count per signature is at most prod_j p^{(j-1) delta_j}
    if bound == "delta":
        return (n - 1) * N
    return sum((j - 1) * N for j in range(1, n + 1))


def _primes():
    q = 2
    while True:
        if all(q % r for r in range(2, int(q ** 0.5) + 1)):
            yield q
        q += 1


def hs_enumerate_symbolic(n: int, N: int, bound: str = "delta", jobs=None,
                          backend=None) -> MultiDegreeTable:
    """HS_{n,p} with counts as polynomials in p.

    Counts per (mu, delta) are interpolated from numeric runs at the first
    D + 1 primes (D bounds the degree) and confirmed at one further prime.
    """
    D = _count_bound_degree(n, N, bound)
    gen = _primes()
    primes = [next(gen) for _ in range(D + 2)]
    tables = [hs_enumerate(n, q, N, bound, jobs, backend) for q in primes]
    keys = set()
    for t in tables:
        keys |= set(t.entries)
    entries = {}
    for key in sorted(keys):
        pts = [(q, t.entries.get(key, 0)) for q, t in zip(primes, tables)]
        poly = lagrange_interpolate(pts[:-1], "p")
        if poly(pts[-1][0]) != pts[-1][1]:
            raise ArithmeticError(f"count for {key} is not a polynomial of degree <= {D} in p")
        entries[key] = poly
    return MultiDegreeTable(n, "p", N, entries, bound)


def hs_primitive(obj):
    """Multiply by (1 - X_n Y_1...Y_n).

    On a table this is the convolution c'(mu, delta) = c(mu, delta)
    - c(mu - e_n, delta - 1); the result counts homothety-minimal lattices.
    """
    if isinstance(obj, MultiDegreeTable):
        n = obj.n
        out = {}
        for (mu, delta), c in obj.entries.items():
            if mu[-1] and min(delta) >= 1:
                prev = (mu[:-1] + (mu[-1] - 1,), tuple(d - 1 for d in delta))
                c = c - obj.entries.get(prev, 0)
            if c != 0 and not (isinstance(c, UniPoly) and c == UniPoly([], "p")):
                out[(mu, delta)] = c
        return MultiDegreeTable(n, obj.p, obj.N, out, obj.bound, True)
    n = _hs_n(obj)
    factor = 1 - var(X(n)) * prod((var(Y(i)) for i in range(1, n + 1)), start=MultiPoly.const(1))
    if isinstance(obj, RationalFunction):
        return RationalFunction(obj.num * factor, obj.den)
    return obj * factor


def hs_unprimitive(obj):
    """Inverse of hs_primitive on closed forms."""
    n = _hs_n(obj)
    factor = 1 - var(X(n)) * prod((var(Y(i)) for i in range(1, n + 1)), start=MultiPoly.const(1))
    obj = RationalFunction.coerce(obj)
    return RationalFunction(obj.num, obj.den * factor)


def _hs_n(f) -> int:
    polys = [f.num, f.den] if isinstance(f, RationalFunction) else [f]
    n = 0
    for q in polys:
        for v in q.used_vars():
            if v.startswith(("X_", "Y_")):
                n = max(n, int(v[2:]))
    if n == 0:
        raise ValueError("cannot infer n from a function without X_i, Y_i")
    return n


def primitive_direct(n: int, p: int, N: int, bound: str = "delta", backend=None) -> MultiDegreeTable:
    """Table of homothety-minimal lattices only (nu_1 = 0), by direct filtering."""
    if bound == "delta":
        deltas = [d for e in range(N + 1) for d in compositions(e, n)]
        contain = -1
    else:
        deltas = [tuple(int(x) for x in d) for d in np.ndindex(*([N + 1] * n))]
        contain = N
    entries = {}
    for delta in deltas:
        for mu, c in _block_counts(n, p, delta, contain, backend).items():
            if mu[-1] == 0:
                entries[(mu, tuple(delta))] = c
    return MultiDegreeTable(n, p, N, entries, bound, True)


def hs_closed(n: int) -> RationalFunction:
    """Closed HS_{n,p} in (p, X, Y); available for n <= 2."""
    if n == 1:
        return RationalFunction(MultiPoly.const(1), 1 - var("X_1") * var("Y_1"))
    if n == 2:
        from ..fixtures import HS2_closed

        return HS2_closed()
    raise NotImplementedError("no closed form for HS_n with n > 2; use hs_bar_closed")


def table_series_equal(table: MultiDegreeTable, f, p_value=None) -> bool:
    """Compare a table with the expansion of a closed form on the table's range."""
    n = table.n
    g = RationalFunction.coerce(f)
    if p_value is not None:
        g = g.subs({"p": p_value})
    if table.bound == "delta":
        ser = g.series([Y(i) for i in range(1, n + 1)], table.N)
    else:
        ser = g.series([X(i) for i in range(1, n + 1)], table.N)
    vs = tuple(hs_vars(n))
    ser = ser.with_vars(MultiPoly._union(vs, ser.vars))
    have = table.to_poly_symbolic() if table.symbolic else table.to_poly()
    return have.with_vars(ser.vars) == ser
