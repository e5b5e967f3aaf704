"""Lattice polytopes, facet descriptions, point counts and Ehrhart polynomials."""
from __future__ import annotations

import hashlib
import json
import os
import threading
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from math import gcd
from typing import Sequence

import numpy as np

from . import kernels
from .algebra import UniPoly, lagrange_interpolate
from .lattice import IntMatrix, PLattice, SingularMatrixError, bareiss_det, hnf


class DegeneratePolytopeError(ValueError):
    pass


class NotPolynomialError(ValueError):
    """Raised when some vertex is not a point of the reference lattice."""


class RatioUndefinedError(ZeroDivisionError):
    """c_l(P) = 0, so the normalized coefficient ratio is undefined."""


@dataclass(frozen=True)
class Facet:
    normal: tuple
    offset: int

    def value(self, v) -> int:
        return sum(a * b for a, b in zip(self.normal, v))


@dataclass(frozen=True)
class HRep:
    facets: tuple

    def __len__(self):
        return len(self.facets)

    def arrays(self):
        A = np.array([f.normal for f in self.facets], dtype=np.int64)
        b = np.array([f.offset for f in self.facets], dtype=np.int64)
        return A, b


def _rank(rows) -> int:
    if not rows:
        return 0
    m = [[Fraction(x) for x in r] for r in rows]
    rank, cols = 0, len(m[0])
    for c in range(cols):
        piv = next((i for i in range(rank, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for i in range(len(m)):
            if i != rank and m[i][c] != 0:
                f = m[i][c] / m[rank][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


def _normal(diffs: list) -> tuple:
    """Integer vector orthogonal to n-1 vectors in Z^n (generalized cross product)."""
    n = len(diffs) + 1
    out = []
    for j in range(n):
        minor = [r[:j] + r[j + 1:] for r in diffs]
        out.append((-1) ** j * bareiss_det(minor) if minor else 1)
    return tuple(out)


def _facets_of(points: list, n: int) -> list:
    if n == 1:
        xs = [v[0] for v in points]
        return [Facet((1,), max(xs)), Facet((-1,), -min(xs))]
    seen = {}
    for sub in combinations(points, n):
        base = sub[0]
        diffs = [[a - b for a, b in zip(v, base)] for v in sub[1:]]
        a = _normal(diffs)
        if not any(a):
            continue
        g = 0
        for x in a:
            g = gcd(g, x)
        a = tuple(x // g for x in a)
        b = sum(x * y for x, y in zip(a, base))
        vals = [sum(x * y for x, y in zip(a, v)) for v in points]
        if all(v <= b for v in vals):
            seen.setdefault((a, b), None)
        elif all(v >= b for v in vals):
            seen.setdefault((tuple(-x for x in a), -b), None)
    return [Facet(a, b) for a, b in sorted(seen)]


@dataclass(frozen=True)
class LatticePolytope:
    """Full-dimensional convex hull of integer points; ``vertices`` are extreme points."""

    vertices: tuple
    dim: int = field(init=False)

    def __init__(self, points: Sequence[Sequence[int]]):
        pts = sorted({tuple(int(x) for x in v) for v in points})
        if not pts:
            raise DegeneratePolytopeError("empty point set")
        n = len(pts[0])
        if any(len(v) != n for v in pts):
            raise ValueError("points of mixed dimension")
        base = pts[0]
        if _rank([[a - b for a, b in zip(v, base)] for v in pts[1:]]) != n:
            raise DegeneratePolytopeError("polytope is not full-dimensional")
        facets = _facets_of(pts, n)
        verts = []
        for v in pts:
            tight = [f.normal for f in facets if f.value(v) == f.offset]
            if _rank(tight) == n:
                verts.append(v)
        object.__setattr__(self, "vertices", tuple(verts))
        object.__setattr__(self, "dim", n)
        object.__setattr__(self, "_facets", tuple(facets))

    @classmethod
    def from_json(cls, data) -> "LatticePolytope":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(data["vertices"])

    def to_json(self) -> dict:
        return {"vertices": [list(v) for v in self.vertices]}

    @property
    def hrep(self) -> HRep:
        return HRep(self._facets)

    @cached_property
    def _arrays(self):
        A, b = self.hrep.arrays()
        V = np.array(self.vertices, dtype=np.int64)
        return A, b, V.min(axis=0), V.max(axis=0)


def hrep(P: LatticePolytope) -> HRep:
    return P.hrep


def transform(g, P: LatticePolytope) -> LatticePolytope:
    g = g if isinstance(g, IntMatrix) else IntMatrix(g)
    if g.n_rows != g.n_cols or g.n_cols != P.dim:
        raise ValueError("matrix and polytope dimensions differ")
    if g.det() == 0:
        raise SingularMatrixError("singular transformation")
    return LatticePolytope([g.apply(v) for v in P.vertices])


@dataclass(frozen=True)
class EhrhartPolynomial:
    poly: UniPoly
    lattice: str = "Z^n"

    @property
    def coeffs(self) -> list:
        n = self.poly.degree
        return [self.poly[i] for i in range(n + 1)]

    def c(self, ell: int):
        return self.poly[ell]

    def __eq__(self, other):
        return isinstance(other, EhrhartPolynomial) and self.poly == other.poly

    def __hash__(self):
        return hash(self.poly)

    def __str__(self):
        return str(self.poly)


def _lattice_data(L: PLattice | None, n: int):
    if L is None:
        return np.eye(n, dtype=np.int64), 1
    if L.n != n:
        raise ValueError("lattice rank differs from polytope dimension")
    return L.basis.to_numpy(), L.p ** L.denominator_exp


def count_points_many(P: LatticePolytope, ts: Sequence[int], L: PLattice | None = None,
                      backend=None) -> list[int]:
    if any(t < 0 for t in ts):
        raise ValueError("dilation factor must be nonnegative")
    A, b, vmin, vmax = P._arrays
    B, scale = _lattice_data(L, P.dim)
    K = kernels.get(backend)
    out = K.count_points(B, A, b, vmin, vmax, int(scale), np.asarray(ts, dtype=np.int64))
    return [int(x) for x in out]


def count_points(P: LatticePolytope, t: int, L: PLattice | None = None, backend=None) -> int:
    """#(tP cap L); L defaults to Z^n, superlattices carry a denominator."""
    return count_points_many(P, [t], L, backend)[0]


def _tag(L: PLattice | None) -> str:
    if L is None:
        return "Z^n"
    return f"p^-{L.denominator_exp}*{L.basis.tolist()}" if L.denominator_exp else str(L.basis.tolist())


def _cache_file(P: LatticePolytope, L) -> str | None:
    root = os.environ.get("EHL_CACHE_DIR")
    if not root:
        return None
    B, scale = _lattice_data(L, P.dim)
    key = json.dumps([[list(v) for v in P.vertices], B.tolist(), int(scale)])
    digest = hashlib.sha256(key.encode()).hexdigest()[:32]
    d = os.path.join(root, "ehrhart")
    os.makedirs(d, exist_ok=True)
    return os.path.join(d, digest + ".json")


def ehrhart(P: LatticePolytope, L: PLattice | None = None, backend=None) -> EhrhartPolynomial:
    n = P.dim
    if L is not None:
        for v in P.vertices:
            if not L.contains_point(v):
                raise NotPolynomialError("Ehrhart not polynomial relative to this lattice")
    path = _cache_file(P, L)
    if path and os.path.exists(path):
        with open(path) as fh:
            coeffs = [Fraction(c) for c in json.load(fh)]
        return EhrhartPolynomial(UniPoly(coeffs, "T"), _tag(L))
    counts = count_points_many(P, range(n + 2), L, backend)
    poly = lagrange_interpolate(list(zip(range(n + 1), counts[: n + 1])), "T")
    if poly(n + 1) != counts[n + 1]:
        raise RuntimeError(f"interpolation check failed at t={n + 1}: counting bug")
    if path:
        tmp = f"{path}.{os.getpid()}.{threading.get_ident()}.tmp"
        with open(tmp, "w") as fh:
            json.dump(poly.coeff_strings(), fh)
        os.replace(tmp, path)
    return EhrhartPolynomial(poly, _tag(L))


def ehrhart_identity_check(g, P: LatticePolytope, backend=None) -> bool:
    """E(gP) against E^Lambda(P) with Lambda = {x : g x in Z^n}."""
    g = g if isinstance(g, IntMatrix) else IntMatrix(g)
    lhs = ehrhart(transform(g, P), None, backend)
    rhs = ehrhart(P, lattice_of_matrix(g), backend)
    return lhs == rhs


def lattice_of_matrix(g: IntMatrix) -> "GeneralLattice":
    """{x : g x in Z^n} for an integral nonsingular g (any determinant)."""
    return GeneralLattice.dual_of(g)


@dataclass(frozen=True)
class GeneralLattice:
    """denominator^{-1} * rowspan(basis): superlattices with non-prime-power index.

    Duck-types the fields of PLattice used by the point counter.
    """

    basis: IntMatrix
    denominator: int

    @property
    def n(self):
        return self.basis.n_rows

    @property
    def p(self):
        return self.denominator

    @property
    def denominator_exp(self):
        return 1

    @classmethod
    def dual_of(cls, g: IntMatrix) -> "GeneralLattice":
        d = g.det()
        if d == 0:
            raise SingularMatrixError("singular matrix")
        adj = g.adjugate()
        D = abs(d)
        # columns of D * g^{-1} = sign(d) * adj
        s = 1 if d > 0 else -1
        rows = [[s * adj[i, j] for i in range(g.n_rows)] for j in range(g.n_cols)]
        return cls(hnf(rows)[0], D)

    def contains_point(self, v) -> bool:
        x = [int(a) * self.denominator for a in v]
        for i in range(self.n):
            d = self.basis[i, i]
            if x[i] % d:
                return False
            c = x[i] // d
            x = [a - c * b for a, b in zip(x, self.basis.rows[i])]
        return True


def coefficient_ratio(acted, base, ell: int) -> Fraction:
    b = base.c(ell) if isinstance(base, EhrhartPolynomial) else base[ell]
    a = acted.c(ell) if isinstance(acted, EhrhartPolynomial) else acted[ell]
    if b == 0:
        raise RatioUndefinedError(f"c_{ell}(P) = 0; ratio undefined")
    return Fraction(a) / Fraction(b)


def boundary_points_2d(P: LatticePolytope) -> int:
    """Lattice points on the boundary of a polygon, from edge gcds."""
    if P.dim != 2:
        raise ValueError("polygon expected")
    # order vertices by angle around the centroid
    import math

    cx = sum(v[0] for v in P.vertices) / len(P.vertices)
    cy = sum(v[1] for v in P.vertices) / len(P.vertices)
    vs = sorted(P.vertices, key=lambda v: math.atan2(v[1] - cy, v[0] - cx))
    total = 0
    for a, b in zip(vs, vs[1:] + vs[:1]):
        total += gcd(b[0] - a[0], b[1] - a[1])
    return total


def cube(n: int, side: int = 1) -> LatticePolytope:
    from itertools import product

    return LatticePolytope(list(product((0, side), repeat=n)))


def cross_polytope(n: int) -> LatticePolytope:
    pts = []
    for i in range(n):
        for s in (1, -1):
            v = [0] * n
            v[i] = s
            pts.append(v)
    return LatticePolytope(pts)
