"""Hecke action on Ehrhart polynomials, eigenvalues and the rank-one building."""
from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import comb

from ..algebra import UniPoly, gaussian_binomial
from ..lattice import IntMatrix, PLattice, hnf, hnf_of_rows
from ..lattice.plattice import sublattices_p_index
from ..polytope import (
    EhrhartPolynomial, GeneralLattice, LatticePolytope, RatioUndefinedError, ehrhart,
)
from .cosets import CosetSet, typeA_cosets, typeC_cosets


def default_jobs() -> int:
    return os.cpu_count() or 1


def _pmap(fn, items, jobs):
    items = list(items)
    if jobs is None:
        jobs = default_jobs()
    if jobs <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=jobs) as ex:
        return list(ex.map(fn, items))


def _dual_lattice(label: IntMatrix, p: int, alpha: int) -> PLattice:
    from ..lattice import dual_basis

    e, rows = dual_basis(label, p, alpha)
    return PLattice.from_basis(rows.rows, p, e)


def _sum_polys(polys) -> UniPoly:
    total = UniPoly([], "T")
    for q in polys:
        total = total + q.poly
    return total


def hecke_act(cosets: CosetSet, P: LatticePolytope, jobs=None, backend=None) -> UniPoly:
    """sum over cosets Gamma g of E(g.P), each computed as E^{Lambda}(P)."""
    if P.dim != cosets.dim:
        raise ValueError(f"polytope has dimension {P.dim}, operator acts in dimension {cosets.dim}")
    lats = [_dual_lattice(h, cosets.p, cosets.alpha) for h in cosets.labels]
    return _sum_polys(_pmap(lambda L: ehrhart(P, L, backend), lats, jobs))


def hecke_act_at(cosets: CosetSet, g: IntMatrix, P: LatticePolytope, jobs=None,
                 backend=None) -> UniPoly:
    """The operator evaluated at the vertex Gamma g: sum_i E(h_i g P)."""
    if P.dim != cosets.dim:
        raise ValueError("dimension mismatch")
    lats = [GeneralLattice.dual_of(h @ g) for h in cosets.reps]
    return _sum_polys(_pmap(lambda L: ehrhart(P, L, backend), lats, jobs))


def ehrhart_at(g: IntMatrix, P: LatticePolytope, backend=None) -> EhrhartPolynomial:
    """E(g.P) = E^{Lambda}(P), Lambda = {x : g x in Z^n}."""
    return ehrhart(P, GeneralLattice.dual_of(g), backend)


def _ratio(num, den) -> Fraction:
    if den == 0:
        raise RatioUndefinedError("base Ehrhart coefficient vanishes; ratio undefined")
    return Fraction(num) / Fraction(den)


# --- type A -----------------------------------------------------------------

def _rref_subspaces(n: int, k: int, p: int):
    """All k-dim subspaces of F_p^n as RREF row lists."""
    from itertools import combinations

    for pivots in combinations(range(n), k):
        free = [(i, j) for i in range(k) for j in range(n) if j > pivots[i] and j not in pivots]
        for vals in product(range(p), repeat=len(free)):
            rows = [[0] * n for _ in range(k)]
            for i, c in enumerate(pivots):
                rows[i][c] = 1
            for (i, j), v in zip(free, vals):
                rows[i][j] = v
            yield rows


def rank_mod_p(rows, p: int) -> int:
    m = [[x % p for x in r] for r in rows]
    rank = 0
    cols = len(m[0]) if m else 0
    for c in range(cols):
        piv = next((i for i in range(rank, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = pow(m[rank][c], -1, p)
        m[rank] = [(x * inv) % p for x in m[rank]]
        for i in range(len(m)):
            if i != rank and m[i][c]:
                f = m[i][c]
                m[i] = [(a - f * b) % p for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


def nu_A_grassmannian(n: int, k: int, ell: int, p: int, U=None) -> int:
    """sum over W in Gr(k, n, p) of #(U cap W)."""
    if U is None:
        U = [[int(i == j) for j in range(n)] for i in range(ell)]
    if (rank_mod_p(U, p) if U else 0) != ell:
        raise ValueError("U must have dimension ell")
    total = 0
    for W in _rref_subspaces(n, k, p):
        r = rank_mod_p(U + W, p) if (U or W) else 0
        total += p ** (ell + k - r)
    return total


def nu_A_formula(n: int, k: int, ell: int, p: int) -> int:
    a = gaussian_binomial(n - 1, k)(p) if k <= n - 1 else 0
    b = gaussian_binomial(n - 1, k - 1)(p) if k >= 1 else 0
    return p ** k * a + p ** ell * b


def nu_A(n: int, k: int, ell: int, p: int, mode: str = "formula", P=None, U=None,
         jobs=None, backend=None):
    if not (0 <= k <= n and 0 <= ell <= n):
        raise ValueError("need 0 <= k, ell <= n")
    if mode == "grassmannian":
        return nu_A_grassmannian(n, k, ell, p, U)
    if mode == "formula":
        return nu_A_formula(n, k, ell, p)
    if mode == "action":
        if P is None:
            raise ValueError("action mode needs a polytope")
        acted = hecke_act(typeA_cosets(n, p, k, backend), P, jobs, backend)
        return _ratio(acted[ell], ehrhart(P, None, backend).c(ell))
    raise ValueError(f"unknown mode {mode!r}")


# --- type C -----------------------------------------------------------------

def nu_C(n: int, k: int, ell: int, p: int, P: LatticePolytope, jobs=None, backend=None) -> Fraction:
    if P.dim != 2 * n:
        raise ValueError("polytope must have dimension 2n")
    acted = hecke_act(typeC_cosets(n, p, k, backend), P, jobs, backend)
    return _ratio(acted[ell], ehrhart(P, None, backend).c(ell))


def nu_C_k0_formula(n: int, ell: int, p: int) -> int:
    """Eigenvalue of T(p, 0): x_0 prod(1 + x_i) at the Satake parameters
    (p^ell, p, ..., p^{n-1}, p^{n-ell})."""
    val = Fraction(p) ** ell * (1 + Fraction(p) ** (n - ell))
    for i in range(1, n):
        val *= 1 + p ** i
    return val


@dataclass
class EigenReport:
    operator: str
    ell: int
    acted: UniPoly
    base: EhrhartPolynomial
    eigenvalue: Fraction
    matched_formula: bool | None
    vertex_values: list = field(default_factory=list)

    @property
    def consistent(self) -> bool:
        return all(v == self.eigenvalue for v in self.vertex_values)

    def to_json(self) -> dict:
        return {
            "operator": self.operator,
            "ell": self.ell,
            "acted_poly": str(self.acted),
            "base_poly": str(self.base),
            "eigenvalue": str(self.eigenvalue),
            "matched_formula": self.matched_formula,
            "vertex_eigenvalues": [str(v) for v in self.vertex_values],
        }


def _expected(kind: str, n: int, k: int, ell: int, p: int):
    from ..fixtures import table1_value

    if kind == "A":
        return nu_A_formula(n, k, ell, p)
    if k == n and k > 0:
        return p ** ell
    if k == 0:
        return nu_C_k0_formula(n, ell, p)
    if n == 2:
        return table1_value(k, ell, p)
    return None


def eigen_check(n: int, p: int, ell: int, P: LatticePolytope, operator=("C", 0),
                n_vertices: int = 3, jobs=None, backend=None) -> EigenReport:
    """Check T E = nu E at the identity vertex and at further vertices Gamma g.

    The extra vertices are the first ``n_vertices`` reps of T(p, 0) (type C) or
    T(p, 1) (type A), so they are honest non-identity points of the building.
    """
    kind, k = operator
    cosets = typeA_cosets(n, p, k, backend) if kind == "A" else typeC_cosets(n, p, k, backend)
    base = ehrhart(P, None, backend)
    if base.c(ell) == 0:
        raise RatioUndefinedError(f"c_{ell}(P) = 0; eigenvalue cannot be read off")
    acted = hecke_act(cosets, P, jobs, backend)
    lam = _ratio(acted[ell], base.c(ell))
    movers = typeA_cosets(n, p, 1, backend) if kind == "A" else typeC_cosets(n, p, 0, backend)
    values = [lam]
    for g in movers.reps[:n_vertices]:
        here = ehrhart_at(g, P, backend).c(ell)
        there = hecke_act_at(cosets, g, P, jobs, backend)[ell]
        values.append(_ratio(there, here))
    expected = _expected(kind, n, k, ell, p)
    matched = None if expected is None else (lam == expected)
    op = f"T^{kind}({p},{k})" if kind == "A" or k == 0 else f"T^C({p}^2,{k})"
    return EigenReport(op, ell, acted, base, lam, matched, values)


# --- rank-one building (Figure-1 style trees) ----------------------------------

@dataclass
class TreeVertex:
    label: IntMatrix        # minimal sublattice L (Z^2/L cyclic); the class rep is L*
    depth: int
    value: Fraction
    parent: int | None


def building_values(p: int, P: LatticePolytope, ell: int, radius: int, backend=None) -> list:
    """Vertices of the (p+1)-regular tree within ``radius`` of [Z^2].

    Ring r holds the classes whose representative containing Z^2 minimally has
    cyclic quotient of order p^r; the value is c_ell of E^{Lambda}(P).
    """
    if P.dim != 2:
        raise ValueError("the tree case needs a 2-dimensional polytope")
    if not 0 <= radius <= 4:
        raise ValueError("radius must be in [0, 4]")
    root = IntMatrix.identity(2)
    out = [TreeVertex(root, 0, Fraction(ehrhart(P, None, backend).c(ell)), None)]
    index_of = {root: 0}
    for r in range(1, radius + 1):
        for L in sublattices_p_index(2, p, r, backend):
            if L.nu != (0, r):
                continue
            parent = hnf_of_rows(list(L.basis.rows) + [[p ** (r - 1), 0], [0, p ** (r - 1)]])
            lam = _dual_lattice(L.basis, p, r)
            val = Fraction(ehrhart(P, lam, backend).c(ell))
            index_of[L.basis] = len(out)
            out.append(TreeVertex(L.basis, r, val, index_of[parent]))
    return out


def ring_multisets(tree: list) -> dict:
    rings = {}
    for v in tree:
        rings.setdefault(v.depth, []).append(v.value)
    return {r: sorted(vals) for r, vals in rings.items()}


def building_dot(tree: list, name: str = "building") -> str:
    lines = [f"graph {name} {{"]
    for i, v in enumerate(tree):
        lines.append(f'  v{i} [label="{v.value}"];')
    for i, v in enumerate(tree):
        if v.parent is not None:
            lines.append(f"  v{v.parent} -- v{i};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def building_json(tree: list) -> list:
    return [
        {"id": i, "depth": v.depth, "lattice": v.label.tolist(), "value": str(v.value),
         "parent": v.parent}
        for i, v in enumerate(tree)
    ]


# --- Tamagawa identity ------------------------------------------------------

def typeA_zeta_coeffs(n: int, ell: int, p: int, P: LatticePolytope, order: int,
                      jobs=None, backend=None) -> list:
    """a_m = sum over superlattices of index p^m of c_ell^Lambda(P) / c_ell(P)."""
    base = ehrhart(P, None, backend).c(ell)
    if base == 0:
        raise RatioUndefinedError(f"c_{ell}(P) = 0")
    out = []
    for m in range(order + 1):
        lats = [L.dual() for L in sublattices_p_index(n, p, m, backend)]
        polys = _pmap(lambda L: ehrhart(P, L, backend).c(ell), lats, jobs)
        out.append(sum(Fraction(c) for c in polys) / Fraction(base))
    return out


def tamagawa_check(n: int, ell: int, p: int, order: int, P: LatticePolytope | None = None,
                   nu_mode: str = "action", jobs=None, backend=None) -> bool:
    """(sum a_m X^m) * (sum_k (-1)^k p^{C(k,2)} nu^A_{n,k,ell} X^k) = 1 + O(X^{order+1})."""
    if order < 1:
        raise ValueError("order must be >= 1")
    if P is None:
        from ..polytope import cube

        P = cube(n)
    a = typeA_zeta_coeffs(n, ell, p, P, order, jobs, backend)
    b = []
    for k in range(n + 1):
        nu = nu_A(n, k, ell, p, nu_mode, P=P, jobs=jobs, backend=backend)
        b.append((-1) ** k * p ** comb(k, 2) * Fraction(nu))
    for m in range(order + 1):
        s = sum(a[i] * b[m - i] for i in range(m + 1) if m - i <= n)
        if s != (1 if m == 0 else 0):
            return False
    return True
