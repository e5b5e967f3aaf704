"""Coset representatives for the Hecke operators of GL_n and GSp_2n.

A coset Gamma*g is labelled by the HNF of rowspan(g); the lattice attached to
it is {x : g x in Z^n}, which is what E(g.P) counts (see ``polytope``).
"""
from __future__ import annotations

import hashlib
import json
import os
from dataclasses import dataclass, field
from itertools import product
from math import gcd

import numpy as np

from .. import kernels
from ..lattice import IntMatrix, dual_basis, hnf, hnf_block, hnf_of_rows, smith_exponents_batch


def J_matrix(n: int) -> IntMatrix:
    """[[0, I_n], [-I_n, 0]]."""
    d = 2 * n
    rows = [[0] * d for _ in range(d)]
    for i in range(n):
        rows[i][n + i] = 1
        rows[n + i][i] = -1
    return IntMatrix(rows)


def omega(u, v) -> int:
    h = len(u) // 2
    return sum(u[k] * v[h + k] - u[h + k] * v[k] for k in range(h))


def similitude(g: IntMatrix) -> int | None:
    """c with g J g^t = c J, or None when g is not a similitude."""
    n = g.n_rows // 2
    G = g @ J_matrix(n) @ g.T
    c = G[0, n]
    return c if G == J_matrix(n) * c else None


def type_c_smith(n: int, k: int) -> tuple:
    """Local Smith exponents of D_0 (k = 0) or D_k."""
    if k == 0:
        return (0,) * n + (1,) * n
    return (0,) * (n - k) + (1,) * (2 * k) + (2,) * (n - k)


def type_c_diag(n: int, k: int, p: int) -> list:
    if k == 0:
        return [1] * n + [p] * n
    return [1] * (n - k) + [p] * k + [p * p] * (n - k) + [p] * k


@dataclass
class CosetSet:
    kind: str  # "A" or "C"
    n: int
    p: int
    k: int
    reps: list = field(repr=False)
    labels: list = field(repr=False)
    alpha: int = 1

    @property
    def dim(self) -> int:
        return self.n if self.kind == "A" else 2 * self.n

    def __len__(self):
        return len(self.reps)

    def duals(self):
        """(denominator_exp, integral basis) of {x : g x in Z^dim} per coset."""
        return [dual_basis(h, self.p, self.alpha) for h in self.labels]

    def to_json(self) -> dict:
        return {
            "kind": self.kind, "n": self.n, "p": self.p, "k": self.k, "alpha": self.alpha,
            "reps": [r.tolist() for r in self.reps],
            "labels": [h.tolist() for h in self.labels],
        }

    @classmethod
    def from_json(cls, d) -> "CosetSet":
        return cls(d["kind"], d["n"], d["p"], d["k"], [IntMatrix(r) for r in d["reps"]],
                   [IntMatrix(h) for h in d["labels"]], d.get("alpha", 1))


def _cache_path(key: str) -> str | None:
    root = os.environ.get("EHL_CACHE_DIR")
    if not root:
        return None
    os.makedirs(root, exist_ok=True)
    digest = hashlib.sha256(key.encode()).hexdigest()[:24]
    return os.path.join(root, f"cosets-{digest}.json")


def _cached(key: str, build):
    path = _cache_path(key)
    if path and os.path.exists(path):
        with open(path) as fh:
            return CosetSet.from_json(json.load(fh))
    cs = build()
    if path:
        tmp = path + ".tmp"
        with open(tmp, "w") as fh:
            json.dump(cs.to_json(), fh)
        os.replace(tmp, path)
    return cs


def _lattices(dim: int, p: int, index_exp: int, contain: int, backend=None):
    """HNF arrays of all L with p^contain Z^dim <= L and |Z^dim : L| = p^index_exp."""
    blocks = []
    for delta in product(range(contain, -1, -1), repeat=dim):
        if sum(delta) != index_exp:
            continue
        mats = hnf_block(dim, p, delta, contain, backend)
        if len(mats):
            blocks.append(mats)
    if not blocks:
        return np.zeros((0, dim, dim), dtype=np.int64)
    return np.concatenate(blocks)


def typeA_cosets(n: int, p: int, k: int, backend=None) -> CosetSet:
    """Cosets in GL_n(Z) diag(1..1, p..p) GL_n(Z), k entries equal to p."""
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")

    def build():
        mats = _lattices(n, p, k, 1, backend)
        nus = smith_exponents_batch(mats, p, 2, backend)
        want = np.array((0,) * (n - k) + (1,) * k)
        keep = np.all(nus == want, axis=1)
        labels = [IntMatrix(m.tolist()) for m in mats[keep]]
        return CosetSet("A", n, p, k, list(labels), labels, 1)

    return _cached(f"A|{n}|{p}|{k}", build)


def _ext_gcd_combo(values: list[int]) -> list[int]:
    """Integers x with sum x_i values_i = gcd(values)."""
    coeffs = [0] * len(values)
    g = 0
    for i, v in enumerate(values):
        if v == 0:
            continue
        if g == 0:
            g = v
            coeffs[i] = 1
            continue
        # extended Euclid on (g, v)
        a, b = g, v
        x0, x1, y0, y1 = 1, 0, 0, 1
        while b:
            q = a // b
            a, b = b, a - q * b
            x0, x1 = x1, x0 - q * x1
            y0, y1 = y1, y0 - q * y1
        coeffs = [c * x0 for c in coeffs]
        coeffs[i] = y0
        g = a
    if g < 0:
        coeffs = [-c for c in coeffs]
    return coeffs


def symplectic_basis(rows, c: int) -> IntMatrix:
    """Basis (e_1..e_n, f_1..f_n) of rowspan(rows) with Gram matrix c*J.

    Requires omega/c to be integral and unimodular on the lattice.
    """
    M = [list(r) for r in rows]
    es, fs = [], []
    while M:
        e = M[0]
        vals = []
        for m in M:
            w = omega(e, m)
            if w % c:
                raise ValueError("form is not divisible by the similitude on this lattice")
            vals.append(w // c)
        x = _ext_gcd_combo(vals)
        if sum(a * b for a, b in zip(x, vals)) != 1:
            raise ValueError("form is not unimodular on this lattice")
        f = [sum(xi * m[j] for xi, m in zip(x, M)) for j in range(len(e))]
        proj = []
        for m in M:
            a = omega(m, f) // c
            b = omega(m, e) // c
            proj.append([mj - a * ej + b * fj for mj, ej, fj in zip(m, e, f)])
        es.append(e)
        fs.append(f)
        rest = [r for r in proj if any(r)]
        M = [list(r) for r in hnf_of_rows(rest).rows] if rest else []
    return IntMatrix(es + fs)


def typeC_cosets(n: int, p: int, k: int, backend=None) -> CosetSet:
    """Cosets Gamma g inside Gamma D Gamma with D = D_0 (k = 0) or D_k."""
    if n < 1 or not 0 <= k <= n:
        raise ValueError("need n >= 1 and 0 <= k <= n")
    alpha = 1 if k == 0 else 2

    def build():
        labels, reps = similitude_lattices(n, p, alpha, type_c_smith(n, k), backend)
        return CosetSet("C", n, p, k, reps, labels, alpha)

    return _cached(f"C|{n}|{p}|{k}", build)


def similitude_lattices(n: int, p: int, alpha: int, smith=None, backend=None):
    """Labels and symplectic reps for all Gamma g with g J g^t = p^alpha J.

    With ``smith`` given, only the double coset with those local Smith exponents.
    """
    K = kernels.get(backend)
    d = 2 * n
    mod = p ** alpha
    mats = _lattices(d, p, n * alpha, alpha, backend)
    if len(mats):
        mats = mats[np.asarray(K.symplectic_mask(mats, mod))]
    if smith is not None and len(mats):
        nus = smith_exponents_batch(mats, p, n * alpha + 1, backend)
        mats = mats[np.all(nus == np.array(smith), axis=1)]
    labels, reps = [], []
    for m in mats:
        h = IntMatrix(m.tolist())
        labels.append(h)
        reps.append(symplectic_basis(h.rows, mod))
    return labels, reps


def coset_label(g: IntMatrix) -> IntMatrix:
    return hnf(g)[0]


def gcd_list(xs) -> int:
    g = 0
    for x in xs:
        g = gcd(g, x)
    return g
