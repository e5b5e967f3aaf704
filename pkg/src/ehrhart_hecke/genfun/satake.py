"""Satake generating functions: the maps Phi and psi and Andrianov's sum."""
from __future__ import annotations

from fractions import Fraction
from math import comb

from ..algebra import MultiPoly, RationalFunction, SubstitutionMap, var
from ..lattice.plattice import containing_arrays
from .closed import ClosedForm
from .hs import X, Y, hs_closed, hs_primitive, mu_from_nu


def x(i: int) -> str:
    return f"x_{i}"


def satake_vars(n: int) -> list[str]:
    return [x(i) for i in range(n + 1)] + ["X"]


def _infer_n(f) -> int:
    polys = [f.num, f.den] if isinstance(f, (RationalFunction, ClosedForm)) else [f]
    if isinstance(f, ClosedForm):
        polys = [f.num, f.denominator()]
    n = 0
    for q in polys:
        for v in q.used_vars():
            if v[:2] in ("X_", "Y_", "x_"):
                n = max(n, int(v[2:]))
    return n


def phi_images(n: int, p=None) -> dict:
    """X_i -> p^{C(i+1,2)} x_0 X, Y_i -> p^{-i} x_i (p numeric or symbolic)."""
    pp = var("p") if p is None else Fraction(p)
    x0X = var(x(0)) * var("X")
    imgs = {}
    for i in range(1, n + 1):
        imgs[X(i)] = pp ** comb(i + 1, 2) * x0X
        imgs[Y(i)] = pp ** (-i) * var(x(i))
    if p is not None:
        imgs["p"] = pp
    return imgs


def phi_map(f, n: int | None = None, p=None):
    """Phi on a polynomial, rational function or closed form in X_i, Y_i, p.

    With ``p`` given, p is also specialised to that number.
    """
    n = _infer_n(f) if n is None else n
    allowed = {"p"} | {X(i) for i in range(1, n + 1)} | {Y(i) for i in range(1, n + 1)}
    imgs = phi_images(n, p)
    if isinstance(f, ClosedForm):
        SubstitutionMap(imgs, strict=True, allowed=allowed)._check(f.num)
        return f.subs(imgs)
    return SubstitutionMap(imgs, strict=True, allowed=allowed)(f)


def psi_images(n: int, ell: int, p=None) -> dict:
    pp = var("p") if p is None else Fraction(p)
    imgs = {x(i): pp ** i for i in range(1, n)}
    imgs[x(0)] = pp ** ell
    imgs[x(n)] = pp ** (n - ell)
    imgs["X"] = var("t") ** n
    if p is not None:
        imgs["p"] = pp
    return imgs


def psi_nl(n: int, ell: int, f, p=None):
    """x_0 -> p^l, x_i -> p^i (0 < i < n), x_n -> p^{n-l}, X -> t^n."""
    allowed = {"p"} | set(satake_vars(n))
    imgs = psi_images(n, ell, p)
    if isinstance(f, ClosedForm):
        SubstitutionMap(imgs, strict=True, allowed=allowed)._check(f.num)
        return f.subs(imgs)
    return SubstitutionMap(imgs, strict=True, allowed=allowed)(f)


def andrianov_sum(n: int, p: int, order: int, backend=None) -> MultiPoly:
    """Sum over homothety classes with nu_n <= order of
    p^{<d,nu> - <a,delta>} x^delta (x_0 X)^{nu_n}, a = (1..n), d = (n..1)."""
    vs = tuple(satake_vars(n))
    terms: dict = {}
    for delta, mats, nus in containing_arrays(n, p, order, backend):
        wa = sum((i + 1) * d for i, d in enumerate(delta))
        for nu in nus:
            if nu[0] != 0:
                continue
            wd = sum((n - i) * int(v) for i, v in enumerate(nu))
            key = (int(nu[-1]),) + tuple(delta) + (int(nu[-1]),)
            terms[key] = terms.get(key, 0) + Fraction(p) ** (wd - wa)
    return MultiPoly(terms, vs)


def R_closed(n: int, primitive: bool = False) -> RationalFunction:
    """R_{n,p}(x, X) for n <= 2, from Phi of the closed HS_n."""
    if n == 1:
        rpr = RationalFunction(MultiPoly.const(1))
    else:
        rpr = phi_map(hs_primitive(hs_closed(n)), n)
    if primitive:
        return rpr
    allx = MultiPoly.const(1)
    for i in range(n + 1):
        allx = allx * var(x(i))
    den = (1 - var(x(0)) * var("X")) * (1 - allx * var("X"))
    return RationalFunction(rpr.num, rpr.den * den)


def satake_truncation_check(n: int, p: int, order: int, backend=None) -> bool:
    """Andrianov's sum against Phi(HS^pr) built from an enumerated table."""
    from .hs import hs_enumerate

    table = hs_primitive(hs_enumerate(n, p, order, "nu", backend=backend))
    lhs = andrianov_sum(n, p, order, backend)
    rhs = phi_map(table.to_poly(), n, p).truncate(["X"], order)
    return lhs.with_vars(MultiPoly._union(lhs.vars, rhs.vars)) == rhs
