"""Ehrhart-Hecke zeta functions of types A and C: closed forms and brute force."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..algebra import UniPoly, var
from ..hecke.action import _dual_lattice, _pmap, typeA_zeta_coeffs
from ..hecke.cosets import similitude_lattices
from ..polytope import LatticePolytope, RatioUndefinedError, ehrhart
from .closed import ClosedForm
from .primitive_closed import zeta_C_closed


@dataclass
class ZetaA:
    """(1 - p^l t)^{-1} prod_{k=1}^{n-1} (1 - p^k t)^{-1}; t = p^{-s}."""

    n: int
    ell: int

    @property
    def shifts(self) -> list:
        """zeta(s - a) factors of the global Euler product, a in this list."""
        return [self.ell] + list(range(1, self.n))

    @property
    def closed(self) -> ClosedForm:
        p, t = var("p"), var("t")
        return ClosedForm.from_factors(1, [p ** a * t for a in self.shifts])

    def at(self, p: int) -> ClosedForm:
        return self.closed.subs({"p": p})

    def __str__(self):
        seen: dict = {}
        for a in self.shifts:
            seen[a] = seen.get(a, 0) + 1
        parts = []
        for a, k in seen.items():
            s = f"(1-p^{a}*t)"
            parts.append(s if k == 1 else f"{s}^{k}")
        return f"1/({'*'.join(parts)})"


def zeta_A_closed(n: int, ell: int) -> ZetaA:
    if n < 1 or not 0 <= ell <= n:
        raise ValueError("need n >= 1 and 0 <= l <= n")
    return ZetaA(n, ell)


def zeta_C_in_t(n: int, ell: int, p: int) -> ClosedForm:
    """W_{n,l}(p, t^n)."""
    return zeta_C_closed(n, ell).subs({"X": p, "Y": var("t") ** n})


def closed_series(kind: str, n: int, ell: int, p: int, order: int) -> UniPoly:
    """Taylor coefficients in t up to t^order of the closed zeta function."""
    f = zeta_A_closed(n, ell).at(p) if kind == "A" else zeta_C_in_t(n, ell, p)
    ser = f.series(["t"], order)
    coeffs = [0] * (order + 1)
    for e, c in ser.terms.items():
        coeffs[e[ser.vars.index("t")]] = c
    return UniPoly(coeffs, "t")


def _typeC_coeffs(n, ell, p, P, order, jobs, backend) -> list:
    base = ehrhart(P, None, backend).c(ell)
    if base == 0:
        raise RatioUndefinedError(f"c_{ell}(P) = 0")
    out = []
    for alpha in range(order + 1):
        labels, _ = similitude_lattices(n, p, alpha, None, backend)
        lats = [_dual_lattice(h, p, alpha) for h in labels]
        cs = _pmap(lambda L: ehrhart(P, L, backend).c(ell), lats, jobs)
        out.append(sum(Fraction(c) for c in cs) / Fraction(base))
    return out


def zeta_series_bruteforce(kind: str, n: int, ell: int, p: int, P: LatticePolytope,
                           order: int, jobs=None, backend=None) -> UniPoly:
    """sum of c_l^Lambda(P)/c_l(P) t^{index exponent}.

    Type A runs over superlattices of Z^n of index p^m (m <= order); type C
    over similitude cosets with multiplier p^alpha (alpha <= order), whose
    lattices have index p^{n alpha} in Z^{2n}.
    """
    if kind == "A":
        if P.dim != n:
            raise ValueError("type A needs an n-dimensional polytope")
        a = typeA_zeta_coeffs(n, ell, p, P, order, jobs, backend)
        return UniPoly(a, "t")
    if kind == "C":
        if P.dim != 2 * n:
            raise ValueError("type C needs a 2n-dimensional polytope")
        a = _typeC_coeffs(n, ell, p, P, order, jobs, backend)
        coeffs = [0] * (n * order + 1)
        for alpha, v in enumerate(a):
            coeffs[n * alpha] = v
        return UniPoly(coeffs, "t")
    raise ValueError("type must be 'A' or 'C'")


def zeta_check(kind: str, n: int, ell: int, p: int, polytopes, order: int, jobs=None,
               backend=None) -> dict:
    """Brute-force series for each polytope against the closed form."""
    series = [zeta_series_bruteforce(kind, n, ell, p, P, order, jobs, backend) for P in polytopes]
    top = n * order if kind == "C" else order
    closed = closed_series(kind, n, ell, p, top)
    return {
        "closed": closed,
        "series": series,
        "independent": all(s == series[0] for s in series),
        "match": all(s == closed for s in series),
    }
