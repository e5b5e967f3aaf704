"""Functional equations, the Stanley-Reisner specialisation and Eulerian numbers."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from math import comb

from ..algebra import MultiPoly, RationalFunction, UniPoly, eulerian_poly, var
from .closed import ClosedForm
from .hs import X, Y, hs_closed, primitive_direct
from .satake import R_closed, psi_nl, x
from .primitive_closed import W_nI, hs_bar_closed, zeta_C_closed


class NoClosedFormError(ValueError):
    pass


def _prod(factors) -> MultiPoly:
    out = MultiPoly.const(1)
    for f in factors:
        out = out * f
    return out


def reciprocity_check(kind: str, n: int, ell: int | None = None, source: str = "pipeline") -> bool:
    """Exact functional equations under inversion of all variables.

    HS(n):   HS(1/X, 1/Y)|_{p -> 1/p} = (-1)^n p^{C(n,2)} X_n Y_1..Y_n HS
    R(n):    R(1/x, 1/X)|_{p -> 1/p} = (-1)^{n+1} p^{C(n,2)} x_0^2 x_1..x_n X^2 R
    Z(n,l):  W(1/X, 1/Y) = (-1)^{n+1} X^{n^2+l} Y^2 W
    """
    if kind == "HS":
        if n > 2:
            raise NoClosedFormError(f"no closed form of HS_{n} in all variables")
        f = hs_closed(n)
        inv = ["p"] + [X(i) for i in range(1, n + 1)] + [Y(i) for i in range(1, n + 1)]
        factor = (-1) ** n * var("p") ** comb(n, 2) * var(X(n)) * _prod(var(Y(i)) for i in range(1, n + 1))
    elif kind == "R":
        if n > 2:
            raise NoClosedFormError(f"no closed form of R_{n} in all variables")
        f = R_closed(n)
        inv = ["p", "X"] + [x(i) for i in range(n + 1)]
        factor = ((-1) ** (n + 1) * var("p") ** comb(n, 2) * var(x(0)) ** 2 * var("X") ** 2
                  * _prod(var(x(i)) for i in range(1, n + 1)))
    elif kind == "Z":
        if ell is None:
            raise ValueError("Z needs l")
        if source == "fixture":
            from ..fixtures import W_fixture

            f = W_fixture(n, ell)
        else:
            f = zeta_C_closed(n, ell).rf
        inv = ["X", "Y"]
        factor = (-1) ** (n + 1) * var("X") ** (n * n + ell) * var("Y") ** 2
    else:
        raise ValueError(f"unknown kind {kind!r}")
    f = RationalFunction.coerce(f)
    return f.invert_vars(inv) == f * RationalFunction(factor)


def corollary_B_check(n: int, ell: int) -> bool:
    """psi(R^pr_n) = W_{n,l}(p, t^n) (1 - p^l t^n)(1 - p^{C(n+1,2)} t^n), n <= 2."""
    if n > 2:
        raise NoClosedFormError("R^pr in all variables is only available for n <= 2")
    lhs = psi_nl(n, ell, R_closed(n, primitive=True))
    p, t = var("p"), var("t")
    w = zeta_C_closed(n, ell).subs({"X": p, "Y": t ** n})
    rhs = w * ((1 - p ** ell * t ** n) * (1 - p ** comb(n + 1, 2) * t ** n))
    return RationalFunction.coerce(lhs) == rhs.rf


def hs_bar_check(n: int, p: int, order: int, backend=None) -> bool:
    """Closed HS^pr(X, 1.., Y) at Z = p against enumeration of homothety-minimal
    lattices with nu_n <= order (coefficient of X^mu Y^{delta_n})."""
    table = primitive_direct(n, p, order, "nu", backend)
    vs = tuple(X(i) for i in range(1, n)) + ("Y",)
    terms: dict = {}
    for (mu, delta), c in table.entries.items():
        key = tuple(mu[: n - 1]) + (delta[-1],)
        terms[key] = terms.get(key, 0) + c
    enum = MultiPoly(terms, vs)
    ser = hs_bar_closed(n).subs({"Z": p}).series(list(vs[:-1]), order)
    ser = ser.with_vars(MultiPoly._union(vs, ser.vars))
    return enum.with_vars(ser.vars) == ser


# --- Stanley-Reisner ------------------------------------------------------------

@dataclass(frozen=True)
class SimplicialComplex:
    """Order complex of chains of subsets of [n].

    Default vertices are the nonempty proper subsets (barycentric subdivision
    of the boundary of the simplex on [n]); ``include_full`` adds [n] itself.
    """

    n: int
    include_full: bool = False

    @cached_property
    def vertices(self) -> list:
        top = self.n if self.include_full else self.n - 1
        return [frozenset(c) for r in range(1, top + 1) for c in combinations(range(1, self.n + 1), r)]

    def faces(self):
        """All chains J_1 < ... < J_k (including the empty face), as tuples."""
        verts = sorted(self.vertices, key=lambda s: (len(s), sorted(s)))
        out = [()]
        frontier = [((), None)]
        while frontier:
            nxt = []
            for chain, last in frontier:
                for v in verts:
                    if last is None or (last < v):
                        c = chain + (v,)
                        out.append(c)
                        nxt.append((c, v))
            frontier = nxt
        return out

    def f_vector(self) -> list:
        f: dict = {}
        for face in self.faces():
            f[len(face)] = f.get(len(face), 0) + 1
        return [f.get(k, 0) for k in range(max(f) + 1)]


def _a(J) -> MultiPoly:
    return var(x(0)) * var("X") * _prod(var(x(i)) for i in sorted(J))


def sr_hilbert(n: int, include_full: bool = False) -> ClosedForm:
    """sum over faces of prod_{J in face} a_J/(1 - a_J), a_J = x_0 X prod_{i in J} x_i.

    Accumulated by the top vertex of each chain: F(J) = a_J/(1-a_J) (1 + sum_{K<J} F(K)).
    """
    if not 1 <= n <= 6:
        raise ValueError("need 1 <= n <= 6")
    cx = SimplicialComplex(n, include_full)
    verts = sorted(cx.vertices, key=lambda s: (len(s), sorted(s)))
    F: dict = {}
    total = ClosedForm(1)
    for J in verts:
        below = ClosedForm(1)
        for K in verts:
            if len(K) >= len(J):
                break
            if K < J:
                below = below + F[K]
        a = _a(J)
        F[J] = ClosedForm.from_factors(a, [a]) * below
        total = total + F[J]
    return total


def sr_check(n: int) -> bool:
    """sr_hilbert(n) against R^pr_n at p = 1.

    n <= 2: all variables, from the closed HS.  n >= 3: on the slice
    x_1 = ... = x_{n-1} = 1, from the closed HS^pr_n(X, 1.., Y).
    """
    sr = sr_hilbert(n)
    if n <= 2:
        return sr == R_closed(n, primitive=True).subs({"p": 1})
    imgs = {f"X_{i}": var(x(0)) * var("X") for i in range(1, n)}
    imgs.update({"Z": 1, "Y": var(x(n))})
    lhs = hs_bar_closed(n).subs(imgs)
    rhs = sr.subs({x(i): 1 for i in range(1, n)})
    return lhs == rhs


# --- Eulerian -----------------------------------------------------------------

def R_ones_at_p1(n: int) -> ClosedForm:
    """R_{n,p}(1, ..., 1, X) at p = 1, via the closed HS^pr."""
    Xv = var("X")
    imgs = {f"X_{i}": Xv for i in range(1, n)}
    imgs.update({"Z": 1, "Y": 1})
    total = ClosedForm(0)
    for r in range(n):
        for I in combinations(range(1, n), r):
            total = total + W_nI(n, I).subs(imgs)
    return total.divide_by([Xv, Xv])


def eulerian_check(n: int, order: int) -> bool:
    if not 1 <= n <= 6:
        raise ValueError("need 1 <= n <= 6")
    Xv = var("X")
    R = R_ones_at_p1(n)
    E = eulerian_poly(n, "X").to_multipoly(Xv)
    ok = R == RationalFunction(E, (1 - Xv) ** (n + 1))
    ser = R.series(["X"], order)
    want = MultiPoly({(k,): (k + 1) ** n for k in range(order + 1)}, ("X",))
    ok = ok and ser.with_vars(("X",)) == want
    # (1-X)^2 R = sum over faces of (X/(1-X))^{|face|}
    fv = SimplicialComplex(n).f_vector()
    faces_sum = ClosedForm(0)
    for k, cnt in enumerate(fv):
        faces_sum = faces_sum + ClosedForm.from_factors(cnt * Xv ** k, [Xv] * k)
    return ok and (R * ClosedForm(1 - Xv) * ClosedForm(1 - Xv)) == faces_sum
