"""The closed formula for the primitive Hermite-Smith series at Y_1..Y_{n-1} = 1
and the resulting type-C zeta functions W_{n,l}(X, Y).

Second sum, k-th term: (1 - Z^{-i_k}) G_k / (1 - Z^{i_k(n-i_k-1)} X_{i_k})
times sum_{m=k+1}^{l+1} Z^{-(n-i_m)} binom(n-1, I^(m))_{1/Z}.  The Gaussian
multinomial is indexed by m inside the inner sum; with it outside (indexed by
k+1) the series disagrees with lattice enumeration from n = 4 on.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from math import comb

from ..algebra import MultiPoly, gaussian_multinomial, var
from .closed import ClosedForm


def _gm(n: int, I, Zinv: MultiPoly) -> MultiPoly:
    return gaussian_multinomial(n, I, "q").to_multipoly(Zinv)


def _G(Z, Xs, Yv, n, I, k) -> ClosedForm:
    """prod_{j<k} a_j/(1-a_j) * prod_{j>=k} b_j/(1-b_j), 1-based k."""
    num = MultiPoly.const(1)
    dens = []
    for j, i in enumerate(I, start=1):
        if j < k:
            m = Z ** (i * (n - i - 1)) * Xs[i]
        else:
            m = Z ** (i * (n - i)) * Xs[i] * Yv
        num = num * m
        dens.append(m)
    return ClosedForm.from_factors(num, dens)


def _I_k(I, k) -> list:
    return [i for j, i in enumerate(I, start=1) if j < k] + \
           [i - 1 for j, i in enumerate(I, start=1) if j >= k]


def W_nI(n: int, I) -> ClosedForm:
    """W_{n,I}(Z, X, Y) for I a subset of [n-1]; i_{l+1} = n."""
    I = tuple(sorted(set(I)))
    if any(not 1 <= i <= n - 1 for i in I):
        raise ValueError("I must be a subset of [n-1]")
    Z, Yv = var("Z"), var("Y")
    Zinv = Z ** -1
    Xs = {i: var(f"X_{i}") for i in range(1, n)}
    ell = len(I)
    ii = I + (n,)  # ii[k-1] = i_k
    out = ClosedForm(0)
    for k in range(1, ell + 2):
        term = _G(Z, Xs, Yv, n, I, k)
        out = out + term * (Z ** (-(n - ii[k - 1])) * _gm(n - 1, _I_k(I, k), Zinv))
    for k in range(1, ell + 1):
        i_k = ii[k - 1]
        a_k = Z ** (i_k * (n - i_k - 1)) * Xs[i_k]
        # the multinomial sits inside the m-sum (index m); see module notes
        tail = MultiPoly.const(0)
        for m in range(k + 1, ell + 2):
            tail = tail + Z ** (-(n - ii[m - 1])) * _gm(n - 1, _I_k(I, m), Zinv)
        term = _G(Z, Xs, Yv, n, I, k).divide_by([a_k])
        out = out + term * ((1 - Z ** (-i_k)) * tail)
    return out


@lru_cache(maxsize=None)
def _hs_bar(n: int) -> ClosedForm:
    total = ClosedForm(0)
    for r in range(n):
        for I in combinations(range(1, n), r):
            total = total + W_nI(n, I)
    return total


def hs_bar_closed(n: int) -> ClosedForm:
    """HS^pr_n(X_1..X_n, 1, ..., 1, Y) in (Z, X_1..X_{n-1}, Y) with Z = p."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return _hs_bar(n)


def zeta_C_closed(n: int, ell: int) -> ClosedForm:
    """W_{n,l}(X, Y), with X = p and Y = p^{-ns}."""
    if not 0 <= ell <= 2 * n:
        raise ValueError("need 0 <= l <= 2n")
    Xv, Yv = var("X"), var("Y")
    imgs = {f"X_{i}": Xv ** (comb(i + 1, 2) + ell) * Yv for i in range(1, n + 1)}
    imgs["Y"] = Xv ** (-ell)
    imgs["Z"] = Xv
    body = hs_bar_closed(n).subs(imgs)
    return body.divide_by([Xv ** ell * Yv, Xv ** comb(n + 1, 2) * Yv])
