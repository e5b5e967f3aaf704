"""Published reference values: Table 1, the Figure 1 trees, the W_{n,l} closed
forms and the n = 2 Hermite-Smith / Satake series."""
from __future__ import annotations

from fractions import Fraction

from .algebra import MultiPoly, RationalFunction, UniPoly, var
from .polytope import LatticePolytope

FIG1_P = LatticePolytope([(0, 0), (1, 0), (0, 1), (2, 1)])
FIG1_P_PRIME = LatticePolytope([(0, 0), (1, 0), (0, 1), (1, 2), (3, 3), (4, 1)])

# root value and the multiset of values on rings 1..3 (p = 2, l = 1)
FIGURE1 = {
    "P": {
        "polytope": FIG1_P,
        "root": Fraction(5, 2),
        "rings": [[3, 4, 3], [4, 3, 7, 4, 4, 3], [6, 4, 3, 3, 13, 7, 4, 4, 6, 4, 3, 3]],
    },
    "P'": {
        "polytope": FIG1_P_PRIME,
        "root": Fraction(3),
        "rings": [[4, 4, 4], [5] * 6, [7, 5, 7, 5, 7, 5, 5, 7, 7, 5, 7, 5]],
    },
}

# nu^C_{2,k,l}(p) as coefficient lists in p (index = power of p)
TABLE1 = {
    (0, 4): [0, 0, 1, 1, 1, 1],
    (0, 3): [0, 0, 1, 2, 1],
    (0, 2): [0, 0, 2, 2],
    (0, 1): [0, 1, 2, 1],
    (0, 0): [1, 1, 1, 1],
    (1, 4): [0, 0, 0, 0, 0, 1, 1, 1, 1],
    (1, 3): [0, 0, 0, -1, 2, 1, 2],
    (1, 2): [0, 0, -1, 1, 3, 1],
    (1, 1): [0, -1, 2, 1, 2],
    (1, 0): [0, 1, 1, 1, 1],
}


def table1_poly(k: int, ell: int) -> UniPoly:
    return UniPoly(TABLE1[(k, ell)], "p")


def table1_value(k: int, ell: int, p: int) -> int:
    return table1_poly(k, ell)(p)


def _factor(exp_x: int, exp_y: int = 1) -> MultiPoly:
    return 1 - var("X") ** exp_x * var("Y") ** exp_y


def _prod(factors) -> MultiPoly:
    out = MultiPoly.const(1)
    for f in factors:
        out = out * f
    return out


def W_fixture(n: int, ell: int) -> RationalFunction:
    """W_{n,l}(X, Y) as printed, for n in 1..4 and 0 <= l <= 2n."""
    if not 0 <= ell <= 2 * n:
        raise ValueError("need 0 <= l <= 2n")
    X, Y = var("X"), var("Y")
    if n == 1:
        return RationalFunction(MultiPoly.const(1), _factor(1) * _factor(ell))
    if n == 2:
        num = 1 - X ** (2 + ell) * Y ** 2
        den = _prod([_factor(2), _factor(3), _factor(ell), _factor(ell + 1)])
        return RationalFunction(num, den)
    if n == 3:
        A = X ** (7 + ell) + 2 * X ** (6 + ell) + 2 * X ** (4 + ell) + X ** (3 + ell)
        num = (1 + (X ** (1 + ell) + X ** 4) * Y - A * Y ** 2
               + (X ** (6 + 2 * ell) + X ** (9 + ell)) * Y ** 3 + X ** (10 + 2 * ell) * Y ** 4)
        den = _prod([_factor(a) for a in (3, 5, 6, ell, 2 + ell, 3 + ell)])
        return RationalFunction(num, den)
    if n == 4:
        return RationalFunction(N4(ell), _prod([_factor(a) for a in
                                                (4, 7, 9, 10, ell, 3 + ell, 5 + ell, 6 + ell)]))
    raise ValueError("fixtures exist for n <= 4 only")


def _xs(*pairs) -> MultiPoly:
    """sum of c * X^e over (c, e) pairs."""
    X = var("X")
    out = MultiPoly.const(0)
    for c, e in pairs:
        out = out + c * X ** e
    return out


def N4(ell: int) -> MultiPoly:
    Y = var("Y")
    l = ell
    y1 = _xs((1, 5), (1, 6), (1, 7), (1, 8), (1, 1 + l), (1, 2 + l), (1, 3 + l), (1, 4 + l))
    y2 = _xs((1, 13), (-1, 4 + l), (-2, 5 + l), (-2, 6 + l), (-2, 7 + l), (-2, 8 + l),
             (-2, 9 + l), (-3, 10 + l), (-2, 11 + l), (-2, 12 + l), (-2, 13 + l),
             (-1, 14 + l), (1, 5 + 2 * l))
    y3 = _xs((1, 14 + l), (-1, 18 + l), (1, 10 + 2 * l), (-1, 14 + 2 * l))
    y4 = _xs((1, 23 + l), (-1, 14 + 2 * l), (-2, 15 + 2 * l), (-2, 16 + 2 * l),
             (-2, 17 + 2 * l), (-3, 18 + 2 * l), (-2, 19 + 2 * l), (-2, 20 + 2 * l),
             (-2, 21 + 2 * l), (-2, 22 + 2 * l), (-2, 23 + 2 * l), (-1, 24 + 2 * l),
             (1, 15 + 3 * l))
    y5 = _xs((1, 24 + 2 * l), (1, 25 + 2 * l), (1, 26 + 2 * l), (1, 27 + 2 * l),
             (1, 20 + 3 * l), (1, 21 + 3 * l), (1, 22 + 3 * l), (1, 23 + 3 * l))
    y6 = _xs((1, 28 + 3 * l))
    return 1 + y1 * Y + y2 * Y ** 2 + y3 * Y ** 3 - y4 * Y ** 4 - y5 * Y ** 5 - y6 * Y ** 6


def HS2_closed() -> RationalFunction:
    """HS_{2,p}(X, Y) in the variables p, X_1, X_2, Y_1, Y_2."""
    p, X1, X2, Y1, Y2 = (var(v) for v in ("p", "X_1", "X_2", "Y_1", "Y_2"))
    num = 1 - X1 ** 2 * Y1 * Y2
    den = (1 - X1 * Y1) * (1 - p * X1 * Y2) * (1 - X2 * Y1 * Y2)
    return RationalFunction(num, den)


def R2_closed() -> RationalFunction:
    """R_{2,p}(x, X) in the variables p, x_0, x_1, x_2, X."""
    p, x0, x1, x2, X = (var(v) for v in ("p", "x_0", "x_1", "x_2", "X"))
    num = 1 - p ** -1 * x0 ** 2 * x1 * x2 * X ** 2
    den = (1 - x0 * X) * (1 - x0 * x1 * X) * (1 - x0 * x2 * X) * (1 - x0 * x1 * x2 * X)
    return RationalFunction(num, den)
