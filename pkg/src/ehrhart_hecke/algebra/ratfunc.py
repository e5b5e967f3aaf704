"""Rational functions over the Laurent polynomial ring."""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from .poly import MultiPoly, _is_scalar


class NotExpandableError(ValueError):
    pass


class RationalFunction:
    """num/den with den normalized to leading coefficient +1.

    No gcd cancellation is attempted; equality is decided by
    cross-multiplication.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        num = MultiPoly.coerce(num) if not isinstance(num, MultiPoly) else num
        den = MultiPoly.coerce(den) if not isinstance(den, MultiPoly) else den
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        _, lc = den.leading()
        if lc != 1:
            inv = Fraction(1) / Fraction(lc)
            num = num * inv
            den = den * inv
        self.num = num
        self.den = den

    @classmethod
    def coerce(cls, x) -> "RationalFunction":
        if isinstance(x, RationalFunction):
            return x
        return cls(x)

    def is_polynomial(self) -> bool:
        return self.den.is_monomial()

    def as_poly(self) -> MultiPoly:
        if not self.den.is_monomial():
            raise ValueError("denominator is not a unit")
        return self.num * self.den.inverse_monomial()

    # arithmetic ---------------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, RationalFunction):
            if isinstance(other, MultiPoly) or _is_scalar(other):
                other = RationalFunction(other)
            else:
                return NotImplemented
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        if not isinstance(other, RationalFunction):
            if isinstance(other, MultiPoly) or _is_scalar(other):
                other = RationalFunction(other)
            else:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, RationalFunction):
            if isinstance(other, MultiPoly) or _is_scalar(other):
                return RationalFunction(self.num * other, self.den)
            return NotImplemented
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunction":
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return RationalFunction(self.den, self.num)

    def __truediv__(self, other):
        if not isinstance(other, RationalFunction):
            other = RationalFunction(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return RationalFunction(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return RationalFunction(self.num ** k, self.den ** k)

    def __eq__(self, other):
        if not isinstance(other, RationalFunction):
            if isinstance(other, MultiPoly) or _is_scalar(other):
                other = RationalFunction(other)
            else:
                return NotImplemented
        return self.num * other.den == other.num * self.den

    __hash__ = None

    # substitution and expansion -------------------------------------------------
    def subs(self, mapping: Mapping[str, object]) -> "RationalFunction":
        n = self.num.subs(mapping)
        d = self.den.subs(mapping)
        if isinstance(d, RationalFunction) or isinstance(n, RationalFunction):
            return RationalFunction.coerce(n) / RationalFunction.coerce(d)
        return RationalFunction(n, d)

    def invert_vars(self, vars: Iterable[str]) -> "RationalFunction":
        vars = list(vars)
        return RationalFunction(self.num.invert_vars(vars), self.den.invert_vars(vars))

    def series(self, vars: Iterable[str], order: int) -> MultiPoly:
        return series_expand(self, vars, order)

    def __str__(self):
        from .fmt import format_ratfunc
        return format_ratfunc(self)

    def __repr__(self):
        return f"RationalFunction({self})"


def _split_constant(p: MultiPoly, idx: list[int]):
    const = {}
    rest = {}
    for e, c in p.terms.items():
        if any(e[i] for i in idx):
            rest[e] = c
        else:
            const[e] = c
    return MultiPoly(const, p.vars), MultiPoly(rest, p.vars)


def series_expand(f, vars: Iterable[str], order: int) -> MultiPoly:
    """Taylor expansion of ``f`` in ``vars`` truncated at total degree ``order``.

    The part of the denominator free of ``vars`` must be a unit (a single
    monomial in the remaining variables).
    """
    vars = list(vars)
    if isinstance(f, MultiPoly):
        f = RationalFunction(f)
    num, den = f.num, f.den
    vs = MultiPoly._union(num.vars, den.vars)
    vs = MultiPoly._union(vs, tuple(vars))
    num, den = num.with_vars(vs), den.with_vars(vs)
    idx = [vs.index(v) for v in vars]
    for p in (num, den):
        for e in p.terms:
            if any(e[i] < 0 for i in idx):
                raise NotExpandableError("negative exponent in an expansion variable")
    c0, rest = _split_constant(den, idx)
    if not c0.is_monomial():
        raise NotExpandableError("not expandable at origin")
    inv_c0 = c0.inverse_monomial()
    q = rest * inv_c0  # den = c0 (1 + q)
    # 1/(1+q) = sum (-q)^k; q has no constant term in vars so k <= order suffices
    inv = MultiPoly.const(1, vs)
    power = MultiPoly.const(1, vs)
    neg_q = -q
    for _ in range(order):
        power = (power * neg_q).truncate(vars, order)
        if power.is_zero():
            break
        inv = inv + power
    return (num.truncate(vars, order) * inv * inv_c0).truncate(vars, order)
