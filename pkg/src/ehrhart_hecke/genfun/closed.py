"""Rational functions whose denominators are products of binomials 1 - m.

Sums are taken over the least common multiple of the factor multisets, so
adding a few dozen Thm-D style terms never multiplies full denominators.
"""
from __future__ import annotations

from fractions import Fraction

from ..algebra import MultiPoly, RationalFunction
from ..algebra.fmt import _monomial_str, format_poly


def _key(m: MultiPoly) -> tuple:
    if not m.is_monomial():
        raise ValueError(f"denominator factor 1 - ({m}) is not a binomial")
    (e, c), = m.terms.items()
    return (c, tuple(sorted((v, x) for v, x in zip(m.vars, e) if x)))


def _mono(key: tuple) -> MultiPoly:
    c, pairs = key
    return MultiPoly.monomial(dict(pairs), c)


class ClosedForm:
    """``num / prod (1 - m)^k`` with each m a monomial (coefficient allowed)."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        self.num = MultiPoly.coerce(num)
        self.den = dict(den or {})

    @classmethod
    def from_factors(cls, num, monomials) -> "ClosedForm":
        den: dict = {}
        for m in monomials:
            k = _key(MultiPoly.coerce(m))
            den[k] = den.get(k, 0) + 1
        return cls(num, den)

    # arithmetic -------------------------------------------------------------
    def _lift(self, target: dict) -> MultiPoly:
        out = self.num
        for k, mult in target.items():
            extra = mult - self.den.get(k, 0)
            if extra:
                out = out * (1 - _mono(k)) ** extra
        return out

    def __add__(self, other):
        if not isinstance(other, ClosedForm):
            other = ClosedForm(other)
        target = dict(self.den)
        for k, m in other.den.items():
            target[k] = max(target.get(k, 0), m)
        return ClosedForm(self._lift(target) + other._lift(target), target)

    __radd__ = __add__

    def __mul__(self, other):
        if not isinstance(other, ClosedForm):
            return ClosedForm(self.num * MultiPoly.coerce(other), self.den)
        den = dict(self.den)
        for k, m in other.den.items():
            den[k] = den.get(k, 0) + m
        return ClosedForm(self.num * other.num, den)

    __rmul__ = __mul__

    def divide_by(self, monomials) -> "ClosedForm":
        """Divide by prod (1 - m) over the given monomials."""
        return self * ClosedForm.from_factors(1, monomials)

    def subs(self, mapping) -> "ClosedForm":
        """Substitution by monomial images; factors stay binomial."""
        num = MultiPoly.coerce(self.num.subs(mapping))
        den: dict = {}
        for k, mult in self.den.items():
            img = MultiPoly.coerce(_mono(k).subs(mapping))
            if img.is_constant():
                c = img.constant_value()
                if c == 1:
                    raise ZeroDivisionError("substitution kills a denominator factor")
                num = num * (Fraction(1) / (1 - Fraction(c))) ** mult
                continue
            kk = _key(img)
            den[kk] = den.get(kk, 0) + mult
        return ClosedForm(num, den)

    # views --------------------------------------------------------------------
    @property
    def factors(self) -> list:
        """[(monomial m, multiplicity)] in a deterministic order."""
        return [(_mono(k), self.den[k]) for k in sorted(self.den, key=repr)]

    def denominator(self) -> MultiPoly:
        out = MultiPoly.const(1)
        for m, k in self.factors:
            out = out * (1 - m) ** k
        return out

    @property
    def rf(self) -> RationalFunction:
        return RationalFunction(self.num, self.denominator())

    def series(self, vars, order: int) -> MultiPoly:
        return self.rf.series(vars, order)

    def __eq__(self, other):
        if isinstance(other, ClosedForm):
            other = other.rf
        return self.rf == RationalFunction.coerce(other)

    __hash__ = None

    def __str__(self):
        n = format_poly(self.num)
        if not self.den:
            return n
        if len(self.num.terms) > 1:
            n = f"({n})"
        parts = []
        for m, k in self.factors:
            (e, c), = m.terms.items()
            body = _monomial_str(m.vars, e)
            if c != 1:
                body = f"{c}*{body}" if body else str(c)
            s = f"(1-{body})"
            parts.append(s if k == 1 else f"{s}^{k}")
        return f"{n}/({'*'.join(parts)})"

    def __repr__(self):
        return f"ClosedForm({self})"
