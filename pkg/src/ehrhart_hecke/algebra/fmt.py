"""Canonical text form of polynomials and rational functions, and its parser.

Terms print in descending lexicographic exponent order (registry order),
coefficients as ``a/b``, e.g. ``3/2*T^2 + 5/2*T + 1`` or ``X_1^-1*Y``.
"""
from __future__ import annotations

import re
from fractions import Fraction

from .poly import MultiPoly


def _monomial_str(vars, exps) -> str:
    parts = []
    for v, x in zip(vars, exps):
        if x == 1:
            parts.append(v)
        elif x:
            parts.append(f"{v}^{x}")
    return "*".join(parts)


def format_poly(p: MultiPoly) -> str:
    if p.is_zero():
        return "0"
    out = []
    for i, e in enumerate(p.sorted_exponents()):
        c = p.terms[e]
        mono = _monomial_str(p.vars, e)
        neg = c < 0
        a = -c if neg else c
        if mono:
            body = mono if a == 1 else f"{a}*{mono}"
        else:
            body = str(a)
        if i == 0:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


def format_ratfunc(f) -> str:
    if f.den.is_constant() and f.den.constant_value() == 1:
        return format_poly(f.num)
    return f"({format_poly(f.num)})/({format_poly(f.den)})"


def format_factored(num: MultiPoly, factors) -> str:
    """``num/((1-m1)^k1*(1-m2)^k2...)`` for a list of (binomial poly, multiplicity)."""
    parts = []
    for fac, k in factors:
        s = "(" + format_poly(fac).replace(" ", "") + ")"
        parts.append(s if k == 1 else f"{s}^{k}")
    n = format_poly(num)
    if len(num.terms) > 1:
        n = f"({n})"
    return f"{n}/({'*'.join(parts)})" if parts else n


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z][A-Za-z0-9_]*)|(\S))")


class ParseError(ValueError):
    pass


class _Parser:
    def __init__(self, text: str):
        self.toks = []
        pos = 0
        text = text.strip()
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if not m:
                raise ParseError(f"bad input at {pos}")
            num, name, op = m.groups()
            if num is not None:
                self.toks.append(("num", int(num)))
            elif name is not None:
                self.toks.append(("name", name))
            else:
                self.toks.append(("op", op))
            pos = m.end()
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self):
        t = self.peek()
        self.i += 1
        return t

    def expect(self, op):
        t = self.take()
        if t != ("op", op):
            raise ParseError(f"expected {op!r}, got {t[1]!r}")

    def parse(self):
        v = self.expr()
        if self.i != len(self.toks):
            raise ParseError(f"trailing input {self.peek()[1]!r}")
        return v

    def expr(self):
        from .ratfunc import RationalFunction

        v = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            w = self.term()
            v = _combine(v, w, op)
        return v

    def term(self):
        v = self.unary()
        while self.peek() in (("op", "*"), ("op", "/")):
            op = self.take()[1]
            w = self.unary()
            v = _combine(v, w, op)
        return v

    def unary(self):
        if self.peek() == ("op", "-"):
            self.take()
            return _combine(Fraction(0), self.unary(), "-")
        if self.peek() == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            sign = 1
            if self.peek() == ("op", "-"):
                self.take()
                sign = -1
            kind, k = self.take()
            if kind != "num":
                raise ParseError("exponent must be an integer")
            return _combine(base, sign * k, "^")
        return base

    def atom(self):
        kind, val = self.take()
        if kind == "num":
            return Fraction(val)
        if kind == "name":
            return MultiPoly.var(val)
        if (kind, val) == ("op", "("):
            v = self.expr()
            self.expect(")")
            return v
        raise ParseError(f"unexpected token {val!r}")


def _combine(a, b, op):
    from .ratfunc import RationalFunction

    if op == "^":
        if isinstance(a, Fraction):
            return a ** b
        if b < 0 and isinstance(a, MultiPoly) and not a.is_monomial():
            return RationalFunction(a) ** b
        return a ** b
    if op == "+":
        return a + b
    if op == "-":
        return a - b
    if op == "*":
        return a * b
    if op == "/":
        if isinstance(b, Fraction):
            return a / b
        if isinstance(b, MultiPoly) and b.is_monomial():
            return a * b.inverse_monomial()
        return RationalFunction.coerce(a if not isinstance(a, Fraction) else MultiPoly.const(a)) / b
    raise ParseError(op)


def parse(text: str):
    """Parse the canonical form back into a MultiPoly or RationalFunction."""
    from .ratfunc import RationalFunction

    v = _Parser(text).parse()
    if isinstance(v, Fraction):
        return MultiPoly.const(v)
    if isinstance(v, RationalFunction) and v.den.is_monomial():
        return v.as_poly()
    return v
