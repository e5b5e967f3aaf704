"""Dense univariate polynomials with rational coefficients."""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .poly import MultiPoly, norm_coeff


class UniPoly:
    """coeffs[i] is the coefficient of var^i; trailing zeros are trimmed."""

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs: Iterable = (), var: str = "T"):
        cs = [norm_coeff(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)
        self.var = var

    @classmethod
    def monomial(cls, k: int, var: str = "T", c=1) -> "UniPoly":
        return cls([0] * k + [c], var)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, i: int):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def _check(self, other):
        if isinstance(other, UniPoly):
            if other.coeffs and self.coeffs and other.var != self.var:
                raise ValueError("variable mismatch")
            return other
        return UniPoly([other], self.var)

    def __add__(self, other):
        other = self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly([self[i] + other[i] for i in range(n)], self.var)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs], self.var)

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._check(other)
        if not self.coeffs or not other.coeffs:
            return UniPoly([], self.var)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UniPoly(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        r = UniPoly([1], self.var)
        for _ in range(k):
            r = r * self
        return r

    def divmod(self, other: "UniPoly"):
        if not other.coeffs:
            raise ZeroDivisionError("division by zero polynomial")
        rem = [Fraction(c) for c in self.coeffs]
        q = [Fraction(0)] * max(len(rem) - len(other.coeffs) + 1, 0)
        lead = Fraction(other.coeffs[-1])
        for i in range(len(q) - 1, -1, -1):
            c = rem[i + len(other.coeffs) - 1] / lead
            q[i] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[i + j] -= c * b
        return UniPoly(q, self.var), UniPoly(rem, self.var)

    def exact_div(self, other: "UniPoly") -> "UniPoly":
        q, r = self.divmod(other)
        if r.coeffs:
            raise ArithmeticError("inexact polynomial division")
        return q

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs and (self.var == other.var or len(self.coeffs) <= 1)
        if isinstance(other, (int, Fraction)):
            return self.coeffs == UniPoly([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def to_multipoly(self, image: MultiPoly | None = None) -> MultiPoly:
        """Embed into MultiPoly, optionally substituting ``image`` for the variable."""
        if image is None:
            return MultiPoly({(i,): c for i, c in enumerate(self.coeffs)}, (self.var,))
        return MultiPoly({(i,): c for i, c in enumerate(self.coeffs)}, ("__u",)).subs({"__u": image})

    def coeff_strings(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    def __str__(self):
        return str(self.to_multipoly())

    def __repr__(self):
        return f"UniPoly({self}, var={self.var!r})"


def lagrange_interpolate(points: Sequence[tuple], var: str = "T") -> UniPoly:
    """Unique polynomial of degree < len(points) through ``points`` (exact)."""
    xs = [Fraction(x) for x, _ in points]
    if len(set(xs)) != len(xs):
        raise ValueError("duplicate abscissa")
    result = UniPoly([], var)
    for i, (xi, (_, yi)) in enumerate(zip(xs, points)):
        basis = UniPoly([1], var)
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if j != i:
                basis = basis * UniPoly([-xj, 1], var)
                denom *= xi - xj
        result = result + basis * (Fraction(yi) / denom)
    return result
