"""Sparse multivariate Laurent polynomials with exact rational coefficients."""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Iterable, Mapping, Union

Coeff = Union[int, Fraction]


def norm_coeff(c) -> Coeff:
    """Return ``c`` as an int when integral, else as a reduced Fraction."""
    if isinstance(c, bool):
        return int(c)
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, _RationalABC):
        return norm_coeff(Fraction(c.numerator, c.denominator))
    raise TypeError(f"inexact coefficient {c!r}")


def _is_scalar(x) -> bool:
    return isinstance(x, _RationalABC)


class MultiPoly:
    """Immutable sparse Laurent polynomial.

    ``vars`` is the ordered variable registry; ``terms`` maps exponent tuples
    (aligned with ``vars``, negative entries allowed) to nonzero coefficients.
    Operands with different registries are aligned onto the union registry,
    keeping the left operand's order first.
    """

    __slots__ = ("vars", "terms", "_hash")

    def __init__(self, terms: Mapping[tuple, Coeff] | None = None, vars: Iterable[str] = ()):
        self.vars = tuple(vars)
        clean = {}
        if terms:
            nv = len(self.vars)
            for e, c in terms.items():
                if len(e) != nv:
                    raise ValueError("exponent length does not match registry")
                c = norm_coeff(c)
                if c:
                    clean[tuple(e)] = c
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict, vars: tuple) -> "MultiPoly":
        # terms must already be clean
        obj = object.__new__(cls)
        obj.vars = vars
        obj.terms = terms
        obj._hash = None
        return obj

    # construction ---------------------------------------------------------
    @classmethod
    def const(cls, c, vars: Iterable[str] = ()) -> "MultiPoly":
        vars = tuple(vars)
        return cls({(0,) * len(vars): c}, vars)

    @classmethod
    def var(cls, name: str, exp: int = 1) -> "MultiPoly":
        return cls({(exp,): 1}, (name,))

    @classmethod
    def monomial(cls, exps: Mapping[str, int], coeff=1) -> "MultiPoly":
        names = tuple(exps)
        return cls({tuple(exps[v] for v in names): coeff}, names)

    @classmethod
    def coerce(cls, x) -> "MultiPoly":
        if isinstance(x, MultiPoly):
            return x
        if _is_scalar(x):
            return cls.const(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to MultiPoly")

    # registry handling ----------------------------------------------------
    def with_vars(self, vars: tuple) -> "MultiPoly":
        """Re-key onto ``vars``, which must contain every variable in use."""
        if vars == self.vars:
            return self
        pos = {v: i for i, v in enumerate(vars)}
        idx = []
        for i, v in enumerate(self.vars):
            if v in pos:
                idx.append(pos[v])
            elif any(e[i] for e in self.terms):
                raise ValueError(f"variable {v} in use but missing from target registry")
            else:
                idx.append(None)
        nv = len(vars)
        out = {}
        for e, c in self.terms.items():
            ne = [0] * nv
            for i, k in enumerate(idx):
                if k is not None:
                    ne[k] = e[i]
            out[tuple(ne)] = c
        return MultiPoly._raw(out, tuple(vars))

    def used_vars(self) -> tuple:
        used = set()
        for e in self.terms:
            for i, x in enumerate(e):
                if x:
                    used.add(i)
        return tuple(v for i, v in enumerate(self.vars) if i in used)

    def compact(self) -> "MultiPoly":
        """Drop unused variables from the registry."""
        return self.with_vars(self.used_vars())

    @staticmethod
    def _union(a: tuple, b: tuple) -> tuple:
        if a == b:
            return a
        seen = set(a)
        return a + tuple(v for v in b if v not in seen)

    def _align(self, other: "MultiPoly"):
        if self.vars == other.vars:
            return self.vars, self.terms, other.terms
        vs = self._union(self.vars, other.vars)
        return vs, self.with_vars(vs).terms, other.with_vars(vs).terms

    # queries ----------------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def constant_value(self) -> Coeff:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return next(iter(self.terms.values()), 0)

    def coeff(self, exps: Mapping[str, int]) -> Coeff:
        pos = {v: i for i, v in enumerate(self.vars)}
        key = [0] * len(self.vars)
        for v, x in exps.items():
            if v not in pos:
                if x:
                    return 0
                continue
            key[pos[v]] = x
        return self.terms.get(tuple(key), 0)

    def items(self):
        """(exponent dict, coefficient) pairs in canonical order."""
        for e in self.sorted_exponents():
            yield {v: x for v, x in zip(self.vars, e) if x}, self.terms[e]

    def sorted_exponents(self) -> list:
        return sorted(self.terms, reverse=True)

    def leading(self):
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self.terms)
        return e, self.terms[e]

    def degree(self, var: str) -> int:
        if var not in self.vars or not self.terms:
            return 0
        i = self.vars.index(var)
        return max(e[i] for e in self.terms)

    def min_degree(self, var: str) -> int:
        if var not in self.vars or not self.terms:
            return 0
        i = self.vars.index(var)
        return min(e[i] for e in self.terms)

    def total_degree(self, vars: Iterable[str] | None = None) -> int:
        idx = self._indices(vars)
        return max((sum(e[i] for i in idx) for e in self.terms), default=0)

    def _indices(self, vars):
        if vars is None:
            return list(range(len(self.vars)))
        return [self.vars.index(v) for v in vars if v in self.vars]

    # arithmetic -------------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, MultiPoly):
            if _is_scalar(other):
                other = MultiPoly.const(other, self.vars)
            else:
                return NotImplemented
        vs, a, b = self._align(other)
        out = dict(a)
        for e, c in b.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = norm_coeff(s)
            else:
                out.pop(e, None)
        return MultiPoly._raw(out, vs)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw({e: -c for e, c in self.terms.items()}, self.vars)

    def __sub__(self, other):
        if _is_scalar(other):
            other = MultiPoly.const(other, self.vars)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            if _is_scalar(other):
                c0 = norm_coeff(other)
                if not c0:
                    return MultiPoly._raw({}, self.vars)
                return MultiPoly._raw({e: norm_coeff(c * c0) for e, c in self.terms.items()}, self.vars)
            return NotImplemented
        vs, a, b = self._align(other)
        out: dict = {}
        get = out.get
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                out[e] = get(e, 0) + c1 * c2
        return MultiPoly._raw({e: norm_coeff(c) for e, c in out.items() if c}, vs)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse_monomial() ** (-k)
        result = MultiPoly.const(1, self.vars)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def inverse_monomial(self) -> "MultiPoly":
        """Inverse of a single-term polynomial (a unit of the Laurent ring)."""
        if len(self.terms) != 1:
            raise ZeroDivisionError("only monomials are invertible in the Laurent ring")
        (e, c), = self.terms.items()
        return MultiPoly._raw({tuple(-x for x in e): norm_coeff(Fraction(1) / c)}, self.vars)

    def __truediv__(self, other):
        if _is_scalar(other):
            return self * (Fraction(1) / Fraction(other))
        if isinstance(other, MultiPoly) and other.is_monomial():
            return self * other.inverse_monomial()
        from .ratfunc import RationalFunction
        return RationalFunction(self, MultiPoly.coerce(other))

    def __rtruediv__(self, other):
        from .ratfunc import RationalFunction
        return RationalFunction(MultiPoly.coerce(other), self)

    # comparison -------------------------------------------------------------
    def __eq__(self, other):
        if _is_scalar(other):
            other = MultiPoly.const(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        _, a, b = self._align(other)
        return a == b

    def __hash__(self):
        if self._hash is None:
            key = []
            for e, c in self.terms.items():
                key.append((tuple((v, x) for v, x in zip(self.vars, e) if x), c))
            self._hash = hash(frozenset(key))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    # transformations --------------------------------------------------------
    def map_coeffs(self, f) -> "MultiPoly":
        return MultiPoly({e: f(c) for e, c in self.terms.items()}, self.vars)

    def truncate(self, vars: Iterable[str], order: int) -> "MultiPoly":
        """Keep terms of total degree <= ``order`` in ``vars``."""
        idx = self._indices(vars)
        return MultiPoly._raw(
            {e: c for e, c in self.terms.items() if sum(e[i] for i in idx) <= order}, self.vars
        )

    def subs(self, mapping: Mapping[str, object]):
        """Simultaneous substitution; a ring homomorphism.

        Images may be scalars, MultiPoly or RationalFunction.  A variable that
        occurs with a negative exponent needs an invertible image.  Returns a
        RationalFunction if any image is one, else a MultiPoly.
        """
        from .ratfunc import RationalFunction

        images = {}
        rf = False
        for v, img in mapping.items():
            if isinstance(img, RationalFunction):
                rf = True
            elif not isinstance(img, MultiPoly):
                img = MultiPoly.const(img)
            images[v] = img
        if not rf and all(img.is_monomial() or img.is_zero() for img in images.values()):
            return self._subs_monomial(images)
        if rf:
            images = {v: (img if isinstance(img, RationalFunction) else RationalFunction(img)) for v, img in images.items()}
        keep = tuple(v for v in self.vars if v not in images)
        keep_idx = [self.vars.index(v) for v in keep]
        sub_idx = [(self.vars.index(v), images[v]) for v in images if v in self.vars]
        cache: dict = {}

        def power(i, img, k):
            key = (i, k)
            if key not in cache:
                cache[key] = img ** k
            return cache[key]

        acc = None
        for e, c in self.terms.items():
            term = MultiPoly._raw({tuple(e[i] for i in keep_idx): c}, keep)
            if rf:
                term = RationalFunction(term)
            for i, img in sub_idx:
                if e[i]:
                    term = term * power(i, img, e[i])
            acc = term if acc is None else acc + term
        if acc is None:
            acc = MultiPoly._raw({}, keep)
            if rf:
                acc = RationalFunction(acc)
        return acc

    def _subs_monomial(self, images: dict) -> "MultiPoly":
        keep = tuple(v for v in self.vars if v not in images)
        extra = []
        for img in images.values():
            for v in img.vars:
                if v not in keep and v not in extra:
                    extra.append(v)
        out_vars = keep + tuple(extra)
        pos = {v: i for i, v in enumerate(out_vars)}
        plan = []  # (source index, target index or None, image exps, image coeff)
        for i, v in enumerate(self.vars):
            if v in images:
                img = images[v]
                if img.is_zero():
                    plan.append((i, "zero", None, None))
                    continue
                (ie, ic), = img.terms.items()
                vec = [(pos[w], x) for w, x in zip(img.vars, ie) if x]
                plan.append((i, "img", vec, ic))
            else:
                plan.append((i, "keep", pos[v], None))
        nv = len(out_vars)
        out: dict = {}
        for e, c in self.terms.items():
            ne = [0] * nv
            coef = c
            dead = False
            for i, kind, a, b in plan:
                x = e[i]
                if kind == "keep":
                    ne[a] += x
                elif not x:
                    continue
                elif kind == "zero":
                    if x < 0:
                        raise ZeroDivisionError("zero image for a negative exponent")
                    dead = True
                    break
                else:
                    if x < 0:
                        coef = coef * Fraction(1) / (Fraction(b) ** (-x))
                    else:
                        coef = coef * b ** x
                    for k, y in a:
                        ne[k] += y * x
            if dead:
                continue
            key = tuple(ne)
            out[key] = out.get(key, 0) + coef
        return MultiPoly._raw({e: norm_coeff(c) for e, c in out.items() if c}, out_vars)

    def evaluate(self, values: Mapping[str, object]):
        return self.subs(values)

    def invert_vars(self, vars: Iterable[str]) -> "MultiPoly":
        """Substitute v -> v^{-1} for each listed variable."""
        idx = set(self._indices(list(vars)))
        out = {tuple(-x if i in idx else x for i, x in enumerate(e)): c for e, c in self.terms.items()}
        return MultiPoly._raw(out, self.vars)

    def shift_to_polynomial(self) -> tuple["MultiPoly", dict]:
        """Multiply by a monomial so every exponent is >= 0 and some exponent per variable is 0.

        Returns the shifted polynomial and the monomial exponent dict applied.
        """
        if not self.terms:
            return self, {}
        shift = [min(e[i] for e in self.terms) for i in range(len(self.vars))]
        out = {tuple(x - s for x, s in zip(e, shift)): c for e, c in self.terms.items()}
        return MultiPoly._raw(out, self.vars), {v: -s for v, s in zip(self.vars, shift) if s}

    # output -------------------------------------------------------------------
    def __str__(self):
        from .fmt import format_poly
        return format_poly(self)

    def __repr__(self):
        return f"MultiPoly({self})"


def var(name: str) -> MultiPoly:
    return MultiPoly.var(name)


def variables(*names: str) -> list[MultiPoly]:
    return [MultiPoly.var(n) for n in names]


def const(c) -> MultiPoly:
    return MultiPoly.const(c)
