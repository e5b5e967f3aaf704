"""Exact algebra: Laurent polynomials, rational functions, q-combinatorics."""
from fractions import Fraction as Rational

from .combinat import elementary_symmetric, eulerian_poly, gaussian_binomial, gaussian_multinomial
from .fmt import ParseError, format_factored, format_poly, parse
from .poly import MultiPoly, const, var, variables
from .ratfunc import NotExpandableError, RationalFunction, series_expand
from .subst import SubstitutionMap
from .unipoly import UniPoly, lagrange_interpolate


def poly_arith(a: MultiPoly, b: MultiPoly, op: str) -> MultiPoly:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


def rf_equal(f, g) -> bool:
    return RationalFunction.coerce(f) == RationalFunction.coerce(g)


__all__ = [
    "Rational", "MultiPoly", "RationalFunction", "UniPoly", "SubstitutionMap",
    "var", "variables", "const", "parse", "format_poly", "format_factored", "ParseError",
    "series_expand", "NotExpandableError", "lagrange_interpolate",
    "gaussian_binomial", "gaussian_multinomial", "eulerian_poly", "elementary_symmetric",
    "poly_arith", "rf_equal",
]
