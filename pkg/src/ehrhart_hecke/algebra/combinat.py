"""q-combinatorics and symmetric-function helpers."""
from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterable, Sequence

from .poly import MultiPoly
from .unipoly import UniPoly


@lru_cache(maxsize=None)
def _qbinom(n: int, k: int, var: str) -> UniPoly:
    # prod_{i<k} (1 - q^{n-i}) / (1 - q^{i+1}), exact division each step
    num = UniPoly([1], var)
    den = UniPoly([1], var)
    for i in range(k):
        num = num * (UniPoly([1], var) - UniPoly.monomial(n - i, var))
        den = den * (UniPoly([1], var) - UniPoly.monomial(i + 1, var))
    return num.exact_div(den)


def gaussian_binomial(n: int, k: int, var: str = "q") -> UniPoly:
    """The q-binomial coefficient [n choose k]_q; zero outside 0 <= k <= n."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if k < 0 or k > n:
        return UniPoly([], var)
    return _qbinom(n, min(k, n - k), var)


def gaussian_multinomial(n: int, I: Iterable[int], var: str = "q") -> UniPoly:
    """Number of flags in F_q^n with dimension set I, as a polynomial in q.

    Entries equal to 0 or n are trivial and dropped.
    """
    I = sorted(set(I))
    for i in I:
        if i < 0 or i > n:
            raise ValueError(f"element {i} outside [0, {n}]")
    chain = [i for i in I if 0 < i < n] + [n]
    result = UniPoly([1], var)
    for lo, hi in zip(chain, chain[1:]):
        result = result * gaussian_binomial(hi, lo, var)
    return result


def eulerian_poly(n: int, var: str = "X") -> UniPoly:
    """sum over S_n of var^des(sigma), by literal enumeration."""
    if n < 1:
        raise ValueError("n must be >= 1")
    counts = [0] * n
    for sigma in permutations(range(n)):
        des = sum(1 for i in range(n - 1) if sigma[i] > sigma[i + 1])
        counts[des] += 1
    return UniPoly(counts, var)


def elementary_symmetric(k: int, vars: Sequence) -> MultiPoly:
    """e_k of the given variables (names or MultiPoly / scalar values)."""
    items = [MultiPoly.var(v) if isinstance(v, str) else MultiPoly.coerce(v) for v in vars]
    if k < 0 or k > len(items):
        return MultiPoly.const(0)
    total = MultiPoly.const(0)
    for combo in combinations(items, k):
        term = MultiPoly.const(1)
        for x in combo:
            term = term * x
        total = total + term
    return total


def q_int(n: int, q) -> object:
    """1 + q + ... + q^(n-1) evaluated at q."""
    return sum(q ** i for i in range(n))
