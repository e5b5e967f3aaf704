"""Exact integer matrices with Hermite and Smith normal forms (Python ints)."""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

import numpy as np


class SingularMatrixError(ValueError):
    pass


class IntMatrix:
    """Immutable integer matrix stored as a tuple of row tuples."""

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable[int]]):
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        if not rows or not rows[0]:
            raise ValueError("matrix dimensions must be positive")
        w = len(rows[0])
        if any(len(r) != w for r in rows):
            raise ValueError("ragged rows")
        self.rows = rows

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def diag(cls, entries: Sequence[int]) -> "IntMatrix":
        n = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def from_array(cls, a) -> "IntMatrix":
        return cls(np.asarray(a).tolist())

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    @property
    def n_cols(self) -> int:
        return len(self.rows[0])

    @property
    def shape(self):
        return self.n_rows, self.n_cols

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def tolist(self) -> list:
        return [list(r) for r in self.rows]

    def to_numpy(self) -> np.ndarray:
        return np.array(self.rows, dtype=np.int64)

    def transpose(self) -> "IntMatrix":
        return IntMatrix(zip(*self.rows))

    T = property(transpose)

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        cols = list(zip(*other.rows))
        return IntMatrix([[sum(a * b for a, b in zip(r, c)) for c in cols] for r in self.rows])

    def __mul__(self, k: int) -> "IntMatrix":
        return IntMatrix([[k * x for x in r] for r in self.rows])

    __rmul__ = __mul__

    def apply(self, v: Sequence[int]) -> tuple:
        """Matrix times column vector."""
        return tuple(sum(a * b for a, b in zip(r, v)) for r in self.rows)

    def __eq__(self, other):
        return isinstance(other, IntMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"IntMatrix({self.tolist()})"

    def det(self) -> int:
        return bareiss_det(self.rows)

    def adjugate(self) -> "IntMatrix":
        """adj(M) with M @ adj(M) = det(M) I."""
        n = self.n_rows
        if n == 1:
            return IntMatrix([[1]])
        out = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                minor = [r[:j] + r[j + 1:] for k, r in enumerate(self.rows) if k != i]
                out[j][i] = (-1) ** (i + j) * bareiss_det(minor)
        return IntMatrix(out)

    def inverse_fraction(self) -> list:
        d = self.det()
        if d == 0:
            raise SingularMatrixError("singular matrix")
        adj = self.adjugate()
        return [[Fraction(x, d) for x in r] for r in adj.rows]

    def is_upper_triangular(self) -> bool:
        return all(self.rows[i][j] == 0 for i in range(self.n_rows) for j in range(min(i, self.n_cols)))


def bareiss_det(rows) -> int:
    m = [list(r) for r in rows]
    n = len(m)
    if any(len(r) != n for r in m):
        raise ValueError("determinant of non-square matrix")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def _as_rows(m) -> list:
    if isinstance(m, IntMatrix):
        return [list(r) for r in m.rows]
    return [list(map(int, r)) for r in m]


def row_hnf(m) -> tuple[list, list]:
    """Row-style Hermite form of an arbitrary integer matrix.

    Returns (H, U) with U unimodular, U @ m = H, H in row echelon form with
    positive pivots, entries above each pivot reduced to [0, pivot), and
    zero rows last.
    """
    a = _as_rows(m)
    r = len(a)
    c = len(a[0]) if a else 0
    u = [[int(i == j) for j in range(r)] for i in range(r)]
    piv_row = 0
    pivots = []
    for col in range(c):
        if piv_row >= r:
            break
        # gcd-combine rows piv_row.. into a single pivot
        while True:
            nz = [i for i in range(piv_row, r) if a[i][col] != 0]
            if not nz:
                break
            i0 = min(nz, key=lambda i: abs(a[i][col]))
            if i0 != piv_row:
                a[piv_row], a[i0] = a[i0], a[piv_row]
                u[piv_row], u[i0] = u[i0], u[piv_row]
            done = True
            for i in range(piv_row + 1, r):
                if a[i][col]:
                    q = a[i][col] // a[piv_row][col]
                    a[i] = [x - q * y for x, y in zip(a[i], a[piv_row])]
                    u[i] = [x - q * y for x, y in zip(u[i], u[piv_row])]
                    if a[i][col]:
                        done = False
            if done:
                break
        if piv_row < r and a[piv_row][col] != 0:
            if a[piv_row][col] < 0:
                a[piv_row] = [-x for x in a[piv_row]]
                u[piv_row] = [-x for x in u[piv_row]]
            pv = a[piv_row][col]
            for i in range(piv_row):
                q = a[i][col] // pv
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[piv_row])]
                    u[i] = [x - q * y for x, y in zip(u[i], u[piv_row])]
            pivots.append(col)
            piv_row += 1
    return a, u


def hnf(m) -> tuple[IntMatrix, IntMatrix]:
    """Upper-triangular HNF of a nonsingular square matrix: (H, U) with U @ m = H."""
    mm = m if isinstance(m, IntMatrix) else IntMatrix(m)
    if mm.n_rows != mm.n_cols:
        raise ValueError("hnf needs a square matrix")
    if mm.det() == 0:
        raise SingularMatrixError("singular matrix")
    h, u = row_hnf(mm)
    return IntMatrix(h), IntMatrix(u)


def hnf_of_rows(rows) -> IntMatrix:
    """HNF basis (nonzero rows only) of the lattice spanned by ``rows``."""
    h, _ = row_hnf(rows)
    nz = [r for r in h if any(r)]
    return IntMatrix(nz)


def snf(m) -> list[int]:
    """Elementary divisors d_1 | d_2 | ... | d_n of a nonsingular square matrix."""
    a = _as_rows(m)
    n = len(a)
    if any(len(r) != n for r in a):
        raise ValueError("snf needs a square matrix")
    if bareiss_det(a) == 0:
        raise SingularMatrixError("singular matrix")
    for t in range(n):
        while True:
            # pivot: smallest nonzero entry of the trailing block
            best = None
            for i in range(t, n):
                for j in range(t, n):
                    if a[i][j] and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                        best = (i, j)
            i0, j0 = best
            a[t], a[i0] = a[i0], a[t]
            for row in a:
                row[t], row[j0] = row[j0], row[t]
            pv = a[t][t]
            clean = True
            for i in range(t + 1, n):
                q = a[i][t] // pv
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                if a[i][t]:
                    clean = False
            for j in range(t + 1, n):
                q = a[t][j] // pv
                if q:
                    for row in a:
                        row[j] -= q * row[t]
                if a[t][j]:
                    clean = False
            if not clean:
                continue
            # divisibility fix-up: pivot must divide the whole trailing block
            bad = next(
                ((i, j) for i in range(t + 1, n) for j in range(t + 1, n) if a[i][j] % pv),
                None,
            )
            if bad is None:
                break
            a[t] = [x + y for x, y in zip(a[t], a[bad[0]])]
    return [abs(a[i][i]) for i in range(n)]


def vp(x: int, p: int) -> int:
    """p-adic valuation of a nonzero integer."""
    if x == 0:
        raise ValueError("valuation of zero")
    x = abs(x)
    k = 0
    while x % p == 0:
        x //= p
        k += 1
    return k


def is_unimodular(m: IntMatrix) -> bool:
    return abs(m.det()) == 1


def random_unimodular(n: int, rng, steps: int = 12, bound: int = 2) -> IntMatrix:
    """Product of random elementary matrices (determinant +-1)."""
    a = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(steps):
        i, j = rng.sample(range(n), 2) if n > 1 else (0, 0)
        if n == 1:
            a[0][0] = -a[0][0]
            continue
        k = rng.randint(-bound, bound)
        a[i] = [x + k * y for x, y in zip(a[i], a[j])]
        if rng.random() < 0.2:
            a[i], a[j] = a[j], a[i]
    return IntMatrix(a)
