"""Finite-index p-power sublattices of Z^n and their (delta, nu, mu) signatures."""
from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import product
from typing import Iterator, Sequence

import numpy as np

from .. import kernels
from .matrix import IntMatrix, hnf, snf, vp

# largest modulus for which the int64 local Smith kernel cannot overflow
_INT64_SAFE_MOD = 3_000_000_000


def smith_increments(nu: Sequence[int]) -> tuple[int, ...]:
    """mu_i = nu_{n+1-i} - nu_{n-i} with nu_0 = 0."""
    nu = [int(v) for v in nu]
    if any(v < 0 for v in nu):
        raise ValueError("Smith exponents must be nonnegative")
    if any(a > b for a, b in zip(nu, nu[1:])):
        raise ValueError(f"Smith vector {nu} is not weakly increasing")
    ext = [0] + nu
    n = len(nu)
    return tuple(ext[n - i] - ext[n - i - 1] for i in range(n))


def _smith_from_matrix(m: IntMatrix, p: int) -> tuple[int, ...]:
    return tuple(vp(d, p) for d in snf(m))


@dataclass(frozen=True)
class PLattice:
    """A lattice p^{-denominator_exp} * rowspan(basis) with basis in HNF.

    ``delta``, ``nu`` and ``mu`` describe the integral lattice rowspan(basis).
    """

    n: int
    p: int
    basis: IntMatrix
    delta: tuple
    nu: tuple
    mu: tuple
    denominator_exp: int = 0

    @property
    def index_exp(self) -> int:
        return sum(self.delta)

    @classmethod
    def from_basis(cls, rows, p: int, denominator_exp: int = 0) -> "PLattice":
        h, _ = hnf(rows)
        n = h.n_rows
        delta = []
        for i in range(n):
            d = h[i, i]
            k = vp(d, p)
            if p ** k != d:
                raise ValueError("lattice index is not a power of p")
            delta.append(k)
        nu = _smith_from_matrix(h, p)
        return cls(n, p, h, tuple(delta), nu, smith_increments(nu), denominator_exp)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "p": self.p,
            "basis": self.basis.tolist(),
            "delta": list(self.delta),
            "nu": list(self.nu),
            "mu": list(self.mu),
            "denominator_exp": self.denominator_exp,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    @classmethod
    def from_json(cls, d: dict) -> "PLattice":
        lat = cls.from_basis(d["basis"], int(d["p"]), int(d.get("denominator_exp", 0)))
        for key in ("delta", "nu", "mu"):
            if key in d and tuple(d[key]) != getattr(lat, key):
                raise ValueError(f"inconsistent {key} in serialized lattice")
        return lat

    def dual(self) -> "PLattice":
        """The superlattice {x : basis x in Z^n} (only for integral lattices)."""
        if self.denominator_exp:
            raise ValueError("dual is defined here for integral lattices only")
        e, rows = dual_basis(self.basis, self.p, self.nu[-1] if self.nu else 0)
        return PLattice.from_basis(rows, self.p, e)

    def contains_point(self, v: Sequence[int]) -> bool:
        """Membership of an integer vector (scaled by p^denominator_exp)."""
        x = [int(a) * self.p ** self.denominator_exp for a in v]
        # back-substitution against the upper-triangular basis
        for i in range(self.n):
            d = self.basis[i, i]
            if x[i] % d:
                return False
            c = x[i] // d
            x = [a - c * b for a, b in zip(x, self.basis.rows[i])]
        return True


def dual_basis(h: IntMatrix, p: int, e: int) -> tuple[int, IntMatrix]:
    """(e, B) with {x : h x in Z^n} = p^{-e} rowspan(B), B an integral HNF.

    Requires p^e Z^n inside rowspan(h) so that p^e h^{-1} is integral.
    """
    det = h.det()
    adj = h.adjugate()
    scale = p ** e
    rows = []
    for j in range(h.n_cols):
        row = []
        for i in range(h.n_rows):
            num = scale * adj[i, j]
            if num % det:
                raise ValueError("exponent too small for the dual lattice")
            row.append(num // det)
        rows.append(row)
    # rows are the columns of p^e h^{-1}, i.e. rows of p^e h^{-T}
    return e, hnf(rows)[0]


@dataclass(frozen=True)
class HomothetyClass:
    rep: PLattice

    @classmethod
    def of(cls, lat: PLattice) -> "HomothetyClass":
        return cls(minimal_rep(lat))

    def __hash__(self):
        return hash(self.rep.basis)

    def __eq__(self, other):
        return isinstance(other, HomothetyClass) and self.rep.basis == other.rep.basis


def minimal_rep(lat: PLattice) -> PLattice:
    k = min(lat.nu) if lat.nu else 0
    if k == 0:
        return lat
    q = lat.p ** k
    rows = [[x // q for x in r] for r in lat.basis.rows]
    return PLattice.from_basis(rows, lat.p, lat.denominator_exp)


def compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Weak compositions in lexicographically decreasing order."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def smith_exponents_batch(mats: np.ndarray, p: int, M: int, backend=None) -> np.ndarray:
    """Local Smith exponents of many matrices; exact Python fallback for huge moduli."""
    if len(mats) == 0:
        return np.zeros((0, mats.shape[1] if mats.ndim == 3 else 0), dtype=np.int64)
    if p ** M <= _INT64_SAFE_MOD:
        K = kernels.get(backend)
        return np.asarray(K.smith_exponents(np.ascontiguousarray(mats, dtype=np.int64), p, M))
    out = np.array([[vp(d, p) for d in snf(m.tolist())] for m in mats], dtype=np.int64)
    return out


def hnf_block(n: int, p: int, delta: Sequence[int], contain: int = -1, backend=None) -> np.ndarray:
    """All HNF matrices with the given Hermite diagonal exponents (optionally
    restricted to lattices containing p^contain Z^n)."""
    K = kernels.get(backend)
    return np.asarray(K.enum_hnf(n, p, np.asarray(delta, dtype=np.int64), int(contain)))


def sublattice_arrays(n: int, p: int, e: int, backend=None):
    """Yield (delta, mats, nus) blocks covering all sublattices of index p^e."""
    for delta in compositions(e, n):
        mats = hnf_block(n, p, delta, -1, backend)
        nus = smith_exponents_batch(mats, p, e + 1, backend)
        yield delta, mats, nus


def containing_arrays(n: int, p: int, N: int, backend=None):
    """Yield (delta, mats, nus) blocks covering all L with p^N Z^n <= L <= Z^n."""
    for delta in product(range(N, -1, -1), repeat=n):
        mats = hnf_block(n, p, delta, N, backend)
        if len(mats) == 0:
            continue
        nus = smith_exponents_batch(mats, p, sum(delta) + 1, backend)
        yield tuple(delta), mats, nus


def _make(p, mat, delta, nu, denominator_exp=0) -> PLattice:
    nu_t = tuple(int(v) for v in nu)
    return PLattice(len(delta), p, IntMatrix(mat.tolist()), tuple(delta), nu_t,
                    smith_increments(nu_t), denominator_exp)


def sublattices_p_index(n: int, p: int, e: int, backend=None) -> Iterator[PLattice]:
    if e < 0:
        raise ValueError("index exponent must be nonnegative")
    for delta, mats, nus in sublattice_arrays(n, p, e, backend):
        for m, nu in zip(mats, nus):
            yield _make(p, m, delta, nu)


def superlattices_p_index(n: int, p: int, e: int, backend=None) -> Iterator[PLattice]:
    """Superlattices of Z^n of index p^e, as p^{-e'} * (integral HNF lattice)."""
    for sub in sublattices_p_index(n, p, e, backend):
        yield sub.dual()
