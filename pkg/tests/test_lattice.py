import random

import pytest
from hypothesis import given, strategies as st

from ehrhart_hecke.algebra import var
from ehrhart_hecke.lattice import (
    IntMatrix, PLattice, SingularMatrixError, hnf, minimal_rep, random_unimodular,
    smith_increments, snf, sublattices_p_index, superlattices_p_index, vp,
)


def _in_rowspan(H, v):
    """Back-substitution against an upper-triangular basis."""
    x = list(v)
    for i in range(H.n_rows):
        d = H[i, i]
        if x[i] % d:
            return False
        c = x[i] // d
        x = [a - c * b for a, b in zip(x, H.rows[i])]
    return not any(x)


def _zeta_count(n, p, e):
    """Coefficient of t^e in prod_{k<n} 1/(1 - p^k t): sublattices of index p^e."""
    coeffs = [1] + [0] * e
    for k in range(n):
        for i in range(1, e + 1):
            coeffs[i] += p ** k * coeffs[i - 1]
    return coeffs[e]


def test_hnf_identity():
    H, U = hnf(IntMatrix.identity(3))
    assert H == IntMatrix.identity(3) and U == IntMatrix.identity(3)


@given(st.integers(0, 10 ** 6))
def test_hnf_det12(seed):
    rng = random.Random(seed)
    D = IntMatrix.diag(rng.choice([[1, 1, 12], [1, 2, 6], [1, 3, 4], [2, 2, 3]]))
    m = IntMatrix(random_unimodular(3, rng).to_numpy() @ D.to_numpy() @ random_unimodular(3, rng).to_numpy())
    H, U = hnf(m)
    diag = [H[i, i] for i in range(3)]
    assert all(d > 0 for d in diag) and diag[0] * diag[1] * diag[2] == 12
    assert H.is_upper_triangular()
    for j in range(3):
        assert all(0 <= H[i, j] < H[j, j] for i in range(j))
    assert IntMatrix(U.to_numpy() @ m.to_numpy()) == H
    assert all(_in_rowspan(H, r) for r in m.rows)
    assert hnf(H)[0] == H


def test_hnf_singular():
    with pytest.raises(SingularMatrixError):
        hnf([[1, 2], [2, 4]])


@pytest.mark.parametrize("m,expected", [
    ([[1, 0, 0, 0], [0, 2, 0, 0], [0, 0, 4, 0], [0, 0, 0, 2]], [1, 2, 2, 4]),
    ([[2, 1], [0, 3]], [1, 6]),
    ([[1, 0], [0, 1]], [1, 1]),
])
def test_snf_examples(m, expected):
    assert snf(m) == expected


@given(st.integers(0, 10 ** 6))
def test_snf_is_unimodular_invariant(seed):
    rng = random.Random(seed)
    d = sorted(rng.choice([1, 2, 3, 4, 6]) for _ in range(3))
    m = IntMatrix.diag(d)
    u, w = random_unimodular(3, rng), random_unimodular(3, rng)
    g = IntMatrix(u.to_numpy() @ m.to_numpy() @ w.to_numpy())
    out = snf(g)
    assert all(b % a == 0 for a, b in zip(out, out[1:]))
    assert out[0] * out[1] * out[2] == abs(g.det())
    assert out == snf(m)


def test_vp():
    assert vp(48, 2) == 4 and vp(7, 2) == 0
    with pytest.raises(ValueError):
        vp(0, 2)


@pytest.mark.parametrize("n,p,e", [(2, 2, 1), (2, 2, 2), (2, 3, 3), (3, 2, 2), (3, 3, 2), (4, 2, 2)])
def test_sublattice_counts(n, p, e):
    assert sum(1 for _ in sublattices_p_index(n, p, e)) == _zeta_count(n, p, e)


def test_sublattice_examples():
    assert len(list(sublattices_p_index(2, 2, 1))) == 3
    assert len(list(sublattices_p_index(2, 2, 2))) == 7
    (z,) = list(sublattices_p_index(2, 5, 0))
    assert z.basis == IntMatrix.identity(2)


def test_sublattice_count_from_closed_hs2():
    from ehrhart_hecke.genfun import hs_closed

    t = var("t")
    f = hs_closed(2).subs({"p": 3, "X_1": 1, "X_2": 1, "Y_1": t, "Y_2": t})
    ser = f.series(["t"], 5)
    for e in range(6):
        assert ser.coeff({"t": e}) == sum(1 for _ in sublattices_p_index(2, 3, e))


@pytest.mark.parametrize("n,p,e", [(2, 2, 3), (2, 3, 2), (3, 2, 2), (3, 3, 1)])
def test_plattice_invariants(n, p, e):
    for L in sublattices_p_index(n, p, e):
        prod = 1
        for i in range(n):
            prod *= L.basis[i, i]
        assert prod == p ** L.index_exp == p ** e
        assert snf(L.basis) == [p ** v for v in L.nu]
        assert hnf(L.basis)[0] == L.basis
        assert L.mu == smith_increments(L.nu)


def test_enumeration_is_deterministic():
    a = [L.dumps() for L in sublattices_p_index(3, 2, 3)]
    b = [L.dumps() for L in sublattices_p_index(3, 2, 3)]
    assert a == b


@pytest.mark.parametrize("n", [1, 2, 3])
@pytest.mark.parametrize("p", [2, 3])
def test_duality_counts(n, p):
    for e in range(5 if n < 3 or p == 2 else 3):
        subs = sum(1 for _ in sublattices_p_index(n, p, e))
        sups = list(superlattices_p_index(n, p, e))
        assert len(sups) == subs
        assert len({L.dumps() for L in sups}) == subs


def test_superlattices_index_two():
    # L = 1/2 rowspan(B); a half-vector w lies in L iff 2w lies in rowspan(B)
    wanted = [(1, 0), (0, 1), (1, 1)]
    seen = []
    for L in superlattices_p_index(2, 2, 1):
        assert L.denominator_exp == 1
        assert _in_rowspan(L.basis, (2, 0)) and _in_rowspan(L.basis, (0, 2))
        hits = [w for w in wanted if _in_rowspan(L.basis, w)]
        assert len(hits) == 1
        seen.append(hits[0])
    assert sorted(seen) == sorted(wanted)


def test_minimal_rep():
    L = PLattice.from_basis([[2, 0], [0, 2]], 2)
    assert minimal_rep(L).basis == IntMatrix.identity(2)
    L = PLattice.from_basis([[4, 0], [0, 2]], 2)
    assert minimal_rep(L).basis.tolist() == [[2, 0], [0, 1]]
    for L in sublattices_p_index(2, 2, 4):
        m = minimal_rep(L)
        assert min(m.nu) == 0
        assert minimal_rep(m) == m


def test_smith_increments():
    assert smith_increments((0, 1, 3)) == (2, 1, 0)
    with pytest.raises(ValueError):
        smith_increments((2, 1))
    with pytest.raises(ValueError):
        smith_increments((-1, 0))


def test_plattice_json_roundtrip():
    for L in sublattices_p_index(3, 3, 2):
        assert PLattice.from_json(L.to_json()) == L
