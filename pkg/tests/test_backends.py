import numpy as np
import pytest

from ehrhart_hecke import kernels
from ehrhart_hecke.hecke import similitude_lattices
from ehrhart_hecke.lattice import hnf_block, smith_exponents_batch, superlattices_p_index
from ehrhart_hecke.polytope import LatticePolytope, count_points_many, cross_polytope, cube

pytestmark = pytest.mark.skipif("numba" not in kernels.available_backends(), reason="numba missing")


def test_env_selection(monkeypatch):
    monkeypatch.setenv("EHL_BACKEND", "numpy")
    assert kernels.get().name == "numpy"
    monkeypatch.setenv("EHL_BACKEND", "numba")
    assert kernels.get().name == "numba"
    monkeypatch.setenv("EHL_DISABLE_NUMBA", "1")
    assert kernels.get().name == "numpy"
    with pytest.raises(ValueError):
        kernels.get("fortran")


@pytest.mark.parametrize("n,p,delta,contain", [
    (2, 3, (1, 2), -1), (3, 2, (2, 0, 1), -1), (3, 2, (1, 1, 1), 1), (4, 2, (2, 1, 1, 0), 2),
])
def test_hnf_enumeration(n, p, delta, contain):
    a = hnf_block(n, p, delta, contain, "numba")
    b = hnf_block(n, p, delta, contain, "numpy")
    assert a.shape == b.shape
    assert sorted(map(bytes, a.reshape(len(a), -1).astype(np.int64))) == \
        sorted(map(bytes, b.reshape(len(b), -1).astype(np.int64)))


def test_smith_exponents():
    mats = hnf_block(3, 3, (2, 1, 1), -1, "numpy")
    a = smith_exponents_batch(mats, 3, 5, "numba")
    b = smith_exponents_batch(mats, 3, 5, "numpy")
    assert np.array_equal(a, b)


def test_symplectic_filter():
    la, _ = similitude_lattices(2, 2, 1, None, "numba")
    lb, _ = similitude_lattices(2, 2, 1, None, "numpy")
    assert sorted(h.tolist() for h in la) == sorted(h.tolist() for h in lb)


@pytest.mark.parametrize("P", [cube(3), cross_polytope(3),
                               LatticePolytope([(0, 0), (1, 0), (0, 1), (2, 1)])], ids=str)
def test_point_counts(P):
    ts = [0, 1, 2, 3, 4]
    assert count_points_many(P, ts, None, "numba") == count_points_many(P, ts, None, "numpy")
    for L in list(superlattices_p_index(P.dim, 2, 2))[:5]:
        assert count_points_many(P, ts, L, "numba") == count_points_many(P, ts, L, "numpy")
