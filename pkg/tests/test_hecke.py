from fractions import Fraction

import numpy as np
import pytest

from ehrhart_hecke import fixtures
from ehrhart_hecke.algebra import gaussian_binomial
from ehrhart_hecke.hecke import (
    J_matrix, building_dot, building_json, building_values, eigen_check, hecke_act, nu_A,
    nu_C, nu_C_k0_formula, ring_multisets, similitude, tamagawa_check, type_c_diag, typeA_cosets,
    typeC_cosets,
)
from ehrhart_hecke.lattice import snf
from ehrhart_hecke.polytope import LatticePolytope, RatioUndefinedError, cross_polytope, cube

REEVE12 = LatticePolytope([(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 12)])
SKEW3 = LatticePolytope([(0, 0, 0), (2, 0, 0), (0, 1, 0), (0, 0, 1), (1, 2, 1)])
SKEW2 = LatticePolytope([(0, 0), (3, 0), (0, 1), (1, 2)])


@pytest.mark.parametrize("n", [1, 2, 3, 4])
@pytest.mark.parametrize("p", [2, 3])
def test_typeA_counts(n, p):
    for k in range(n + 1):
        assert len(typeA_cosets(n, p, k)) == gaussian_binomial(n, k)(p)


@pytest.mark.parametrize("p", [2, 3])
def test_typeC_counts(p):
    assert len(typeC_cosets(1, p, 0)) == p + 1
    assert len(typeC_cosets(1, p, 1)) == 1
    for k in (0, 1):
        assert len(typeC_cosets(2, p, k)) == fixtures.table1_value(k, 0, p)
    assert len(typeC_cosets(2, p, 2)) == 1


@pytest.mark.parametrize("n,p,k", [(1, 2, 0), (1, 3, 0), (2, 2, 0), (2, 2, 1), (2, 3, 0), (2, 2, 2)])
def test_typeC_reps_are_similitudes(n, p, k):
    cs = typeC_cosets(n, p, k)
    J = J_matrix(n).to_numpy()
    alpha = cs.alpha
    want = sorted(snf(np.diag(type_c_diag(n, k, p)).tolist()))
    for g in cs.reps:
        G = g.to_numpy()
        lhs = G @ J @ G.T
        assert np.array_equal(lhs, p ** alpha * J) or np.array_equal(lhs, -(p ** alpha) * J)
        assert similitude(g) in (p ** alpha, -(p ** alpha))
        assert sorted(snf(g)) == want


def test_typeC_labels_are_distinct():
    cs = typeC_cosets(2, 2, 1)
    assert len({h for h in cs.labels}) == len(cs)


def test_coset_json_roundtrip():
    from ehrhart_hecke.hecke import CosetSet

    cs = typeC_cosets(2, 2, 0)
    back = CosetSet.from_json(cs.to_json())
    assert back.labels == cs.labels and back.reps == cs.reps


@pytest.mark.parametrize("n", [1, 2, 3])
@pytest.mark.parametrize("p", [2, 3])
def test_nu_A_three_ways(n, p):
    polys = {1: [LatticePolytope([(0,), (2,)]), LatticePolytope([(-1,), (3,)])],
             2: [cube(2), SKEW2], 3: [cube(3), SKEW3]}[n]
    for k in range(n + 1):
        for ell in range(n + 1):
            want = nu_A(n, k, ell, p, "formula")
            assert nu_A(n, k, ell, p, "grassmannian") == want
            for P in polys:
                assert nu_A(n, k, ell, p, "action", P=P) == want


def test_nu_A_grassmannian_independent_of_U():
    U = [[1, 1, 0], [0, 1, 1]]
    assert nu_A(3, 1, 2, 3, "grassmannian", U=U) == nu_A(3, 1, 2, 3, "formula")
    with pytest.raises(ValueError):
        nu_A(3, 1, 2, 3, "grassmannian", U=[[1, 0, 0], [2, 0, 0]])


def test_nu_A_needs_polytope_for_action():
    with pytest.raises(ValueError):
        nu_A(2, 1, 1, 2, "action")


def test_ratio_undefined_when_coefficient_vanishes():
    with pytest.raises(RatioUndefinedError):
        nu_A(3, 1, 1, 2, "action", P=REEVE12)


@pytest.mark.parametrize("ell", [0, 1, 2])
def test_nu_C_n1(ell):
    for p in (2, 3):
        assert nu_C(1, 0, ell, p, cube(2)) == nu_C_k0_formula(1, ell, p)
        assert nu_C(1, 1, ell, p, cube(2)) == p ** ell


def test_nu_C_dimension_check():
    with pytest.raises(ValueError):
        nu_C(2, 0, 1, 2, cube(3))


def test_eigen_check_consistent_at_other_vertices():
    r = eigen_check(2, 2, 2, cross_polytope(4), ("C", 0), 2)
    assert r.consistent and r.matched_formula
    assert r.eigenvalue == fixtures.table1_value(0, 2, 2)
    assert r.to_json()["eigenvalue"] == str(r.eigenvalue)
    r = eigen_check(3, 3, 2, SKEW3, ("A", 2), 2)
    assert r.consistent and r.matched_formula


def test_hecke_act_dimension_check():
    with pytest.raises(ValueError):
        hecke_act(typeA_cosets(2, 2, 1), cube(3))


@pytest.mark.parametrize("name", ["P", "P'"])
def test_building_rings(name):
    fx = fixtures.FIGURE1[name]
    tree = building_values(2, fx["polytope"], 1, 3)
    rings = ring_multisets(tree)
    assert rings[0] == [fx["root"]]
    for r, vals in enumerate(fx["rings"], start=1):
        assert rings[r] == sorted(Fraction(v) for v in vals)


def test_building_tree_shape_and_export():
    tree = building_values(3, cube(2), 1, 2)
    assert [sum(1 for v in tree if v.depth == r) for r in range(3)] == [1, 4, 12]
    for v in tree[1:]:
        assert tree[v.parent].depth == v.depth - 1
    dot = building_dot(tree)
    assert dot.count("--") == len(tree) - 1
    assert len(building_json(tree)) == len(tree)


def test_building_needs_plane_polytope():
    with pytest.raises(ValueError):
        building_values(2, cube(3), 1, 1)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_tamagawa(n):
    for ell in range(n + 1):
        assert tamagawa_check(n, ell, 2, 3)


def test_tamagawa_order_check():
    with pytest.raises(ValueError):
        tamagawa_check(2, 1, 2, 0)
