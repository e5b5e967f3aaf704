from math import comb, factorial

import pytest
from hypothesis import given, strategies as st

from ehrhart_hecke import fixtures
from ehrhart_hecke.algebra import MultiPoly, RationalFunction, var
from ehrhart_hecke.genfun import (
    ClosedForm, NoClosedFormError, R_closed, R_ones_at_p1, SimplicialComplex, W_nI,
    andrianov_sum, closed_series, corollary_B_check, eulerian_check, hs_bar_check, hs_closed,
    hs_enumerate, hs_enumerate_symbolic, hs_primitive, phi_map, primitive_direct, psi_nl,
    reciprocity_check, satake_truncation_check, sr_check, sr_hilbert, table_series_equal,
    zeta_A_closed, zeta_C_closed, zeta_check, zeta_series_bruteforce,
)
from ehrhart_hecke.lattice import sublattices_p_index
from ehrhart_hecke.polytope import LatticePolytope, cross_polytope, cube

x, y = var("x"), var("y")


# --- ClosedForm ---------------------------------------------------------------

def test_closed_form_sum_over_lcm():
    a = ClosedForm.from_factors(1, [x])
    b = ClosedForm.from_factors(x, [x, y])
    s = a + b
    assert s.rf == RationalFunction(1, 1 - x) + RationalFunction(x, (1 - x) * (1 - y))
    assert s.factors == [(x, 1), (y, 1)]
    assert s.denominator() == (1 - x) * (1 - y)


@given(st.integers(0, 4), st.integers(0, 4), st.integers(1, 3))
def test_closed_form_series_matches_rational_function(i, j, k):
    f = ClosedForm.from_factors(x ** i + y ** j, [x, x * y, y ** k])
    assert f.series(["x", "y"], 6) == f.rf.series(["x", "y"], 6)
    assert (f * f).rf == f.rf * f.rf


def test_closed_form_constant_factor_and_pole():
    f = ClosedForm.from_factors(1, [x * y])
    assert f.subs({"x": 2, "y": var("t")}).rf == RationalFunction(1, 1 - 2 * var("t"))
    with pytest.raises(ZeroDivisionError):
        f.subs({"x": 1, "y": 1})


def test_closed_form_str():
    assert str(ClosedForm.from_factors(1, [x, x])) == "1/((1-x)^2)"


# --- Hermite-Smith --------------------------------------------------------------

@pytest.mark.parametrize("n,p,N", [(2, 2, 4), (3, 3, 2), (4, 2, 2)])
def test_hs_table_counts_sublattices(n, p, N):
    t = hs_enumerate(n, p, N)
    for e in range(N + 1):
        total = sum(c for (mu, d), c in t.entries.items() if sum(d) == e)
        assert total == sum(1 for _ in sublattices_p_index(n, p, e))
    a, b = t.weighted_totals()
    assert a == b


def test_hs_enumerate_jobs_independent():
    assert hs_enumerate(3, 2, 3, jobs=1).entries == hs_enumerate(3, 2, 3, jobs=4).entries


@pytest.mark.parametrize("n,p", [(2, 2), (2, 3), (3, 2)])
def test_primitive_convolution_equals_direct_filter(n, p):
    for bound in ("delta", "nu"):
        conv = hs_primitive(hs_enumerate(n, p, 3, bound))
        direct = primitive_direct(n, p, 3, bound)
        keep = {k: v for k, v in conv.entries.items() if direct.in_range(*k)}
        assert keep == direct.entries


@pytest.mark.parametrize("p", [2, 3, 5])
def test_hs2_enumeration_matches_closed_form(p):
    assert table_series_equal(hs_enumerate(2, p, 6), hs_closed(2), p)


def test_hs2_symbolic():
    t = hs_enumerate_symbolic(2, 2)
    assert t.symbolic
    assert table_series_equal(t, hs_closed(2))


def test_hs1_closed():
    assert table_series_equal(hs_enumerate(1, 7, 5), hs_closed(1), 7)
    with pytest.raises(NotImplementedError):
        hs_closed(3)


# --- Satake ------------------------------------------------------------------

def test_phi_of_hs2_is_R2():
    f = phi_map(hs_primitive(hs_closed(2)), 2)
    den = (1 - var("x_0") * var("X")) * (1 - var("x_0") * var("x_1") * var("x_2") * var("X"))
    assert RationalFunction(f.num, f.den * den) == fixtures.R2_closed()
    assert R_closed(2) == fixtures.R2_closed()


def test_phi_rejects_foreign_variable():
    with pytest.raises(ValueError):
        phi_map(var("X_1") * var("Q"), 1)


@pytest.mark.parametrize("n", [2, 3])
@pytest.mark.parametrize("p", [2, 3])
def test_andrianov(n, p):
    for order in range(4):
        assert satake_truncation_check(n, p, order)


def test_andrianov_constant_term():
    assert andrianov_sum(2, 2, 0) == MultiPoly.const(1)


def test_psi_specialisation():
    f = var("x_0") * var("x_1") * var("x_2") * var("X")
    out = psi_nl(2, 1, f)
    assert out == var("p") ** 3 * var("t") ** 2


@pytest.mark.parametrize("n", [1, 2])
def test_corollary_B(n):
    for ell in range(2 * n + 1):
        assert corollary_B_check(n, ell)
    with pytest.raises(NoClosedFormError):
        corollary_B_check(3, 0)


# --- closed primitive series and W_{n,l} ----------------------------------------

@pytest.mark.parametrize("n,p,N", [(2, 2, 5), (2, 3, 5), (3, 2, 5), (3, 3, 4), (4, 2, 3)])
def test_hs_bar_matches_enumeration(n, p, N):
    assert hs_bar_check(n, p, N)


def test_W_nI_subset_check():
    with pytest.raises(ValueError):
        W_nI(3, [3])
    assert W_nI(1, []).rf == RationalFunction(1)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_W_fixtures(n):
    for ell in range(2 * n + 1):
        assert zeta_C_closed(n, ell) == fixtures.W_fixture(n, ell)


def test_zeta_C_range():
    with pytest.raises(ValueError):
        zeta_C_closed(2, 5)


# --- reciprocity ---------------------------------------------------------------

@pytest.mark.parametrize("kind", ["HS", "R"])
@pytest.mark.parametrize("n", [1, 2])
def test_reciprocity_closed(kind, n):
    assert reciprocity_check(kind, n)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_reciprocity_W(n):
    for ell in range(2 * n + 1):
        assert reciprocity_check("Z", n, ell)
        assert reciprocity_check("Z", n, ell, source="fixture")


def test_reciprocity_without_closed_form():
    with pytest.raises(NoClosedFormError):
        reciprocity_check("HS", 3)
    with pytest.raises(ValueError):
        reciprocity_check("Z", 2)


# --- zeta functions --------------------------------------------------------------

def test_zeta_A_closed():
    z = zeta_A_closed(2, 1)
    assert str(z) == "1/((1-p^1*t)^2)"
    assert z.shifts == [1, 1]
    assert str(zeta_A_closed(3, 0)) == "1/((1-p^0*t)*(1-p^1*t)*(1-p^2*t))"
    with pytest.raises(ValueError):
        zeta_A_closed(2, 3)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_zeta_A_bruteforce(n):
    polys = {1: [LatticePolytope([(0,), (1,)]), LatticePolytope([(0,), (3,)])],
             2: [cube(2), LatticePolytope([(0, 0), (2, 0), (0, 1), (1, 3)])],
             3: [cube(3), cross_polytope(3)]}[n]
    for ell in range(n + 1):
        res = zeta_check("A", n, ell, 2, polys, 3)
        assert res["match"] and res["independent"]


def test_zeta_C_n1_bruteforce():
    polys = [cube(2), LatticePolytope([(0, 0), (2, 0), (0, 1), (1, 3)])]
    for ell in range(3):
        res = zeta_check("C", 1, ell, 2, polys, 3)
        assert res["match"] and res["independent"]
    assert closed_series("C", 1, 1, 2, 3).coeff_strings() == ["1", "4", "12", "32"]


def test_zeta_dimension_checks():
    with pytest.raises(ValueError):
        zeta_series_bruteforce("A", 2, 1, 2, cube(3), 2)
    with pytest.raises(ValueError):
        zeta_series_bruteforce("C", 2, 1, 2, cube(3), 2)
    with pytest.raises(ValueError):
        zeta_series_bruteforce("B", 2, 1, 2, cube(2), 2)


# --- Stanley-Reisner and Eulerian --------------------------------------------------

def _stirling2(n, k):
    return sum((-1) ** j * comb(k, j) * (k - j) ** n for j in range(k + 1)) // factorial(k)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_face_numbers_are_ordered_set_partitions(n):
    fv = SimplicialComplex(n).f_vector()
    assert fv == [factorial(k + 1) * _stirling2(n, k + 1) for k in range(n)]


def test_sr_small_cases():
    assert sr_hilbert(1).rf == RationalFunction(1)
    x0, x1, x2, X = var("x_0"), var("x_1"), var("x_2"), var("X")
    a, b = x0 * x1 * X, x0 * x2 * X
    assert sr_hilbert(2).rf == RationalFunction(1) + RationalFunction(a, 1 - a) + RationalFunction(b, 1 - b)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_sr_against_satake(n):
    assert sr_check(n)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_eulerian(n):
    assert eulerian_check(n, 12)


def test_R_ones_at_p1_low_rank():
    X = var("X")
    assert R_ones_at_p1(1).rf == RationalFunction(1, (1 - X) ** 2)
    assert R_ones_at_p1(2).rf == RationalFunction(1 + X, (1 - X) ** 3)
