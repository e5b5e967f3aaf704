import importlib
import json

import pytest

from ehrhart_hecke import cli

OPERATIONS = [
    "poly_arith", "rf_equal", "series_expand", "gaussian_binomial", "gaussian_multinomial",
    "eulerian_poly", "elementary_symmetric", "lagrange_interpolate", "hnf", "snf",
    "sublattices_p_index", "superlattices_p_index", "minimal_rep", "smith_increments", "hrep",
    "transform", "count_points", "ehrhart", "ehrhart_identity_check", "typeA_cosets",
    "typeC_cosets", "hecke_act", "nu_A", "nu_C", "building_values", "eigen_check",
    "tamagawa_check", "hs_enumerate", "hs_primitive", "phi_map", "andrianov_sum", "W_nI",
    "hs_bar_closed", "psi_nl", "zeta_C_closed", "zeta_series_bruteforce", "zeta_A_closed",
    "reciprocity_check", "sr_hilbert", "eulerian_check", "run",
]
MODULES = ["algebra", "lattice", "polytope", "hecke", "genfun"]


@pytest.fixture
def figP(tmp_path):
    path = tmp_path / "figP.json"
    path.write_text(json.dumps({"vertices": [[0, 0], [1, 0], [0, 1], [2, 1]]}))
    return str(path)


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_every_operation_has_a_command():
    parser = cli.build_parser()
    sub = next(a for a in parser._actions if a.dest == "command")
    for op in OPERATIONS:
        assert op in cli.COMMAND_TABLE, op
        cmd = cli.COMMAND_TABLE[op].split()[0]
        assert cmd in sub.choices or cmd == "(all)", op
        if op != "run":
            assert any(hasattr(importlib.import_module(f"ehrhart_hecke.{m}"), op) for m in MODULES), op


def test_ehrhart_figure_polytope(capsys, figP):
    code, out, _ = run(capsys, "ehrhart", "--polytope", figP)
    assert code == 0
    assert json.loads(out)["coeffs"] == ["1", "5/2", "3/2"]


def test_numbers_are_strings(capsys, figP):
    _, out, _ = run(capsys, "ehrhart", "--polytope", figP, "--hrep", "--count", "2")
    data = json.loads(out)

    def walk(o):
        if isinstance(o, dict):
            for v in o.values():
                walk(v)
        elif isinstance(o, list):
            for v in o:
                walk(v)
        else:
            assert isinstance(o, (str, bool)) or o is None

    walk(data)
    assert data["count"] == "12"


def test_zeta_A_closed(capsys):
    code, out, _ = run(capsys, "zeta", "--type", "A", "--n", "2", "--ell", "1", "--closed")
    assert code == 0
    assert json.loads(out)["closed"] == "1/((1-p^1*t)^2)"


def test_zeta_series(capsys, figP):
    code, out, _ = run(capsys, "zeta", "--type", "C", "--n", "1", "--ell", "1", "--series", "3",
                       "--p", "2", "--polytope", figP)
    assert code == 0
    assert json.loads(out)["bruteforce"] == [["1", "4", "12", "32"]]


def test_hnf_and_snf(capsys):
    _, out, _ = run(capsys, "hnf", "--matrix", "[[4,1],[0,3]]")
    assert json.loads(out)["hnf"] == [["4", "1"], ["0", "3"]]
    _, out, _ = run(capsys, "snf", "--matrix", "[[2,1],[0,3]]")
    assert json.loads(out)["snf"] == ["1", "6"]
    _, out, _ = run(capsys, "snf", "--matrix", "[[1,0],[0,8]]", "--p", "2")
    assert json.loads(out)["mu"] == ["3", "0"]


def test_lattices(capsys):
    _, out, _ = run(capsys, "lattices", "--n", "2", "--p", "2", "--index", "2")
    assert json.loads(out)["count"] == "7"


def test_hecke_act(capsys, figP):
    code, out, _ = run(capsys, "hecke", "act", "--type", "A", "--n", "2", "--p", "2", "--k", "1",
                       "--polytope", figP, "--ell", "2")
    data = json.loads(out)
    assert code == 0
    assert data["reps_count"] == "3"
    assert data["eigenvalues"][0]["eigenvalue"] == "6"


def test_building_dot(capsys, figP):
    code, out, _ = run(capsys, "building", "--p", "2", "--polytope", figP, "--ell", "1",
                       "--radius", "1", "--format", "dot")
    assert code == 0
    assert out.startswith("graph building {") and 'label="5/2"' in out


def test_transform_check(capsys, figP):
    code, out, _ = run(capsys, "transform", "--matrix", "[[2,1],[0,1]]", "--polytope", figP, "--check")
    assert code == 0 and json.loads(out)["identity_holds"] is True


def test_hs_and_satake(capsys):
    code, out, _ = run(capsys, "hs", "closed", "--n", "1")
    assert code == 0 and json.loads(out)["closed"]
    code, out, _ = run(capsys, "satake", "--n", "2", "--p", "2", "--order", "2")
    assert code == 0 and json.loads(out)["matches_phi_of_enumeration"] is True


def test_check_fixtures_passes(capsys):
    code, out, _ = run(capsys, "check", "fixtures")
    data = json.loads(out)
    assert code == 0 and data["pass"]
    assert len(data["results"]) == 24 + 10 + 2


@pytest.mark.parametrize("suite", ["algebra", "reciprocity", "sr", "eulerian", "psi"])
def test_check_suites(capsys, suite):
    code, out, _ = run(capsys, "check", suite)
    assert code == 0 and json.loads(out)["pass"]


def test_failed_check_exits_1(capsys, monkeypatch):
    import ehrhart_hecke.genfun as G

    monkeypatch.setattr(G, "sr_check", lambda n: False)
    code, out, _ = run(capsys, "check", "sr")
    assert code == 1 and json.loads(out)["pass"] is False


def test_bad_input_exits_2(capsys, tmp_path):
    assert run(capsys, "hnf", "--matrix", "[[1,2")[0] == 2
    assert run(capsys, "hnf", "--matrix", "[[1,2],[3]]")[0] == 2
    assert run(capsys, "ehrhart", "--polytope", str(tmp_path / "missing.json"))[0] == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(capsys, "ehrhart", "--polytope", str(bad))[0] == 2
    bad.write_text('{"points": []}')
    assert run(capsys, "ehrhart", "--polytope", str(bad))[0] == 2
    assert run(capsys, "nonsense")[0] == 2
    assert run(capsys, "lattices", "--n", "x", "--p", "2", "--index", "1")[0] == 2


def test_math_error_exits_3(capsys, tmp_path):
    code, _, err = run(capsys, "hnf", "--matrix", "[[1,2],[2,4]]")
    assert code == 3 and "singular" in err
    flat = tmp_path / "flat.json"
    flat.write_text('{"vertices": [[0,0],[1,1],[2,2]]}')
    assert run(capsys, "ehrhart", "--polytope", str(flat))[0] == 3
    assert run(capsys, "satake", "--n", "3")[0] == 3


def test_output_is_deterministic_across_jobs(capsys, figP):
    args = ["hecke", "act", "--type", "C", "--n", "1", "--p", "3", "--k", "0", "--polytope", figP]
    _, a, _ = run(capsys, "--jobs", "1", *args)
    _, b, _ = run(capsys, "--jobs", "4", *args)
    _, c, _ = run(capsys, "--jobs", "4", *args)
    assert a == b == c
    _, a, _ = run(capsys, "--jobs", "1", "hs", "enumerate", "--n", "3", "--p", "2", "--N", "2")
    _, b, _ = run(capsys, "--jobs", "3", "hs", "enumerate", "--n", "3", "--p", "2", "--N", "2")
    assert a == b
