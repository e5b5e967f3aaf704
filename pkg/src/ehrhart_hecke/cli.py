"""Command-line entry point ``ehl``.

Output is JSON (numbers as exact strings) unless DOT is requested.  Exit codes:
0 success, 1 a requested check failed, 2 malformed input, 3 a mathematical
precondition failed.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import fixtures
from .algebra import (
    ParseError, UniPoly, eulerian_poly, elementary_symmetric, gaussian_binomial,
    gaussian_multinomial, lagrange_interpolate, parse, poly_arith, rf_equal, series_expand,
)
from .lattice import (
    IntMatrix, PLattice, hnf, minimal_rep, smith_increments, snf, sublattices_p_index,
    superlattices_p_index, vp,
)
from .polytope import (
    LatticePolytope, count_points, ehrhart, ehrhart_identity_check, hrep, transform,
)


class InputError(Exception):
    """Malformed flags or JSON (exit 2)."""


# operation -> subcommand that reaches it; kept in sync by a coverage test
COMMAND_TABLE = {
    "poly_arith": "check algebra",
    "rf_equal": "check algebra",
    "series_expand": "hs closed --expand",
    "gaussian_binomial": "check algebra",
    "gaussian_multinomial": "check algebra",
    "eulerian_poly": "check eulerian",
    "elementary_symmetric": "check algebra",
    "lagrange_interpolate": "ehrhart",
    "hnf": "hnf",
    "snf": "snf",
    "sublattices_p_index": "lattices",
    "superlattices_p_index": "lattices --super",
    "minimal_rep": "lattices --minimal",
    "smith_increments": "snf --p",
    "hrep": "ehrhart --hrep",
    "transform": "transform",
    "count_points": "ehrhart --count",
    "ehrhart": "ehrhart",
    "ehrhart_identity_check": "transform --check",
    "typeA_cosets": "hecke cosets --type A",
    "typeC_cosets": "hecke cosets --type C",
    "hecke_act": "hecke act",
    "nu_A": "check thm31",
    "nu_C": "hecke act --type C",
    "building_values": "building",
    "eigen_check": "hecke act",
    "tamagawa_check": "check tamagawa",
    "hs_enumerate": "hs enumerate",
    "hs_primitive": "hs enumerate --primitive",
    "phi_map": "satake",
    "andrianov_sum": "satake --n N --p P --order K",
    "W_nI": "hs closed --subset",
    "hs_bar_closed": "hs closed --bar",
    "psi_nl": "check psi",
    "zeta_C_closed": "zeta --type C --closed",
    "zeta_series_bruteforce": "zeta --series",
    "zeta_A_closed": "zeta --type A --closed",
    "reciprocity_check": "check reciprocity",
    "sr_hilbert": "check sr",
    "eulerian_check": "check eulerian",
    "run": "(all)",
}


# --- input helpers ------------------------------------------------------------

def _json_arg(text: str, what: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{what}: invalid JSON ({exc})") from None


def _load_polytope(path: str) -> LatticePolytope:
    try:
        if path == "-":
            data = json.load(sys.stdin)
        else:
            with open(path) as fh:
                data = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read polytope file: {exc}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"polytope file is not valid JSON ({exc})") from None
    if not isinstance(data, dict) or "vertices" not in data:
        raise InputError('polytope JSON must be {"vertices": [[int, ...], ...]}')
    verts = data["vertices"]
    if not isinstance(verts, list) or not all(
        isinstance(v, list) and all(isinstance(x, int) and not isinstance(x, bool) for x in v)
        for v in verts
    ):
        raise InputError("vertices must be a list of integer lists")
    return LatticePolytope(verts)


def _polytopes(args) -> list:
    paths = args.polytope or []
    if not paths:
        raise InputError("--polytope is required")
    return [_load_polytope(p) for p in paths]


def _matrix(text: str) -> IntMatrix:
    rows = _json_arg(text, "--matrix")
    if not isinstance(rows, list) or not rows or not all(
        isinstance(r, list) and all(isinstance(x, int) and not isinstance(x, bool) for x in r)
        for r in rows
    ):
        raise InputError("--matrix must be a JSON list of integer rows")
    if len({len(r) for r in rows}) != 1:
        raise InputError("--matrix rows have different lengths")
    return IntMatrix(rows)


def _frac_list(xs) -> list:
    return [str(Fraction(x)) for x in xs]


def _stringify(obj):
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, (int, Fraction)):
        return str(obj)
    if isinstance(obj, dict):
        return {k: _stringify(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_stringify(v) for v in obj]
    return str(obj)


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(_stringify(obj), indent=2) + "\n")


# --- commands -------------------------------------------------------------------

def cmd_ehrhart(args) -> int:
    P = _polytopes(args)[0]
    L = None
    if args.lattice:
        try:
            with open(args.lattice) as fh:
                L = PLattice.from_json(json.load(fh))
        except OSError as exc:
            raise InputError(f"cannot read lattice file: {exc}") from None
        except (json.JSONDecodeError, KeyError, TypeError) as exc:
            raise InputError(f"bad lattice JSON ({exc})") from None
    E = ehrhart(P, L, args.backend)
    out = {"coeffs": E.poly.coeff_strings(), "polynomial": str(E.poly)}
    if L is not None:
        out["lattice"] = E.lattice
    if args.count is not None:
        out["count"] = str(count_points(P, args.count, L, args.backend))
    if args.hrep:
        out["facets"] = [{"normal": list(f.normal), "offset": str(f.offset)} for f in hrep(P).facets]
    _emit(out)
    return 0


def cmd_transform(args) -> int:
    g = _matrix(args.matrix)
    P = _polytopes(args)[0]
    Q = transform(g, P)
    out = {"vertices": [list(v) for v in Q.vertices]}
    if args.check:
        ok = ehrhart_identity_check(g, P, args.backend)
        out["identity_holds"] = ok
        _emit(out)
        return 0 if ok else 1
    _emit(out)
    return 0


def cmd_hnf(args) -> int:
    H, U = hnf(_matrix(args.matrix))
    _emit({"hnf": H.tolist(), "unimodular": U.tolist()})
    return 0


def cmd_snf(args) -> int:
    m = _matrix(args.matrix)
    d = snf(m.tolist())
    out = {"snf": [str(x) for x in d]}
    if args.p:
        nu = [vp(x, args.p) for x in d]
        out["nu"] = [str(v) for v in nu]
        out["mu"] = [str(v) for v in smith_increments(nu)]
    _emit(out)
    return 0


def cmd_lattices(args) -> int:
    gen = superlattices_p_index if args.super else sublattices_p_index
    lats = list(gen(args.n, args.p, args.index, args.backend))
    if args.minimal:
        lats = [minimal_rep(L) for L in lats]
    _emit({"count": str(len(lats)), "lattices": [L.to_json() for L in lats]})
    return 0


def _cosets(kind, n, p, k, backend):
    from .hecke import typeA_cosets, typeC_cosets

    if kind == "A":
        return typeA_cosets(n, p, k, backend)
    return typeC_cosets(n, p, k, backend)


def cmd_hecke(args) -> int:
    from .hecke import eigen_check

    if args.action == "cosets":
        cs = _cosets(args.type, args.n, args.p, args.k, args.backend)
        _emit({"reps_count": str(len(cs)), "reps": [r.tolist() for r in cs.reps],
               "labels": [h.tolist() for h in cs.labels]})
        return 0
    P = _polytopes(args)[0]
    ells = [args.ell] if args.ell is not None else list(range(P.dim + 1))
    cs = _cosets(args.type, args.n, args.p, args.k, args.backend)
    reports = []
    acted = None
    for ell in ells:
        if ehrhart(P, None, args.backend).c(ell) == 0:
            reports.append({"ell": str(ell), "eigenvalue": None, "reason": "c_l(P) = 0"})
            continue
        r = eigen_check(args.n, args.p, ell, P, (args.type, args.k), args.vertices,
                        args.jobs, args.backend)
        acted = r.acted
        reports.append({"ell": str(ell), "eigenvalue": str(r.eigenvalue),
                        "vertex_eigenvalues": [str(v) for v in r.vertex_values],
                        "matched_formula": r.matched_formula, "consistent": r.consistent})
    if acted is None:
        from .hecke import hecke_act

        acted = hecke_act(cs, P, args.jobs, args.backend)
    _emit({"reps_count": str(len(cs)), "acted_poly": str(acted),
           "acted_coeffs": acted.coeff_strings(), "eigenvalues": reports})
    ok = all(r.get("consistent", True) and r.get("matched_formula") is not False for r in reports)
    return 0 if ok else 1


def cmd_building(args) -> int:
    from .hecke import building_dot, building_json, building_values

    P = _polytopes(args)[0]
    tree = building_values(args.p, P, args.ell, args.radius, args.backend)
    if args.format == "dot":
        sys.stdout.write(building_dot(tree))
    else:
        _emit(building_json(tree))
    return 0


def cmd_hs(args) -> int:
    from . import genfun as G

    if args.action == "enumerate":
        if args.symbolic:
            t = G.hs_enumerate_symbolic(args.n, args.N, args.bound, args.jobs, args.backend)
        else:
            if args.p is None:
                raise InputError("hs enumerate needs --p (or --symbolic)")
            t = G.hs_enumerate(args.n, args.p, args.N, args.bound, args.jobs, args.backend)
        if args.primitive:
            t = G.hs_primitive(t)
        _emit(t.to_json())
        return 0
    if args.subset is not None:
        I = _json_arg(args.subset, "--subset")
        f = G.W_nI(args.n, I)
    elif args.bar:
        f = G.hs_bar_closed(args.n)
    else:
        f = G.hs_closed(args.n)
        if args.primitive:
            f = G.hs_primitive(f)
    out = {"closed": str(f)}
    if args.expand is not None:
        rf = f.rf if isinstance(f, G.ClosedForm) else f
        xs = [v for v in sorted(set(rf.num.used_vars()) | set(rf.den.used_vars())) if v.startswith("X_")]
        out["series"] = str(series_expand(rf, xs, args.expand))
    _emit(out)
    return 0


def cmd_satake(args) -> int:
    from . import genfun as G

    out = {}
    if args.p is not None:
        order = 2 if args.order is None else args.order
        out["andrianov_sum"] = str(G.andrianov_sum(args.n, args.p, order, args.backend))
        out["matches_phi_of_enumeration"] = G.satake_truncation_check(args.n, args.p, order, args.backend)
        _emit(out)
        return 0 if out["matches_phi_of_enumeration"] else 1
    if args.n > 2:
        raise ValueError("closed R_n in all variables needs n <= 2; pass --p and --order for a truncation")
    out["R" + ("^pr" if args.prim else "")] = str(G.R_closed(args.n, primitive=args.prim))
    _emit(out)
    return 0


def cmd_zeta(args) -> int:
    from . import genfun as G

    if args.series is None:
        if args.type == "A":
            z = G.zeta_A_closed(args.n, args.ell)
            _emit({"closed": str(z), "shifts": [str(a) for a in z.shifts]})
        else:
            _emit({"closed": str(G.zeta_C_closed(args.n, args.ell))})
        return 0
    if args.p is None:
        raise InputError("--series needs --p")
    polys = _polytopes(args)
    res = G.zeta_check(args.type, args.n, args.ell, args.p, polys, args.series, args.jobs, args.backend)
    _emit({
        "closed_series": res["closed"].coeff_strings(),
        "bruteforce": [s.coeff_strings() for s in res["series"]],
        "polytope_independent": res["independent"],
        "match": res["match"],
    })
    return 0 if res["match"] and res["independent"] else 1


# --- checks ---------------------------------------------------------------------

def _check_algebra():
    out = []
    a, b = parse("X + 2*Y"), parse("X - Y")
    out.append(("poly_arith", poly_arith(a, b, "mul") == parse("X^2 + X*Y - 2*Y^2")))
    out.append(("rf_equal", rf_equal(parse("(1 - X^2)/(1 - X)"), parse("1 + X"))))
    ser = series_expand(parse("1/(1 - X)"), ["X"], 4)
    out.append(("series_expand", ser == parse("1 + X + X^2 + X^3 + X^4")))
    pascal = all(
        gaussian_binomial(n, k) == gaussian_binomial(n - 1, k - 1)
        + gaussian_binomial(n - 1, k) * UniPoly.monomial(k, "q")
        for n in range(1, 7) for k in range(1, n)
    )
    out.append(("gaussian_binomial q-Pascal", pascal))
    out.append(("gaussian_multinomial", gaussian_multinomial(3, [1, 2]) == gaussian_binomial(3, 1)
                * gaussian_binomial(2, 1)))
    e = elementary_symmetric(2, ["a", "b", "c"])
    out.append(("elementary_symmetric", e == parse("a*b + a*c + b*c")))
    poly = lagrange_interpolate([(0, 1), (1, 4), (2, 10)], "T")
    out.append(("lagrange_interpolate", poly == lagrange_interpolate([(0, 1), (1, 4), (2, 10), (3, 19)], "T")))
    return [{"name": n, "pass": bool(v)} for n, v in out]


def _check_fixtures(args):
    from . import genfun as G

    res = []
    for n in range(1, 5):
        for ell in range(2 * n + 1):
            res.append({"name": f"W_{n},{ell}", "pass": G.zeta_C_closed(n, ell) == fixtures.W_fixture(n, ell)})
    res += _check_table1(args)
    res += _check_figure1(args)
    return res


def _check_table1(args):
    from .hecke import nu_C
    from .polytope import cube

    P = cube(4)
    out = []
    for p in args.primes:
        for k in (0, 1):
            for ell in range(5):
                val = nu_C(2, k, ell, p, P, args.jobs, args.backend)
                want = fixtures.table1_value(k, ell, p)
                out.append({"name": f"table1 p={p} k={k} l={ell}", "value": str(val),
                            "expected": str(want), "pass": val == want})
    return out


def _check_figure1(args):
    from .hecke import building_values, ring_multisets

    out = []
    for name, fx in fixtures.FIGURE1.items():
        tree = building_values(2, fx["polytope"], 1, len(fx["rings"]), args.backend)
        rings = ring_multisets(tree)
        ok = rings[0] == [fx["root"]] and all(
            rings[r + 1] == sorted(Fraction(v) for v in vals) for r, vals in enumerate(fx["rings"])
        )
        out.append({"name": f"figure1 {name}", "pass": ok})
    return out


def _run_check(args):
    from . import genfun as G
    from .hecke import nu_A, tamagawa_check
    from .polytope import cube

    what = args.which
    if what == "algebra":
        return _check_algebra()
    if what == "fixtures":
        return _check_fixtures(args)
    if what == "table1":
        return _check_table1(args)
    if what == "figure1":
        return _check_figure1(args)
    if what == "andrianov":
        return [{"name": f"andrianov n={n} p={p} order={o}",
                 "pass": G.satake_truncation_check(n, p, o, args.backend)}
                for n in (2, 3) for p in (2, 3) for o in range(args.order + 1)]
    if what == "thmD":
        out = []
        for n in (2, 3):
            for p in (2, 3):
                out.append({"name": f"thmD n={n} p={p}", "pass": G.hs_bar_check(n, p, max(args.order, 5), args.backend)})
        return out
    if what == "reciprocity":
        out = [{"name": f"HS n={n}", "pass": G.reciprocity_check("HS", n)} for n in (1, 2)]
        out += [{"name": f"R n={n}", "pass": G.reciprocity_check("R", n)} for n in (1, 2)]
        out += [{"name": f"Z n={n} l={ell}", "pass": G.reciprocity_check("Z", n, ell)}
                for n in range(1, 5) for ell in range(2 * n + 1)]
        return out
    if what == "psi":
        return [{"name": f"psi n={n} l={ell}", "pass": G.corollary_B_check(n, ell)}
                for n in (1, 2) for ell in range(2 * n + 1)]
    if what == "eulerian":
        out = []
        for n in range(1, 6):
            out.append({"name": f"eulerian n={n}", "E_n": eulerian_poly(n).coeff_strings(),
                        "pass": G.eulerian_check(n, args.order if args.order > 3 else 12)})
        return out
    if what == "sr":
        return [{"name": f"sr n={n}", "hilbert": str(G.sr_hilbert(n)) if n <= 2 else None,
                 "pass": G.sr_check(n)} for n in range(1, 5)]
    if what == "tamagawa":
        return [{"name": f"tamagawa n={n} l={ell} p={p}",
                 "pass": tamagawa_check(n, ell, p, 3, None, "action", args.jobs, args.backend)}
                for n in (1, 2, 3) for ell in range(n + 1) for p in args.primes]
    if what == "thm31":
        out = []
        for n in (1, 2, 3):
            for k in range(n + 1):
                for ell in range(n + 1):
                    for p in args.primes:
                        vals = {m: nu_A(n, k, ell, p, m, P=cube(n), jobs=args.jobs, backend=args.backend)
                                for m in ("grassmannian", "formula", "action")}
                        out.append({"name": f"nu_A n={n} k={k} l={ell} p={p}",
                                    "value": str(vals["formula"]), "pass": len(set(vals.values())) == 1})
        return out
    raise InputError(f"unknown check {what!r}")


def cmd_check(args) -> int:
    results = _run_check(args)
    ok = all(r["pass"] for r in results)
    _emit({"check": args.which, "results": results, "pass": ok})
    return 0 if ok else 1


# --- parser -------------------------------------------------------------------

def _primes(text: str) -> list:
    try:
        vals = [int(x) for x in text.split(",") if x]
    except ValueError:
        raise argparse.ArgumentTypeError("expected a comma-separated list of primes") from None
    return vals


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="ehl", description="Ehrhart polynomials, Hecke operators and zeta functions.")
    ap.add_argument("--jobs", type=int, default=None, help="worker threads (default: all cores)")
    ap.add_argument("--backend", choices=["numba", "numpy"], default=None)
    sub = ap.add_subparsers(dest="command", required=True)

    s = sub.add_parser("ehrhart", help="Ehrhart polynomial of a polytope")
    s.add_argument("--polytope", action="append", required=True)
    s.add_argument("--lattice", help="PLattice JSON file")
    s.add_argument("--count", type=int, help="also count points of tP")
    s.add_argument("--hrep", action="store_true", help="also print facets")
    s.set_defaults(fn=cmd_ehrhart)

    s = sub.add_parser("transform", help="apply an integer matrix to a polytope")
    s.add_argument("--matrix", required=True)
    s.add_argument("--polytope", action="append", required=True)
    s.add_argument("--check", action="store_true", help="verify E(gP) = E^Lambda(P)")
    s.set_defaults(fn=cmd_transform)

    s = sub.add_parser("hnf", help="Hermite normal form of the row span")
    s.add_argument("--matrix", required=True)
    s.set_defaults(fn=cmd_hnf)

    s = sub.add_parser("snf", help="Smith normal form")
    s.add_argument("--matrix", required=True)
    s.add_argument("--p", type=int, help="also print local exponents and increments")
    s.set_defaults(fn=cmd_snf)

    s = sub.add_parser("lattices", help="sub- or superlattices of index p^e")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--index", type=int, required=True)
    s.add_argument("--super", action="store_true")
    s.add_argument("--minimal", action="store_true", help="replace each lattice by its minimal homothety rep")
    s.set_defaults(fn=cmd_lattices)

    s = sub.add_parser("hecke", help="Hecke cosets and their action")
    s.add_argument("action", choices=["act", "cosets"])
    s.add_argument("--type", choices=["A", "C"], required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--k", type=int, default=0)
    s.add_argument("--ell", type=int)
    s.add_argument("--polytope", action="append")
    s.add_argument("--vertices", type=int, default=2, help="extra building vertices to test")
    s.set_defaults(fn=cmd_hecke)

    s = sub.add_parser("building", help="values on the rank-one building (tree)")
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--polytope", action="append", required=True)
    s.add_argument("--ell", type=int, default=1)
    s.add_argument("--radius", type=int, default=2)
    s.add_argument("--format", choices=["json", "dot"], default="json")
    s.set_defaults(fn=cmd_building)

    s = sub.add_parser("hs", help="Hermite-Smith generating functions")
    s.add_argument("action", choices=["enumerate", "closed"])
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--p", type=int)
    s.add_argument("--N", type=int, default=3)
    s.add_argument("--bound", choices=["delta", "nu"], default="delta")
    s.add_argument("--symbolic", action="store_true")
    s.add_argument("--primitive", action="store_true")
    s.add_argument("--bar", action="store_true", help="closed HS^pr(X, 1, .., 1, Y)")
    s.add_argument("--subset", help="JSON list I for a single W_{n,I}")
    s.add_argument("--expand", type=int, help="also print the series to this X-degree")
    s.set_defaults(fn=cmd_hs)

    s = sub.add_parser("satake", help="Satake generating function R_n")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--prim", action="store_true")
    s.add_argument("--p", type=int, help="numeric prime: print Andrianov's truncated sum")
    s.add_argument("--order", type=int)
    s.set_defaults(fn=cmd_satake)

    s = sub.add_parser("zeta", help="Ehrhart-Hecke zeta functions")
    s.add_argument("--type", choices=["A", "C"], required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--ell", type=int, required=True)
    g = s.add_mutually_exclusive_group()
    g.add_argument("--closed", action="store_true")
    g.add_argument("--series", type=int, metavar="N")
    s.add_argument("--p", type=int)
    s.add_argument("--polytope", action="append")
    s.set_defaults(fn=cmd_zeta)

    s = sub.add_parser("check", help="verification suites")
    s.add_argument("which", choices=["algebra", "andrianov", "thmD", "reciprocity", "psi", "eulerian",
                                     "fixtures", "table1", "figure1", "tamagawa", "sr", "thm31"])
    s.add_argument("--order", type=int, default=3)
    s.add_argument("--primes", type=_primes, default=[2])
    s.set_defaults(fn=cmd_check)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.fn(args)
    except (InputError, ParseError) as exc:
        print(f"ehl: input error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, ArithmeticError, NotImplementedError) as exc:
        print(f"ehl: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
