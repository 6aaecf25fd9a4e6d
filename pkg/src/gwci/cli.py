"""Command-line front end: ``gwci COMMAND PROBLEM [flags]``.

Reports are JSON on stdout (sorted keys, so identical inputs give identical
bytes). Exit status: 0 success or condition holds, 1 condition fails,
2 bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .gframe import euler, expansion_to_json, g_expand, g_reconstruct, hatted_partial, parse_with_g, partial
from .generators import (DegreeOutOfRange, NonpositiveDenominator, NotGHomogeneous,
                         NotKCoefficient, compute_generators, d_constant, generators_g_homogeneous,
                         generators_k_coeff, generators_shifted, generators_via_retract)
from .koszul import form_to_json
from .polyring import ParseError, PolyError
from .problem import Problem, ProblemError, load_problem
from .resolution import (NotGWCI, check_minimal, gwci_violations, homology_rank,
                         rewrite_in_g, LengthExceedsS)
from .selftest import run_selftest
from .wci import (DegreeMismatch, MasseyTable, check_prop_sufficient, cycle_products, ideal_basis,
                  partial_ideal, products_vanish, verify_massey)

COMMANDS = ("expand", "partial", "validate-resolution", "generators", "d-constant",
            "partial-ideal", "check-prop", "products", "massey-verify", "selftest")


class InputError(Exception):
    pass


def _queries(P: Problem, args) -> list[str]:
    if args.query:
        return args.query
    data = P.data
    if "queries" in data:
        return [str(q) for q in data["queries"]]
    if "expand_query" in data:
        return [str(data["expand_query"])]
    raise InputError("no query polynomial: pass --query or add 'queries' to the problem")


def cmd_expand(P: Problem, args):
    F = P.frame
    out = []
    for text in _queries(P, args):
        q = parse_with_g(text, F)
        E = g_expand(q, F)
        out.append({"query": text, "expansion": expansion_to_json(E, F),
                    "round_trip": g_reconstruct(E, F) == q})
    return {"command": "expand", "results": out}, 0


def cmd_partial(P: Problem, args):
    F = P.frame
    idx = range(F.s) if args.index is None else [args.index - 1]
    out = []
    for text in _queries(P, args):
        q = parse_with_g(text, F)
        out.append({
            "query": text,
            "partial": {str(j + 1): F.format(partial(q, j, F)) for j in idx},
            "hatted": {str(j + 1): F.format(hatted_partial(q, j, F)) for j in idx},
            "euler": F.format(euler(q, F)),
        })
    return {"command": "partial", "results": out}, 0


def cmd_validate(P: Problem, args):
    F, R = P.frame, P.require_resolution()
    bad = gwci_violations(R, F)
    report = {"command": "validate-resolution", "complex": True, "gwci": not bad,
              "violations": [{"differential": i, "row": m + 1, "column": p + 1} for i, m, p in bad],
              "minimal": check_minimal(R), "length": R.length, "s": F.s}
    if not bad:
        try:
            report["homology_ranks"] = [homology_rank(R, F, ell) for ell in range(F.s + 1)]
        except LengthExceedsS as exc:
            report["homology_ranks"] = None
            report["note"] = str(exc)
        RE = rewrite_in_g(R, F)
        report["rewritten"] = [[[expansion_to_json(E, F) for E in row] for row in M]
                               for M in RE.expansions]
    if P.ideal is not None and R.ranks[0] == 1:
        report["ideal_matches_d1"] = P.gbI.same_ideal(ideal_basis([e for e in R.d(1)[0] if e], F,
                                                                  P.ideal_order))
    return report, 0 if not bad else 1


ROUTES = {
    "retract": generators_via_retract,
    "g-homogeneous": generators_g_homogeneous,
    "k-coefficient": generators_k_coeff,
    "shifted": generators_shifted,
}


def _degrees(P: Problem, args) -> list[int]:
    if args.degree is not None:
        return [args.degree]
    return list(range(1, P.frame.s + 1))


def cmd_generators(P: Problem, args):
    F, R = P.frame, P.require_resolution()
    gbI = P.gbI
    verify = args.verify == "on"
    sets = []
    for ell in _degrees(P, args):
        if args.formula == "main":
            gs = compute_generators(R, F, ell, gbI, verify=verify)
        else:
            gs = ROUTES[args.formula](R, F, ell, gbI)
        sets.append(gs.to_json(F))
    ok = all(s["verified"]["cycle"] in (True, None) for s in sets)
    report = {"command": "generators", "formula": args.formula, "results": sets}
    if len(sets) == 1:
        report.update(sets[0])
    return report, 0 if ok or not verify else 1


def cmd_d_constant(P: Problem | None, args):
    if args.degrees is not None:
        degrees = args.degrees
    elif P is not None and "degrees" in P.data:
        degrees = [int(d) for d in P.data["degrees"]]
    else:
        raise InputError("pass --degrees d1,d2,... (innermost first)")
    D = d_constant(degrees)
    return {"command": "d-constant", "degrees": degrees, "value": str(D)}, 0


def cmd_partial_ideal(P: Problem, args):
    F = P.frame
    J = partial_ideal(P.require_ideal(), F, P.ideal_order)
    return {"command": "partial-ideal", "basis": [F.format(b) for b in J.basis],
            "contains_ideal": J.contains_ideal(P.ideal), "unit": J.is_unit_ideal()}, 0


def cmd_check_prop(P: Problem, args):
    F = P.frame
    r = check_prop_sufficient(P.require_ideal(), F, P.ideal_order)
    report = {"command": "check-prop", "condition_holds": r.condition_holds,
              "witness": F.format(r.witness) if r.witness is not None else None,
              "message": ("condition holds: (g) is a weak complete intersection in Q/I"
                          if r.condition_holds else
                          "condition fails: the witness lies in the square of the derived ideal but not in I")}
    return report, 0 if r.condition_holds else 1


def _all_cycles(P: Problem, args) -> dict:
    F, R = P.frame, P.require_resolution()
    out = {}
    for ell in _degrees(P, args):
        for k, z in enumerate(compute_generators(R, F, ell, P.gbI, verify=False)):
            out[f"h{ell}_{k + 1}"] = z
    return out


def cmd_products(P: Problem, args):
    F = P.frame
    cycles = _all_cycles(P, args)
    table = cycle_products(cycles, P.gbI)
    vanish, cert = products_vanish(cycles, F, P.gbI)
    report = {"command": "products", "vanish": vanish,
              "products": [{"args": list(k), "value": form_to_json(v, F)}
                           for k, v in sorted(table.items()) if v]}
    if cert is not None:
        report["certificate"] = cert.to_json(F)
    return report, 0 if vanish else 1


def cmd_massey(P: Problem, args):
    F = P.frame
    if "massey" not in P.data:
        raise InputError("problem has no 'massey' section")
    T = MasseyTable.from_json(P.data["massey"], F)
    rep = verify_massey(T, F, P.gbI, args.max_p)
    report = {"command": "massey-verify", "valid": rep.ok, "tuples_checked": rep.checked,
              "violations": [{"args": list(a), "lhs": form_to_json(l, F), "rhs": form_to_json(r, F)}
                             for a, l, r in rep.violations]}
    return report, 0 if rep.ok else 1


def cmd_selftest(P, args):
    rep = run_selftest()
    return {"command": "selftest", **rep.to_json()}, 0 if rep.ok else 1


HANDLERS = {
    "expand": cmd_expand, "partial": cmd_partial, "validate-resolution": cmd_validate,
    "generators": cmd_generators, "d-constant": cmd_d_constant, "partial-ideal": cmd_partial_ideal,
    "check-prop": cmd_check_prop, "products": cmd_products, "massey-verify": cmd_massey,
    "selftest": cmd_selftest,
}


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="gwci", description=__doc__.splitlines()[0])
    ap.add_argument("command", choices=COMMANDS)
    ap.add_argument("problem", nargs="?", help="problem JSON file or bundled fixture name")
    ap.add_argument("--degree", type=int)
    ap.add_argument("--max-p", type=int, dest="max_p")
    ap.add_argument("--out", type=Path)
    ap.add_argument("--verify", choices=("on", "off"), default="on")
    ap.add_argument("--query", action="append", help="polynomial to expand or differentiate")
    ap.add_argument("--index", type=int, help="g index (from 1) for 'partial'")
    ap.add_argument("--degrees", type=_int_list, help="g-degrees for 'd-constant', innermost first")
    ap.add_argument("--formula", choices=("main",) + tuple(ROUTES), default="main")
    return ap


def run(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        P = None
        if args.problem is not None:
            P = load_problem(args.problem)
        elif args.command not in ("selftest", "d-constant"):
            raise InputError(f"{args.command} needs a problem file")
        report, code = HANDLERS[args.command](P, args)
    except ParseError as exc:
        return _fail({"error": "parse", "message": str(exc), "text": exc.text, "position": exc.pos})
    except (NotGWCI, DegreeOutOfRange, NotGHomogeneous, NotKCoefficient,
            NonpositiveDenominator, DegreeMismatch) as exc:
        return _fail({"error": type(exc).__name__, "message": str(exc)})
    except (InputError, ProblemError, PolyError, KeyError, ValueError) as exc:
        return _fail({"error": type(exc).__name__, "message": str(exc)})
    text = json.dumps(report, indent=2, sort_keys=True)
    print(text)
    if args.out:
        args.out.write_text(text + "\n", encoding="utf-8")
    return code


def _fail(obj) -> int:
    print(json.dumps(obj, sort_keys=True), file=sys.stderr)
    return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
