"""Command line front-end; every subcommand prints one JSON document.

Exit codes: 0 success, 1 bad input, 2 a verification failed, 3 I/O error.
"""
from __future__ import annotations

import argparse
import json
import random
import sys

from . import center, modules, pidegree
from .algebra import WeylAlgebra
from .cyclotomic import to_json as cyclo_to_json
from .parameters import AlgebraKind, ParameterError, validate

EXIT_OK, EXIT_INPUT, EXIT_VERIFY, EXIT_IO = 0, 1, 2, 3


class InputError(Exception):
    pass


class DegreeCapError(InputError):
    pass


def _load_json(path: str):
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from None


def _params(args):
    if not args.params:
        raise InputError("--params is required")
    return validate(_load_json(args.params))


def _check_degree(needed: int, cap: int) -> None:
    if needed > cap:
        raise DegreeCapError(f"products up to degree {needed} exceed --max-degree {cap}")


# -- subcommands -------------------------------------------------------------------

def cmd_validate(args):
    p = _params(args)
    return {"valid": True, "params": p.to_json(), "L": p.L}, True


def cmd_pidegree(args):
    p = _params(args)
    H = pidegree.weyl_exponent_matrix(p, args.kind, args.factor)
    report = pidegree.normal_form_report(H, p.L)
    report.update({"kind": args.kind.value, "factor": args.factor, "modulus": p.L,
                   "exponent_matrix": H.to_list()})
    return report, True


def _random_element(A: WeylAlgebra, rng: random.Random, max_exp: int = 2):
    e = A.zero()
    for _ in range(rng.randint(1, 3)):
        exps = [rng.randint(0, max_exp) for _ in range(2 * A.n)]
        e = e + A.monomial(exps, rng.randint(-3, 3) or 1) * A.params.root(rng.randrange(A.L))
    return e


def cmd_relations(args):
    p = _params(args)
    _check_degree(4, args.max_degree)  # normality checks multiply z_i (degree 2) by z_j
    A = WeylAlgebra(p, args.kind)
    report = A.verify_relations()
    samples = []
    if args.samples:
        _check_degree(3 * 2 * 2 * p.n, args.max_degree)
        rng = random.Random(args.seed)
        for k in range(args.samples):
            a, b, c = (_random_element(A, rng) for _ in range(3))
            samples.append({"sample": k, "pass": (a * b) * c == a * (b * c)})
    ok = all(r["pass"] for r in report) and all(s["pass"] for s in samples)
    out = {"kind": args.kind.value, "relations": report, "all_pass": ok}
    if args.samples:
        out["associativity"] = {"seed": args.seed, "samples": samples}
    return out, ok


def cmd_module(args):
    p = _params(args)
    if args.rep:
        rep = modules.Representation.from_json(_load_json(args.rep), p.L)
        spec = None
    elif args.spec:
        spec = modules.spec_from_json(_load_json(args.spec), p)
        rep = modules.construct_module(p, spec)
    else:
        raise InputError("module needs --spec or --rep")
    kind = args.kind
    verification = modules.verify_module(p, rep, kind)
    out = {"kind": kind.value, "dim": rep.dim, "verification": verification}
    if spec is not None:
        out["spec"] = spec.to_json()
    ok = all(r["pass"] for r in verification)
    if ok:
        span = modules.span_dimension(rep)
        out["span_dimension"] = span
        out["simple"] = span == rep.dim ** 2
        out["torsion"] = modules.torsion_profile(p, rep, kind)
        if out["simple"]:
            try:
                out["eigendata"] = modules.extract_eigendata(p, rep, kind).to_json()
            except modules.CenterMismatchError as exc:
                out["eigendata"] = {"error": str(exc)}
                ok = False
            out["character_consistent"] = center.character_consistency(p, rep, kind)
            ok = ok and out["character_consistent"]
    out["representation"] = rep.to_json()
    if args.to_alternative and ok:
        if kind is not AlgebraKind.MALTSINIOTIS:
            raise InputError("--to-alternative expects a maltsiniotis module")
        alt = modules.to_alternative(p, rep)
        alt_report = modules.verify_module(p, alt, AlgebraKind.ALTERNATIVE)
        round_trip = modules.from_alternative(p, alt) == rep
        alt_ok = all(r["pass"] for r in alt_report)
        out["alternative"] = {"verification": alt_report, "round_trip": round_trip,
                              "simple": modules.simplicity_check(alt) if alt_ok else False,
                              "representation": alt.to_json()}
        ok = alt_ok and round_trip and out["alternative"]["simple"]
    return out, ok


def cmd_azumaya(args):
    p = _params(args)
    if not args.point:
        raise InputError("azumaya needs --point")
    try:
        pt = center.CentralPoint.from_json(_load_json(args.point), p)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    report = center.azumaya_report(p, pt, args.kind)
    report["kind"] = args.kind.value
    return report, True


def cmd_center(args):
    p = _params(args)
    _check_degree(max(p.l) + 1, args.max_degree)
    witnesses = center.centrality_witnesses(p, args.kind)
    A = WeylAlgebra(p, args.kind)
    gens = [{"name": f"{g}{i}^{li}", "element": (A.x(i, li) if g == "x" else A.y(i, li)).to_json()}
            for i, li in enumerate(p.l, 1) for g in "xy"]
    ok = all(w["pass"] for w in witnesses)
    return {"kind": args.kind.value, "generators": gens, "witnesses": witnesses, "all_pass": ok}, ok


def cmd_zidentity(args):
    p = _params(args)
    _check_degree(2 * max(p.l), args.max_degree)
    A = WeylAlgebra(p, args.kind)
    checks = []
    for i in range(1, p.n + 1):
        lhs = A.z(i) ** p.l[i - 1]
        rhs = A.z_power_rhs(i)
        checks.append({"index": i, "pass": lhs == rhs, "lhs": str(lhs),
                       "coefficient": cyclo_to_json(center.character_constant(p, i))})
    ok = all(c["pass"] for c in checks)
    return {"kind": args.kind.value, "checks": checks, "all_pass": ok}, ok


COMMANDS = {
    "validate": cmd_validate,
    "pidegree": cmd_pidegree,
    "relations": cmd_relations,
    "module": cmd_module,
    "azumaya": cmd_azumaya,
    "center": cmd_center,
    "zidentity": cmd_zidentity,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qweyl", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sp = sub.add_parser(name)
        sp.add_argument("--params", metavar="FILE")
        sp.add_argument("--kind", type=AlgebraKind.parse, default=AlgebraKind.MALTSINIOTIS,
                        help="maltsiniotis (default) or alternative")
        sp.add_argument("--out", metavar="FILE")
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--max-degree", type=int, default=64)
        if name == "pidegree":
            sp.add_argument("--factor", type=int, metavar="R")
        if name == "relations":
            sp.add_argument("--samples", type=int, default=0,
                            help="random associativity triples to check")
        if name == "module":
            sp.add_argument("--spec", metavar="FILE")
            sp.add_argument("--rep", metavar="FILE", help="verify a given representation instead")
            sp.add_argument("--to-alternative", action="store_true")
        if name == "azumaya":
            sp.add_argument("--point", metavar="FILE")
    return parser


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        out, ok = COMMANDS[args.command](args)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except ParameterError as exc:
        print(f"error [{exc.clause}]: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except modules.ModuleSpecError as exc:
        print(f"error [{exc.clause}]: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (InputError, modules.RepresentationError, IndexError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except pidegree.InconsistencyError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    text = dumps(out)
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_IO
    else:
        sys.stdout.write(text)
    return EXIT_OK if ok else EXIT_VERIFY


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
