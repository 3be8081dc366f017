"""Command-line front end.

Exit codes: 0 when the value was computed or every requested check passed,
1 when a verified property failed, 2 on usage or input errors. JSON reports
go to stdout, a one-line human summary to stderr.
"""

import argparse
import json
import sys

from ._common import TOL, InputError, PreconditionError, as_fraction, fnvec, join, value_grid
from .capacity import Capacity, function_from_json, validate
from .characterize import roundtrip
from .comonotone import level_raise, monotone_chain, squeeze_witness
from .extension import (
    DEFAULT_DENOMINATOR as EXT_DENOMINATOR,
    GenSubspace,
    counterexample_functional,
    extend_one_step,
    run_counterexample,
)
from .functional import (
    COMONOTONE_MAXITIVE,
    MONOTONE,
    NORMED,
    VEE_HOMOGENEOUS,
    WEDGE_HOMOGENEOUS,
    check_axioms,
    star_char_homogeneous,
    star_homogeneous,
)
from .integral import integral_functional, tnormed_integral, tnormed_integral_grid
from .tnorm import BUILTINS, PRODUCT, check_tnorm_axioms, get_tnorm


def _load(source):
    """Parse inline JSON or read it from a file path."""
    text = source.strip()
    try:
        if not text.startswith(("{", "[")):
            with open(source) as fh:
                text = fh.read()
        return json.loads(text)
    except OSError as exc:
        raise InputError(f"cannot read {source}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON in {source}: {exc.msg}") from exc


def _capacity(args):
    return Capacity.from_json(_load(args.capacity))


def _vector(source, n=None):
    return function_from_json(_load(source), n)


def _emit(payload, summary):
    print(json.dumps(payload, indent=2, sort_keys=True))
    print(summary, file=sys.stderr)


def cmd_integrate(args):
    nu = _capacity(args)
    f = _vector(args.function, nu.n)
    op = get_tnorm(args.tnorm)
    out = {"tnorm": op.kind, "function": list(f), "exact": tnormed_integral(nu, f, op)}
    if args.oracle_step is not None:
        out["oracle"] = tnormed_integral_grid(nu, f, op, args.oracle_step)
        out["oracle_step"] = args.oracle_step
    _emit(out, f"integral = {out['exact']:.12g}")
    return 0


def cmd_verify_capacity(args):
    report = validate(_capacity(args), args.tolerance)
    _emit(report.to_dict(), "capacity " + ("valid" if report.passed else "INVALID"))
    return 0 if report.passed else 1


def cmd_verify_tnorm(args):
    report = check_tnorm_axioms(get_tnorm(args.tnorm), args.grid, args.tolerance)
    _emit(report.to_dict(), f"{args.tnorm}: " + ("all axioms pass" if report.passed else
                                                 f"failures {report.failures()}"))
    return 0 if report.passed else 1


_AXIOMS = {
    "normed": lambda op: NORMED,
    "monotone": lambda op: MONOTONE,
    "comonotone_maxitive": lambda op: COMONOTONE_MAXITIVE,
    "vee_homogeneous": lambda op: VEE_HOMOGENEOUS,
    "wedge_homogeneous": lambda op: WEDGE_HOMOGENEOUS,
    "star_homogeneous": star_homogeneous,
    "star_char_homogeneous": star_char_homogeneous,
}


def cmd_axioms(args):
    if args.counterexample:
        if args.capacity:
            raise InputError("give either --capacity or --counterexample, not both")
        _, I = counterexample_functional()
        op = PRODUCT
        default = ["monotone", "vee_homogeneous", "star_homogeneous", "comonotone_maxitive"]
    else:
        if not args.capacity:
            raise InputError("--capacity (with --tnorm) or --counterexample is required")
        op = get_tnorm(args.tnorm)
        I = integral_functional(_capacity(args), op)
        default = list(_AXIOMS)
    names = args.axioms.split(",") if args.axioms else default
    try:
        axioms = [_AXIOMS[name.strip()](op) for name in names]
    except KeyError as exc:
        raise InputError(f"unknown axiom {exc.args[0]!r}; choose from {sorted(_AXIOMS)}") from None
    report = check_axioms(I, axioms, args.grid, args.seed, args.samples, args.tolerance)
    verdicts = ", ".join(f"{k}={r.verdict.value}" for k, r in report.results.items())
    _emit(report.to_dict(), verdicts)
    return 0 if report.passed else 1


def cmd_chain(args):
    psi = _vector(args.psi)
    phi = _vector(args.phi, len(psi))
    chain = monotone_chain(psi, phi, args.tolerance)
    _emit({"psi": list(psi), "phi": list(phi), "chain": [list(c) for c in chain]},
          f"chain of {len(chain)} functions")
    return 0


def cmd_level_raise(args):
    phi = _vector(args.function)
    psi = level_raise(phi, args.delta, args.xi)
    _emit({"phi": list(phi), "delta": args.delta, "xi": args.xi, "psi": list(psi)},
          "level-raised function computed")
    return 0


def cmd_witness(args):
    phi = _vector(args.phi)
    psi = _vector(args.psi, len(phi))
    xi = squeeze_witness(phi, psi, args.c, args.d, args.tolerance)
    lower = [min(v, args.c) for v in xi] == [min(v, args.c) for v in phi]
    upper = [max(v, args.d) for v in xi] == [max(v, args.d) for v in psi]
    _emit({"phi": list(phi), "psi": list(psi), "c": args.c, "d": args.d, "xi": list(xi),
           "xi^c == phi^c": lower, "xi v d == psi v d": upper},
          "both lattice identities hold" if lower and upper else "identity FAILED")
    return 0 if lower and upper else 1


def cmd_roundtrip(args):
    op = get_tnorm(args.tnorm)
    out = roundtrip(args.n, args.grid, op, args.seed, args.samples, args.tolerance)
    _emit(out, f"{out['capacities']} capacities, {out['failed']} failed round trips")
    return 0 if out["passed"] else 1


def cmd_counterexample(args):
    grid = args.grid or EXT_DENOMINATOR
    out = run_counterexample(grid, args.seed, args.samples, args.tolerance)
    v = out["values"]
    if out["comonotone_maxitivity_fails"]:
        summary = (
            f"comonotone maxitivity FAILS: mu(f1 v f2)={as_fraction(v['mu(phi1 v phi2)'])}, "
            f"mu(f1) v mu(f2)={as_fraction(max(v['mu(phi1)'], v['mu(phi2)']))}"
        )
    else:
        summary = "comonotone maxitivity unexpectedly holds"
    out["summary"] = summary
    _emit(out, summary)
    return 0 if out["as_expected"] else 1


def cmd_extend(args):
    S = GenSubspace.from_json(_load(args.subspace))
    phi = _vector(args.function, S.n)
    grid = args.grid or EXT_DENOMINATOR
    S2 = extend_one_step(S, phi, grid, tol=args.tolerance)
    realizable = S2 is S
    out = {"realizable": realizable, "subspace": S2.to_json()}
    if not realizable:
        out["a"] = S2.m[-1]
    _emit(out, "function already in subspace" if realizable else f"a = {S2.m[-1]:.12g}")
    return 0


def _common_flags():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--samples", type=int, default=500)
    common.add_argument("--tolerance", type=float, default=TOL)
    return common


def build_parser():
    common = _common_flags()
    grid20 = argparse.ArgumentParser(add_help=False)
    grid20.add_argument("--grid", type=int, default=20, help="value grid denominator")
    grid_ext = argparse.ArgumentParser(add_help=False)
    grid_ext.add_argument("--grid", type=int, default=None,
                          help=f"element grid denominator (default {EXT_DENOMINATOR})")
    tn = argparse.ArgumentParser(add_help=False)
    tn.add_argument("--tnorm", choices=sorted(BUILTINS), default="minimum")

    parser = argparse.ArgumentParser(prog="tnormint", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("integrate", parents=[common, grid20, tn], help="t-normed integral")
    p.add_argument("--capacity", required=True)
    p.add_argument("--function", required=True)
    p.add_argument("--oracle-step", type=float, default=None)
    p.set_defaults(func=cmd_integrate)

    p = sub.add_parser("verify-capacity", parents=[common, grid20], help="validate a capacity")
    p.add_argument("--capacity", required=True)
    p.set_defaults(func=cmd_verify_capacity)

    p = sub.add_parser("verify-tnorm", parents=[common, grid20, tn], help="t-norm axioms")
    p.set_defaults(func=cmd_verify_tnorm)

    p = sub.add_parser("axioms", parents=[common, grid20, tn], help="sampled axiom checks")
    p.add_argument("--capacity")
    p.add_argument("--counterexample", action="store_true")
    p.add_argument("--axioms", help="comma separated axiom names")
    p.set_defaults(func=cmd_axioms)

    p = sub.add_parser("chain", parents=[common, grid20], help="comonotone chain psi..phi")
    p.add_argument("--psi", required=True)
    p.add_argument("--phi", required=True)
    p.set_defaults(func=cmd_chain)

    p = sub.add_parser("level-raise", parents=[common, grid20], help="comonotone level raise")
    p.add_argument("--function", required=True)
    p.add_argument("--delta", type=float, required=True)
    p.add_argument("--xi", type=float, required=True)
    p.set_defaults(func=cmd_level_raise)

    p = sub.add_parser("witness", parents=[common, grid20], help="squeeze witness")
    p.add_argument("--phi", required=True)
    p.add_argument("--psi", required=True)
    p.add_argument("--c", type=float, required=True)
    p.add_argument("--d", type=float, required=True)
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("roundtrip", parents=[common, grid20, tn], help="characterization round trip")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_roundtrip)

    p = sub.add_parser("counterexample", parents=[common, grid_ext], help="three-point counterexample")
    p.set_defaults(func=cmd_counterexample)

    p = sub.add_parser("extend", parents=[common, grid_ext], help="one-step extension")
    p.add_argument("--subspace", required=True)
    p.add_argument("--function", required=True)
    p.set_defaults(func=cmd_extend)
    return parser


def run(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, PreconditionError) as exc:
        print(f"tnormint {args.command}: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
