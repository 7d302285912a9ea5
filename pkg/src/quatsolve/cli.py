"""Command-line front end.

``quatsolve solve FILE`` prints a single JSON document with one result per
problem, in input order.  Exit codes: 0 success (an empty solution set is a
success), 2 unreadable or malformed input, 3 a problem with ``P = 0``,
4 an oracle mismatch under ``--verify``.  When several apply, 3 wins over 4.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import __version__
from .oracle import OracleConfig, Verdict, verify_solution_set
from .problems import Problem, ProblemFileError, load
from .quaternion import modulus
from .sets import emit_samples, is_finite, to_dict
from .solver import (
    EPS_CLASS,
    InvalidCoefficients,
    Tolerances,
    residual,
    solve,
    solve_nonreal_p,
    solve_real_p,
)

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_INVALID = 3
EXIT_MISMATCH = 4

#: samples used for residual_max of an infinite set when none are requested
RESIDUAL_PROBES = 64


def _both_branches(coeffs, tol: Tolerances) -> dict:
    out = {"real": None, "nonreal": None}
    if coeffs.P.w != 0.0:
        out["real"] = to_dict(solve_real_p(coeffs, tol))
    if modulus(coeffs.P.vector) > 0.0:
        out["nonreal"] = to_dict(solve_nonreal_p(coeffs, tol))
    return out


def solve_problem(problem: Problem, *, tolerance: float = EPS_CLASS, samples: int = 0,
                  verify: bool = False, seed: int = 0,
                  both_branches: bool = False) -> tuple[dict, int]:
    """Solve one problem; return its result record and exit status."""
    try:
        coeffs = problem.coefficients()
    except InvalidCoefficients as exc:
        return {"id": problem.id, "error": "invalid_coefficients", "message": str(exc)}, EXIT_INVALID

    tol = Tolerances(eps_class=tolerance)
    sol = solve(coeffs, tol)
    record = {"id": problem.id, **to_dict(sol)}
    if is_finite(sol):
        probes = list(sol.members())
    else:
        probes = emit_samples(sol, samples or RESIDUAL_PROBES, seed)
        if samples:
            record["samples"] = [q.to_list() for q in probes]
    record["residual_max"] = max((residual(coeffs, q) for q in probes), default=0.0)

    status = EXIT_OK
    if both_branches:
        record["branches"] = _both_branches(coeffs, tol)
    if verify:
        report = verify_solution_set(coeffs, sol, OracleConfig(seed=seed))
        record["oracle"] = report.to_dict()
        if report.verdict in (Verdict.EXTRA_ROOT, Verdict.MISSING_ROOT):
            status = EXIT_MISMATCH
            for note in report.notes:
                print(f"{problem.id}: {note}", file=sys.stderr)
        elif report.verdict is Verdict.INCONCLUSIVE:
            print(f"{problem.id}: oracle found no roots to compare", file=sys.stderr)
    return record, status


def _cmd_solve(args: argparse.Namespace) -> int:
    try:
        pf = load(args.file)
    except ProblemFileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE

    opts = {"tolerance": EPS_CLASS, "samples": 0, "verify": False, "seed": 0}
    opts.update(pf.options)
    for key in opts:
        value = getattr(args, key)
        if value is not None:
            opts[key] = value
    if opts["samples"] < 0 or not opts["tolerance"] > 0:
        print("error: --samples must be >= 0 and --tolerance > 0", file=sys.stderr)
        return EXIT_PARSE

    results, codes = [], []
    for problem in pf.problems:
        record, code = solve_problem(problem, both_branches=args.both_branches, **opts)
        if code == EXIT_INVALID:
            print(f"{problem.id}: {record['message']}", file=sys.stderr)
        results.append(record)
        codes.append(code)

    json.dump({"results": results}, sys.stdout, indent=2)
    sys.stdout.write("\n")
    if EXIT_INVALID in codes:
        return EXIT_INVALID
    if EXIT_MISMATCH in codes:
        return EXIT_MISMATCH
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quatsolve",
        description="Solve X P X* + X Q + R X* = S over the quaternions.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solve every problem in a JSON problem file")
    p.add_argument("file", help="problem file (JSON)")
    p.add_argument("--tolerance", type=float, default=None,
                   help=f"relative classification tolerance (default {EPS_CLASS:g})")
    p.add_argument("--samples", type=int, default=None,
                   help="number of points to emit for circles and 3-spheres")
    p.add_argument("--verify", action="store_true", default=None,
                   help="cross-check each answer with multistart Newton")
    p.add_argument("--seed", type=int, default=None, help="seed for sampling and the oracle")
    p.add_argument("--both-branches", action="store_true",
                   help="also report the real-P and nonreal-P answers separately")
    p.set_defaults(func=_cmd_solve)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
