"""``conrad`` command line.

Exit status: 0 on success, 1 when a verification fails or output cannot be
written, 2 on usage errors.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

import numpy as np

from .errors import ConradError, ParameterError
from .operators import KINDS, ClassSpec, PARAM_NAMES
from .radii import bracket_for, polynomial_for, radius_for
from .verify import GridSpec, identity_checks, sample_verify, sharpness_check

COMMANDS = ("radius", "poly", "verify", "sharpness", "identities", "sweep")
SWEEPABLE = ("A", "a", "alpha", "lambda", "p")


class UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="conrad", description="Radii of concavity and their numerical verification.")
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--class", dest="kind", metavar="K", help=f"one of: {', '.join(KINDS)}")
    parser.add_argument("--A", type=float)
    parser.add_argument("--a", type=float)
    parser.add_argument("--alpha", type=float)
    parser.add_argument("--lambda", dest="lam", type=float)
    parser.add_argument("--p", type=float)
    parser.add_argument("--samples", type=int, default=200)
    parser.add_argument("--seed", type=int, default=None)
    parser.add_argument("--degree", type=int, default=4)
    parser.add_argument("--grid-r", type=int, default=16)
    parser.add_argument("--grid-theta", type=int, default=256)
    parser.add_argument("--margin", type=float, default=0.999)
    parser.add_argument("--eps", type=float, default=0.01)
    parser.add_argument("--param", choices=SWEEPABLE)
    parser.add_argument("--from", dest="start", type=float)
    parser.add_argument("--to", dest="stop", type=float)
    parser.add_argument("--steps", type=int)
    parser.add_argument("--out", help="CSV path for sweep; '-' or absent writes to stdout")
    parser.add_argument("--json", action="store_true", help="emit machine-readable JSON")
    return parser


def _flag(param) -> str:
    return f"--{param}" if param else "argument"


def _spec_from(args, **override) -> ClassSpec:
    if args.kind is None:
        raise UsageError("--class is required for this command")
    params = {"A": args.A, "a": args.a, "alpha": args.alpha, "lambda": args.lam, "p": args.p}
    params.update(override)
    inverse = {v: k for k, v in PARAM_NAMES.items()}
    return ClassSpec(args.kind, **{inverse[k]: v for k, v in params.items() if v is not None})


def _seed(args) -> int:
    if args.seed is not None:
        return args.seed
    env = os.environ.get("CONRAD_SEED")
    if env is None:
        return 1
    try:
        return int(env)
    except ValueError:
        raise UsageError(f"CONRAD_SEED must be an integer, got {env!r}") from None


def _fmt(x) -> str:
    return "" if x is None else f"{x:.12g}"


def cmd_radius(args, out):
    spec = _spec_from(args)
    res = radius_for(spec)
    if args.json:
        out.append(json.dumps({"class": spec.to_dict(), **res.to_dict()}))
        return 0
    out.append(f"class   {spec.kind} {_params_text(spec)}")
    out.append(f"value   {res.value:.12f}")
    out.append(f"method  {res.method}")
    if res.r1 is not None:
        out.append(f"r1      {res.r1:.12f}")
        out.append(f"r2      {res.r2:.12f}")
    if res.bracket is not None:
        out.append(f"bracket ({res.bracket[0]:g}, {res.bracket[1]:g})")
    return 0


def _params_text(spec):
    return " ".join(f"{k}={v:g}" for k, v in spec.params().items())


def cmd_poly(args, out):
    spec = _spec_from(args)
    poly = polynomial_for(spec)
    lo, hi = bracket_for(spec)
    vals = [float(poly(lo)), float(poly(hi))]
    if args.json:
        out.append(json.dumps({"class": spec.to_dict(), "coeffs": list(poly.coeffs),
                               "bracket": [lo, hi], "atBracket": vals}))
        return 0
    terms = " ".join(f"{c:+.12g}*r^{k}" for k, c in enumerate(poly.coeffs))
    out.append(f"poly     {terms}")
    out.append(f"bracket  ({lo:g}, {hi:g})")
    out.append(f"at lo    {vals[0]:.12g}")
    out.append(f"at hi    {vals[1]:.12g}")
    return 0


def cmd_verify(args, out):
    spec = _spec_from(args)
    grid = GridSpec(args.grid_r, args.grid_theta, args.margin)
    report = sample_verify(spec, args.samples, _seed(args), grid, args.degree)
    if args.json:
        out.append(json.dumps(report.to_dict(), sort_keys=True))
    else:
        out.append(f"class        {spec.kind} {_params_text(spec)}")
        out.append(f"samples      {report.samples}")
        out.append(f"radius used  {report.radius_used:.12f}")
        out.append(f"failures     {report.failures}")
        out.append(f"worst margin {report.worst_margin:.6e}")
        out.append(f"witness      seed={report.witness_seed} z={report.witness_z:.6f}")
        out.append("PASS" if report.passed else "FAIL")
    return 0 if report.passed else 1


def cmd_sharpness(args, out):
    if args.kind not in ("pprime", "lif"):
        raise UsageError("--class must be pprime or lif for sharpness")
    if args.A is None:
        raise UsageError("--A is required")
    if args.kind == "lif" and args.alpha is None:
        raise UsageError("--alpha is required for lif")
    rep = sharpness_check(args.kind, args.A, args.alpha if args.kind == "lif" else None, args.eps)
    if args.json:
        out.append(json.dumps(rep.to_dict()))
    else:
        out.append(f"radius          {rep.radius:.12f}")
        out.append(f"Re T at -(R-eps) {rep.inside:+.12g}")
        out.append(f"Re T at -(R+eps) {rep.outside:+.12g}")
        out.append("PASS" if rep.passed else "FAIL")
    return 0 if rep.passed else 1


def cmd_identities(args, out):
    results = identity_checks()
    if args.json:
        out.append(json.dumps([r.to_dict() for r in results]))
    else:
        for r in results:
            out.append(f"{'PASS' if r.passed else 'FAIL'}  {r.name}  (max error {r.max_error:.3e})")
    return 0 if all(r.passed for r in results) else 1


def sweep_rows(spec: ClassSpec, param: str, start: float, stop: float, steps: int) -> list:
    """CSV lines of a radius sweep, header first."""
    if steps < 2:
        raise ParameterError("steps must be >= 2", "steps")
    if param not in spec.params():
        raise ParameterError(f"class {spec.kind} has no parameter {param}", "param")
    rows = ["param,value,r1,r2,method"]
    for x in np.linspace(start, stop, steps):
        res = radius_for(spec.replace(**{param: float(x)}))
        rows.append(",".join([_fmt(float(x)), _fmt(res.value), _fmt(res.r1), _fmt(res.r2), res.method]))
    return rows


def cmd_sweep(args, out):
    if args.param is None or args.start is None or args.stop is None or args.steps is None:
        raise UsageError("sweep needs --param, --from, --to and --steps")
    # the swept parameter only needs a placeholder to build the template
    spec = _spec_from(args, **{args.param: args.start})
    rows = sweep_rows(spec, args.param, args.start, args.stop, args.steps)
    text = "\n".join(rows) + "\n"
    if args.out in (None, "-"):
        out.append(text.rstrip("\n"))
        return 0
    try:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"conrad: cannot write {args.out}: {exc}", file=sys.stderr)
        return 1
    out.append(f"wrote {len(rows) - 1} rows to {args.out}")
    return 0


HANDLERS = {
    "radius": cmd_radius,
    "poly": cmd_poly,
    "verify": cmd_verify,
    "sharpness": cmd_sharpness,
    "identities": cmd_identities,
    "sweep": cmd_sweep,
}


def run_command(argv) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    out: list = []
    try:
        status = HANDLERS[args.command](args, out)
    except UsageError as exc:
        print(f"conrad: {exc}", file=sys.stderr)
        return 2
    except ParameterError as exc:
        print(f"conrad: {_flag(exc.param)}: {exc}", file=sys.stderr)
        return 2
    except ConradError as exc:
        print(f"conrad: {exc}", file=sys.stderr)
        return 1
    for line in out:
        print(line)
    return status


def main(argv=None):
    sys.exit(run_command(sys.argv[1:] if argv is None else argv))


if __name__ == "__main__":
    main()
