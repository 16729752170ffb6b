"""Command-line surface: every verification as a subcommand.

Reports stream to stdout either as human-readable summary lines or, with
--json, as canonical JSON lines (sorted keys, no runtime field) so that two
runs of the same command and seed are byte-identical.  Exit codes: 0 when
every report passes, 1 when any fails, 2 for configuration/domain errors,
3 for convergence failures, 64 for an unknown subcommand.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from .blowup import blowup_curve, write_curve_csv
from .claims import VERIFY_CLAIMS, run_claim, run_suite
from .errors import ConvergenceError, CbmultError
from .matrixio import load_matrix
from .multiplier import load_multiplier_spec, m0a_lower_bound
from .report import Report
from .schur import schur_norm, verify_certificate

_COMMANDS = ("verify", "schur-norm", "m0a-bound", "blowup", "suite")

EXIT_FAIL = 1
EXIT_CONFIG = 2
EXIT_CONVERGENCE = 3
EXIT_USAGE = 64


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="cbmult",
        description="Desk-scale numerical verification of multiplier-norm "
                    "and singular-integral claims.")
    sub = parser.add_subparsers(dest="command")

    def common(p):
        p.add_argument("--json", action="store_true",
                       help="emit reports as JSON lines")
        p.add_argument("--grid", type=int, default=None,
                       help="override the claim's main resolution")
        p.add_argument("--window", type=float, default=None,
                       help="override the exclusion-ladder scale")
        p.add_argument("--seed", type=int, default=None,
                       help="random seed (default 7)")
        p.add_argument("--config", default=None,
                       help="key=value file supplying flag defaults")

    p_verify = sub.add_parser("verify", help="run one named claim")
    p_verify.add_argument("claim", choices=sorted(VERIFY_CLAIMS))
    common(p_verify)

    p_schur = sub.add_parser("schur-norm",
                             help="certified Schur multiplier norm")
    p_schur.add_argument("--matrix", required=True,
                         help="JSON or CSV matrix file")
    p_schur.add_argument("--tol", type=float, default=1e-6)
    common(p_schur)

    p_m0a = sub.add_parser("m0a-bound",
                           help="finite-sampling multiplier lower bound")
    p_m0a.add_argument("--spec", required=True,
                       help="JSON multiplier description")
    p_m0a.add_argument("--sets", type=int, default=10)
    common(p_m0a)

    p_blow = sub.add_parser("blowup", help="lower-bound curve to CSV")
    p_blow.add_argument("--rmax", type=float, required=True)
    p_blow.add_argument("--steps", type=int, default=20)
    p_blow.add_argument("--out", default=None, help="CSV output path")
    common(p_blow)

    p_suite = sub.add_parser("suite", help="run every claim")
    p_suite.add_argument("--all", action="store_true", required=True,
                         help="run the full claim registry")
    common(p_suite)

    return parser


def _load_config(path):
    values = {}
    with open(path, "r", encoding="utf-8") as fh:
        for raw in fh:
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise CbmultError(
                    f"config line {raw.strip()!r} is not key=value")
            key, val = (part.strip() for part in line.split("=", 1))
            values[key] = val
    return values


def _apply_config(args):
    if not getattr(args, "config", None):
        return
    conf = _load_config(args.config)
    casts = {"grid": int, "window": float, "seed": int, "tol": float,
             "sets": int, "rmax": float, "steps": int, "out": str,
             "matrix": str, "spec": str}
    for key, val in conf.items():
        if key == "json":
            if not args.json:
                args.json = val.lower() in ("1", "true", "yes")
            continue
        if key not in casts:
            raise CbmultError(f"unknown config key {key!r}")
        if getattr(args, key.replace("-", "_"), None) is None:
            setattr(args, key.replace("-", "_"), casts[key](val))


def _emit(reports, as_json):
    for rep in reports:
        if as_json:
            print(rep.to_json_line())
        else:
            print(rep.summary_line())
    return 0 if all(r.passed for r in reports) else EXIT_FAIL


def _cmd_verify(args):
    rep = run_claim(args.claim, grid=args.grid, window=args.window,
                    seed=args.seed)
    return _emit([rep], args.json)


def _cmd_suite(args):
    reports = run_suite(grid=args.grid, window=args.window, seed=args.seed)
    return _emit(reports, args.json)


def _cmd_schur_norm(args):
    matrix = load_matrix(args.matrix)
    value, cert = schur_norm(matrix, tol=args.tol)
    cert_rep = verify_certificate(matrix, cert)
    rep = Report(
        claim_id="schur-norm",
        inputs={"matrix": args.matrix, "tol": args.tol,
                "shape": list(matrix.shape)},
        computed={"norm": value,
                  "certificate_ok": bool(cert_rep.passed)},
        reference={"provenance": "derived"},
        tolerance=args.tol,
        tolerance_kind="abs",
        passed=bool(cert_rep.passed),
    )
    return _emit([rep], args.json)


def _cmd_m0a_bound(args):
    with open(args.spec, "r", encoding="utf-8") as fh:
        doc = json.load(fh)
    seed = 7 if args.seed is None else args.seed
    sm = load_multiplier_spec(doc, n_sets=args.sets, seed=seed)
    bound = m0a_lower_bound(sm)
    rep = Report(
        claim_id="m0a-bound",
        inputs={"spec": args.spec, "sets": args.sets, "seed": seed},
        computed={"lower_bound": bound},
        reference={"provenance": "derived"},
        tolerance=1e-6,
        tolerance_kind="abs",
        passed=bool(np.isfinite(bound)),
    )
    return _emit([rep], args.json)


def _cmd_blowup(args):
    if args.rmax <= 1.0:
        raise CbmultError("--rmax must exceed 1")
    if args.steps < 2:
        raise CbmultError("--steps must be >= 2")
    radii = np.geomspace(1.0, args.rmax, args.steps)
    curve = blowup_curve([float(r) for r in radii])
    if args.out:
        write_curve_csv(args.out, curve)
    monotone = all(b[1] > a[1] for a, b in zip(curve, curve[1:]))
    rep = Report(
        claim_id="blowup",
        inputs={"rmax": args.rmax, "steps": args.steps,
                "out": args.out or ""},
        computed={"first": curve[0][1], "last": curve[-1][1],
                  "monotone": monotone},
        reference={"provenance": "derived"},
        tolerance=0.0,
        tolerance_kind="abs",
        passed=bool(monotone),
    )
    return _emit([rep], args.json)


_HANDLERS = {
    "verify": _cmd_verify,
    "schur-norm": _cmd_schur_norm,
    "m0a-bound": _cmd_m0a_bound,
    "blowup": _cmd_blowup,
    "suite": _cmd_suite,
}


def main(argv=None):
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = _build_parser()
    head = next((a for a in argv if not a.startswith("-")), None)
    if head is None or head not in _COMMANDS:
        parser.print_usage(sys.stderr)
        if head is not None:
            print(f"cbmult: unknown subcommand {head!r}", file=sys.stderr)
        return EXIT_USAGE
    args = parser.parse_args(argv)
    try:
        _apply_config(args)
        return _HANDLERS[args.command](args)
    except ConvergenceError as exc:
        print(f"cbmult: convergence failure: {exc}", file=sys.stderr)
        return EXIT_CONVERGENCE
    except CbmultError as exc:
        print(f"cbmult: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except OSError as exc:
        print(f"cbmult: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
