"""
Command-line interface.

    su3intel verify --lambda 2 --alpha 0.5 -2 --tol 1e-9
    su3intel scan --lambda1 3 --lambda2 0 --lambda3 0 --out curve.csv --format both
    su3intel state --lambda1 2 --lambda2 4 --lambda3 1 --alpha 0.3 --out state.csv

Exit codes: 0 success, 1 a verification check failed, 2 usage or I/O error.
"""

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import __version__
from .analysis import alpha_grid, predicted_eigenvalue, scan_alpha, variances
from .coherent import GUARD_BAND, check_alpha, isotropy_check
from .coupling import enumerate_all_intelligent, gram_condition_ratio, intelligent_state_coupled, make_triple
from .formatting import scan_csv, state_csv
from .observables import fundamental_observables, mub_overlap_check
from .oracle import direct_eigensystem, eigenspace_match, tensor_product_state
from .plotting import render_svg
from .rep_core import MAX_LAMBDA

GRAM_RATIO_MIN = 1e-8
ISOTROPY_SAMPLES = 5


class UsageError(Exception):
    pass


@dataclass
class CheckResult:
    name: str
    worst: float
    passed: bool
    threshold: float
    note: str = ""

    def line(self):
        status = "PASS" if self.passed else "FAIL"
        rel = ">=" if self.name == "linear-independence" else "<"
        text = f"{status} {self.name:<20} worst={self.worst:.3e} (need {rel} {self.threshold:.0e})"
        return f"{text} {self.note}".rstrip()


def run_checks(lam, alphas, tol):
    """Run every verification check for (lam, 0) over ``alphas``; returns a list of CheckResult."""
    worst = {name: (0.0, None) for name in ("saturation", "eigen-residual", "eigenvalue", "variance-identity", "oracle-equivalence")}
    worst["linear-independence"] = (np.inf, None)

    def record(name, value, alpha):
        if value > worst[name][0]:
            worst[name] = (value, alpha)

    for alpha in alphas:
        states = enumerate_all_intelligent(lam, alpha)
        for s in states:
            rec = variances(s.vector, lam, alpha)
            record("saturation", rec.saturation_residual, alpha)
            # Residual against the constructed kappa and the Rayleigh quotient.
            record("eigen-residual", max(rec.eigen_residual, abs(rec.kappa - s.kappa)), alpha)
            if abs(alpha) < 1:
                record("eigenvalue", abs(s.kappa - predicted_eigenvalue(s.triple, alpha)), alpha)
            if alpha != 0:
                dev = max(abs(rec.delta_a**2 + 0.5 * alpha * rec.exp_c), abs(rec.delta_b**2 + rec.exp_c / (2 * alpha)))
                record("variance-identity", dev, alpha)
        ratio = gram_condition_ratio(states)
        if ratio < worst["linear-independence"][0]:
            worst["linear-independence"] = (ratio, alpha)
        dev = eigenspace_match(states, direct_eigensystem(lam, alpha))
        overlap = max(1 - abs(np.vdot(tensor_product_state(s.triple, alpha), s.vector)) for s in states)
        record("oracle-equivalence", max(dev, overlap), alpha)

    obs = fundamental_observables()
    u_inv = np.linalg.inv(obs.u)
    mub = max(mub_overlap_check(), float(np.max(np.abs(u_inv @ obs.c_prime @ obs.u - obs.c))))

    rng = np.random.default_rng(0)
    iso = 0.0
    for _ in range(ISOTROPY_SAMPLES):
        a3, g1, g2 = rng.uniform(-np.pi, np.pi, 3)
        iso = max(iso, isotropy_check(a3, rng.uniform(0, np.pi), g1, g2, lam))

    results = []
    for name in ("saturation", "eigen-residual", "eigenvalue", "variance-identity"):
        value, alpha = worst[name]
        note = f"at alpha={alpha:g}" if alpha is not None and value > 0 else ""
        results.append(CheckResult(name, value, value < tol, tol, note))
    results.append(CheckResult("mub", mub, mub < tol, tol))
    results.append(CheckResult("isotropy", iso, iso < tol, tol))
    ratio, alpha = worst["linear-independence"]
    results.append(CheckResult("linear-independence", ratio, ratio >= GRAM_RATIO_MIN, GRAM_RATIO_MIN, f"at alpha={alpha:g}"))
    value, alpha = worst["oracle-equivalence"]
    results.append(CheckResult("oracle-equivalence", value, value < tol, tol, f"at alpha={alpha:g}" if alpha is not None else ""))
    return results


def cmd_verify(args, out):
    lam = args.lam
    if not 0 <= lam <= MAX_LAMBDA:
        raise UsageError(f"--lambda must be in 0..{MAX_LAMBDA}")
    alphas = [check_alpha(a, args.guard_band) for a in args.alpha]
    results = run_checks(lam, alphas, args.tol)
    print(f"verify lambda={lam} alphas={','.join(f'{a:g}' for a in alphas)} tol={args.tol:g}", file=out)
    for r in results:
        print(r.line(), file=out)
    failed = [r.name for r in results if not r.passed]
    if failed:
        print(f"FAILED: {', '.join(failed)}", file=out)
        return 1
    print("all checks passed", file=out)
    return 0


def _triple(args):
    t = make_triple((args.lambda1, args.lambda2, args.lambda3))
    if t.total > MAX_LAMBDA:
        raise UsageError(f"lambda1+lambda2+lambda3 must not exceed {MAX_LAMBDA}")
    return t


def _write(path, text, out):
    if str(path) == "-":
        out.write(text)
        return
    Path(path).write_text(text, encoding="utf-8", newline="\n")


def cmd_scan(args, out):
    triple = _triple(args)
    if args.points < 2:
        raise UsageError("--points must be at least 2")
    if not args.alpha_min < args.alpha_max:
        raise UsageError("--alpha-min must be below --alpha-max")
    if args.guard_band <= 0:
        raise UsageError("--guard-band must be positive")
    grid = alpha_grid(args.alpha_min, args.alpha_max, args.points, args.guard_band)
    records = scan_alpha(triple, grid, args.guard_band)
    target = args.out
    if args.format in ("csv", "both"):
        csv_path = target if args.format == "csv" or target == "-" else str(Path(target).with_suffix(".csv"))
        _write(csv_path, scan_csv(records), out)
    if args.format in ("svg", "both"):
        if target == "-" and args.format == "both":
            raise UsageError("--format both needs a file path for --out")
        svg_path = target if args.format == "svg" else str(Path(target).with_suffix(".svg"))
        _write(svg_path, render_svg(records, triple, (args.alpha_min, args.alpha_max)), out)
    return 0


def cmd_state(args, out):
    triple = _triple(args)
    state = intelligent_state_coupled(triple, check_alpha(args.alpha, args.guard_band))
    _write(args.out, state_csv(state), out)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="su3intel",
        description="Intelligent states of the su(3) irreps (lambda,0) built by coupling coherent states.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--guard-band", type=float, default=GUARD_BAND, help="excluded distance from |alpha|=1")

    def add_triple(p):
        p.add_argument("--lambda1", type=int, required=True)
        p.add_argument("--lambda2", type=int, required=True)
        p.add_argument("--lambda3", type=int, required=True)

    p = sub.add_parser("verify", help="run saturation, eigenvalue and oracle checks")
    p.add_argument("--lambda", dest="lam", type=int, required=True)
    p.add_argument("--alpha", type=float, nargs="+", required=True)
    p.add_argument("--tol", type=float, default=1e-9)
    add_common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("scan", help="tabulate the uncertainty product over an alpha grid")
    add_triple(p)
    p.add_argument("--alpha-min", type=float, default=-10.0)
    p.add_argument("--alpha-max", type=float, default=10.0)
    p.add_argument("--points", type=int, default=400)
    p.add_argument("--out", default="-", help="output path; '-' writes CSV to stdout")
    p.add_argument("--format", choices=("csv", "svg", "both"), default="csv")
    add_common(p)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("state", help="write the amplitudes of one intelligent state")
    add_triple(p)
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--out", default="-")
    add_common(p)
    p.set_defaults(func=cmd_state)
    return parser


def main(argv=None, out=None):
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (UsageError, ValueError) as exc:
        print(f"su3intel: error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"su3intel: I/O error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
