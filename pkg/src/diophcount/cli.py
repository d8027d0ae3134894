"""Command-line front end: ``diophcount <command> [options]``.

Commands
--------
table     exact s_{r,v}(0..N) as CSV (n, s) or JSON
verify    exact cross-checks: brute force = direct product = closed products
asym      exact vs large-n approximations, plot-ready CSV
gf-check  residual of the z -> 0 approximation of log G
cauchy    Cauchy-integral coefficients vs exact values
weyl      Weyl-sum and minor-arc ratio scans

Exit status: 0 success / PASS, 1 a check FAILed, 2 bad usage, 3 INCONCLUSIVE,
4 guard or domain error, 5 quadrature or precision failure.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys

from . import asympt, expsum, gfeval, oracle, series, specfun
from .errors import DiophCountError, GuardError, PrecisionError, QuadratureError
from .oracle import CountParams
from .quadrature import QuadratureSpec
from .reports import FAIL, INCONCLUSIVE, PASS

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INCONCLUSIVE, EXIT_GUARD, EXIT_NUMERIC = 0, 1, 2, 3, 4, 5

_STATUS_EXIT = {PASS: EXIT_OK, FAIL: EXIT_FAIL, INCONCLUSIVE: EXIT_INCONCLUSIVE}


def _f17(x):
    return "" if x is None else f"{x:.17g}"


def _int_list(text):
    try:
        out = [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if not out:
        raise argparse.ArgumentTypeError("empty list")
    return out


def _float_list(text):
    try:
        out = [float(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}")
    if not out:
        raise argparse.ArgumentTypeError("empty list")
    return out


def _positive_int(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _nonneg_int(text):
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text}")
    return value


def _dps(text):
    if text in ("auto", "none"):
        return None if text == "none" else "auto"
    return _positive_int(text)


# -- verify -------------------------------------------------------------------


def run_verify(rs, vs, upto=200, oracle_upto=40):
    """Run every exact cross-check; returns a JSON-ready summary dict.

    For each (r, v): the direct product against brute force for n <= oracle_upto,
    and for v in {1, 2} the closed product against the direct product up to
    ``upto``. The first mismatch of each check is recorded.
    """
    checks = []
    notices = []
    for r in rs:
        for v in vs:
            params = CountParams(r, v)
            direct = series.coeffs_direct(params, max(upto, oracle_upto))
            m = min(oracle_upto, direct.upto)
            entry = {"r": r, "v": v, "check": "oracle", "methods": ["direct-product", "bruteforce"], "upto": m, "passed": True}
            for n in range(m + 1):
                expected = oracle.count_bruteforce(params, n)
                if direct[n] != expected:
                    entry.update(passed=False, mismatch={"n": n, "expected": str(expected), "got": str(direct[n])})
                    break
            checks.append(entry)
            if v > 2:
                notices.append(f"r={r} v={v}: no identity for v>2; closed-product check skipped")
                continue
            closed = series.coeffs(params, upto, method="prop1")
            entry = {"r": r, "v": v, "check": "identity", "methods": [closed.method, "direct-product"], "upto": upto, "passed": True}
            for n in range(upto + 1):
                if closed[n] != direct[n]:
                    entry.update(passed=False, mismatch={"n": n, "expected": str(direct[n]), "got": str(closed[n])})
                    break
            checks.append(entry)
    status = PASS if all(c["passed"] for c in checks) else FAIL
    first = next((c for c in checks if not c["passed"]), None)
    return {"status": status, "checks": checks, "notices": notices, "first_mismatch": first}


# -- commands -----------------------------------------------------------------


def cmd_table(args, out):
    params = CountParams(args.r, args.v)
    method = args.method
    if method == "prop1" and args.v > 2:
        print(f"error: no closed product identity for v={args.v}", file=sys.stderr)
        return EXIT_USAGE
    table = series.coeffs(params, args.upto, method=method)
    out.write(table.to_csv() if args.format == "csv" else table.to_json() + "\n")
    return EXIT_OK


def cmd_verify(args, out):
    report = run_verify(args.r, args.v, args.upto, args.oracle_upto)
    for note in report["notices"]:
        print(note, file=sys.stderr)
    first = report["first_mismatch"]
    if first is not None:
        mm = first["mismatch"]
        print(
            f"mismatch r={first['r']} v={first['v']} n={mm['n']}: expected {mm['expected']}, "
            f"got {mm['got']} ({' vs '.join(first['methods'])})",
            file=sys.stderr,
        )
    out.write(json.dumps(report) + "\n")
    return _STATUS_EXIT[report["status"]]


def _param_block(params):
    sp = specfun.saddle_params(params)
    block = {
        "r": params.r,
        "v": params.v,
        "alpha": sp.alpha,
        "beta": sp.beta,
        "gamma": sp.gamma,
        "kappa": sp.kappa,
        "kappa_r": specfun.kappa(params.r),
    }
    if params.v == 2:
        block["eta(1/r)"] = specfun.eta_real(1.0 / params.r)
    return block


def cmd_asym(args, out):
    params = CountParams(args.r, args.v)
    ns = args.n
    exact = None
    if not args.no_exact:
        top = max(n for n in ns if n <= args.exact_max) if any(n <= args.exact_max for n in ns) else None
        if top is not None:
            exact = series.coeffs(params, top)
    rows = []
    for n in ns:
        th = asympt.s_asym_theorem(params, n)
        ld = asympt.s_asym_leading(params, n)
        ex = exact[n] if exact is not None and n <= exact.upto else None
        rows.append(
            {
                "n": n,
                "exact": None if ex is None else str(ex),
                "theorem_log": th.value_log,
                "leading_log": ld.value_log,
                "rel_err_theorem": None if ex is None else asympt.relative_error(th, ex),
                "rel_err_leading": None if ex is None else asympt.relative_error(ld, ex),
            }
        )
    block = _param_block(params)
    if args.format == "json":
        out.write(json.dumps({"params": block, "rows": rows}) + "\n")
        return EXIT_OK
    for key, value in block.items():
        out.write(f"# {key}={_f17(value) if isinstance(value, float) else value}\n")
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["n", "exact", "theorem_log", "leading_log", "rel_err_theorem", "rel_err_leading"])
    for row in rows:
        w.writerow(
            [
                row["n"],
                row["exact"] or "",
                _f17(row["theorem_log"]),
                _f17(row["leading_log"]),
                _f17(row["rel_err_theorem"]),
                _f17(row["rel_err_leading"]),
            ]
        )
    return EXIT_OK


def cmd_gf_check(args, out):
    report = gfeval.asym_residual_scan(CountParams(args.r, args.v), args.grid, p=args.p, dps=args.dps)
    out.write(report.to_json() + "\n")
    return _STATUS_EXIT[report.status]


def cmd_cauchy(args, out):
    params = CountParams(args.r, args.v)
    quad = QuadratureSpec(rule=args.rule, panels=args.panels, abs_tol=args.abs_tol, rel_tol=args.rel_tol)
    exact = series.coeffs(params, max(args.n))
    rows = []
    for n in args.n:
        est = gfeval.cauchy_coefficient(params, n, quad)
        rel = abs(est - exact[n]) / exact[n]
        rows.append({"n": n, "estimate": est, "exact": str(exact[n]), "rel_err": rel})
    worst = max(r["rel_err"] for r in rows)
    status = PASS if worst <= args.rtol else FAIL
    out.write(json.dumps({"status": status, "threshold": args.rtol, "worst": worst, "rows": rows}) + "\n")
    return _STATUS_EXIT[status]


def cmd_weyl(args, out):
    weyl = expsum.weyl_bound_scan(args.r, args.L, args.y_samples, args.delta)
    reports = {"weyl": weyl.to_dict(), "ratio": []}
    statuses = [weyl.status]
    if not args.no_ratio:
        for v in args.v:
            rep = expsum.ratio_lowerbound_scan(CountParams(args.r, v), args.x_grid, floor=args.floor)
            reports["ratio"].append(rep.to_dict())
            statuses.append(rep.status)
    status = FAIL if FAIL in statuses else (INCONCLUSIVE if INCONCLUSIVE in statuses else PASS)
    reports["status"] = status
    out.write(json.dumps(reports) + "\n")
    return _STATUS_EXIT[status]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="diophcount", description=__doc__.split("\n\n")[0])
    parser.add_argument("--output", "-o", default="-", help="output file (default: stdout)")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, v_default=1):
        p.add_argument("--r", type=_positive_int, required=True)
        p.add_argument("--v", type=_positive_int, default=v_default)

    p = sub.add_parser("table", help="exact coefficient table")
    common(p)
    p.add_argument("--upto", type=_nonneg_int, required=True)
    p.add_argument("--method", choices=("auto", "direct", "prop1"), default="auto")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="exact cross-checks")
    p.add_argument("--r", type=_int_list, default=[1, 2, 3])
    p.add_argument("--v", type=_int_list, default=[1, 2])
    p.add_argument("--upto", type=_nonneg_int, default=200)
    p.add_argument("--oracle-upto", type=_nonneg_int, default=40)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("asym", help="asymptotic estimates vs exact")
    common(p)
    p.add_argument("--n", type=_int_list, required=True)
    p.add_argument("--no-exact", action="store_true")
    p.add_argument("--exact-max", type=_positive_int, default=10_000)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_asym)

    p = sub.add_parser("gf-check", help="generating-function asymptotics residual scan")
    common(p)
    p.add_argument("--grid", type=_float_list, default=[0.5, 0.25, 0.125, 0.0625, 0.03125])
    p.add_argument("--p", type=float, default=1.0)
    p.add_argument("--dps", type=_dps, default="auto", help="digits for the scan: auto, none (double) or an integer")
    p.set_defaults(func=cmd_gf_check)

    p = sub.add_parser("cauchy", help="Cauchy-integral extraction vs exact")
    common(p)
    p.add_argument("--n", type=_int_list, required=True)
    p.add_argument("--rule", choices=("gauss-legendre", "tanh-sinh"), default="gauss-legendre")
    p.add_argument("--panels", type=_positive_int, default=8)
    p.add_argument("--abs-tol", type=float, default=1e-12)
    p.add_argument("--rel-tol", type=float, default=1e-10)
    p.add_argument("--rtol", type=float, default=5e-3)
    p.set_defaults(func=cmd_cauchy)

    p = sub.add_parser("weyl", help="Weyl-sum and minor-arc ratio scans")
    p.add_argument("--r", type=_positive_int, required=True)
    p.add_argument("--L", type=float, default=1000.0)
    p.add_argument("--y-samples", type=_positive_int, default=200)
    p.add_argument("--delta", type=float, default=0.05)
    p.add_argument("--v", type=_int_list, default=[1, 2])
    p.add_argument("--x-grid", type=_float_list, default=[0.2, 0.1, 0.05])
    p.add_argument("--floor", type=float, default=0.1)
    p.add_argument("--no-ratio", action="store_true")
    p.set_defaults(func=cmd_weyl)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    buf = io.StringIO()
    try:
        code = args.func(args, buf)
    except (QuadratureError, PrecisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except (GuardError, DiophCountError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    if args.output == "-":
        sys.stdout.write(buf.getvalue())
    else:
        with open(args.output, "w", newline="") as fh:
            fh.write(buf.getvalue())
    return code


if __name__ == "__main__":
    sys.exit(main())
