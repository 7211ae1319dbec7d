"""Command-line entry point.

    besselpoly y N | p N
    besselpoly coeffs NMAX [--method recurrence|closed-form]
    besselpoly verify {theorem1,theorem2,all} [--n-max] [--k-max] [--order]
    besselpoly bench [--n-max] [--reps]

Exit codes: 0 success, 1 an identity failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time

from . import bessel, coeffs, identities
from .exactmath import rat_to_str
from .poly import Poly

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

DEFAULT_N_MAX = 6
DEFAULT_K_MAX = 10
DEFAULT_ORDER = 16


def dump_json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _csv(rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue()


# -- renderers ---------------------------------------------------------------


def render_poly(p: Poly, fmt: str) -> str:
    if fmt == "json":
        return dump_json(p.to_json())
    if fmt == "latex":
        return p.to_latex() + "\n"
    if fmt == "csv":
        return _csv([("power", "coeff")] + [(k, rat_to_str(c)) for k, c in enumerate(p.coeffs)])
    return p.to_text() + "\n"


def render_table(table: coeffs.CoeffTable, method: str, fmt: str) -> str:
    n = table.n_max
    if fmt == "json":
        return dump_json(
            {
                "n_max": n,
                "method": method,
                "rows": [
                    {"N": N, "cells": [c.to_json() for c in table.row(N)]}
                    for N in range(1, n + 1)
                ],
            }
        )

    def cell(j: int, N: int, latex: bool = False) -> str:
        if j > N - 1:
            return ""
        p = table.cell(N, j)
        return p.to_latex() if latex else p.to_text()

    # rows j = 0..n-1, columns N = 1..n; blank below the diagonal
    if fmt == "csv":
        rows = [["j"] + [str(N) for N in range(1, n + 1)]]
        rows += [[str(j)] + [cell(j, N) for N in range(1, n + 1)] for j in range(n)]
        return _csv(rows)
    if fmt == "latex":
        lines = [
            r"\[",
            r"\begin{array}{c|" + "c" * n + "}",
            " & " + " & ".join(str(N) for N in range(1, n + 1)) + r" \\ \hline",
        ]
        for j in range(n):
            cells = " & ".join(cell(j, N, latex=True) for N in range(1, n + 1))
            lines.append(f"{j} & {cells} " + r"\\")
        lines += [r"\end{array}", r"\]"]
        return "\n".join(lines) + "\n"

    header = ["j\\N"] + [str(N) for N in range(1, n + 1)]
    grid = [header] + [[str(j)] + [cell(j, N) for N in range(1, n + 1)] for j in range(n)]
    widths = [max(len(r[c]) for r in grid) for c in range(n + 1)]
    return "".join(
        "  ".join(v.rjust(w) for v, w in zip(r, widths)).rstrip() + "\n" for r in grid
    )


def _params_str(params: dict) -> str:
    return ",".join(f"{k}={v}" for k, v in params.items())


def render_reports(reports: list[identities.VerifyReport], fmt: str) -> str:
    passed = all(r.passed for r in reports)
    if fmt == "json":
        return dump_json({"passed": passed, "reports": [r.to_json() for r in reports]})
    if fmt == "csv":
        rows = [("identity", "params", "passed", "index", "expected", "actual")]
        for r in reports:
            bad = {_params_str(f.params): f for f in r.failures}
            for params in r.grid:
                f = bad.get(_params_str(params))
                if f is None:
                    rows.append((r.identity.value, _params_str(params), "true", "", "", ""))
                else:
                    rows.append(
                        (
                            r.identity.value,
                            _params_str(params),
                            "false",
                            f.index,
                            f.expected.to_text(),
                            f.actual.to_text(),
                        )
                    )
        return _csv(rows)
    lines = []
    for r in reports:
        status = "PASS" if r.passed else "FAIL"
        lines.append(f"{r.identity.value:<10} {status}  {len(r.grid)} cells, {len(r.failures)} failed")
        for f in r.failures:
            lines.append(
                f"  {_params_str(f.params)} index={f.index}: "
                f"expected {f.expected.to_text()}, got {f.actual.to_text()}"
            )
    lines.append("all identities verified" if passed else "verification FAILED")
    return "\n".join(lines) + "\n"


# -- bench -------------------------------------------------------------------


def _best_us(fn, reps: int) -> float:
    best = float("inf")
    for _ in range(reps):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best * 1e6


def run_bench(n_max: int, reps: int) -> list[dict]:
    rows = []
    for N in range(1, n_max + 1):
        rec = _best_us(lambda: coeffs.coeffs_recurrence(N), reps)
        cf = _best_us(lambda: [coeffs.coeff_closed_form(N, j) for j in range(N)], reps)
        terms = [coeffs.closed_form_term_count(N, j) for j in range(N)]
        rows.append(
            {
                "N": N,
                "recurrence_us": round(rec, 1),
                "closed_form_us": round(cf, 1),
                "terms": terms,
            }
        )
    return rows


def render_bench(rows: list[dict], fmt: str) -> str:
    if fmt == "json":
        return dump_json({"unit": "us", "rows": rows})
    if fmt == "csv":
        out = [("N", "j", "recurrence_us", "closed_form_us", "terms")]
        for r in rows:
            for j, t in enumerate(r["terms"]):
                out.append((r["N"], j, r["recurrence_us"], r["closed_form_us"], t))
        return _csv(out)
    lines = [f"{'N':>3}  {'recurrence_us':>14}  {'closed_form_us':>15}  terms by j"]
    for r in rows:
        terms = " ".join(str(t) for t in r["terms"])
        lines.append(f"{r['N']:>3}  {r['recurrence_us']:>14.1f}  {r['closed_form_us']:>15.1f}  {terms}")
    return "\n".join(lines) + "\n"


# -- argument handling -------------------------------------------------------


def _parse_cell(s: str) -> tuple[int, int]:
    try:
        N, j = (int(v) for v in s.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N,j, got {s!r}")
    return N, j


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="besselpoly",
        description="Exact Bessel polynomials, derivative coefficients and identity checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, formats=("text", "json", "csv", "latex")):
        p.add_argument("--format", choices=formats, default="text")
        p.add_argument("--out", metavar="PATH", help="write output to PATH instead of stdout")

    for name, help_ in (("y", "Bessel polynomial y_N"), ("p", "reverse Bessel polynomial p_N")):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("n", type=int)
        common(sp)

    sp = sub.add_parser("coeffs", help="triangular table of a_j(N, x)")
    sp.add_argument("n_max", type=int)
    sp.add_argument("--method", choices=("recurrence", "closed-form"), default="recurrence")
    common(sp)

    sp = sub.add_parser("verify", help="verify identities exactly")
    sp.add_argument("which", choices=("theorem1", "theorem2", "all"))
    sp.add_argument("--n-max", type=int, default=DEFAULT_N_MAX)
    sp.add_argument("--k-max", type=int, default=DEFAULT_K_MAX)
    sp.add_argument("--order", type=int, default=DEFAULT_ORDER)
    sp.add_argument("--corrupt", type=_parse_cell, default=None, help=argparse.SUPPRESS)
    common(sp, ("text", "json", "csv"))

    sp = sub.add_parser("bench", help="time recurrence against nested-sum closed form")
    sp.add_argument("--n-max", type=int, default=DEFAULT_N_MAX)
    sp.add_argument("--reps", type=int, default=3)
    common(sp, ("text", "json", "csv"))
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    def usage(msg: str) -> int:
        parser.print_usage(sys.stderr)
        print(f"besselpoly {args.command}: error: {msg}", file=sys.stderr)
        return EXIT_USAGE

    status = EXIT_OK
    if args.command in ("y", "p"):
        if args.n < 0:
            return usage(f"n must be >= 0, got {args.n}")
        build = bessel.y_poly if args.command == "y" else bessel.p_poly
        text = render_poly(build(args.n), args.format)
    elif args.command == "coeffs":
        if args.n_max < 1:
            return usage(f"n_max must be >= 1, got {args.n_max}")
        if args.method == "recurrence":
            table = coeffs.coeffs_recurrence(args.n_max)
        else:
            table = coeffs.coeffs_closed_form(args.n_max)
        text = render_table(table, args.method, args.format)
    elif args.command == "verify":
        if args.n_max < 1 or args.k_max < 0 or args.order < 0:
            return usage("need --n-max >= 1, --k-max >= 0, --order >= 0")
        table = coeffs.coeffs_recurrence(args.n_max)
        if args.corrupt is not None:
            N, j = args.corrupt
            if not (1 <= N <= args.n_max and 0 <= j < N):
                return usage(f"--corrupt cell {N},{j} is outside the table")
            table = table.perturbed(N, j)
        Ns = range(1, args.n_max + 1)
        if args.which == "theorem1":
            reports = [identities.verify_theorem1_grid(Ns, args.order, table)]
        elif args.which == "theorem2":
            reports = [identities.verify_theorem2_grid(Ns, range(args.k_max + 1), table)]
        else:
            reports = identities.verify_all(args.n_max, args.k_max, args.order, table)
        text = render_reports(reports, args.format)
        if not all(r.passed for r in reports):
            status = EXIT_FAILED
    else:
        if args.n_max < 1 or args.reps < 1:
            return usage("need --n-max >= 1 and --reps >= 1")
        text = render_bench(run_bench(args.n_max, args.reps), args.format)

    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
