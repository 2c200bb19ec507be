"""Command-line interface.

Subcommands: ``triangle`` (number-family rows), ``poly`` (polynomial
families), ``verify`` (exact identity suite), ``simulate`` (skew random-walk
moment estimation).  Output formats: table (human), json, csv.  Exit codes:
0 success, 1 verification or statistical failure, 2 usage error.  Data goes
to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import re
import sys
from fractions import Fraction

from . import families, identities, occupation, triangles

TRIANGLE_FAMILIES = (
    "stirling1",
    "stirling1-signed",
    "stirling2",
    "lah",
    "bessel-b",
    "bessel-B",
    "gs",
)
POLY_KINDS = ("pn", "pn-closed", "bessel-y", "bessel-theta", "chebyshev")
FORMATS = ("table", "json", "csv")

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")

# lets argparse accept option values like "-1/2" instead of reading them as flags
_NEGATIVE_VALUE_RE = re.compile(r"^-\d+(/\d+)?$|^-\d*\.\d+$")


def _rational(text: str) -> Fraction:
    """Parse 'p/q' or integer strings; decimals are rejected."""
    if not _RATIONAL_RE.match(text):
        raise argparse.ArgumentTypeError(f"expected an integer or p/q rational, got {text!r}")
    try:
        return Fraction(text)
    except ZeroDivisionError:
        raise argparse.ArgumentTypeError("rational with zero denominator") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stirbess",
        description="Exact number triangles, moment polynomials, identity verification, "
        "and skew random-walk simulation.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_tri = sub.add_parser("triangle", help="print rows 0..n of a number triangle")
    p_tri.add_argument("family", choices=TRIANGLE_FAMILIES)
    p_tri.add_argument("--n", dest="n_max", type=int, default=10, help="largest row (default 10)")
    p_tri.add_argument("--s", type=_rational, help="s parameter (gs family only)")
    p_tri.add_argument("--h", type=_rational, help="h parameter (gs family only, nonzero)")
    p_tri.add_argument("--format", choices=FORMATS, default="table")

    p_poly = sub.add_parser("poly", help="print one polynomial of a family")
    p_poly.add_argument("which", choices=POLY_KINDS)
    p_poly.add_argument("--n", type=int, required=True, help="index of the polynomial")
    p_poly.add_argument("--z", type=_rational, help="substitute z (pn variants only)")
    p_poly.add_argument("--format", choices=FORMATS, default="table")

    p_ver = sub.add_parser("verify", help="run identity verifiers over a range")
    p_ver.add_argument("ids", nargs="*", metavar="identity", help="identity ids to run")
    p_ver.add_argument("--all", action="store_true", help="run every registered identity")
    p_ver.add_argument("--n-max", type=int, default=20)
    p_ver.add_argument("--jobs", type=int, default=None, help="worker processes (default: all cores)")
    p_ver.add_argument("--timings", action="store_true", help="include elapsed_ms in json/csv output")
    p_ver.add_argument("--format", choices=FORMATS, default="table")

    p_sim = sub.add_parser("simulate", help="skew random-walk moment estimation")
    p_sim.add_argument("--alpha", type=float, required=True, help="skewness in (0,1); decimal")
    p_sim.add_argument("--steps", type=int, default=10000)
    p_sim.add_argument("--paths", type=int, default=10000)
    p_sim.add_argument("--moments", type=int, default=4)
    p_sim.add_argument("--seed", type=int, default=1)
    p_sim.add_argument("--t", type=_rational, default=None, help="also check E[A_t^n] at this time fraction")
    p_sim.add_argument("--jobs", type=int, default=None)
    p_sim.add_argument("--format", choices=FORMATS, default="table")

    for sub_parser in (p_tri, p_poly, p_sim):
        sub_parser._negative_number_matcher = _NEGATIVE_VALUE_RE

    return parser


def _usage_error(message: str) -> int:
    print(f"stirbess: error: {message}", file=sys.stderr)
    return 2


def _default_jobs(jobs: int | None) -> int:
    if jobs is not None:
        if jobs < 1:
            raise ValueError("jobs must be positive")
        return jobs
    return os.cpu_count() or 1


# ---------------------------------------------------------------------------
# triangle

def _triangle_value_fn(args):
    if args.family == "gs":
        if args.s is None or args.h is None:
            raise ValueError("family gs requires --s and --h")
        if args.h == 0:
            raise ValueError("gs parameter h must be nonzero")
        s, h = args.s, args.h
        return lambda n, k: triangles.gs(s, h, n, k)
    if args.s is not None or args.h is not None:
        raise ValueError("--s/--h apply only to the gs family")
    return {
        "stirling1": triangles.stirling1,
        "stirling1-signed": triangles.stirling1_signed,
        "stirling2": triangles.stirling2,
        "lah": triangles.lah,
        "bessel-b": triangles.bessel_b,
        "bessel-B": triangles.bessel_B,
    }[args.family]


def _cell(value) -> int | str:
    return value if isinstance(value, int) else str(value)


def _cmd_triangle(args) -> int:
    try:
        value = _triangle_value_fn(args)
    except ValueError as exc:
        return _usage_error(str(exc))
    if args.n_max < 0:
        return _usage_error("--n must be nonnegative")
    rows = [[value(n, k) for k in range(n + 1)] for n in range(args.n_max + 1)]
    if args.format == "table":
        for row in rows:
            print(" ".join(str(v) for v in row))
    elif args.format == "json":
        payload: dict = {"family": args.family, "n_max": args.n_max}
        if args.family == "gs":
            payload["s"] = str(args.s)
            payload["h"] = str(args.h)
        payload["rows"] = [[_cell(v) for v in row] for row in rows]
        print(json.dumps(payload, indent=2))
    else:
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["n", "k", "value"])
        for n, row in enumerate(rows):
            for k, v in enumerate(row):
                writer.writerow([n, k, v])
        sys.stdout.write(buf.getvalue())
    return 0


# ---------------------------------------------------------------------------
# poly

def _print_unipoly(args, poly, z) -> None:
    if args.format == "table":
        print(poly.to_str())
    elif args.format == "json":
        payload = {
            "which": args.which,
            "n": args.n,
            "z": None if z is None else str(z),
            "variable": "x",
            "coefficients": [str(c) for c in poly.coeffs],
        }
        print(json.dumps(payload, indent=2))
    else:
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["power", "coefficient"])
        for power, c in enumerate(poly.coeffs):
            writer.writerow([power, str(c)])
        sys.stdout.write(buf.getvalue())


def _print_bipoly(args, poly) -> None:
    items = poly.items()
    if args.format == "table":
        for (i, j), c in items:
            print(f"x^{i} z^{j}: {c}")
    elif args.format == "json":
        payload = {
            "which": args.which,
            "n": args.n,
            "variables": ["x", "z"],
            "terms": [{"x": i, "z": j, "coefficient": str(c)} for (i, j), c in items],
        }
        print(json.dumps(payload, indent=2))
    else:
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["x_power", "z_power", "coefficient"])
        for (i, j), c in items:
            writer.writerow([i, j, str(c)])
        sys.stdout.write(buf.getvalue())


def _cmd_poly(args) -> int:
    if args.which in ("pn", "pn-closed"):
        if args.n < 1:
            return _usage_error("pn variants require --n >= 1")
        poly = families.pn_recurrence(args.n) if args.which == "pn" else families.pn_closed_form(args.n)
        if args.z is not None:
            _print_unipoly(args, poly.substitute_z(args.z), args.z)
        else:
            _print_bipoly(args, poly)
        return 0
    if args.z is not None:
        return _usage_error("--z applies only to pn variants")
    if args.n < 0:
        return _usage_error("--n must be nonnegative")
    poly = {
        "bessel-y": families.bessel_poly,
        "bessel-theta": families.reverse_bessel_poly,
        "chebyshev": families.chebyshev_t,
    }[args.which](args.n)
    _print_unipoly(args, poly, None)
    return 0


# ---------------------------------------------------------------------------
# verify

def _cmd_verify(args) -> int:
    if args.all and args.ids:
        return _usage_error("pass identity ids or --all, not both")
    if not args.all and not args.ids:
        return _usage_error("no identities selected (pass ids or --all)")
    selection = "all" if args.all else args.ids
    try:
        jobs = _default_jobs(args.jobs)
        reports = identities.run_suite(args.n_max, selection, jobs=jobs)
    except ValueError as exc:
        return _usage_error(str(exc))
    if args.format == "json":
        print(identities.reports_to_json(reports, include_elapsed=args.timings))
    elif args.format == "csv":
        sys.stdout.write(identities.reports_to_csv(reports, include_elapsed=args.timings))
    else:
        width = max(len(r.identity_id) for r in reports)
        for r in reports:
            line = f"{r.status.upper():4}  {r.identity_id:<{width}}  {r.range_desc}  ({r.elapsed_ms:.1f} ms)"
            if r.counterexample is not None:
                ce = r.counterexample
                line += f"\n      first counterexample {ce.params}: lhs={ce.lhs} rhs={ce.rhs}"
            print(line)
    return 0 if all(r.passed for r in reports) else 1


# ---------------------------------------------------------------------------
# simulate

def _sim_table(result) -> str:
    lines = [f"t = {result.time_fraction}, paths = {result.paths_used}"]
    lines.append(f"{'n':>2}  {'mean':>12}  {'stderr':>12}  {'exact':>22}  {'z':>8}")
    for m in result.moments:
        se = "-" if m.standard_error is None else f"{m.standard_error:.6g}"
        z = "-" if m.z_score is None else f"{m.z_score:+.3f}"
        exact = f"{m.exact_value} ({float(m.exact_value):.6g})"
        lines.append(f"{m.n:>2}  {m.empirical_mean:>12.8f}  {se:>12}  {exact:>22}  {z:>8}")
    return "\n".join(lines)


def _cmd_simulate(args) -> int:
    try:
        config = occupation.SimConfig(
            alpha=args.alpha,
            steps=args.steps,
            paths=args.paths,
            max_moment=args.moments,
            seed=args.seed,
        )
        jobs = _default_jobs(args.jobs)
        if args.t is not None and not 0 < args.t <= 1:
            raise ValueError("--t must lie in (0, 1]")
    except ValueError as exc:
        return _usage_error(str(exc))
    results = [("moments", occupation.estimate_moments(config, jobs=jobs))]
    if args.t is not None:
        results.append(("self_similarity", occupation.self_similarity_check(config, args.t, jobs=jobs)))
    if args.format == "json":
        if len(results) == 1:
            print(occupation.result_to_json(results[0][1]))
        else:
            print(json.dumps({name: occupation.result_to_dict(r) for name, r in results}, indent=2))
    elif args.format == "csv":
        if len(results) == 1:
            sys.stdout.write(occupation.result_to_csv(results[0][1]))
        else:
            buf = io.StringIO()
            writer = csv.writer(buf)
            writer.writerow(["time_fraction", "n", "empirical_mean", "stderr", "exact", "z_score"])
            for _, r in results:
                for m in r.moments:
                    writer.writerow(
                        [
                            str(r.time_fraction),
                            m.n,
                            repr(m.empirical_mean),
                            "" if m.standard_error is None else repr(m.standard_error),
                            str(m.exact_value),
                            "" if m.z_score is None else repr(m.z_score),
                        ]
                    )
            sys.stdout.write(buf.getvalue())
    else:
        print("\n\n".join(_sim_table(r) for _, r in results))
    z_values = [abs(m.z_score) for _, r in results for m in r.moments if m.z_score is not None]
    return 0 if all(z < 5.0 for z in z_values) else 1


_DISPATCH = {
    "triangle": _cmd_triangle,
    "poly": _cmd_poly,
    "verify": _cmd_verify,
    "simulate": _cmd_simulate,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    return _DISPATCH[args.command](args)


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
