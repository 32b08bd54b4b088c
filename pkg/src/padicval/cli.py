"""Command-line front end.

Every engine is exposed as a subcommand; output is deterministic and
exact (rationals print as "num/den", never floats).  Exit codes: 0 on
success, 1 on domain errors, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import analysis, padic, recurrence, reproduce
from .errors import PadicValError, ParseError
from .parser import parse_poly
from .poly import IntPolynomial, format_poly

DEPTH_CAP_ENV = "PADICVAL_DEPTH_CAP"


def _poly_arg(text: str) -> IntPolynomial:
    try:
        return parse_poly(text)
    except ParseError as e:
        raise argparse.ArgumentTypeError(str(e)) from e


def _prime_arg(text: str) -> padic.Prime:
    try:
        return padic.Prime(int(text))
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from e


def _positive_int(text: str) -> int:
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return n


def _default_depth_cap() -> int:
    raw = os.environ.get(DEPTH_CAP_ENV)
    return int(raw) if raw else analysis.DEFAULT_DEPTH_CAP


def _frac(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _csv_lines(header: list[str], rows: list[list]) -> str:
    lines = [",".join(header)]
    lines += [",".join(str(c) for c in row) for row in rows]
    return "\n".join(lines) + "\n"


def _add_common(sub, poly=True, prime=True):
    if poly:
        sub.add_argument("--poly", type=_poly_arg, required=True, help="polynomial in x, e.g. 'x^5+2*x^3+3'")
    if prime:
        sub.add_argument("--prime", type=_prime_arg, required=True)
    sub.add_argument("--format", choices=("csv", "json", "table"), default="table")
    sub.add_argument("--out", metavar="PATH", help="write output here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="padicval",
        description="Prime valuations of product sequences t_n = Q(n) t_{n-1}.",
    )
    sp = ap.add_subparsers(dest="command", required=True)

    s = sp.add_parser("roots", help="roots of Q mod p")
    _add_common(s)

    s = sp.add_parser("classify", help="Hensel classification of (Q, p)")
    _add_common(s)

    s = sp.add_parser("lift", help="lift a simple root mod p to higher precision")
    _add_common(s)
    s.add_argument("--root", type=int, required=True, help="base residue mod p")
    s.add_argument("--precision", type=int, default=8, help="extra digits k; result is exact mod p^(k+1)")

    s = sp.add_parser("valuation", help="valuation of t_n")
    _add_common(s)
    s.add_argument("--n", type=_positive_int, required=True)
    s.add_argument("--engine", choices=("auto", "fast", "direct"), default="auto")
    s.add_argument("--no-auto-shift", action="store_true")

    s = sp.add_parser("series", help="valuations of t_1 .. t_N")
    _add_common(s)
    s.add_argument("--n-max", type=_positive_int, required=True)
    s.add_argument("--no-auto-shift", action="store_true")

    s = sp.add_parser("slope", help="asymptotic slope and zero number")
    _add_common(s)
    s.add_argument("--exact", action="store_true", help="exact limit via the branch recursion")
    s.add_argument("--n", type=_positive_int, help="also report the finite-n empirical slope")
    s.add_argument("--depth-cap", type=_positive_int, default=None)

    s = sp.add_parser("errors", help="normalized and relative error series")
    _add_common(s)
    s.add_argument("--n-max", type=_positive_int, required=True)
    s.add_argument("--no-auto-shift", action="store_true")

    s = sp.add_parser("scan", help="classify Q at the first N primes")
    _add_common(s, prime=False)
    s.add_argument("--count", type=_positive_int, required=True)
    s.add_argument("--workers", type=_positive_int, default=1)

    s = sp.add_parser("reproduce", help="recompute the worked-example claims")
    s.add_argument("selector", choices=sorted(reproduce.SELECTORS) + ["all"])
    s.add_argument("--scan-count", type=_positive_int, default=5000)
    s.add_argument("--workers", type=_positive_int, default=1)
    s.add_argument("--out", metavar="PATH")

    return ap


def _cmd_roots(args) -> str:
    roots = padic.roots_mod_p(args.poly, args.prime)
    if args.format == "json":
        payload = {"p": args.prime.value, "poly": format_poly(args.poly), "roots": roots}
        return json.dumps(payload, sort_keys=True) + "\n"
    if args.format == "csv":
        return _csv_lines(["root"], [[r] for r in roots])
    return " ".join(str(r) for r in roots) + "\n"


def _cmd_classify(args) -> str:
    cls = padic.classify_prime(args.poly, args.prime)
    if args.format == "json":
        return json.dumps(cls.to_json(), sort_keys=True) + "\n"
    if args.format == "csv":
        return _csv_lines(
            ["p", "verdict", "roots", "non_hensel_roots"],
            [[cls.p.value, cls.verdict.value,
              ";".join(map(str, cls.roots)), ";".join(map(str, cls.non_hensel_roots))]],
        )
    return (
        f"{cls.verdict.value} roots={','.join(map(str, cls.roots))}"
        f" non_hensel={','.join(map(str, cls.non_hensel_roots))}\n"
    )


def _cmd_lift(args) -> str:
    root = padic.hensel_lift(args.poly, args.prime, args.root, args.precision)
    value = root.truncation_value(root.precision - 1)
    if args.format == "json":
        payload = root.to_json()
        payload["value"] = value
        return json.dumps(payload, sort_keys=True) + "\n"
    if args.format == "csv":
        return _csv_lines(["s", "digit", "truncation"],
                          [[s, d, root.truncation_value(s)] for s, d in enumerate(root.digits)])
    return f"digits={','.join(map(str, root.digits))} value={value}\n"


def _make_spec(args) -> recurrence.RecurrenceSpec:
    return recurrence.make_spec(args.poly, auto_shift=not getattr(args, "no_auto_shift", False))


def _cmd_valuation(args) -> str:
    spec = _make_spec(args)
    if args.engine == "direct":
        v = recurrence.valuation_tn_direct(spec, args.prime, args.n)
    elif args.engine == "fast":
        v = recurrence.valuation_tn_fast(spec, args.prime, args.n)
    else:
        cls = padic.classify_prime(args.poly, args.prime)
        if cls.verdict is padic.Verdict.NON_HENSEL:
            v = recurrence.valuation_tn_direct(spec, args.prime, args.n)
        else:
            v = recurrence.valuation_tn_fast(spec, args.prime, args.n, classification=cls)
    if args.format == "json":
        payload = {"p": args.prime.value, "poly": format_poly(args.poly),
                   "n": args.n, "valuation": v}
        return json.dumps(payload, sort_keys=True) + "\n"
    if args.format == "csv":
        return _csv_lines(["n", "valuation"], [[args.n, v]])
    return f"{v}\n"


def _cmd_series(args) -> str:
    spec = _make_spec(args)
    series = recurrence.valuation_series(spec, args.prime, args.n_max)
    if args.format == "json":
        return json.dumps(series.to_json(), sort_keys=True) + "\n"
    if args.format == "csv":
        return series.to_csv()
    return "".join(f"{k + 1} {v}\n" for k, v in enumerate(series.values))


def _cmd_slope(args) -> str:
    depth_cap = args.depth_cap if args.depth_cap is not None else _default_depth_cap()
    spec = _make_spec(args)
    sample = (args.n,) if args.n else ()
    if args.exact:
        # let a stalled recursion propagate with its residue chain
        analysis.exact_slope(args.poly, args.prime, depth_cap)
    report = analysis.slope_report(spec, args.prime, sample_points=sample, depth_cap=depth_cap)
    if args.format == "json":
        return json.dumps(report.to_json(), sort_keys=True) + "\n"
    if args.format == "csv":
        rows = [["exact", _frac(report.predicted) if report.predicted is not None else "",
                 _frac(report.n_p) if report.n_p is not None else ""]]
        rows += [[f"empirical_n={n}", _frac(v), ""] for n, v in report.empirical]
        return _csv_lines(["kind", "E", "N"], rows)
    parts = []
    if report.predicted is not None:
        parts.append(f"E={_frac(report.predicted)} N={_frac(report.n_p)}")
    for n, v in report.empirical:
        parts.append(f"empirical(n={n})={_frac(v)}")
    return " ".join(parts) + "\n"


def _cmd_errors(args) -> str:
    spec = _make_spec(args)
    series = analysis.error_series(spec, args.prime, args.n_max)
    if args.format == "json":
        return json.dumps(series.to_json(), sort_keys=True) + "\n"
    if args.format == "csv":
        return series.to_csv()
    return "".join(
        f"{k + 1} {series.err[k]} {series.relerr[k]}\n" for k in range(len(series.err))
    )


def _cmd_scan(args) -> str:
    results = analysis.scan_primes(args.poly, args.count, workers=args.workers)
    if args.format == "json":
        return json.dumps([c.to_json() for _, c in results], sort_keys=True) + "\n"
    rows = []
    for p, c in results:
        if isinstance(c, analysis.AllResidues):
            rows.append([p.value, "all_residues", "", ""])
        else:
            rows.append([p.value, c.verdict.value,
                         ";".join(map(str, c.roots)), ";".join(map(str, c.non_hensel_roots))])
    if args.format == "csv":
        return _csv_lines(["p", "verdict", "roots", "non_hensel_roots"], rows)
    return "".join(f"{r[0]} {r[1]} roots={r[2]} non_hensel={r[3]}\n" for r in rows)


def _cmd_reproduce(args) -> tuple[str, int]:
    claims = reproduce.run(args.selector, scan_count=args.scan_count, workers=args.workers)
    lines = [("PASS " if ok else "FAIL ") + name for name, ok in claims]
    ok_all = all(ok for _, ok in claims)
    lines.append(f"{sum(ok for _, ok in claims)}/{len(claims)} claims pass")
    return "\n".join(lines) + "\n", 0 if ok_all else 1


_DISPATCH = {
    "roots": _cmd_roots,
    "classify": _cmd_classify,
    "lift": _cmd_lift,
    "valuation": _cmd_valuation,
    "series": _cmd_series,
    "slope": _cmd_slope,
    "errors": _cmd_errors,
    "scan": _cmd_scan,
}


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        if args.command == "reproduce":
            text, code = _cmd_reproduce(args)
            _emit(text, args.out)
            return code
        text = _DISPATCH[args.command](args)
    except PadicValError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    _emit(text, args.out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
