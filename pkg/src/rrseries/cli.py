"""Command-line interface.

Subcommands: expand, verify, scan, period-check, check-congruence,
paper-suite.  Exit codes: 0 success, 1 verification failure, 2 usage or
parse/evaluation error.  Output is byte-identical across runs for fixed
inputs; timing appears only in JSON reports.
"""

import argparse
import sys

from . import catalog, dsl, verify
from .errors import RRSeriesError
from .report import reports_to_json, reports_to_text

SERIES_CHOICES = ("A", "B", "C", "D", "c", "d", "G", "H", "R")

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_USAGE = 2


def _parse_exceptions(text):
    if not text:
        return ()
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError("exceptions must be comma-separated ints")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="rrseries",
        description="Exact q-series expansion and identity verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", help="print coefficients of an expression")
    p.add_argument("expr", help="expression in the identity DSL, e.g. 'R(q)'")
    p.add_argument("-N", "--order", type=int, default=500)
    p.add_argument("--mod", type=int, default=None, help="reduce coefficients mod m")
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")

    p = sub.add_parser("verify", help="verify an identity manifest")
    p.add_argument("--manifest", default=None, help="manifest path (default: bundled)")
    p.add_argument("-N", "--order", type=int, default=500)
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("scan", help="sign scan along an arithmetic progression")
    _add_target_arguments(p)
    p.add_argument("--sign", choices=("pos", "neg"), required=True)
    p.add_argument("--exceptions", type=_parse_exceptions, default=())
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("check-congruence",
                       help="divisibility scan along an arithmetic progression")
    _add_target_arguments(p)
    p.add_argument("--mod", type=int, required=True, help="required divisor")
    p.add_argument("--exceptions", type=_parse_exceptions, default=())
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("period-check", help="check sign periodicity of coefficients")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--series", choices=SERIES_CHOICES)
    group.add_argument("--expr")
    p.add_argument("--period", type=int, required=True)
    p.add_argument("--prefix", type=int, default=None,
                   help="largest allowed prefix (default: half the scan range)")
    p.add_argument("--max-n", type=int, default=2000)
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("paper-suite", help="run the full verification suite")
    p.add_argument("-N", "--order", type=int, default=500)
    p.add_argument("--scan-n", type=int, default=2000)
    p.add_argument("--manifest", default=None)
    p.add_argument("--format", choices=("text", "json"), default="text")

    return parser


def _add_target_arguments(p):
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--series", choices=SERIES_CHOICES)
    group.add_argument("--expr", help="expression in the identity DSL")
    p.add_argument("--period", type=int, required=True)
    p.add_argument("--residue", type=int, required=True)
    p.add_argument("--max-n", type=int, default=2000)


def _target(args):
    if args.series is not None:
        return args.series, args.series
    return dsl.parse(args.expr), args.expr


def cmd_expand(args, out):
    series = dsl.evaluate(dsl.parse(args.expr), args.order)
    coeffs = series.coeffs
    if args.mod is not None:
        coeffs = series.reduce_mod(args.mod).coeffs
    if args.format == "csv":
        out.write("index,coefficient\n")
        for n, c in enumerate(coeffs):
            out.write(f"{n},{c}\n")
    elif args.format == "json":
        import json

        out.write(json.dumps(
            {"expr": args.expr, "order": series.order, "coefficients": list(coeffs)}
        ))
        out.write("\n")
    else:
        out.write(", ".join(str(c) for c in coeffs))
        out.write("\n")
    return EXIT_OK


def _emit_reports(reports, fmt, out):
    if fmt == "json":
        out.write(reports_to_json(reports))
    else:
        out.write(reports_to_text(reports))
    out.write("\n")
    return EXIT_OK if all(r.ok for r in reports) else EXIT_VERIFY_FAIL


def cmd_verify(args, out):
    path = args.manifest or verify.default_manifest_path()
    reports = []
    for record in dsl.load_manifest(path):
        reports.append(
            verify.verify_identity(record, verify.record_order(record, args.order))
        )
    return _emit_reports(reports, args.format, out)


def cmd_scan(args, out, divisor=None):
    target, label = _target(args)
    if divisor is None:
        sign = verify.SIGN_POS if args.sign == "pos" else verify.SIGN_NEG
        word = "> 0" if args.sign == "pos" else "< 0"
        spec = verify.ScanSpec(
            name=f"{label}[{args.period}n+{args.residue}] {word}",
            target=target, period=args.period, residue=args.residue,
            sign=sign, exceptions=args.exceptions, max_n=args.max_n,
        )
    else:
        spec = verify.ScanSpec(
            name=f"{label}[{args.period}n+{args.residue}] = 0 (mod {divisor})",
            target=target, period=args.period, residue=args.residue,
            divisor=divisor, exceptions=args.exceptions, max_n=args.max_n,
        )
    return _emit_reports([verify.scan(spec)], args.format, out)


def cmd_period_check(args, out):
    if args.series is not None:
        series = catalog.named_series(args.series, args.max_n)
        label = args.series
    else:
        series = dsl.evaluate(dsl.parse(args.expr), args.max_n)
        label = args.expr
    prefix = args.prefix if args.prefix is not None else args.max_n // 2
    report = verify.period_check(
        series, args.period, prefix,
        name=f"sign periodicity of {label}, period {args.period}",
    )
    return _emit_reports([report], args.format, out)


def cmd_paper_suite(args, out):
    reports = verify.run_paper_suite(
        order=args.order, scan_order=args.scan_n, manifest_path=args.manifest
    )
    return _emit_reports(reports, args.format, out)


def main(argv=None, out=None):
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 on --help; pass both through
        return int(exc.code or 0)
    try:
        if args.command == "expand":
            return cmd_expand(args, out)
        if args.command == "verify":
            return cmd_verify(args, out)
        if args.command == "scan":
            return cmd_scan(args, out)
        if args.command == "check-congruence":
            return cmd_scan(args, out, divisor=args.mod)
        if args.command == "period-check":
            return cmd_period_check(args, out)
        if args.command == "paper-suite":
            return cmd_paper_suite(args, out)
        parser.error(f"unknown command {args.command!r}")
    except (RRSeriesError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
