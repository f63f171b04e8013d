"""Command-line front end.

Exit codes: 0 when everything verified, 1 on any mismatch (or a failed fit
request), 2 on usage, parse or lookup errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from qrr.catalog import CatalogError, UnknownIdError, list_entries, verify, verify_all
from qrr.expr import ExprEvalError, ExprSyntaxError, eval_expr, parse_expr
from qrr.prodfit import NotPeriodicError, classify, prodfit

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _positive(text):
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if n <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return n


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="qrr", description="Exact q-series identity checks.")
    sub = p.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    v = sub.add_parser("verify", help="verify one catalog entry")
    v.add_argument("--id", required=True)
    v.add_argument("--order", type=_positive)
    v.add_argument("--json", action="store_true")

    va = sub.add_parser("verify-all", help="verify every entry (optionally of one status)")
    va.add_argument("--status", choices=("theorem", "conjecture", "proof-step"))
    va.add_argument("--order", type=_positive)
    va.add_argument("--jobs", type=_positive, default=1)
    va.add_argument("--json", action="store_true")

    ex = sub.add_parser("expand", help="expand an expression")
    ex.add_argument("--expr", required=True)
    ex.add_argument("--order", type=_positive, required=True)

    pf = sub.add_parser("prodfit", help="fit prod (1-q^n)^(-e_n) to an expression")
    pf.add_argument("--expr", required=True)
    pf.add_argument("--order", type=_positive, required=True)
    pf.add_argument("--modulus", type=_positive)

    sub.add_parser("list", help="list catalog entries")
    return p


def _emit(reports, as_json, out):
    for r in reports:
        out.write((json.dumps(r.to_json()) if as_json else r.line()) + "\n")
    return EXIT_OK if all(r.passed for r in reports) else EXIT_MISMATCH


def _expression(text, order):
    return eval_expr(parse_expr(text), order, source=text)


def _cmd_prodfit(args, out):
    f = _expression(args.expr, args.order)
    pe = prodfit(f, args.order - 1)
    doc = pe.to_json()
    code = EXIT_OK
    if args.modulus is not None:
        try:
            doc["classified"] = [{"a": a, "m": m, "r": r if isinstance(r, int) else str(r)}
                                 for a, m, r in classify(pe, args.modulus)]
        except NotPeriodicError as exc:
            doc["classified"] = None
            doc["error"] = str(exc)
            code = EXIT_MISMATCH
    out.write(json.dumps(doc) + "\n")
    return code


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        if args.cmd == "verify":
            return _emit([verify(args.id, args.order)], args.json, out)
        if args.cmd == "verify-all":
            return _emit(verify_all(args.status, args.order, args.jobs), args.json, out)
        if args.cmd == "expand":
            out.write(str(_expression(args.expr, args.order)) + "\n")
            return EXIT_OK
        if args.cmd == "prodfit":
            return _cmd_prodfit(args, out)
        for eid, status, desc in list_entries():
            out.write(f"{eid:<28} {status:<11} {desc}\n")
        return EXIT_OK
    except UnknownIdError as exc:
        print(f"qrr: unknown id {exc.args[0]!r}", file=sys.stderr)
    except ExprSyntaxError as exc:
        print(f"qrr: {exc}", file=sys.stderr)
    except (ExprEvalError, CatalogError, ValueError, ArithmeticError) as exc:
        print(f"qrr: {exc}", file=sys.stderr)
    return EXIT_USAGE


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
