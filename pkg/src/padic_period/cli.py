"""Command line: ``padic-period {expand,classify,reconstruct,verify}``.

Exit status 0 on success, 1 on usage errors, 2 when a verification fails.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .core import InvalidInput, normalize, reduce, require_prime
from .expansion import BetaTrace, run_expansion
from .oracle import oracle_digits
from .period import PAdicExpansion, detect_period, reconstruct_rational
from .theorem import CaseReport, check_bounds, classify_case, scan

EXIT_OK, EXIT_USAGE, EXIT_FAILED = 0, 1, 2
MINUS = "−"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def parse_rational(text: str) -> Fraction:
    try:
        if "/" in text:
            num, den = text.split("/")
            return reduce(int(num), int(den))
        return Fraction(int(text))
    except ValueError as exc:
        raise UsageError(f"malformed rational {text!r}: {exc}") from None


def parse_digits(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(t) for t in text.split(","))
    except ValueError:
        raise UsageError(f"malformed digit list {text!r}") from None


def signed(n: int) -> str:
    return f"{MINUS}{-n}" if n < 0 else str(n)


def join_digits(digits, p: int) -> str:
    return ("" if p <= 10 else ",").join(str(a) for a in digits)


def render_stream(e: PAdicExpansion, count: int) -> str:
    """Least significant digit first; digits of negative exponents precede a ``.``."""
    p, v = e.prime, e.valuation
    digits = [0] * max(v, 0) + e.digits(count)
    digits = digits[:count]
    if v < 0:
        head, tail = digits[:-v], digits[-v:]
        return join_digits(head, p) + "." + join_digits(tail, p)
    return join_digits(digits, p)


def render_period(e: PAdicExpansion) -> str:
    pre = join_digits(e.preperiod, e.prime) or "(empty)"
    return f"period={join_digits(e.period, e.prime)}, preperiod={pre}, valuation={e.valuation}"


def render_table(trace: BetaTrace) -> str:
    rows = [
        ("k", [str(s.index) for s in trace.steps]),
        ("α_k", [str(s.alpha) for s in trace.steps]),
        ("β_k", [signed(s.beta) for s in trace.steps]),
    ]
    width = max(len(cell) for _, cells in rows for cell in cells)
    label_width = max(len(label) for label, _ in rows)
    lines = [
        f"{label:<{label_width}} | " + " ".join(cell.rjust(width) for cell in cells)
        for label, cells in rows
    ]
    return "\n".join(lines)


def render_json(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def case_dict(report: CaseReport | None):
    if report is None:
        return None
    t = report.threshold
    return {
        "tag": report.case_tag.value,
        "m": None if report.m is None else str(report.m),
        "threshold": f"{t.numerator}/{t.denominator}",
    }


def _operand_case(operand) -> CaseReport | None:
    if operand.unit_num < 0:
        return None
    return classify_case(operand.unit_num, operand.unit_den, operand.prime)


def cmd_expand(args) -> int:
    p = require_prime(args.prime)
    x = _rational_arg(args)
    if args.digits < 1:
        raise UsageError("--digits must be >= 1")
    operand = normalize(x, p)
    expansion, _ = detect_period(operand)
    trace = run_expansion(operand, args.digits)

    if args.oracle_check:
        got = trace.alphas
        want = oracle_digits(operand.unit_num, operand.unit_den, p, args.digits)
        if got != want:
            print(f"oracle-check: MISMATCH recurrence={got} oracle={want}", file=sys.stderr)
            return EXIT_FAILED
        print(f"oracle-check: ok ({args.digits} digits)", file=sys.stderr)

    if args.format == "digits":
        print(render_stream(expansion, args.digits))
    elif args.format == "period":
        print(render_period(expansion))
    elif args.format == "table":
        print(render_table(trace))
    else:
        obj = {
            "prime": str(p),
            "valuation": str(expansion.valuation),
            "preperiod": [str(a) for a in expansion.preperiod],
            "period": [str(a) for a in expansion.period],
            "digits": [str(a) for a in trace.alphas],
            "case": case_dict(_operand_case(operand)),
            "trace": [{"k": str(s.index), "alpha": str(s.alpha), "beta": str(s.beta)} for s in trace.steps],
        }
        sys.stdout.write(render_json(obj))
    return EXIT_OK


def cmd_classify(args) -> int:
    p = require_prime(args.prime)
    if args.rational is not None:
        x = parse_rational(args.rational)
        c, d = x.numerator, x.denominator
    elif args.c is not None and args.d is not None:
        c, d = args.c, args.d
    else:
        raise UsageError("give --c and --d (or --rational)")
    report = classify_case(c, d, p)
    horizon = max(args.horizon, (report.m or 0) + 2)
    trace = run_expansion(normalize(Fraction(c, d), p), horizon)
    report = check_bounds(trace, report, horizon)

    if args.json:
        obj = {
            "prime": str(p),
            "c": str(c),
            "d": str(d),
            "case": case_dict(report),
            "horizon": str(report.horizon),
            "violations": [[str(i), name, str(b)] for i, name, b in report.violations],
            "strict_warnings": [[str(i), name, str(b)] for i, name, b in report.strict_warnings],
        }
        sys.stdout.write(render_json(obj))
    else:
        t = report.threshold
        print(report.title)
        print(f"threshold={t.numerator}/{t.denominator}")
        print(
            f"bounds over {report.horizon} steps: "
            f"violations={len(report.violations)}, strict_warnings={len(report.strict_warnings)}"
        )
        for kind, items in (("violation", report.violations), ("strict-warning", report.strict_warnings)):
            for i, name, b in items:
                print(f"  {kind}: i={i} {name} fails with beta={signed(b)}")
    return EXIT_FAILED if report.violations else EXIT_OK


def cmd_reconstruct(args) -> int:
    p = require_prime(args.prime)
    if not args.period.strip():
        raise UsageError("--period must be nonempty")
    e = PAdicExpansion(p, args.valuation, parse_digits(args.preperiod), parse_digits(args.period))
    print(reconstruct_rational(e))
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        primes = [int(t) for t in args.primes.split(",") if t.strip()]
    except ValueError:
        raise UsageError(f"malformed prime list {args.primes!r}") from None
    if not primes:
        raise UsageError("--primes is empty")
    if args.max_c < 1 or args.max_d < 1:
        raise UsageError("--max-c and --max-d must be >= 1")
    report = scan(primes, args.max_c, args.max_d, signed=args.signed, workers=args.workers)
    summary = report.to_dict()
    if args.json:
        sys.stdout.write(render_json(summary))
    else:
        print(f"instances: {report.instances}")
        for tag, n in summary["case_counts"].items():
            print(f"case {tag}: {n}")
        print(f"boundary_skipped: {report.boundary_skipped}")
        print(f"violations: {len(report.violations)}")
        print(f"strict_warnings: {len(report.strict_warnings)}")
        print(f"identity_failures: {len(report.identity_failures)}")
        print(f"roundtrip_failures: {len(report.roundtrip_failures)}")
        print(f"oracle_mismatches: {len(report.oracle_mismatches)}")
        print(f"order_warnings: {len(report.order_warnings)}")
        print(f"max_preperiod: {report.max_preperiod}")
        print(f"max_period: {report.max_period}")
        for row in report.violations:
            print("violation: " + " ".join(str(x) for x in row))
    return EXIT_FAILED if report.failures else EXIT_OK


def _rational_arg(args) -> Fraction:
    if args.rational is not None:
        return parse_rational(args.rational)
    if args.c is not None and args.d is not None:
        return reduce(args.c, args.d)
    raise UsageError("give --rational N/D (or --c and --d)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="padic-period", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def number_args(sp):
        sp.add_argument("--prime", type=int, required=True)
        sp.add_argument("--rational")
        sp.add_argument("--c", type=int)
        sp.add_argument("--d", type=int)

    sp = sub.add_parser("expand", help="digits, period and beta trace of a rational")
    number_args(sp)
    sp.add_argument("--digits", type=int, default=32)
    sp.add_argument("--format", choices=["digits", "period", "table", "json"], default="digits")
    sp.add_argument("--oracle-check", action="store_true")
    sp.set_defaults(func=cmd_expand)

    sp = sub.add_parser("classify", help="case of the beta bounds, m, and a bound check")
    number_args(sp)
    sp.add_argument("--horizon", type=int, default=64)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("reconstruct", help="rational from (preperiod, period) digits")
    sp.add_argument("--prime", type=int, required=True)
    sp.add_argument("--preperiod", default="")
    sp.add_argument("--period", required=True)
    sp.add_argument("--valuation", type=int, default=0)
    sp.set_defaults(func=cmd_reconstruct)

    sp = sub.add_parser("verify", help="scan a grid and check every bound and identity")
    sp.add_argument("--primes", required=True)
    sp.add_argument("--max-c", type=int, required=True)
    sp.add_argument("--max-d", type=int, required=True)
    sp.add_argument("--signed", action="store_true", help="also scan negative numerators")
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_verify)
    return parser


def _glue_negative_values(argv: list[str]) -> list[str]:
    # argparse takes "-1/2" for an option; attach it as "--rational=-1/2"
    out, it = [], iter(argv)
    for tok in it:
        if tok in VALUE_FLAGS:
            nxt = next(it, None)
            if nxt is not None and nxt.startswith("-") and nxt[1:2].isdigit():
                out.append(f"{tok}={nxt}")
                continue
            out.append(tok)
            if nxt is not None:
                out.append(nxt)
        else:
            out.append(tok)
    return out


VALUE_FLAGS = {"--rational", "--c", "--valuation"}


def main(argv=None) -> int:
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    args = parser.parse_args(_glue_negative_values(argv))
    try:
        return args.func(args)
    except (UsageError, InvalidInput) as exc:
        print(f"padic-period {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
