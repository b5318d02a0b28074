"""Command-line front end.

Every number in machine-readable output is a decimal string, since values
routinely exceed 64 bits. Exit codes: 0 success, 1 usage or precondition
error, 2 scan cap exceeded, 3 theory violation (including fast/oracle
disagreement).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from fractions import Fraction
from typing import Any, Callable, Optional

from . import oracle
from .ap_analysis import APSpec, ap_scan, exhaustive_ap_search, longest_palindromic_ap
from .digits import decimal_string, parse_decimal
from .errors import CapExceeded, PalinseqError, TheoryViolation
from .gp_analysis import (
    DEFAULT_GP_CAP,
    GPSpec,
    alpha_ratio,
    count_palindromes_divisible,
    gp_scan,
    integrality_failure_index,
    min_index_for_digits,
    subsequence_exponent,
)
from .palindrome_seq import count_with_digits, gaps_in_range, next_palindrome, prev_palindrome, rank, unrank

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_CAP = 2
EXIT_THEORY = 3

_DECIMAL = re.compile(r"[0-9]+")
_RATIO = re.compile(r"([0-9]+)/([0-9]+)")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _natural(text: str) -> int:
    if not _DECIMAL.fullmatch(text):
        raise argparse.ArgumentTypeError(f"{text!r} is not a non-negative decimal integer")
    return parse_decimal(text)


_natural.__name__ = "natural"


def _ratio(text: str) -> Fraction:
    m = _RATIO.fullmatch(text)
    if not m:
        raise argparse.ArgumentTypeError(f"{text!r} is not of the form <p>/<q>")
    p, q = parse_decimal(m.group(1)), parse_decimal(m.group(2))
    if p == 0 or q == 0:
        raise argparse.ArgumentTypeError(f"{text!r} needs positive numerator and denominator")
    return Fraction(p, q)


_ratio.__name__ = "ratio"


def _s(value: Any) -> Any:
    if value is None or isinstance(value, (bool, str)):
        return value
    if isinstance(value, Fraction):
        return f"{decimal_string(value.numerator)}/{decimal_string(value.denominator)}"
    if isinstance(value, int):
        return decimal_string(value)
    if isinstance(value, float):
        return f"{value:.6e}"
    raise TypeError(type(value))


class Result:
    """One command's output: a flat record, optionally with a list of rows."""

    def __init__(self, record: dict, rows: Optional[list[dict]] = None, rows_key: str = "rows"):
        self.record = {k: _s(v) for k, v in record.items()}
        self.rows = None if rows is None else [{k: _s(v) for k, v in r.items()} for r in rows]
        self.rows_key = rows_key

    def to_json(self) -> str:
        obj = dict(self.record)
        if self.rows is not None:
            obj[self.rows_key] = self.rows
        return json.dumps(obj, ensure_ascii=False)

    def to_csv(self) -> str:
        buf = io.StringIO()
        table = self.rows if self.rows is not None else [self.record]
        if self.rows is not None and not table:
            return ""
        writer = csv.DictWriter(buf, fieldnames=list(table[0]), lineterminator="\n")
        writer.writeheader()
        for row in table:
            writer.writerow({k: "" if v is None else str(v).lower() if isinstance(v, bool) else v for k, v in row.items()})
        return buf.getvalue().rstrip("\n")

    def to_text(self) -> str:
        lines = [f"{k}: {_text(v)}" for k, v in self.record.items()]
        for row in self.rows or []:
            lines.append(" ".join(f"{k}={_text(v)}" for k, v in row.items()))
        return "\n".join(lines)

    def render(self, fmt: str) -> str:
        return {"json": self.to_json, "csv": self.to_csv, "text": self.to_text}[fmt]()


def _text(v):
    if v is None:
        return "-"
    if isinstance(v, bool):
        return str(v).lower()
    return v


def _agree(name: str, fast, slow) -> None:
    if fast != slow:
        raise TheoryViolation(f"{name}: fast path gave {fast!r}, oracle gave {slow!r}")
    print(f"oracle: {name} agrees", file=sys.stderr)


# --- handlers ------------------------------------------------------------


def cmd_next(args) -> Result:
    value = next_palindrome(args.n)
    if args.oracle:
        _agree("next", value, oracle.oracle_next_palindrome(args.n))
    return Result({"input": args.n, "next": value})


def cmd_prev(args) -> Result:
    value = prev_palindrome(args.n)
    if args.oracle:
        _agree("prev", value, oracle.oracle_prev_palindrome(args.n))
    return Result({"input": args.n, "prev": value})


def cmd_rank(args) -> Result:
    value = rank(args.p)
    if args.oracle:
        _agree("rank", value, oracle.oracle_rank(args.p))
    return Result({"palindrome": args.p, "rank": value})


def cmd_unrank(args) -> Result:
    value = unrank(args.i)
    if args.oracle:
        _agree("unrank", value, oracle.oracle_unrank(args.i))
    return Result({"index": args.i, "palindrome": value})


def cmd_count_digits(args) -> Result:
    value = count_with_digits(args.L)
    if args.oracle:
        _agree("count-digits", value, oracle.oracle_count_with_digits(args.L))
    return Result({"digits": args.L, "count": value})


def cmd_gaps(args) -> Result:
    records = gaps_in_range(args.lo, args.hi)
    if args.oracle:
        fast = [(r.lower, r.upper, r.gap, r.digit_length_lower) for r in records]
        _agree("gaps", fast, oracle.oracle_gaps(args.lo, args.hi))
    rows = [{"lower": r.lower, "upper": r.upper, "gap": r.gap, "digits": r.digit_length_lower} for r in records]
    return Result({"lo": args.lo, "hi": args.hi, "count": len(rows)}, rows, "gaps")


def cmd_ap_scan(args) -> Result:
    ap = APSpec(args.a, args.d)
    report = ap_scan(ap, cap=args.cap)
    if args.oracle:
        _agree("ap scan", (report.failing_index, report.failing_term), oracle.oracle_ap_first_failure(args.a, args.d))
    return Result({
        "first": args.a,
        "difference": args.d,
        "failing_index": report.failing_index,
        "failing_term": report.failing_term,
        "terms_checked": report.terms_checked,
        "cap": report.cap_used,
    })


def cmd_ap_longest(args) -> Result:
    w = longest_palindromic_ap(args.a, args.l)
    if args.oracle:
        _agree("ap longest", (w.difference, w.length), oracle.oracle_longest_ap(args.a, args.l))
    return Result({"first": w.first, "last": w.last, "difference": w.difference, "length": w.length})


def cmd_ap_search(args) -> Result:
    found = exhaustive_ap_search(args.max, args.minlen, seed=args.seed)
    if args.oracle:
        fast = [(w.first, w.difference, w.length) for w in found]
        _agree("ap search", fast, oracle.oracle_ap_search(args.max, args.minlen))
    rows = [{"first": w.first, "difference": w.difference, "length": w.length, "last": w.last} for w in found]
    return Result({"max_value": args.max, "min_length": args.minlen, "count": len(rows)}, rows, "witnesses")


def cmd_gp_scan(args) -> Result:
    gp = GPSpec(args.a, args.r)
    cap = DEFAULT_GP_CAP if args.cap is None else args.cap
    report = gp_scan(gp, check_gcd=args.check_gcd, cap=cap)
    if args.oracle:
        _agree("gp scan", (report.failing_index, report.failing_term), oracle.oracle_gp_first_failure(args.a, args.r, cap))
    return Result({
        "first": args.a,
        "ratio": args.r,
        "failing_index": report.failing_index,
        "failing_term": report.failing_term,
        "terms_checked": report.terms_checked,
        "cap": report.cap_used,
    })


def cmd_gp_ratfail(args) -> Result:
    s = integrality_failure_index(args.a, args.ratio)
    if args.oracle:
        _agree("gp ratfail", s, oracle.oracle_integrality_failure(args.a, args.ratio))
    return Result({"a": args.a, "ratio": args.ratio, "index": s, "term": args.a * args.ratio**s})


def cmd_gp_mindex(args) -> Result:
    gp = GPSpec(args.a, args.r)
    idx = min_index_for_digits(gp, args.lam)
    if args.oracle:
        _agree("gp mindex", idx.exact, oracle.oracle_min_index_for_digits(args.a, args.r, args.lam))
    return Result({
        "first": args.a,
        "ratio": args.r,
        "lambda": args.lam,
        "exact": idx.exact,
        "approximate": idx.approximate,
    })


def cmd_gp_alpha(args) -> Result:
    gp = GPSpec(args.a, args.r)
    cmp = alpha_ratio(gp)
    if args.oracle:
        _agree("gp alpha", cmp.below_one, oracle.oracle_alpha_below_one(args.a, args.r))
    return Result({
        "first": args.a,
        "ratio": args.r,
        "L": gp.first_digits,
        "R": gp.ratio_digits,
        "ratio_squared": cmp.ratio_squared,
        "power_of_ten": cmp.power_of_ten,
        "alpha_below_one": cmp.below_one,
    })


def cmd_gp_subexp(args) -> Result:
    b = subsequence_exponent(GPSpec(args.a, args.r))
    if args.oracle:
        _agree("gp subexp", b, oracle.oracle_subsequence_exponent(args.a, args.r))
    return Result({"first": args.a, "ratio": args.r, "exponent": b})


def cmd_density(args) -> Result:
    c = count_palindromes_divisible(args.L, args.q)
    if args.oracle:
        _agree("density", c.exact_count, oracle.oracle_count_divisible(args.L, args.q))
    dev = c.relative_deviation
    return Result({
        "digits": c.digit_length,
        "modulus": c.modulus,
        "exact_count": c.exact_count,
        "total": count_with_digits(c.digit_length),
        "main_term": c.main_term,
        "relative_deviation": dev,
        "relative_deviation_approx": float(dev),
    })


# --- parser --------------------------------------------------------------


def _common() -> argparse.ArgumentParser:
    # leaf-level copies default to SUPPRESS so they only override when given
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--format", choices=("text", "json", "csv"), default=argparse.SUPPRESS)
    p.add_argument("--cap", type=_natural, default=argparse.SUPPRESS, help="scan cap in terms")
    p.add_argument("--oracle", action="store_true", default=argparse.SUPPRESS,
                   help="also run the naive reference and fail on mismatch")
    p.add_argument("--seed", type=_natural, default=argparse.SUPPRESS,
                   help="shuffle search order in 'ap search'")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = _Parser(prog="palinseq", description="Palindromic numbers and progressions of palindromes.")
    parser.add_argument("--format", choices=("text", "json", "csv"), default="text")
    parser.add_argument("--cap", type=_natural, default=None)
    parser.add_argument("--oracle", action="store_true", default=False)
    parser.add_argument("--seed", type=_natural, default=None)
    sub = parser.add_subparsers(dest="command", metavar="command", required=True)

    def leaf(container, name, handler: Callable, help_text: str, *args):
        p = container.add_parser(name, parents=[common], help=help_text)
        for arg, kind in args:
            p.add_argument(arg, type=kind)
        p.set_defaults(handler=handler)
        return p

    leaf(sub, "next", cmd_next, "smallest palindrome above n", ("n", _natural))
    leaf(sub, "prev", cmd_prev, "largest palindrome below n", ("n", _natural))
    leaf(sub, "rank", cmd_rank, "1-based index of a palindrome", ("p", _natural))
    leaf(sub, "unrank", cmd_unrank, "i-th positive palindrome", ("i", _natural))
    leaf(sub, "count-digits", cmd_count_digits, "number of L-digit palindromes", ("L", _natural))
    leaf(sub, "gaps", cmd_gaps, "gaps to the successor for palindromes in [lo, hi)",
         ("lo", _natural), ("hi", _natural))

    ap = sub.add_parser("ap", help="arithmetic progressions").add_subparsers(
        dest="ap_command", metavar="ap-command", required=True)
    leaf(ap, "scan", cmd_ap_scan, "first non-palindromic term", ("a", _natural), ("d", _natural))
    leaf(ap, "longest", cmd_ap_longest, "longest all-palindrome AP from a to l",
         ("a", _natural), ("l", _natural))
    leaf(ap, "search", cmd_ap_search, "maximal all-palindrome APs below a bound",
         ("max", _natural), ("minlen", _natural))

    gp = sub.add_parser("gp", help="geometric progressions").add_subparsers(
        dest="gp_command", metavar="gp-command", required=True)
    scan = leaf(gp, "scan", cmd_gp_scan, "first non-palindromic term", ("a", _natural), ("r", _natural))
    scan.add_argument("--check-gcd", action="store_true", help="require a, r coprime to 2, 3, 5, 11")
    leaf(gp, "ratfail", cmd_gp_ratfail, "first non-integral term for ratio p/q",
         ("a", _natural), ("ratio", _ratio))
    leaf(gp, "mindex", cmd_gp_mindex, "first index with at least lambda*L digits",
         ("a", _natural), ("r", _natural), ("lam", _natural))
    leaf(gp, "alpha", cmd_gp_alpha, "decide alpha < 1", ("a", _natural), ("r", _natural))
    leaf(gp, "subexp", cmd_gp_subexp, "smallest B with r**B longer than a", ("a", _natural), ("r", _natural))

    leaf(sub, "density", cmd_density, "L-digit palindromes divisible by q vs |P_L|/q",
         ("L", _natural), ("q", _natural))
    return parser


def run(argv: list[str], stdout=None, stderr=None) -> int:
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(exc, file=stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE

    old_stderr, sys.stderr = sys.stderr, stderr
    try:
        result = args.handler(args)
    except CapExceeded as exc:
        partial = Result({"status": "cap_exceeded", "terms_checked": exc.terms_checked, "cap": exc.cap_used})
        print(partial.render(args.format), file=stdout)
        print(f"error: {exc}", file=stderr)
        return EXIT_CAP
    except TheoryViolation as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_THEORY
    except (PalinseqError, ValueError) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_USAGE
    finally:
        sys.stderr = old_stderr
    out = result.render(args.format)
    if out:
        print(out, file=stdout)
    return EXIT_OK


def main(argv: Optional[list[str]] = None) -> int:
    return run(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    raise SystemExit(main())
