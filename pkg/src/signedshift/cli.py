"""Command-line interface.

Exit status: 0 on success, 1 on a negative answer (forbidden pattern, failed
verification), 2 on usage or parse errors and on budget refusals.
"""

from __future__ import annotations

import argparse
import csv
import io
import itertools
import json
import math
import re
import sys
from fractions import Fraction
from math import comb, factorial

from . import enumeration as en
from .intervals import allowed_intervals, witness
from .oracle import map_sampling_report, word_scan_report, word_scan_size
from .patterns import format_permutation, parse_permutation
from .segmentations import (
    allowed_patterns, enumerate_segmentations, is_allowed, iter_segmentations,
    smallest_forbidden,
)
from .words import Signature

DEFAULT_BUDGET = 10 ** 8
# sign-only tokens such as "--" or "-+" would be eaten by argparse
_SIGN_TOKEN = re.compile(r"^[+-]+$")
_SIGN_PREFIX = "sig:"


class BudgetExceeded(Exception):
    pass


def _signature(text: str) -> Signature:
    if text.startswith(_SIGN_PREFIX):
        text = text[len(_SIGN_PREFIX):]
    try:
        return Signature.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _permutation(text: str):
    try:
        return parse_permutation(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _check_budget(args, cost: int, what: str):
    if cost > args.budget:
        raise BudgetExceeded(
            f"{what} needs about {cost:.3g} evaluations, over the budget of "
            f"{args.budget:.3g}; raise --budget to force it")


def _segmentation_cost(n: int, k: int) -> int:
    return comb(n + k - 1, k - 1)


def _scan_cost(n: int, k: int) -> int:
    return factorial(n) * _segmentation_cost(n, k)


def _fmt(value):
    if isinstance(value, Fraction):
        return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
    return value


def _jsonable(value):
    if isinstance(value, Fraction):
        return _fmt(value)
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


def _emit_rows(args, rows: list[dict], text: str, out):
    if args.format == "json":
        out.write(json.dumps(_jsonable(rows), indent=2) + "\n")
    elif args.format == "csv":
        buf = io.StringIO()
        if rows:
            writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
            writer.writeheader()
            for row in rows:
                writer.writerow({k: _fmt(v) if not isinstance(v, (list, dict)) else json.dumps(v)
                                 for k, v in row.items()})
        out.write(buf.getvalue())
    else:
        out.write(text + ("\n" if not text.endswith("\n") else ""))


def cmd_decide(args, out) -> int:
    pi, sigma = args.perm, args.sigma
    _check_budget(args, _segmentation_cost(len(pi), sigma.k), "decide")
    segs = enumerate_segmentations(pi, sigma)
    valid = [s for s in segs if s.valid]
    allowed = bool(valid)
    record = {
        "perm": format_permutation(pi),
        "signature": str(sigma),
        "allowed": allowed,
        "segmentations": [s.as_record() for s in segs],
    }
    if args.format == "text":
        lines = [f"{record['perm']} is {'allowed' if allowed else 'forbidden'} for {sigma}"]
        for s in segs:
            r = s.as_record()
            status = "valid" if s.valid else "invalid"
            lines.append(f"  {r['bars']}  prefix={r['prefix']}  p={r['p']}  q={r['q']}  {status}")
        if not segs:
            lines.append("  no segmentations")
        text = "\n".join(lines)
    else:
        text = ""
    if args.verify:
        found = witness(pi, sigma)
        record["verify"] = {"witness": None if found is None else str(found),
                            "agrees": (found is not None) == allowed}
        text += f"\nverify: witness {record['verify']['witness']} " \
                f"{'agrees' if record['verify']['agrees'] else 'DISAGREES'}"
    if args.format == "json":
        out.write(json.dumps(record, indent=2) + "\n")
    elif args.format == "csv":
        _emit_rows(args, [{"perm": record["perm"], "signature": str(sigma), **r}
                          for r in record["segmentations"]], "", out)
    else:
        out.write(text + "\n")
    if args.verify and not record["verify"]["agrees"]:
        return 1
    return 0 if allowed else 1


def cmd_witness(args, out) -> int:
    pi, sigma = args.perm, args.sigma
    _check_budget(args, _segmentation_cost(len(pi), sigma.k), "witness")
    w = witness(pi, sigma)
    row = {"perm": format_permutation(pi), "signature": str(sigma),
           "witness": None if w is None else str(w)}
    text = f"{row['perm']} is forbidden for {sigma}" if w is None else str(w)
    _emit_rows(args, [row], text, out)
    return 1 if w is None else 0


def cmd_intervals(args, out) -> int:
    pi, sigma = args.perm, args.sigma
    _check_budget(args, _segmentation_cost(len(pi), sigma.k), "intervals")
    found = allowed_intervals(pi, sigma)
    rows = [iv.as_record() for iv in found]
    for row in rows:
        row["perm"] = format_permutation(pi)
    text = " U ".join(str(iv) for iv in found) if found else "empty"
    _emit_rows(args, rows, text, out)
    return 0 if found else 1


def _direct_table(family, n_values, k_values, shift, jobs):
    cells = {}
    for n in n_values:
        if family == "intervals":
            make = Signature.negative if shift == "negative" else Signature.positive
            for k in k_values:
                sigma = make(k)
                cells[n, k] = sum(1 for pi in itertools.permutations(range(1, n + 1))
                                  for _ in iter_segmentations(pi, sigma, require_valid=True))
        else:
            make = Signature.negative if family == "b" else Signature.positive
            counts = {}
            for pi in itertools.permutations(range(1, n + 1)):
                # least k by direct search, not through the N / N-bar formulas
                value = next(k for k in itertools.count(2) if is_allowed(pi, make(k)))
                counts[value] = counts.get(value, 0) + 1
            for k in k_values:
                cells[n, k] = counts.get(k, 0)
    return cells


def cmd_table(args, out) -> int:
    if args.family == "intervals":
        table = en.interval_table(args.n_max, args.k_max, args.shift)
    else:
        if args.n_max < 3:
            raise argparse.ArgumentTypeError("b tables start at n = 3")
        table = en.b_table(args.family, args.n_max, args.k_max)
    if args.format == "json":
        body = table.to_json()
    elif args.format == "csv":
        body = table.to_csv()
    else:
        body = table.to_text()
    out.write(body.rstrip("\n") + "\n")
    if not args.verify:
        return 0
    cap = 7 if args.family != "intervals" else 6
    n_values = [n for n in table.n_values if n <= cap]
    cost = sum(_scan_cost(n, k) for n in n_values for k in table.k_values)
    _check_budget(args, cost, "table verification")
    direct = _direct_table(args.family, n_values, table.k_values, args.shift, args.jobs)
    bad = [(n, k) for (n, k), v in direct.items() if v != table[n, k]]
    status = "pass" if not bad else f"FAIL at {bad}"
    out.write(f"verify (direct enumeration, n <= {cap}): {status}\n")
    return 0 if not bad else 1


def cmd_forbidden(args, out) -> int:
    k = args.k
    cost = sum(_scan_cost(m, k) for m in range(1, k + 3))
    _check_budget(args, cost, "forbidden")
    found = smallest_forbidden(args.family, k)
    rows = [{"family": args.family, "k": k, "length": len(pi), "perm": format_permutation(pi)}
            for pi in found]
    text = f"{len(found)} forbidden patterns of length {len(found[0])}:\n" + \
        "\n".join(format_permutation(pi) for pi in found)
    _emit_rows(args, rows, text, out)
    return 0


def cmd_tent(args, out) -> int:
    sigma = Signature("+-")
    cost = sum(_scan_cost(n, 2) for n in range(1, args.n_max + 1))
    _check_budget(args, cost, "tent")
    rows = []
    ok = True
    for n in range(1, args.n_max + 1):
        count = len(allowed_patterns(sigma, n, args.jobs))
        row = {"n": n, "allowed": count, "lower": None, "upper": None}
        if n >= 3:
            lower, upper = en.tent_bounds(n)
            row["lower"], row["upper"] = lower, upper
            ok = ok and lower <= count <= upper
        rows.append(row)
    lines = [f"{'n':>3} {'allowed':>9} {'lower':>9} {'upper':>9}"]
    for row in rows:
        lo = "" if row["lower"] is None else _fmt(row["lower"])
        hi = "" if row["upper"] is None else _fmt(row["upper"])
        lines.append(f"{row['n']:>3} {row['allowed']:>9} {lo:>9} {hi:>9}")
    if args.verify:
        lines.append(f"verify (bounds bracket counts): {'pass' if ok else 'FAIL'}")
    _emit_rows(args, rows, "\n".join(lines), out)
    return 0 if ok or not args.verify else 1


def cmd_entropy(args, out) -> int:
    rows = en.entropy_estimate(args.sigma, args.n_max)
    lines = [f"{'n':>3} {'I_n':>14} {'log(I_n)/(n-1)':>15} {'I_n/(n k^(n-1))':>16}"]
    for row in rows:
        lines.append(f"{row['n']:>3} {row['intervals']:>14} {row['growth']:>15.6f} "
                     f"{float(row['ratio']):>16.6f}")
    lines.append(f"limit log(k) = {math.log(args.sigma.k):.6f}")
    out_rows = [dict(row, ratio_float=float(row["ratio"])) for row in rows]
    _emit_rows(args, out_rows, "\n".join(lines), out)
    return 0


def cmd_oracle(args, out) -> int:
    sigma, n = args.sigma, args.n
    if args.method == "word-scan":
        _check_budget(args, word_scan_size(sigma.k, n) * n, "word-scan")
        report = word_scan_report(sigma, n, args.jobs)
    else:
        _check_budget(args, args.denominator ** 2 * n, "map-sampling")
        report = map_sampling_report(sigma, n, args.denominator)
    record = report.as_record()
    code = 0
    if args.verify:
        _check_budget(args, _scan_cost(n, sigma.k), "oracle verification")
        engine = allowed_patterns(sigma, n, args.jobs)
        if args.method == "word-scan":
            ok = set(report.patterns) == engine
        else:
            ok = set(report.patterns) <= engine
        record["verify"] = {"engine_count": len(engine), "agrees": ok}
        code = 0 if ok else 1
    if args.format == "json":
        out.write(json.dumps(record, indent=2) + "\n")
    elif args.format == "csv":
        _emit_rows(args, [{"perm": p} for p in record["patterns"]], "", out)
    else:
        lines = [f"{record['count']} patterns of length {n} for {sigma} "
                 f"({report.method}, {report.candidates} candidates)"]
        lines.extend(record["patterns"])
        if args.verify:
            lines.append(f"verify (engine has {record['verify']['engine_count']}): "
                         f"{'pass' if record['verify']['agrees'] else 'FAIL'}")
        out.write("\n".join(lines) + "\n")
    return code


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False, argument_default=argparse.SUPPRESS)
    common.add_argument("--format", choices=["text", "json", "csv"])
    common.add_argument("--verify", action="store_true")
    common.add_argument("--jobs", type=_positive_int)
    common.add_argument("--budget", type=_positive_int)

    parser = argparse.ArgumentParser(
        prog="signedshift",
        description="Allowed patterns of signed shifts: decisions, witnesses, intervals, counts.")
    parser.add_argument("--format", choices=["text", "json", "csv"], default="text")
    parser.add_argument("--verify", action="store_true", default=False,
                        help="append an independent cross-check")
    parser.add_argument("--jobs", type=_positive_int, default=1)
    parser.add_argument("--budget", type=_positive_int, default=DEFAULT_BUDGET,
                        help="refuse work above this many estimated evaluations")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(func=func)
        return p

    for name, func, help_text in [
        ("decide", cmd_decide, "is the pattern allowed? lists segmentations"),
        ("witness", cmd_witness, "a word inducing the pattern"),
        ("intervals", cmd_intervals, "the allowed intervals of the pattern"),
    ]:
        p = add(name, func, help_text)
        p.add_argument("perm", type=_permutation)
        p.add_argument("sigma", type=_signature)

    p = add("table", cmd_table, "counting tables")
    p.add_argument("family", choices=["b", "b_pos", "intervals"])
    p.add_argument("n_max", type=_positive_int)
    p.add_argument("k_max", type=_positive_int)
    p.add_argument("--shift", choices=["negative", "positive"], default="negative",
                   help="shift family for the intervals table")

    p = add("forbidden", cmd_forbidden, "shortest forbidden patterns")
    p.add_argument("family", choices=["positive", "negative"])
    p.add_argument("k", type=int)

    p = add("tent", cmd_tent, "tent-map pattern counts with bounds")
    p.add_argument("n_max", type=_positive_int)

    p = add("entropy", cmd_entropy, "interval-count growth diagnostic")
    p.add_argument("sigma", type=_signature)
    p.add_argument("n_max", type=int)

    p = add("oracle", cmd_oracle, "brute-force pattern sets")
    p.add_argument("sigma", type=_signature)
    p.add_argument("n", type=_positive_int)
    p.add_argument("method", nargs="?", choices=["word-scan", "map-sampling"], default="word-scan")
    p.add_argument("--denominator", type=_positive_int, default=500,
                   help="largest denominator for map sampling")
    return parser


def _protect_sign_tokens(argv):
    return [_SIGN_PREFIX + tok if _SIGN_TOKEN.match(tok) else tok for tok in argv]


def main(argv=None, out=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(_protect_sign_tokens(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except (BudgetExceeded, ValueError, argparse.ArgumentTypeError) as exc:
        sys.stderr.write(f"signedshift {args.command}: error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
