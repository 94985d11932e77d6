"""``padic-iwasawa``: deterministic verification reports.

Exit codes: 0 when every item passes, 1 on a verification failure, 2 on a
usage or parse error.
"""
from __future__ import annotations

import argparse
import json
import sys
import time

from . import checks
from .errors import PadicError, ParseError
from .serialize import loads

EXIT_PASS, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _unit_spec(text: str) -> tuple[int, ...]:
    """``c=K`` for one cyclotomic unit, ``c=K1*K2`` for a product."""
    if not text.startswith("c="):
        raise argparse.ArgumentTypeError(f"expected c=K, got {text!r}")
    try:
        return tuple(int(x) for x in text[2:].split("*"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad unit {text!r}") from None


def _k_range(text: str) -> range:
    try:
        lo, hi = (int(x) for x in text.split(":"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected LO:HI, got {text!r}") from None
    return range(lo, hi + 1)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--prime", type=int, default=5)
    common.add_argument("--precision", type=int, default=12, help="N: digits carried")
    common.add_argument("--level", type=int, default=4, help="n: measure level")
    common.add_argument("--trunc", type=int, default=None, help="M: series length (default p^n N)")
    common.add_argument("--c", type=int, default=2, help="regularizer")
    common.add_argument("--c2", type=int, default=3, help="second regularizer")
    common.add_argument("--unit", type=_unit_spec, action="append", help="c=K or c=K1*K2 (repeatable)")
    common.add_argument("--mmax", type=int, default=9)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--format", choices=("table", "json"), default="table")
    common.add_argument("--out", default=None, help="write the report to FILE")
    common.add_argument("--timing", action="store_true", help="add wall time to reports (breaks byte-identity)")

    parser = argparse.ArgumentParser(prog="padic-iwasawa", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("ihara", parents=[common], help="moment identities for the cocycle measure")
    sub.add_parser("lemmas", parents=[common], help="operator and measure identities")
    sub.add_parser("lp", parents=[common], help="L-values and Bernoulli interpolation")
    irr = sub.add_parser("irregular", parents=[common], help="irregular pairs (p, k)")
    irr.add_argument("primes", type=int, nargs="*", help="primes to scan (default --prime)")
    mom = sub.add_parser("moments", parents=[common], help="moments of a serialized measure or series")
    mom.add_argument("file")
    mom.add_argument("--k", type=_k_range, default=range(0, 6), help="LO:HI (default 0:5)")
    sub.add_parser("all", parents=[common], help="every check group")
    return parser


def _params(args) -> checks.Params:
    units = tuple(args.unit) if args.unit else ((2,), (3,), (2, 3))
    return checks.Params(
        p=args.prime,
        N=args.precision,
        n=args.level,
        M=args.trunc,
        c=args.c,
        c2=args.c2,
        units=units,
        mmax=args.mmax,
        seed=args.seed,
    )


def _timed(fn, *a, timing: bool):
    t = time.perf_counter()
    rep = fn(*a)
    if timing:
        rep.wall_time = time.perf_counter() - t
    return rep


def run(args) -> list[checks.Report]:
    if args.command == "irregular":
        return [_timed(checks.check_irregular_pairs, args.primes or [args.prime], timing=args.timing)]
    if args.command == "moments":
        try:
            with open(args.file, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise ParseError(str(exc), args.file) from exc
        obj = loads(text)
        return [_timed(checks.check_moments, obj, args.k, timing=args.timing)]
    params = _params(args)
    groups = {
        "ihara": [checks.IHARA_CHECKS],
        "lemmas": [checks.LEMMA_CHECKS],
        "lp": [checks.LP_CHECKS],
        "all": [checks.IHARA_CHECKS, checks.LEMMA_CHECKS, checks.LP_CHECKS],
    }[args.command]
    merged = {k: v for g in groups for k, v in g.items()}
    return [_timed(merged[name], params, timing=args.timing) for name in sorted(merged)]


def format_table(reports: list[checks.Report]) -> str:
    lines = []
    for rep in reports:
        status = "PASS" if rep.passed else "FAIL"
        head = f"== {rep.check}  [{status}]  required: {rep.tolerance}"
        if rep.wall_time is not None:
            head += f"  ({rep.wall_time:.2f}s)"
        lines.append(head)
        lines.append("   " + json.dumps(rep.params, sort_keys=True))
        rows = [("m", "unit", "lhs", "rhs", "agree", "req", "ok")]
        for it in rep.items:
            rows.append((
                str(it.m),
                str(it.extra.get("unit", "")),
                it.lhs,
                it.rhs,
                str(it.agree_exp),
                str(it.required),
                "ok" if it.passed else "FAIL",
            ))
        widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
        for r in rows:
            lines.append("   " + "  ".join(x.rjust(w) for x, w in zip(r, widths)).rstrip())
        lines.append("")
    return "\n".join(lines)


def format_json(reports: list[checks.Report]) -> str:
    return json.dumps([r.to_dict() for r in reports], sort_keys=True, indent=2) + "\n"


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        reports = run(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (PadicError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text = format_json(reports) if args.format == "json" else format_table(reports)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_PASS if all(r.passed for r in reports) else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
