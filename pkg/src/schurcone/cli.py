"""Command line interface: ``schurcone <subcommand> ...``."""

from __future__ import annotations

import argparse
import json
import logging
import signal
import sys
from typing import Optional, Sequence

from .cone import COUNT_BOUNDS, EXTREME_BOUND, count_extreme, count_extreme_combinatorial, default_jobs, is_extreme
from .harness import SUITES, compute_table, load_published_table, run_suite
from .partitions import PartitionError, nested_report, parse_multiset, parse_partition
from .schur import BoundExceeded, expand_product, lr_multi

EXIT_NON_EXTREME = 10
EXIT_FINDING = 20
EXIT_TIMEOUT = 3
# largest N the table accepts without --long
TABLE_DEFAULT_MAX = 8


def _emit(obj) -> None:
    json.dump(obj, sys.stdout, indent=2, ensure_ascii=False)
    sys.stdout.write("\n")


def cmd_expand(args) -> int:
    _emit(expand_product(parse_multiset(args.multiset)).to_json())
    return 0


def cmd_lr(args) -> int:
    print(lr_multi(parse_multiset(args.multiset), parse_partition(args.target)))
    return 0


def cmd_nested(args) -> int:
    A = parse_multiset(args.multiset)
    _emit(nested_report(A).to_json(A))
    return 0


def cmd_extreme(args) -> int:
    A = parse_multiset(args.multiset)
    bound = args.bound if args.bound is not None else max(EXTREME_BOUND, A.total_weight if args.force else 0)
    extreme, cert = is_extreme(A, args.k, bound=bound)
    _emit(cert.to_json())
    return 0 if extreme else EXIT_NON_EXTREME


def cmd_count(args) -> int:
    if args.method == "nested":
        print(count_extreme_combinatorial(args.N, args.k))
    else:
        print(count_extreme(args.N, args.k, jobs=args.jobs, bound=args.bound))
    return 0


def _format_table(table: dict[tuple[int, int], int], max_N: int, tsv: bool) -> str:
    header = ["N"] + [str(k) for k in range(1, max_N + 1)]
    rows = [[str(N)] + [str(table[(N, k)]) for k in range(1, N + 1)] for N in range(1, max_N + 1)]
    if tsv:
        return "\n".join("\t".join(r) for r in [header] + rows)
    width = max(len(c) for r in [header] + rows for c in r)
    return "\n".join(" ".join(c.rjust(width) for c in r) for r in [header] + rows)


def cmd_table(args) -> int:
    if args.max_N > TABLE_DEFAULT_MAX and not args.long:
        raise BoundExceeded(f"--max-N above {TABLE_DEFAULT_MAX} needs --long")
    table = compute_table(args.max_N, jobs=args.jobs, long=args.long)
    print(_format_table(table, args.max_N, args.tsv))
    if args.diff_paper:
        published = load_published_table()
        mismatches = [(key, published[key], v) for key, v in sorted(table.items()) if key in published and published[key] != v]
        for (N, k), expected, got in mismatches:
            print(f"mismatch at N={N} k={k}: published {expected}, computed {got}", file=sys.stderr)
        compared = sum(1 for key in table if key in published)
        print(f"compared {compared} entries with the published table: {len(mismatches)} mismatch(es)", file=sys.stderr)
        return 1 if mismatches else 0
    return 0


def cmd_verify(args) -> int:
    options = {}
    if args.long:
        options["long"] = True
    report = run_suite(args.suite, bound=args.bound, jobs=args.jobs, seed=args.seed, **options)
    out = report.to_json()
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            json.dump(out, fh, indent=2, ensure_ascii=False)
            fh.write("\n")
    _emit(out)
    return {"pass": 0, "finding": EXIT_FINDING}.get(report.status, 1)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="schurcone", description=__doc__)
    parser.add_argument("--jobs", type=int, default=1, help="worker processes for counting (0 = all CPUs)")
    parser.add_argument("--seed", type=int, default=None, help="seed for randomized checks")
    parser.add_argument("--timeout-secs", type=int, default=None, help="abort after this many seconds")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", help="Schur expansion of a product, as JSON")
    p.add_argument("--multiset", required=True, help='e.g. "3,2|3,1|4"')
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("lr", help="one LR coefficient")
    p.add_argument("--multiset", required=True)
    p.add_argument("--target", required=True, help='e.g. "3,2,1"')
    p.set_defaults(func=cmd_lr)

    p = sub.add_parser("nested", help="bad-pair report for entries with at most two parts")
    p.add_argument("--multiset", required=True)
    p.set_defaults(func=cmd_nested)

    p = sub.add_parser("extreme", help="decide extremality with an exact certificate")
    p.add_argument("--multiset", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--bound", type=int, default=None, help=f"degree bound (default {EXTREME_BOUND})")
    p.add_argument("--force", action="store_true", help="lift the degree bound to the multiset's weight")
    p.set_defaults(func=cmd_extreme)

    p = sub.add_parser("count", help="number of extreme rays")
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--method", choices=("lp", "nested"), default="lp")
    p.add_argument("--bound", type=int, default=None, help=f"degree bound override (defaults {COUNT_BOUNDS})")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("table", help="matrix of extreme-ray counts")
    p.add_argument("--max-N", dest="max_N", type=int, default=TABLE_DEFAULT_MAX)
    p.add_argument("--tsv", action="store_true")
    p.add_argument("--diff-paper", action="store_true", help="compare with the published counts")
    p.add_argument("--long", action="store_true", help="allow N up to 10 (tens of minutes)")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", required=True, choices=sorted(SUITES))
    p.add_argument("--bound", type=int, default=None)
    p.add_argument("--report", default=None, help="also write the JSON report here")
    p.add_argument("--long", action="store_true", help="table suite: lift per-k degree bounds")
    p.set_defaults(func=cmd_verify)
    return parser


def _on_alarm(signum, frame):
    raise TimeoutError("time limit reached")


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
    if args.jobs == 0:
        args.jobs = default_jobs()
    if args.timeout_secs:
        signal.signal(signal.SIGALRM, _on_alarm)
        signal.alarm(args.timeout_secs)
    try:
        return args.func(args)
    except TimeoutError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_TIMEOUT
    except (PartitionError, BoundExceeded, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    finally:
        if args.timeout_secs:
            signal.alarm(0)


if __name__ == "__main__":
    sys.exit(main())
