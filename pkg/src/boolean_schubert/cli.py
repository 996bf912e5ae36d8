"""Command-line front end.

    boolean-schubert constant --lie-type A --rank 3 --u word:1 --v word:2 --w word:1,2
    boolean-schubert table    --lie-type A --rank 2 --w word:1,2 [--equivariant] [--format json]
    boolean-schubert verify   --suite kk --lie-type C --rank 3 [--max-triples N]
    boolean-schubert bench    --n-list 16,32,64 --samples 50 --seed 0

Exit codes: 0 success, 1 usage or validation error, 2 verification
mismatch, 3 resource guard.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys

from .bench import benchmark
from .boolean_core import NotBooleanError, element_to_json, element_to_text, parse_element
from .constants import OrderingMismatchError, constant_table, equivariant_constant, ordinary_constant
from .fast_path import fast_ordinary_constant_type_a
from .oracle import ResourceLimitError
from .polynomial import Polynomial
from .root_system import LIE_TYPES, InvalidRootSystemError, build_root_system
from .verify import SUITES, run_suite

log = logging.getLogger("boolean_schubert")

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_MISMATCH = 2
EXIT_RESOURCE = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad flags; 2 is reserved for mismatches here
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _variables(rank: int) -> list[str]:
    return [f"t{i}" for i in range(1, rank + 1)]


def _encode_value(value) -> object:
    return value.to_json() if isinstance(value, Polynomial) else value


def _root_system(args):
    return build_root_system(args.lie_type, args.rank)


def cmd_constant(args) -> int:
    rs = _root_system(args)
    u, v, w = (parse_element(rs, getattr(args, k)) for k in ("u", "v", "w"))
    if args.fast:
        if args.equivariant:
            raise UsageError("--fast computes ordinary constants only")
        if rs.lie_type != "A":
            raise UsageError(f"--fast needs type A, got {rs.name}")
        if args.ordering is not None:
            raise UsageError("--ordering does not apply to --fast")
        value = fast_ordinary_constant_type_a(u, v, w)
    elif args.equivariant:
        value = equivariant_constant(u, v, w, args.ordering, check_ordering=args.check_ordering)
    else:
        value = ordinary_constant(u, v, w, args.ordering, check_ordering=args.check_ordering)
    out = {"value": _encode_value(value)}
    if args.equivariant:
        out["variables"] = _variables(rs.rank)
    print(json.dumps(out))
    return EXIT_OK


def table_rows(w, equivariant: bool) -> list[tuple]:
    """(u, v, value) rows with zeros omitted, ordered by canonical text encoding."""
    table = constant_table(w, equivariant=equivariant)
    rows = [(element_to_text(u), element_to_text(v), u, v, value) for (u, v), value in table.items()]
    rows.sort(key=lambda r: (r[0], r[1]))
    return [(u, v, value) for _, _, u, v, value in rows]


def cmd_table(args) -> int:
    rs = _root_system(args)
    w = parse_element(rs, args.w)
    rows = table_rows(w, args.equivariant)
    if args.format == "json":
        out = {
            "w": element_to_json(w),
            "rows": [
                {"u": element_to_json(u), "v": element_to_json(v), "value": _encode_value(val)}
                for u, v, val in rows
            ],
        }
        if args.equivariant:
            out["variables"] = _variables(rs.rank)
        print(json.dumps(out))
        return EXIT_OK
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["u", "v", "value"])
    for u, v, val in rows:
        cell = json.dumps(val.to_json()) if isinstance(val, Polynomial) else val
        writer.writerow([element_to_text(u), element_to_text(v), cell])
    sys.stdout.write(buf.getvalue())
    return EXIT_OK


def cmd_verify(args) -> int:
    rs = _root_system(args)
    if args.sample is not None:
        log.info("verify sampling %d triples with seed=%d", args.sample, args.seed)
    report = run_suite(args.suite, rs, args.max_triples, args.sample, args.seed)
    print(json.dumps(report))
    if report["mismatches"]:
        log.error("%d mismatches in suite %s", len(report["mismatches"]), args.suite)
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_bench(args) -> int:
    if any(n < 2 for n in args.n_list):
        raise UsageError("every n in --n-list must be at least 2")
    log.info("bench seed=%d n_list=%s samples=%d", args.seed, args.n_list, args.samples)
    print(json.dumps(benchmark(args.n_list, args.samples, args.seed, args.repeat)))
    return EXIT_OK


def _add_system(p: argparse.ArgumentParser) -> None:
    p.add_argument("--lie-type", required=True, choices=LIE_TYPES, type=str.upper)
    p.add_argument("--rank", required=True, type=int)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="boolean-schubert", description="Structure constants for boolean Schubert classes.")
    parser.add_argument("-v", "--verbose", action="store_true", help="log to standard error")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("constant", help="one structure constant")
    _add_system(p)
    for name in ("u", "v", "w"):
        p.add_argument(f"--{name}", required=True, help="word:i,j,... or diagram:{supp;a>b,...} or JSON")
    p.add_argument("--equivariant", action="store_true")
    p.add_argument("--fast", action="store_true", help="type A quadratic algorithm (ordinary constants)")
    p.add_argument("--ordering", type=_int_list, help="insertion order of supp(v), e.g. 3,1,2")
    p.add_argument("--check-ordering", action="store_true", help="recompute with the reversed ordering")
    p.set_defaults(func=cmd_constant)

    p = sub.add_parser("table", help="all nonzero constants below a fixed w")
    _add_system(p)
    p.add_argument("--w", required=True)
    p.add_argument("--equivariant", action="store_true")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="exhaustive cross-checks against the oracles")
    p.add_argument("--suite", required=True, choices=sorted(SUITES))
    _add_system(p)
    p.add_argument("--max-triples", type=int, help="stop after this many checks")
    p.add_argument("--sample", type=int, help="check this many seeded random triples instead of all")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="time the type A fast path")
    p.add_argument("--n-list", type=_int_list, default=[16, 32, 64, 128, 256])
    p.add_argument("--samples", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--repeat", type=int, default=3, help="timed runs per triple (fastest kept)")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(message)s",
        stream=sys.stderr,
    )
    try:
        return args.func(args)
    except OrderingMismatchError as exc:
        print(f"error: ordering mismatch: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (UsageError, InvalidRootSystemError, NotBooleanError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
