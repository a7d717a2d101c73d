"""Command-line interface.

Subcommands: classify one prime, scan a range to CSV/JSONL with parallel
workers, run a verification suite, print a level-density table, or rerun
the headline 200-digit reference computations.

Exit codes: 0 success, 1 usage error, 2 compute failure, 3 verification
mismatch.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import multiprocessing
import sys
from dataclasses import dataclass
from math import ceil

from .criteria import Classification, classify
from .errors import BoundExceeded, ComputeFailed, PreconditionViolation
from .modmath import primes_in_range
from .verify import (
    DEFAULT_LIMITS,
    SUITES,
    density_lines,
    level_counts,
    run_reference_scan,
    run_suite,
)

CSV_HEADER = "p,p_mod_16,chi_1pi,chi_alpha_delta,chi_zeta_alpha_delta,v_level,w_level,congruent_status"

V_CEILING = 4
W_CEILING = 3


class _Parser(argparse.ArgumentParser):
    """argparse exits with 2 on usage errors; the contract here is 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


@dataclass(frozen=True)
class ScanRow:
    """One classified prime, in output-column order."""

    p: int
    p_mod_16: int
    chi_1pi: int
    chi_alpha_delta: int
    chi_zeta_alpha_delta: int
    v_level: int
    w_level: int | None
    congruent_status: str

    @classmethod
    def from_classification(cls, c: Classification) -> "ScanRow":
        return cls(c.p, c.p_mod_16, c.symbols.chi_1pi,
                   c.symbols.chi_alpha_delta, c.symbols.chi_zeta_alpha_delta,
                   c.v_level, c.w_level, c.congruent_status.value)

    def as_dict(self) -> dict:
        return dataclasses.asdict(self)

    def csv_line(self) -> str:
        w = "NA" if self.w_level is None else str(self.w_level)
        return (f"{self.p},{self.p_mod_16},{self.chi_1pi},"
                f"{self.chi_alpha_delta},{self.chi_zeta_alpha_delta},"
                f"{self.v_level},{w},{self.congruent_status}")


def _level_text(level: int | None, ceiling: int) -> str:
    if level is None:
        return "NA"
    if level == ceiling:
        return f"≥ {level}"
    return str(level)


def _chi_text(value: int) -> str:
    return {1: "+1", -1: "-1", 0: "0 (not applicable)"}[value]


# ---------------------------------------------------------------- classify

def cmd_classify(args) -> int:
    c = classify(args.p)
    if args.format == "json":
        obj = ScanRow.from_classification(c).as_dict()
        obj["sha_report"] = c.sha_report.value
        print(json.dumps(obj))
        return 0
    print(f"p: {c.p}")
    print(f"p mod 16: {c.p_mod_16}")
    print(f"v_level: {_level_text(c.v_level, V_CEILING)}")
    print(f"w_level: {_level_text(c.w_level, W_CEILING)}")
    print(f"chi_1pi: {_chi_text(c.symbols.chi_1pi)}")
    print(f"chi_alpha_delta: {_chi_text(c.symbols.chi_alpha_delta)}")
    print(f"chi_zeta_alpha_delta: {_chi_text(c.symbols.chi_zeta_alpha_delta)}")
    print(f"congruent_status: {c.congruent_status.value}")
    print(f"sha_report: {c.sha_report.value}")
    return 0


# -------------------------------------------------------------------- scan

def _scan_chunk(ps: list[int]) -> list[tuple]:
    out = []
    for p in ps:
        try:
            out.append(("ok", ScanRow.from_classification(classify(p))))
        except ComputeFailed as exc:
            out.append(("err", p, str(exc)))
    return out


def _scan_results(lo: int, hi: int, workers: int) -> list[tuple]:
    ps = primes_in_range(max(lo, 2), hi)
    ps = [p for p in ps if p != 2]
    if workers <= 1 or len(ps) < 2 * workers:
        return _scan_chunk(ps)
    size = ceil(len(ps) / workers)
    chunks = [ps[i:i + size] for i in range(0, len(ps), size)]
    try:
        ctx = multiprocessing.get_context("fork")
    except ValueError:
        ctx = multiprocessing.get_context()
    with ctx.Pool(len(chunks)) as pool:
        parts = pool.map(_scan_chunk, chunks)
    return [r for part in parts for r in part]


def cmd_scan(args) -> int:
    if args.lo > args.hi:
        print("error: --from must not exceed --to", file=sys.stderr)
        return 1
    results = _scan_results(args.lo, args.hi, args.workers)
    failed = 0
    counts: dict[tuple, int] = {}
    with open(args.out, "w", encoding="utf-8", newline="") as fh:
        if args.format == "csv":
            fh.write(CSV_HEADER + "\n")
        for res in results:
            if res[0] == "err":
                failed += 1
                print(f"compute failed at p={res[1]}: {res[2]}", file=sys.stderr)
                continue
            row = res[1]
            if args.format == "csv":
                fh.write(row.csv_line() + "\n")
            else:
                fh.write(json.dumps(row.as_dict()) + "\n")
            key = (row.v_level, row.w_level)
            counts[key] = counts.get(key, 0) + 1
    print(f"wrote {sum(counts.values())} rows to {args.out}")
    for line in density_lines(counts):
        print(line)
    if failed:
        print(f"{failed} primes failed to classify", file=sys.stderr)
        return 2
    return 0


# ------------------------------------------------------------------ verify

def cmd_verify(args) -> int:
    result = run_suite(args.suite, args.limit, args.seed)
    for line in result.lines:
        print(line)
    if result.passed:
        print(f"{result.suite}: PASS ({result.checked} checks)")
        return 0
    print(f"counterexample: {result.counterexample}")
    print(f"{result.suite}: FAIL")
    return 3


# ----------------------------------------------------------------- density

def cmd_density(args) -> int:
    if args.lo > args.hi:
        print("error: --from must not exceed --to", file=sys.stderr)
        return 1
    counts = level_counts(args.lo, args.hi)
    for line in density_lines(counts):
        print(line)
    return 0


# ------------------------------------------------------------- paper-check

def cmd_paper_check(args) -> int:
    result = run_reference_scan()
    for line in result.lines:
        print(line)
    if result.passed:
        print(f"reference computations: PASS ({result.checked} primes examined)")
        return 0
    print(f"counterexample: {result.counterexample}")
    print("reference computations: FAIL")
    return 3


# ------------------------------------------------------------------- wiring

def build_parser() -> _Parser:
    parser = _Parser(prog="congprimes",
                     description="Classify primes by class-group and "
                                 "descent 2-divisibility levels.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    p_cls = sub.add_parser("classify", help="classify a single odd prime")
    p_cls.add_argument("p", type=int)
    p_cls.add_argument("--format", choices=("text", "json"), default="text")
    p_cls.add_argument("--json", dest="format", action="store_const",
                       const="json", help="shorthand for --format json")
    p_cls.set_defaults(func=cmd_classify)

    p_scan = sub.add_parser("scan", help="classify every prime in a range")
    p_scan.add_argument("--from", dest="lo", type=int, required=True)
    p_scan.add_argument("--to", dest="hi", type=int, required=True)
    p_scan.add_argument("--out", required=True)
    p_scan.add_argument("--format", choices=("csv", "jsonl"), default="csv")
    p_scan.add_argument("--workers", type=int, default=1)
    p_scan.set_defaults(func=cmd_scan)

    p_ver = sub.add_parser("verify", help="run a verification suite")
    p_ver.add_argument("suite", choices=sorted(SUITES))
    p_ver.add_argument("--limit", type=int, default=None,
                       help="range bound or instance count "
                            f"(defaults: {DEFAULT_LIMITS})")
    p_ver.add_argument("--seed", type=int, default=1)
    p_ver.set_defaults(func=cmd_verify)

    p_den = sub.add_parser("density", help="level histogram for a range")
    p_den.add_argument("--from", dest="lo", type=int, required=True)
    p_den.add_argument("--to", dest="hi", type=int, required=True)
    p_den.set_defaults(func=cmd_density)

    p_chk = sub.add_parser("paper-check",
                           help="rerun the 200-digit reference computations")
    p_chk.set_defaults(func=cmd_paper_check)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "func", None) is None:
        parser.print_help(sys.stderr)
        return 1
    try:
        return args.func(args)
    except (PreconditionViolation, BoundExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ComputeFailed as exc:
        print(f"compute failed: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
