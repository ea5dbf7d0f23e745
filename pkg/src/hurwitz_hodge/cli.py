"""Command line front end.

Exit codes: 0 success, 1 failed verification, 2 usage or domain error,
3 enumeration budget exceeded.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
from pathlib import Path

from . import __version__
from .core import Partition, format_fraction, parse_fraction
from .elsv import HypothesisError, check_stable, format_table
from .extract import build_plan, extract_table, verify_polynomiality
from .hurwitz import (
    DEFAULT_BUDGET,
    BudgetExceeded,
    CountReport,
    Method,
    compute,
    genus0_closed_form,
    hurwitz_brute,
    hurwitz_class_algebra,
    make_instance,
)
from . import verify

CACHE_ENV = "HURWITZ_HODGE_CACHE"
CACHE_FILE = "counts.jsonl"
ENGINE_VERSION = f"hurwitz_hodge-{__version__}"

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


# -- serialization ---------------------------------------------------------


def report_to_dict(rep: CountReport) -> dict:
    inst = rep.instance
    return {
        "g": inst.g,
        "partition": list(inst.alpha.parts),
        "d": inst.d,
        "m": inst.m,
        "b": inst.b,
        "r": inst.r,
        "k": inst.k,
        "tuple_count": rep.tuple_count,
        "hurwitz_number": format_fraction(rep.hurwitz_number),
        "method": rep.method.value,
    }


def report_from_dict(data: dict) -> CountReport:
    inst = make_instance(data["g"], Partition(tuple(data["partition"])))
    return CountReport(inst, int(data["tuple_count"]), parse_fraction(data["hurwitz_number"]), Method(data["method"]))


class Cache:
    """Append-only JSON-lines store of count reports.

    Each write rewrites the whole file into a temporary sibling and renames
    it over the original.
    """

    def __init__(self, directory):
        self.dir = Path(directory)
        self.path = self.dir / CACHE_FILE

    @staticmethod
    def key(g: int, alpha: Partition, method: Method) -> str:
        return f"{g}|{','.join(map(str, alpha.parts))}|{method.value}|{ENGINE_VERSION}"

    def records(self) -> list[dict]:
        if not self.path.exists():
            return []
        with open(self.path, encoding="utf-8") as fh:
            return [json.loads(line) for line in fh if line.strip()]

    def get(self, g: int, alpha: Partition, method: Method) -> CountReport | None:
        key = self.key(g, alpha, method)
        for rec in self.records():
            if rec["key"] == key:
                return report_from_dict(rec["value"])
        return None

    def put(self, rep: CountReport) -> None:
        self.dir.mkdir(parents=True, exist_ok=True)
        key = self.key(rep.instance.g, rep.instance.alpha, rep.method)
        old = self.path.read_text(encoding="utf-8") if self.path.exists() else ""
        line = json.dumps({"key": key, "engine": ENGINE_VERSION, "value": report_to_dict(rep)}, sort_keys=True)
        fd, tmp = tempfile.mkstemp(dir=self.dir, prefix=".counts-", suffix=".tmp")
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(old + line + "\n")
        os.replace(tmp, self.path)


def _cache_from(args) -> Cache | None:
    if getattr(args, "no_cache", False):
        return None
    directory = args.cache_dir or os.environ.get(CACHE_ENV)
    return Cache(directory) if directory else None


def _emit(args, text_lines: list[str], doc) -> None:
    if args.format == "json":
        out = json.dumps(doc, indent=2, sort_keys=True) + "\n"
    else:
        out = "".join(line + "\n" for line in text_lines)
    if getattr(args, "output", None):
        Path(args.output).write_text(out, encoding="utf-8")
    else:
        sys.stdout.write(out)


# -- commands --------------------------------------------------------------


def _resolve_method(name: str, inst, budget: int) -> Method:
    name = name.replace("-", "_")
    if name == "auto":
        ntrans = inst.d * (inst.d - 1) // 2
        return Method.BRUTE if ntrans**inst.r <= budget else Method.CLASS_ALGEBRA
    return Method(name)


def cmd_hurwitz(args) -> int:
    try:
        alpha = Partition.parse(args.partition)
        inst = make_instance(args.genus, alpha)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    method = _resolve_method(args.method, inst, args.budget)
    cache = _cache_from(args)
    rep = cache.get(inst.g, inst.alpha, method) if cache else None
    if rep is None:
        rep = compute(inst, method, budget=args.budget, workers=args.threads)
        if cache:
            cache.put(rep)
    doc = report_to_dict(rep)
    lines = [
        f"g={inst.g} partition={inst.alpha} d={inst.d} m={inst.m} b={inst.b} r={inst.r} k={inst.k}",
        f"method: {rep.method.value}",
        f"tuple_count: {rep.tuple_count}",
        f"H: {format_fraction(rep.hurwitz_number)}",
    ]
    if inst.g == 0 and inst.m <= 2:
        closed = genus0_closed_form(inst.alpha)
        doc["genus0_closed_form"] = format_fraction(closed)
        agree = "agrees" if closed == rep.hurwitz_number else "DISAGREES"
        lines.append(f"genus-0 closed form: {format_fraction(closed)} ({agree})")
    _emit(args, lines, doc)
    return EXIT_OK


def cmd_hodge(args) -> int:
    try:
        check_stable(args.genus, args.marks)
    except HypothesisError as exc:
        raise UsageError(str(exc)) from None
    plan = build_plan(args.genus, args.marks, args.holdout)
    method = args.method.replace("-", "_")
    if method == "auto":
        method = Method.CLASS_ALGEBRA
    table = extract_table(plan, method, budget=args.budget)
    table_path = Path(args.table_out or f"hodge_g{args.genus}_m{args.marks}.txt")
    table.write(table_path)
    report = verify_polynomiality(plan, table)
    lines = [f"# g={args.genus} m={args.marks} points={list(plan.points)} table={table_path}"]
    lines += list(format_table(table))
    lines += report.lines()
    lines.append(f"holdouts passed: {sum(r.passed for r in report.results)}/{len(report.results)}")
    doc = {
        "g": args.genus,
        "m": args.marks,
        "points": [list(p) for p in plan.points],
        "table_file": str(table_path),
        "integrals": [
            {"psi": list(mu.psi), "lambda": mu.k, "value": format_fraction(v)}
            for mu, v in table.entries.items()
        ],
        "verification": report.as_dict(),
    }
    _emit(args, lines, doc)
    ok = all(r.passed for r in report.results)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_verify(args) -> int:
    checks = verify.run(args.suite, max_d=args.max_d, max_r=args.max_r, workers=args.threads)
    lines = [c.line() for c in checks]
    passed = sum(c.passed for c in checks)
    lines.append(f"{passed}/{len(checks)} checks passed")
    _emit(args, lines, {"suite": args.suite, "passed": passed == len(checks),
                        "checks": [c.as_dict() for c in checks]})
    return EXIT_OK if passed == len(checks) else EXIT_FAIL


def cmd_check_cache(args) -> int:
    """Recompute every cached record and compare."""
    cache = _cache_from(args)
    if cache is None:
        raise UsageError(f"no cache directory (use --cache-dir or ${CACHE_ENV})")
    lines, bad = [], 0
    for rec in cache.records():
        cached = report_from_dict(rec["value"])
        if cached.method is Method.BRUTE:
            fresh = hurwitz_brute(cached.instance, budget=args.budget)
        else:
            fresh = hurwitz_class_algebra(cached.instance)
        ok = fresh == cached
        bad += not ok
        lines.append(f"{'PASS' if ok else 'FAIL'} {rec['key']} H={format_fraction(cached.hurwitz_number)}")
    lines.append(f"{len(lines) - bad}/{len(lines)} cache entries match")
    _emit(args, lines, {"passed": bad == 0, "entries": len(lines) - 1})
    return EXIT_OK if bad == 0 else EXIT_FAIL


# -- parser ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hurwitz-hodge", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=ENGINE_VERSION)
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--output", help="write output here instead of stdout")
    common.add_argument("--threads", type=int, default=os.cpu_count() or 1)
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                        help="maximum number of candidate tuples for brute force")
    common.add_argument("--cache-dir", help=f"count cache directory (default ${CACHE_ENV})")
    common.add_argument("--no-cache", action="store_true")

    p = sub.add_parser("hurwitz", parents=[common], help="compute one Hurwitz number")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--partition", required=True, help="comma-separated parts, e.g. 2,1")
    p.add_argument("--method", choices=("auto", "brute", "class-algebra"), default="auto")
    p.set_defaults(func=cmd_hurwitz)

    p = sub.add_parser("hodge", parents=[common], help="extract linear Hodge integrals")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--marks", type=int, required=True)
    p.add_argument("--holdout", type=int, default=2)
    p.add_argument("--method", choices=("auto", "brute", "class-algebra"), default="auto",
                   help="engine for the fit points (auto = class-algebra)")
    p.add_argument("--table-out", help="table file path")
    p.set_defaults(func=cmd_hodge)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("--suite", choices=(*verify.SUITES, "all"), default="all")
    p.add_argument("--max-d", type=int)
    p.add_argument("--max-r", type=int)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("check-cache", parents=[common], help="recompute cached counts and compare")
    p.set_defaults(func=cmd_check_cache)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
