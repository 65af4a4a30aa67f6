"""Command line entry point: ``verify``, ``list`` and ``load``."""

from __future__ import annotations

import argparse
import os
import sys
from typing import Optional, Sequence

from .io import StructureFileError, encode, load_structure_constants
from .registry import SUITES, get_example, list_examples
from .suite import report_json, run_suite

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


def _default_seed() -> int:
    raw = os.environ.get("CATFROB_SEED", "0")
    try:
        return int(raw)
    except ValueError:
        raise SystemExit(f"CATFROB_SEED must be an integer, got {raw!r}")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="catfrob", description="Exact checks for Hopf monads, right adjoints and Frobenius structures.")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run suites against a registered example")
    v.add_argument("--example", required=True)
    v.add_argument("--suite", default="all", help="comma separated suite names, or 'all' for the example's suites")
    v.add_argument("--seed", type=int, default=None, help="probe seed (default: $CATFROB_SEED or 0)")
    v.add_argument("--probe-budget", type=int, default=3)
    v.add_argument("--json", dest="json_path", default=None, help="write the JSON report here ('-' for stdout)")

    sub.add_parser("list", help="list registered examples and suites")

    ld = sub.add_parser("load", help="load a structure-constant file")
    ld.add_argument("file")
    ld.add_argument("--check", action="store_true", help="validate the Hopf axioms (always done; kept for clarity)")
    return p


def _verify(args) -> int:
    try:
        ex = get_example(args.example)
    except KeyError as exc:
        print(exc.args[0], file=sys.stderr)
        return EXIT_USAGE
    suites = list(ex.expected) if args.suite == "all" else [s.strip() for s in args.suite.split(",") if s.strip()]
    unknown = [s for s in suites if s not in SUITES]
    if unknown or not suites:
        print(f"unknown suite(s) {unknown}; known: {', '.join(SUITES)}", file=sys.stderr)
        return EXIT_USAGE
    if args.probe_budget < 1:
        print("--probe-budget must be positive", file=sys.stderr)
        return EXIT_USAGE
    seed = _default_seed() if args.seed is None else args.seed
    reports = [run_suite(ex.name, s, seed, args.probe_budget) for s in suites]
    # keep stdout clean when the report itself goes there
    log = sys.stderr if args.json_path == "-" else sys.stdout
    for r in reports:
        mark = "ok" if r.matched else "MISMATCH"
        print(f"{mark:8} {r.example} {r.suite}: {r.outcome} (expected {r.expected}, {r.wall_time:.2f}s)", file=log)
    text = report_json(reports)
    if args.json_path == "-":
        sys.stdout.write(text)
    elif args.json_path:
        with open(args.json_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    return EXIT_OK if all(r.matched for r in reports) else EXIT_MISMATCH


def _list() -> int:
    for ex in list_examples():
        print(f"{ex.name:18} {ex.category.name:8} {ex.description}")
        for suite, outcome in ex.expected.items():
            print(f"    {suite:20} {outcome}")
    return EXIT_OK


def _load(args) -> int:
    try:
        h = load_structure_constants(args.file)
    except StructureFileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        if exc.witness is not None:
            print(f"witness: {encode(exc.witness)}", file=sys.stderr)
        return EXIT_MISMATCH
    print(f"{h.name}: {h.cat.name}, carrier {h.carrier!r}, all Hopf axioms hold")
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "verify":
        return _verify(args)
    if args.command == "list":
        return _list()
    return _load(args)


if __name__ == "__main__":
    sys.exit(main())
