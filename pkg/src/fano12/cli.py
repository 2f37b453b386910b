"""Command line entry point: ``verify``."""

from __future__ import annotations

import argparse
import sys

from .checks import REGISTRY, UnknownCheckError
from .report import emit, run_checks

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="verify", description="Run the exact verification checks and report the results.")
    p.add_argument("--check", metavar="GLOB", help="only run checks whose id matches GLOB, e.g. 'P4.6.*'")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out", metavar="PATH", help="write the report to PATH instead of stdout")
    p.add_argument("--list", action="store_true", help="print all check ids with anchors and exit")
    p.add_argument("--timings", action="store_true", help="record elapsed milliseconds (makes output non-reproducible)")
    p.add_argument("--workers", type=int, default=1, help="run checks in this many threads")
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    if args.list:
        width = max(len(c.id) for c in REGISTRY)
        for c in REGISTRY:
            print(f"{c.id:<{width}}  {c.anchor}")
        return EXIT_OK
    if args.workers < 1:
        print("verify: --workers must be positive", file=sys.stderr)
        return EXIT_USAGE
    try:
        report = run_checks(args.check, timings=args.timings, workers=args.workers)
    except UnknownCheckError as exc:
        print(f"verify: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        data = emit(report, args.format, args.out)
    except OSError as exc:
        print(f"verify: cannot write report: {exc}", file=sys.stderr)
        return EXIT_IO
    if args.out is None:
        sys.stdout.write(data.decode("utf-8"))
    return EXIT_OK if report.ok else EXIT_FAIL


def main_exit() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_exit()
