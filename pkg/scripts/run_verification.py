"""Run every registered check and write text and JSON reports to results/."""

import argparse
from pathlib import Path

from fano12.report import emit, run_checks


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--outdir", default=Path(__file__).resolve().parent.parent / "results", type=Path)
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()
    args.outdir.mkdir(parents=True, exist_ok=True)
    report = run_checks(timings=True, workers=args.workers)
    emit(report, "json", args.outdir / "report.json")
    emit(report, "text", args.outdir / "report.txt")
    print(emit(report, "text").decode(), end="")
    return 0 if report.ok else 1


if __name__ == "__main__":
    raise SystemExit(main())
