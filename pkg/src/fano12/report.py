"""Run registered checks and render the results as text or JSON."""

from __future__ import annotations

import json
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Any

from . import __version__
from .checks import Check, run_one, select

__all__ = ["CheckResult", "Report", "run_checks", "emit", "FIELD_CONFIG"]

FIELD_CONFIG = {
    "rationals": "fractions.Fraction",
    "extension": "Q(sqrt5)",
    "phi": "(1+sqrt5)/2",
}


@dataclass
class CheckResult:
    id: str
    claim: str
    anchor: str
    status: str  # pass | fail | axiom
    witness: Any
    elapsed_ms: float | None = None


@dataclass
class Report:
    version: str
    field_config: dict
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def summary(self) -> dict[str, int]:
        counts = {"pass": 0, "fail": 0, "axiom": 0}
        for c in self.checks:
            counts[c.status] += 1
        return counts

    @property
    def ok(self) -> bool:
        return self.summary["fail"] == 0

    def as_dict(self) -> dict:
        return {
            "version": self.version,
            "field_config": dict(self.field_config),
            "checks": [asdict(c) for c in self.checks],
            "summary": self.summary,
        }


def _execute(check: Check, timings: bool) -> CheckResult:
    start = time.perf_counter()
    status, witness = run_one(check)
    elapsed = round((time.perf_counter() - start) * 1000, 3) if timings else None
    return CheckResult(check.id, check.claim, check.anchor, status, witness, elapsed)


def run_checks(pattern: str | None = None, timings: bool = False, workers: int = 1) -> Report:
    """Run every check whose id matches ``pattern`` (a glob); results are ordered by id.

    Raises ``UnknownCheckError`` when the pattern matches nothing.
    """
    chosen = select(pattern)
    if workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            results = list(pool.map(lambda c: _execute(c, timings), chosen))
    else:
        results = [_execute(c, timings) for c in chosen]
    return Report(__version__, FIELD_CONFIG, sorted(results, key=lambda r: r.id))


def _text(report: Report) -> str:
    rows = [(c.id, c.status, c.anchor, c.claim) for c in report.checks]
    w_id = max([len("id")] + [len(r[0]) for r in rows])
    w_anchor = max([len("anchor")] + [len(r[2]) for r in rows])
    lines = [f"{'id':<{w_id}}  {'status':<6}  {'anchor':<{w_anchor}}  claim"]
    lines.append("-" * len(lines[0]))
    for rid, status, anchor, claim in rows:
        lines.append(f"{rid:<{w_id}}  {status:<6}  {anchor:<{w_anchor}}  {claim}")
    s = report.summary
    lines.append("")
    lines.append(f"pass {s['pass']}  fail {s['fail']}  axiom {s['axiom']}")
    return "\n".join(lines) + "\n"


def emit(report: Report, fmt: str = "text", path: str | None = None) -> bytes:
    """Render ``report``; write it to ``path`` when given. Returns the bytes."""
    if fmt == "json":
        data = json.dumps(report.as_dict(), indent=2, ensure_ascii=False) + "\n"
    elif fmt == "text":
        data = _text(report)
    else:
        raise ValueError(f"unknown format {fmt!r}")
    raw = data.encode("utf-8")
    if path is not None:
        with open(path, "wb") as fh:
            fh.write(raw)
    return raw
