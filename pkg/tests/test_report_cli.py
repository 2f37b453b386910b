import json
import re
from pathlib import Path

import pytest

from fano12.checks import REGISTRY, UnknownCheckError, select
from fano12.cli import main
from fano12.report import emit, run_checks

ROOT = Path(__file__).resolve().parent.parent
GOLDEN = ROOT / "tests" / "golden" / "report.json"


@pytest.fixture(scope="module")
def full_report():
    return run_checks()


def test_ids_unique_and_sorted():
    ids = [c.id for c in REGISTRY]
    assert len(ids) == len(set(ids)) and ids == sorted(ids)
    assert all(c.id.startswith(c.anchor + ".") for c in REGISTRY)


def test_only_imported_constants_are_axioms(full_report):
    axioms = [c.id for c in full_report.checks if c.status == "axiom"]
    assert axioms == ["L2.3.dimension-axioms"]


def test_summary_matches_tallies(full_report):
    s = full_report.summary
    assert s["pass"] + s["fail"] + s["axiom"] == len(full_report.checks)
    assert s["fail"] == 0 and s["pass"] == len(REGISTRY) - 1


def test_filtered_pipeline():
    rep = run_checks("P4.6.*")
    assert {c.id for c in rep.checks} == {c.id for c in REGISTRY if c.id.startswith("P4.6.")}
    assert all(c.status == "pass" for c in rep.checks)
    point = next(c for c in rep.checks if c.id == "P4.6.pencil-point")
    assert point.witness["u"] == "-1/4"


def test_unknown_pattern():
    with pytest.raises(UnknownCheckError):
        select("nonexistent.*")


def test_json_schema(full_report):
    data = json.loads(emit(full_report, "json"))
    assert set(data) == {"version", "field_config", "checks", "summary"}
    for c in data["checks"]:
        assert set(c) == {"id", "claim", "anchor", "status", "witness", "elapsed_ms"}
        assert c["status"] in {"pass", "fail", "axiom"}


def test_text_table(full_report):
    lines = emit(full_report, "text").decode().splitlines()
    rows = [ln for ln in lines[2:] if ln and not ln.startswith("pass ")]
    assert len(rows) == len(full_report.checks)
    assert all(re.match(r"^\S+\s+(pass|fail|axiom)\s", r) for r in rows)


def test_golden_report_byte_equal(full_report):
    assert emit(full_report, "json") == GOLDEN.read_bytes()


def test_reruns_are_byte_identical():
    a = emit(run_checks(), "json")
    b = emit(run_checks(workers=4), "json")
    assert a == b


def test_readme_claim_table_covers_every_check():
    readme = (ROOT / "README.md").read_text()
    table_ids = set(re.findall(r"^\|\s*`([^`]+)`\s*\|\s*[A-Z]\d", readme, flags=re.M))
    assert table_ids == {c.id for c in REGISTRY}
    for c in REGISTRY:
        row = next(ln for ln in readme.splitlines() if ln.startswith(f"| `{c.id}`"))
        assert f"| {c.anchor} |" in row


def test_cli_exit_codes(tmp_path, capsys):
    assert main(["--check", "T2.*"]) == 0
    assert main(["--check", "nonexistent.*"]) == 2
    assert main(["--bogus"]) == 2
    assert main(["--check", "T2.*", "--out", str(tmp_path / "missing" / "r.json"), "--format", "json"]) == 3
    out = tmp_path / "r.json"
    assert main(["--check", "T2.*", "--format", "json", "--out", str(out)]) == 0
    assert json.loads(out.read_text())["summary"] == {"pass": 2, "fail": 0, "axiom": 0}
    capsys.readouterr()
    assert main(["--list"]) == 0
    listed = capsys.readouterr().out.split()
    assert all(c.id in listed for c in REGISTRY)


def test_cli_reports_failures(monkeypatch):
    from fano12 import checks

    bad = checks.Check("Z9.broken", "always fails", "Z9", lambda: (False, "forced"))
    monkeypatch.setattr(checks, "REGISTRY", checks.REGISTRY + [bad])
    assert main(["--check", "Z9.*"]) == 1
