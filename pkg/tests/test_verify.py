"""Verifier plumbing: determinism, verdict mapping, and the CLI contract.

Covered here:

* two runs with one seed serialise to byte-identical JSON, and the timing
  field stays out of the payload unless explicitly requested;
* Report.failed flags a run exactly when some check row says "fail";
* negative controls are reported as passes (the expected failure happened)
  and carry the reason in the detail column;
* below-minimum parameter overrides degrade to a single skipped audit row
  instead of raising;
* table rows: metadata-only rows report one skipped row, bare-module rows
  get their dimension/stabiliser checks;
* the command line resolves aliases, prints one line per catalog entry or
  table row, emits parseable JSON, and uses exit codes 0 (green),
  1 (some check failed) and 2 (unknown identifier).
"""

from __future__ import annotations

import json

import pytest

from semicov import cli
from semicov.verify import (
    Report,
    RunConfig,
    jsonable,
    run_entry,
    run_suite,
    run_table_row,
    to_json,
    to_text,
)
from fractions import Fraction


def _checks_by_name(report_dict):
    return {c["name"]: c for c in report_dict["checks"]}


def test_suite_json_is_deterministic_for_fixed_seed():
    cfg = RunConfig(entries=("ex5.2", "ex6.4"), seed=7)
    first = to_json(run_suite(cfg))
    second = to_json(run_suite(cfg))
    assert first == second
    assert "runtime_ms" not in first


def test_timings_are_opt_in():
    cfg = RunConfig(entries=("ex5.2",), timings=True)
    payload = to_json(run_suite(cfg))
    assert "runtime_ms" in payload


def test_report_failed_property():
    green = Report(config={}, entries=[{"checks": [{"verdict": "pass"}, {"verdict": "skipped"}]}])
    assert not green.failed
    red = Report(config={}, entries=[{"checks": [{"verdict": "pass"}, {"verdict": "fail"}]}])
    assert red.failed


def test_negative_controls_reported_as_passes():
    cfg = RunConfig(entries=("ex5.2",), negative_controls=True)
    rep = run_entry("ex5.2", cfg)
    checks = _checks_by_name(rep)
    row = checks["kernel_phi_control_mixed"]
    assert row["verdict"] == "pass"
    assert "sum to zero" in row["detail"]


def test_controls_absent_without_flag():
    cfg = RunConfig(entries=("ex5.2",))
    rep = run_entry("ex5.2", cfg)
    assert "kernel_phi_control_mixed" not in _checks_by_name(rep)


def test_below_minimum_override_degrades_to_skip():
    cfg = RunConfig(entries=("ex6.1",), overrides=(("n", 3),))
    rep = run_entry("ex6.1", cfg)
    assert len(rep["checks"]) == 1
    row = rep["checks"][0]
    assert row["name"] == "construction_audit"
    assert row["verdict"] == "skipped"


def test_alias_targets_resolve():
    cfg = RunConfig(entries=("adjoint",))
    report = run_suite(cfg)
    assert report.entries[0]["id"] == "ex-adjoint"


def test_unknown_table_target_raises():
    with pytest.raises(KeyError):
        run_suite(RunConfig(entries=("table9/9",)))


def test_metadata_table_row_reports_single_skip():
    rep = run_table_row("table2/6", RunConfig())
    assert rep["kind"] == "table"
    assert len(rep["checks"]) == 1
    assert rep["checks"][0]["verdict"] == "skipped"


def test_module_table_row_reports_real_checks():
    rep = run_table_row("table2/8", RunConfig())
    names = [c["name"] for c in rep["checks"]]
    assert "construction_audit" in names
    assert all(c["verdict"] in ("pass", "sampled-pass") for c in rep["checks"])


def test_jsonable_fraction_and_nesting():
    assert jsonable(Fraction(3, 2)) == "3/2"
    assert jsonable([Fraction(1, 3), 2]) == ["1/3", 2]


def test_text_rendering_headers_and_marks():
    cfg = RunConfig(entries=("ex5.2",), seed=7)
    text = to_text(run_suite(cfg))
    assert text.startswith("verification run: seed 7")
    assert "PASS" in text
    assert "ex5.2" in text


def test_cli_list_mentions_every_entry_and_row(capsys):
    assert cli.main(["list"]) == 0
    out = capsys.readouterr().out
    assert "ex6.3/i (executable)" in out
    assert "table1/4b (metadata)" in out
    assert "ex5.3/gl (executable)" in out


def test_cli_show_entry(capsys):
    assert cli.main(["show", "ex5.3"]) == 0
    out = capsys.readouterr().out
    assert "covariant degrees: k, 2k, ..., (n-1)k" in out
    assert "invariant degrees: k, 2k, ..., nk" in out


def test_cli_show_table_row(capsys):
    assert cli.main(["show", "table2/5"]) == 0
    out = capsys.readouterr().out
    assert "table2/5" in out


def test_cli_run_json_round_trip(capsys):
    assert cli.main(["run", "--entry", "ex5.2", "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["entries"][0]["id"] == "ex5.2"
    assert payload["config"]["seed"] == 0


def test_cli_run_writes_out_file(tmp_path, capsys):
    out = tmp_path / "report.json"
    assert cli.main(["run", "--entry", "ex5.2", "--format", "json", "--out", str(out)]) == 0
    capsys.readouterr()
    payload = json.loads(out.read_text())
    assert payload["entries"][0]["id"] == "ex5.2"


def test_cli_unknown_ids_exit_2(capsys):
    assert cli.main(["run", "--entry", "no-such-thing"]) == 2
    assert cli.main(["show", "no-such-thing"]) == 2
    capsys.readouterr()


def test_cli_reports_failure_exit_code(monkeypatch, capsys):
    class _Red:
        failed = True
        config = {"seed": 0, "mode": "auto", "samples": 20}
        entries = []

    monkeypatch.setattr(cli, "run_suite", lambda cfg: _Red())
    assert cli.main(["run", "--entry", "ex5.2", "--format", "json"]) == 1
    capsys.readouterr()
