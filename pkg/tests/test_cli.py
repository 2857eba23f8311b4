import json

import pytest

from grpomega import cli
from grpomega.formulas import FORMULAS, Formula


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_compute_table(capsys):
    code, out, _ = run_cli(capsys, "compute", "alt:5")
    assert code == 0
    assert "2^15 * 3^20 * 5^24" in out
    assert "59" in out


def test_compute_json_matches_table_content(capsys):
    code, out, _ = run_cli(capsys, "compute", "psl2:11", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["order"] == 660
    assert payload["omega_rho"] == 769
    code, table_out, _ = run_cli(capsys, "compute", "psl2:11")
    assert code == 0
    assert payload["rho"] in table_out
    assert str(payload["omega_rho"]) in table_out
    for d, c in payload["spectrum"].items():
        assert f"{d}:{c}" in table_out.replace(" ", "")


def test_compute_trivial_group(capsys):
    code, out, _ = run_cli(capsys, "compute", "cyclic:1", "--json")
    payload = json.loads(out)
    assert code == 0
    assert payload["rho"] == "1"
    assert payload["omega_rho"] == 0


def test_compute_parse_error_exit_2(capsys):
    code, _, err = run_cli(capsys, "compute", "cyclic:")
    assert code == 2
    assert "parse error" in err


def test_compute_construction_error_exit_3(capsys):
    code, _, err = run_cli(capsys, "compute", "psl2:9")
    assert code == 3
    assert "odd prime" in err


def test_size_cap_exit_3(capsys, monkeypatch):
    monkeypatch.setenv("GRPOMEGA_SIZE_CAP", "100")
    code, _, err = run_cli(capsys, "compute", "cyclic:101")
    assert code == 3
    assert "cap" in err


def test_spectrum_command(capsys):
    code, out, _ = run_cli(capsys, "spectrum", "alt:4", "--json")
    assert code == 0
    assert json.loads(out)["spectrum"] == {"1": 1, "2": 3, "3": 8}
    code, out, _ = run_cli(capsys, "spectrum", "alt:4")
    assert code == 0
    assert "2: 3" in out


def test_formula_command(capsys):
    code, out, _ = run_cli(capsys, "formula", "--name", "psl2-omega", "--q", "11")
    assert code == 0
    assert "769" in out
    code, out, _ = run_cli(capsys, "formula", "--name", "cyclic-pp", "--p", "2", "--alpha", "2")
    assert code == 0
    assert "5" in out


def test_formula_crosscheck(capsys):
    code, out, _ = run_cli(
        capsys, "formula", "--name", "two-pp", "--p", "2", "--alpha", "1", "--beta", "1",
        "--crosscheck", "--json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["value"] == "3"
    assert payload["crosscheck"] == "pass"


def test_formula_crosscheck_skipped_when_not_constructible(capsys):
    code, out, _ = run_cli(
        capsys, "formula", "--name", "psl2-omega", "--q", "37", "--crosscheck", "--json"
    )
    assert code == 0
    assert json.loads(out)["crosscheck"] == "skipped"


def test_formula_crosscheck_mismatch_exit_1(capsys, monkeypatch):
    broken = Formula(("q",), FORMULAS["psl2-omega"].evaluate, lambda q: -1)
    monkeypatch.setitem(FORMULAS, "psl2-omega", broken)
    code, out, _ = run_cli(
        capsys, "formula", "--name", "psl2-omega", "--q", "5", "--crosscheck", "--json"
    )
    assert code == 1
    assert json.loads(out)["crosscheck"] == "mismatch"


def test_formula_bad_params_exit_2(capsys):
    code, _, err = run_cli(capsys, "formula", "--name", "cyclic-pp", "--p", "2")
    assert code == 2
    code, _, _ = run_cli(capsys, "formula", "--name", "nonsense", "--p", "2")
    assert code == 2


def test_verify_suite_order12(capsys):
    code, out, _ = run_cli(capsys, "verify", "--suite", "order-12")
    assert code == 0
    assert "passed" in out
    assert "FAIL" not in out


def test_verify_suite_json_schema(capsys):
    code, out, _ = run_cli(capsys, "verify", "--suite", "order-12", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["summary"]["passed"] == payload["summary"]["applicable"]
    for report in payload["reports"]:
        assert set(report) >= {"check", "subject", "lhs", "rhs", "verdict", "witness"}


def test_verify_suite_with_explicit_catalog(capsys):
    from grpomega.specs import packaged_catalog_path

    path = str(packaged_catalog_path("order12"))
    code, out, _ = run_cli(capsys, "verify", "--suite", "order-12", "--catalog", path)
    assert code == 0
    assert "passed" in out


def test_verify_single_checks(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--check", "product-rule", "--spec-a", "cyclic:11", "--spec-b", "alt:5"
    )
    assert code == 0
    assert "lhs=1249" in out and "rhs=1249" in out

    code, out, _ = run_cli(
        capsys, "verify", "--check", "quotient-rule", "--spec", "dirprod(cyclic:5,sym:3)", "--p", "5"
    )
    assert code == 0
    assert "PASS" in out

    code, out, _ = run_cli(capsys, "verify", "--check", "hall-predicate", "--n", "6", "--p", "5")
    assert code == 0
    assert "false" in out

    code, out, _ = run_cli(capsys, "verify", "--check", "huppert-partition", "--q", "5")
    assert code == 0
    assert "PASS" in out


def test_verify_precondition_unmet_does_not_fail_suite(capsys):
    code, out, _ = run_cli(capsys, "verify", "--check", "quotient-rule", "--spec", "alt:5", "--p", "5")
    assert code == 0
    assert "SKIP" in out
    assert "precondition_unmet" in out


def test_verify_failure_exit_1(capsys, tmp_path):
    path = tmp_path / "thin660.json"
    path.write_text(
        json.dumps(
            {"order": 660, "complete": False, "entries": [{"name": "C660", "spec": "cyclic:660"}]}
        ),
        encoding="utf-8",
    )
    code, out, _ = run_cli(capsys, "verify", "--check", "landmark", "--catalog", str(path))
    assert code == 1
    assert "FAIL" in out


def test_verify_usage_errors_exit_2(capsys):
    code, _, err = run_cli(capsys, "verify")
    assert code == 2
    code, _, err = run_cli(capsys, "verify", "--suite", "order-13")
    assert code == 2
    code, _, err = run_cli(capsys, "verify", "--check", "product-rule", "--spec-a", "cyclic:2")
    assert code == 2


def test_catalog_command(capsys, catalog12):
    from grpomega.specs import packaged_catalog_path

    path = str(packaged_catalog_path("order12"))
    code, out, _ = run_cli(capsys, "catalog", path)
    assert code == 0
    assert "A4" in out and "alt:4" in out
    code, out, _ = run_cli(capsys, "catalog", path, "--json")
    payload = json.loads(out)
    assert payload["order"] == 12
    assert len(payload["entries"]) == 5


def test_catalog_missing_file_exit_3(capsys, tmp_path):
    code, _, err = run_cli(capsys, "catalog", str(tmp_path / "absent.json"))
    assert code == 3


def test_cache_roundtrip_and_trust(capsys, tmp_path):
    cache = tmp_path / "cache.json"
    code, first, _ = run_cli(capsys, "compute", "alt:4", "--cache", str(cache), "--json")
    assert code == 0
    stored = json.loads(cache.read_text(encoding="utf-8"))
    assert stored["alt:4"]["spectrum"] == {"1": 1, "2": 3, "3": 8}
    # the compute path trusts the cache: plant a fake spectrum and see it surface
    stored["alt:4"]["spectrum"] = {"1": 1, "11": 11}
    cache.write_text(json.dumps(stored), encoding="utf-8")
    code, second, _ = run_cli(capsys, "compute", "alt:4", "--cache", str(cache), "--json")
    assert code == 0
    assert json.loads(second)["spectrum"] == {"1": 1, "11": 11}


def test_corrupt_cache_is_ignored(capsys, tmp_path):
    cache = tmp_path / "cache.json"
    cache.write_text("{broken", encoding="utf-8")
    code, out, _ = run_cli(capsys, "compute", "cyclic:6", "--cache", str(cache), "--json")
    assert code == 0
    assert json.loads(out)["order"] == 6
    assert json.loads(cache.read_text(encoding="utf-8"))["cyclic:6"]["order"] == 6


def test_verify_json_byte_stable_across_runs(capsys):
    _, first, _ = run_cli(capsys, "verify", "--suite", "order-12", "--json")
    _, second, _ = run_cli(capsys, "verify", "--suite", "order-12", "--json")
    assert first == second


def test_verify_text_and_json_agree_on_counts(capsys):
    _, text, _ = run_cli(capsys, "verify", "--suite", "order-12")
    _, raw, _ = run_cli(capsys, "verify", "--suite", "order-12", "--json")
    summary = json.loads(raw)["summary"]
    assert f"passed {summary['passed']}/{summary['applicable']}" in text
    assert text.count("SKIP") == summary["precondition_unmet"]
    assert text.count("PASS") == summary["passed"]


def test_usage_no_command(capsys):
    assert cli.main([]) == 2
