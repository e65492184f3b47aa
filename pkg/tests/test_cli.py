from __future__ import annotations

import json

import pytest

from finquot.cli import main
from finquot.groups import sanov_group
from finquot.serialize import PROFILE_HEADER, spec_fingerprint


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_dz_and_farb_z(capsys):
    assert run(capsys, "dz", "12") == (0, "5\n", "")
    assert run(capsys, "farb-z", "6") == (0, "4\n", "")
    assert run(capsys, "farb-z", "60") == (0, "7\n", "")


def test_gauss_count(capsys):
    assert run(capsys, "gauss-count", "2", "4") == (0, "3\n", "")


def test_domain_error_record(capsys):
    code, out, err = run(capsys, "dz", "0")
    assert code == 1
    assert out == ""
    record = json.loads(err)
    assert record["error"] == "ValueError"
    assert "divides 0" in record["message"]


def test_unknown_spec_error_record(capsys):
    code, out, err = run(capsys, "witness", "no-such-group", "--word", "a")
    assert code == 1
    record = json.loads(err)
    assert "built-ins" in record["detail"] or "built-ins" in record["message"]


def test_usage_error_exits_two(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["witness", "sanov"])  # --word is required
    assert exc.value.code == 2


def test_witness_verify_round_trip(tmp_path, capsys):
    out = tmp_path / "w.json"
    code, _, err = run(capsys, "witness", "sanov", "--word", "a b^-1", "--out", str(out))
    assert code == 0 and err == ""
    payload = json.loads(out.read_text())
    assert payload["spec_fingerprint"] == spec_fingerprint(sanov_group(0))
    assert payload["verified"] is True
    code, verdict, _ = run(capsys, "verify", "sanov", str(out))
    assert code == 0
    assert verdict.strip() == "ok"


def test_verify_catches_tampering(tmp_path, capsys):
    out = tmp_path / "w.json"
    run(capsys, "witness", "sanov", "--word", "a b", "--out", str(out))
    payload = json.loads(out.read_text())
    payload["field_size"] += 1
    out.write_text(json.dumps(payload))
    code, verdict, _ = run(capsys, "verify", "sanov", str(out))
    assert code == 1
    assert verdict.strip() == "field-size-mismatch"


def test_verify_catches_spec_swap(tmp_path, capsys):
    out = tmp_path / "w.json"
    run(capsys, "witness", "sanov", "--word", "a b", "--out", str(out))
    code, verdict, _ = run(capsys, "verify", "sanov_f3", str(out))
    assert code == 1
    assert verdict.strip() == "spec-fingerprint-mismatch"


def test_witness_identity_word_is_domain_error(capsys):
    code, out, err = run(capsys, "witness", "sanov", "--word", "a a^-1")
    assert code == 1
    assert json.loads(err)["error"]


def test_witness_stdout_deterministic(capsys):
    _, first, _ = run(capsys, "witness", "sanov_f3", "--word", "a b a")
    _, second, _ = run(capsys, "witness", "sanov_f3", "--word", "a b a")
    assert first == second


def test_profile_csv_output(tmp_path, capsys):
    code, out, _ = run(capsys, "profile", "cyclic", "--radius", "5")
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == PROFILE_HEADER
    assert lines[1] == "1,2,16,2,2,true"
    assert len(lines) == 6
    path = tmp_path / "p.csv"
    code, _, _ = run(capsys, "profile", "cyclic", "--radius", "5", "--out", str(path))
    assert code == 0
    assert path.read_text() == out


def test_profile_deterministic(capsys):
    _, first, _ = run(capsys, "profile", "sanov", "--radius", "2")
    _, second, _ = run(capsys, "profile", "sanov", "--radius", "2")
    assert first == second


def test_profile_budget_flags(capsys):
    code, out, _ = run(capsys, "profile", "cyclic", "--radius", "6")
    assert code == 0
    full = out.strip().split("\n")[-1].split(",")
    assert full[4] == "5" and full[5] == "true"
    # a^6 dies mod 2 and mod 3, so capping the primes at 3 leaves a miss
    code, out, _ = run(capsys, "profile", "cyclic", "--radius", "6", "--max-prime", "3")
    assert code == 0
    capped = out.strip().split("\n")[-1].split(",")
    assert capped[4] == "3" and capped[5] == "false"


def test_budget_env_override(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("FINQUOT_BUDGETS", json.dumps({"max_prime": 3}))
    code, out, _ = run(capsys, "profile", "cyclic", "--radius", "6")
    assert code == 0
    assert out.strip().split("\n")[-1].split(",")[4:] == ["3", "false"]
    monkeypatch.setenv("FINQUOT_BUDGETS", "not json")
    code, _, err = run(capsys, "profile", "cyclic", "--radius", "3")
    assert code == 1
    assert json.loads(err)["error"]


def test_spec_file_budgets_flow_through(tmp_path, capsys):
    spec = {
        "characteristic": 0,
        "variables": [],
        "generators": {"a": [["1", "1"], ["0", "1"]]},
        "budgets": {"max_prime": 3},
    }
    path = tmp_path / "cyclic.json"
    path.write_text(json.dumps(spec))
    code, out, _ = run(capsys, "profile", str(path), "--radius", "6")
    assert code == 0
    assert out.strip().split("\n")[-1].split(",")[4:] == ["3", "false"]
    # flags outrank the file
    code, out, _ = run(capsys, "profile", str(path), "--radius", "6", "--max-prime", "31")
    assert code == 0
    assert out.strip().split("\n")[-1].split(",")[4:] == ["5", "true"]


def test_audit_z(capsys):
    code, out, _ = run(capsys, "audit-z", "--max", "1000")
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "audit group=Z n_max=1000"
    assert lines[1] == "all_pass=true"
    assert lines[2].startswith("min_ratio=1.333333 at_n=1")


def test_threshold_command(tmp_path, capsys):
    path = tmp_path / "samples.csv"
    path.write_text("n,F\n16,5\n100,7\n10000,11\n")
    code, out, _ = run(capsys, "threshold", str(path))
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0].startswith("n=16 ")
    assert all("ratio=" in line for line in lines[:-1])
    assert lines[-1].startswith("min_ratio=")


def test_threshold_accepts_profile_csv(tmp_path, capsys):
    # profile output starts at radius 1; rows below the cutoff are skipped
    path = tmp_path / "profile.csv"
    code, _, _ = run(capsys, "profile", "cyclic", "--radius", "18", "--out", str(path))
    assert code == 0
    code, out, _ = run(capsys, "threshold", str(path))
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0].startswith("n=16 ")
    assert len(lines) == 4  # radii 16..18 plus the summary line

    short = tmp_path / "short.csv"
    code, _, _ = run(capsys, "profile", "cyclic", "--radius", "4", "--out", str(short))
    assert code == 0
    code, _, err = run(capsys, "threshold", str(short))
    assert code == 1
    assert "no samples" in err


def test_selftest(capsys):
    code, out, _ = run(capsys, "selftest", "--seed", "11")
    assert code == 0
    assert "selftest passed" in out
    assert "seed=11" in out
