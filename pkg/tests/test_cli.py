"""CLI contract: JSON schema, CSV streams, exit codes, determinism."""

import json
import math

import pytest

from xiforge.cli import _quad_config, _series_control, main, parse_complex, parse_range

SCHEMA_KEYS = {"command", "params", "value", "err_estimate", "warnings"}


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run_cli(capsys, *argv)
    assert code == 0, err
    record = json.loads(out)
    assert SCHEMA_KEYS <= set(record)
    return record


class TestParsing:
    def test_complex_forms(self):
        assert parse_complex("2,0") == 2.0
        assert parse_complex("0.5,-14.1") == complex(0.5, -14.1)
        assert parse_complex("3") == 3.0
        with pytest.raises(ValueError):
            parse_complex("1,2,3")

    def test_range(self):
        assert parse_range("0:10:0.01") == (0.0, 10.0, 0.01)
        with pytest.raises(ValueError):
            parse_range("5:1:0.1")
        with pytest.raises(ValueError):
            parse_range("0:1:-0.1")


class TestEval:
    def test_pq_zero_of_odd_degree(self, capsys):
        rec = run_json(capsys, "--no-meta", "eval", "pq", "--q", "1", "--s", "0.5,0")
        assert abs(rec["value"]["re"]) < 1e-13
        assert abs(rec["value"]["im"]) < 1e-13
        assert "meta" not in rec

    def test_theta_sum_value(self, capsys):
        rec = run_json(capsys, "--no-meta", "eval", "theta", "--j", "0", "--x", "1,0")
        assert abs(rec["value"]["re"] - 0.043217405606654007) < 1e-13

    def test_prop3_matches_direct(self, capsys):
        r1 = run_json(capsys, "--no-meta", "eval", "xi-prop3", "--j", "0", "--b", "1", "--s", "2,0")
        r2 = run_json(capsys, "--no-meta", "eval", "xi-direct", "--s", "2,0")
        assert abs(r1["value"]["re"] - r2["value"]["re"]) <= 1e-9
        assert r1["err_estimate"] is not None

    def test_warning_captured_for_odd_ell(self, capsys):
        rec = run_json(capsys, "--no-meta", "eval", "zeta-family", "--q", "1", "--ell", "1", "--s", "4,0")
        assert rec["warnings"]

    def test_csv_row(self, capsys):
        code, out, _ = run_cli(capsys, "--no-meta", "eval", "xi-direct", "--s", "2,0", "--csv")
        assert code == 0
        header, row = out.strip().splitlines()
        assert header == "command,value_re,value_im,err_estimate"
        assert row.startswith("eval xi-direct,")

    def test_meta_timestamp_present_by_default(self, capsys):
        code, out, _ = run_cli(capsys, "eval", "xi-direct", "--s", "2,0")
        assert code == 0
        assert "timestamp" in json.loads(out).get("meta", {})


class TestExitCodes:
    def test_domain_error_is_one(self, capsys):
        code, _, err = run_cli(capsys, "--no-meta", "eval", "zeta-family", "--q", "0", "--ell", "0", "--s", "1,0")
        assert code == 1
        assert "error" in err

    def test_convergence_failure_is_two(self, capsys):
        code, _, err = run_cli(capsys, "--no-meta", "eval", "psi", "--j", "0", "--x", "1e-7,0")
        assert code == 2
        assert "tolerance" in err

    def test_count_mismatch_is_three(self, capsys):
        code, out, err = run_cli(capsys, "--no-meta", "zeros", "--q", "5", "--t-max", "2.0")
        assert code == 3

    def test_verify_pass_is_zero(self, capsys):
        code, out, err = run_cli(capsys, "--no-meta", "verify", "special-values")
        assert code == 0
        record = json.loads(out)
        assert all(row["status"] == "pass" for row in record["value"])


class TestDeterminism:
    def test_identical_bytes_without_meta(self, capsys):
        _, out1, _ = run_cli(capsys, "--no-meta", "verify", "eq14")
        _, out2, _ = run_cli(capsys, "--no-meta", "verify", "eq14")
        assert out1 == out2

    def test_json_round_trip(self, capsys):
        rec = run_json(capsys, "--no-meta", "eval", "mellin", "--j", "1", "--s", "3,0")
        assert json.loads(json.dumps(rec)) == rec


class TestScan:
    def test_pq_line_row_count_and_sign_changes(self, capsys):
        code, out, _ = run_cli(capsys, "--no-meta", "scan", "pq-line", "--q", "6", "--t", "0:10:0.01")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "t,re,im,section"
        assert len(lines) == 1002
        assert all(line.count(",") == 3 for line in lines[1:])
        sections = [float(line.split(",")[3]) for line in lines[1:]]
        changes = sum(1 for a, b in zip(sections, sections[1:]) if (a > 0) != (b > 0))
        assert changes == 6  # all six q=6 ordinates lie inside [0, 10]

    def test_xi_line_brackets_first_zero(self, capsys):
        code, out, _ = run_cli(capsys, "--no-meta", "scan", "xi-line", "--t", "0:30:0.05")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "t,re,im"
        rows = [line.split(",") for line in lines[1:]]
        first_change = None
        for (t0, re0, _), (t1, re1, _) in zip(rows, rows[1:]):
            if (float(re0) > 0) != (float(re1) > 0):
                first_change = (float(t0), float(t1))
                break
        assert first_change is not None
        assert 14.0 < first_change[0] < first_change[1] < 14.3

    def test_psi_ray_monotone_decay(self, capsys):
        code, out, _ = run_cli(capsys, "--no-meta", "scan", "psi-ray", "--j", "1", "--from", "0.2", "--to", "5", "--step", "0.1")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "x,re,im"
        values = [abs(float(line.split(",")[1])) for line in lines[1:]]
        assert all(a > b for a, b in zip(values, values[1:]))

    def test_bad_range_is_one(self, capsys):
        code, _, _ = run_cli(capsys, "--no-meta", "scan", "pq-line", "--q", "2", "--t", "5:1:0.1")
        assert code == 1


class TestZerosCommand:
    def test_q2(self, capsys):
        rec = run_json(capsys, "--no-meta", "zeros", "--q", "2")
        assert len(rec["value"]) == 1
        assert abs(rec["value"][0]["t"] - math.sqrt(2) / 2) < 1e-9
        assert any("confirmed" in w for w in rec["warnings"])

    def test_q1(self, capsys):
        rec = run_json(capsys, "--no-meta", "zeros", "--q", "1")
        assert rec["value"][0]["t"] == 0.0

    def test_q0_vacuous(self, capsys):
        rec = run_json(capsys, "--no-meta", "zeros", "--q", "0")
        assert rec["value"] == []


class TestToleranceConfig:
    def test_env_fallback_and_flag_priority(self, monkeypatch):
        import argparse

        monkeypatch.setenv("XIFORGE_ABS_TOL", "1e-9")
        monkeypatch.setenv("XIFORGE_TAIL_TOL", "1e-10")
        args = argparse.Namespace(abs_tol=None, rel_tol=None, tail_tol=None)
        assert _quad_config(args).abs_tol == 1e-9
        assert _series_control(args).tail_tol == 1e-10
        args = argparse.Namespace(abs_tol=1e-7, rel_tol=None, tail_tol=2e-9)
        assert _quad_config(args).abs_tol == 1e-7
        assert _series_control(args).tail_tol == 2e-9
