"""End-to-end tests for the command-line interface.

Everything drives ``main(argv)`` in-process so exit codes and output can
be asserted without spawning a shell.
"""

import json

import pytest

from congprimes.cli import CSV_HEADER, main
from congprimes.criteria import classify
from congprimes.verify import SuiteResult, density_lines, level_counts


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ---------------------------------------------------------------- classify

def test_classify_text_plain_levels(capsys):
    code, out, _ = run(capsys, "classify", "17")
    assert code == 0
    lines = out.splitlines()
    assert "p: 17" in lines
    assert "v_level: 2" in lines
    assert "w_level: 1" in lines
    assert "chi_1pi: -1" in lines
    assert "congruent_status: NOT_CONGRUENT" in lines


def test_classify_text_ceiling_levels(capsys):
    # 257 sits at both ceilings, so the text must say "at least"
    code, out, _ = run(capsys, "classify", "257")
    assert code == 0
    assert "v_level: ≥ 4" in out
    assert "w_level: ≥ 3" in out


def test_classify_text_off_stratum(capsys):
    code, out, _ = run(capsys, "classify", "7")
    assert code == 0
    assert "w_level: NA" in out
    assert "chi_1pi: 0 (not applicable)" in out


def test_classify_json_fields(capsys):
    code, out, _ = run(capsys, "classify", "41", "--json")
    assert code == 0
    obj = json.loads(out)
    assert set(obj) == {"p", "p_mod_16", "chi_1pi", "chi_alpha_delta",
                        "chi_zeta_alpha_delta", "v_level", "w_level",
                        "congruent_status", "sha_report"}
    c = classify(41)
    assert obj["p"] == 41
    assert obj["v_level"] == c.v_level == 3
    assert obj["w_level"] == c.w_level == 3
    assert obj["congruent_status"] == c.congruent_status.value
    assert obj["sha_report"] == c.sha_report.value


def test_classify_json_null_w_level(capsys):
    code, out, _ = run(capsys, "classify", "5", "--format", "json")
    assert code == 0
    assert json.loads(out)["w_level"] is None


@pytest.mark.parametrize("arg", ["4", "2", "9", "-7"])
def test_classify_rejects_non_odd_primes(capsys, arg):
    code, _, err = run(capsys, "classify", arg)
    assert code == 1
    assert "error:" in err


def test_classify_p2_gets_dedicated_message(capsys):
    code, _, err = run(capsys, "classify", "2")
    assert code == 1
    assert "p = 2 is excluded" in err


# -------------------------------------------------------------------- scan

def test_scan_csv_contract(capsys, tmp_path):
    out_path = tmp_path / "scan.csv"
    code, out, err = run(capsys, "scan", "--from", "3", "--to", "100",
                         "--out", str(out_path))
    assert code == 0
    assert err == ""
    assert f"wrote 24 rows to {out_path}" in out
    data = out_path.read_bytes()
    assert b"\r" not in data
    assert data.endswith(b"\n")
    lines = data.decode("utf-8").splitlines()
    assert lines[0] == CSV_HEADER
    assert len(lines) == 25  # header + 24 primes in [3, 100]

    for line in lines[1:]:
        fields = line.split(",")
        assert len(fields) == 8
        c = classify(int(fields[0]))
        want_w = "NA" if c.w_level is None else str(c.w_level)
        assert fields[1] == str(c.p_mod_16)
        assert fields[2] == str(c.symbols.chi_1pi)
        assert fields[3] == str(c.symbols.chi_alpha_delta)
        assert fields[4] == str(c.symbols.chi_zeta_alpha_delta)
        assert fields[5] == str(c.v_level)
        assert fields[6] == want_w
        assert fields[7] == c.congruent_status.value


def test_scan_jsonl_matches_classify(capsys, tmp_path):
    out_path = tmp_path / "scan.jsonl"
    code, _, _ = run(capsys, "scan", "--from", "3", "--to", "100",
                     "--out", str(out_path), "--format", "jsonl")
    assert code == 0
    rows = [json.loads(line) for line in out_path.read_text().splitlines()]
    assert len(rows) == 24
    assert [r["p"] for r in rows] == sorted(r["p"] for r in rows)
    for r in rows:
        c = classify(r["p"])
        assert r["v_level"] == c.v_level
        assert r["w_level"] == c.w_level
        assert r["chi_zeta_alpha_delta"] == c.symbols.chi_zeta_alpha_delta


@pytest.mark.parametrize("fmt", ["csv", "jsonl"])
def test_scan_worker_count_does_not_change_output(capsys, tmp_path, fmt):
    serial = tmp_path / f"serial.{fmt}"
    parallel = tmp_path / f"parallel.{fmt}"
    assert run(capsys, "scan", "--from", "3", "--to", "400", "--out",
               str(serial), "--format", fmt)[0] == 0
    assert run(capsys, "scan", "--from", "3", "--to", "400", "--out",
               str(parallel), "--format", fmt, "--workers", "3")[0] == 0
    assert serial.read_bytes() == parallel.read_bytes()


def test_scan_prints_density_summary(capsys, tmp_path):
    out_path = tmp_path / "scan.csv"
    _, out, _ = run(capsys, "scan", "--from", "3", "--to", "600",
                    "--out", str(out_path))
    assert "V(4)/V(3) fraction:" in out
    assert "v_level 0" in out


def test_scan_to_100000_fraction_in_frozen_band(capsys, tmp_path):
    # the observed value is 605/1188 = 0.5093; the band is deliberately loose
    out_path = tmp_path / "full.csv"
    code, out, _ = run(capsys, "scan", "--from", "3", "--to", "100000",
                       "--out", str(out_path), "--workers", "2")
    assert code == 0
    assert "wrote 9591 rows" in out
    fraction_lines = [l for l in out.splitlines() if l.startswith("V(4)/V(3)")]
    assert len(fraction_lines) == 1
    value = float(fraction_lines[0].rsplit("=", 1)[1])
    assert 0.4 <= value <= 0.6


def test_scan_rejects_inverted_range(capsys, tmp_path):
    code, _, err = run(capsys, "scan", "--from", "100", "--to", "3",
                       "--out", str(tmp_path / "x.csv"))
    assert code == 1
    assert "must not exceed" in err


def test_scan_requires_out(capsys, tmp_path):
    code, _, err = run(capsys, "scan", "--from", "3", "--to", "100")
    assert code == 1
    assert "required" in err


# ------------------------------------------------------------------ verify

def test_verify_pass_exit_zero(capsys):
    code, out, _ = run(capsys, "verify", "tunnell", "--limit", "300")
    assert code == 0
    assert "tunnell: PASS" in out


def test_verify_failure_exit_three(capsys, monkeypatch):
    fake = SuiteResult("els", False, 9, counterexample="p=99991: mismatch")
    monkeypatch.setattr("congprimes.cli.run_suite", lambda *a: fake)
    code, out, _ = run(capsys, "verify", "els")
    assert code == 3
    assert "counterexample: p=99991: mismatch" in out
    assert "els: FAIL" in out


def test_verify_unknown_suite_is_usage_error(capsys):
    code, _, err = run(capsys, "verify", "nonsense")
    assert code == 1
    assert "invalid choice" in err


# ----------------------------------------------------------------- density

def test_density_matches_library(capsys):
    code, out, _ = run(capsys, "density", "--from", "3", "--to", "100")
    assert code == 0
    assert out.splitlines() == density_lines(level_counts(3, 100))


def test_density_rejects_inverted_range(capsys):
    code, _, err = run(capsys, "density", "--from", "9", "--to", "5")
    assert code == 1
    assert "must not exceed" in err


# ------------------------------------------------------------- paper-check

def test_paper_check_pass_path(capsys, monkeypatch):
    fake = SuiteResult("paper-check", True, 57, lines=["p=41: ok"])
    monkeypatch.setattr("congprimes.cli.run_reference_scan", lambda: fake)
    code, out, _ = run(capsys, "paper-check")
    assert code == 0
    assert "reference computations: PASS (57 primes examined)" in out


def test_paper_check_fail_path(capsys, monkeypatch):
    fake = SuiteResult("paper-check", False, 3, counterexample="bad")
    monkeypatch.setattr("congprimes.cli.run_reference_scan", lambda: fake)
    code, out, _ = run(capsys, "paper-check")
    assert code == 3
    assert "reference computations: FAIL" in out


# ------------------------------------------------------------------- wiring

def test_no_arguments_shows_help(capsys):
    code, _, err = run(capsys)
    assert code == 1
    assert "usage:" in err


def test_unknown_command(capsys):
    code, _, err = run(capsys, "frobnicate")
    assert code == 1
    assert "invalid choice" in err
