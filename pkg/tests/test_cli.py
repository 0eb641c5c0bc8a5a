import json

import pytest

from wilson_super import congruences
from wilson_super.cli import main, run
from wilson_super.congruences import primes_in_range
from wilson_super.polyring import IntPoly
from wilson_super.psi_engine import psi


def run_capture(capsys, argv):
    code = run(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# psi ------------------------------------------------------------------------


def test_psi_text(capsys):
    code, out, err = run_capture(capsys, ["psi", "--n", "2"])
    assert code == 0
    assert err == ""
    assert out.splitlines() == [
        "psi_1 = x1",
        "psi_2 = 2*x1 - x1^2 - x2",
    ]


def test_psi_text_matches_library(capsys):
    code, out, _ = run_capture(capsys, ["psi", "--n", "4"])
    assert code == 0
    assert out.splitlines()[-1] == f"psi_4 = {psi(4).to_text()}"


def test_psi_families(capsys):
    code, out, _ = run_capture(
        capsys, ["psi", "--n", "2", "--show", "big-psi", "--show", "sigma"]
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "big_psi_1 = 0"
    assert lines[1] == "big_psi_2 = -2*x1^2"
    assert lines[2] == "sigma_star_1 = x1"
    assert lines[3] == "sigma_star_2 = x1^2 - x2"


def test_psi_json_round_trip(capsys):
    code, out, _ = run_capture(capsys, ["psi", "--n", "3", "--format", "json"])
    assert code == 0
    payload = json.loads(out)
    assert payload["command"] == "psi"
    assert payload["n"] == 3
    entries = payload["polynomials"]
    assert [e["index"] for e in entries] == [1, 2, 3]
    assert entries[0]["terms"] == [{"exps": {"1": 1}, "coef": "1"}]
    for entry in entries:
        parsed = IntPoly.from_json_terms(entry["terms"])
        assert parsed.to_json_terms() == entry["terms"]


def test_psi_latex(capsys):
    code, out, _ = run_capture(capsys, ["psi", "--n", "2", "--format", "latex"])
    assert code == 0
    assert out.startswith("\\begin{table}")
    assert "$\\psi_{2}$ & $2 x_1 - x_1^2 - x_2$ \\\\" in out
    assert "\\toprule" in out and "\\bottomrule" in out


def test_psi_rejects_bad_n(capsys):
    with pytest.raises(SystemExit) as excinfo:
        run(["psi", "--n", "0"])
    assert excinfo.value.code == 2
    with pytest.raises(SystemExit) as excinfo:
        run(["psi"])
    assert excinfo.value.code == 2


def test_psi_out_file(tmp_path, capsys):
    target = tmp_path / "psi.txt"
    code, out, _ = run_capture(capsys, ["psi", "--n", "1", "--out", str(target)])
    assert code == 0
    assert out == ""
    assert target.read_text() == "psi_1 = x1\n"


# tables ---------------------------------------------------------------------


def test_tables_text(capsys):
    code, out, err = run_capture(capsys, ["tables"])
    assert code == 0
    assert err == ""
    lines = out.splitlines()
    for number in range(1, 7):
        assert f"# table {number} match: yes" in lines
    assert "psi_2 = 2*x1 - x1^2 - x2" in lines
    assert "big_psi_2 = -2*B(2,2)" in lines


def test_tables_json(capsys):
    code, out, _ = run_capture(capsys, ["tables", "--format", "json"])
    assert code == 0
    payload = json.loads(out)
    assert payload["match"] is True
    assert set(payload["tables"]) == {str(n) for n in range(1, 7)}
    basis_rows = payload["tables"]["4"]["rows"]
    assert basis_rows["big_psi_2"] == [{"m": 2, "nu": 2, "coef": "-2"}]


def test_tables_latex(capsys):
    code, out, _ = run_capture(capsys, ["tables", "--format", "latex"])
    assert code == 0
    assert "% table 1: psi-low" in out
    assert "\\toprule" in out
    assert "$B_{2,2}$" in out


def test_tables_mismatch_exits_one(capsys, monkeypatch):
    from wilson_super import reference_tables

    tampered = {label: dict(row) for label, row in reference_tables._EXPECTED[1].items()}
    tampered["psi_1"][(1,)] = 5
    patched = dict(reference_tables._EXPECTED)
    patched[1] = tampered
    monkeypatch.setattr(reference_tables, "_EXPECTED", patched)
    code, out, err = run_capture(capsys, ["tables"])
    assert code == 1
    assert "# table 1 match: no" in out
    assert "expected 5, computed 1" in err


# verify ---------------------------------------------------------------------


def test_verify_text(capsys):
    code, out, err = run_capture(capsys, ["verify", "--n", "2", "--pmax", "31"])
    assert code == 0
    assert err == ""
    lines = out.splitlines()
    expected_primes = primes_in_range(3, 31)
    assert len(lines) == len(expected_primes) + 1
    for line, p in zip(lines, expected_primes):
        assert line.startswith(f"p={p} n=2 method=psi ")
        assert line.endswith("PASS")
    assert lines[-1] == f"checks={len(expected_primes)} passed={len(expected_primes)} failed=0"


def test_verify_json_stream(capsys):
    code, out, _ = run_capture(
        capsys, ["verify", "--n", "1", "--pmax", "13", "--format", "json"]
    )
    assert code == 0
    lines = out.splitlines()
    records = [json.loads(line) for line in lines]
    summary = records[-1]["summary"]
    assert summary == {"checks": 5, "passed": 5, "failed": 0}
    for record in records[:-1]:
        assert record["method"] == "psi"
        assert record["pass"] is True
        assert record["lhs"] == record["rhs"]


def test_verify_all_methods(capsys):
    code, out, _ = run_capture(
        capsys, ["verify", "--n", "1", "--pmin", "5", "--pmax", "11", "--method", "all"]
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[-1] == "checks=21 passed=21 failed=0"
    methods = {line.split("method=")[1].split()[0] for line in lines[:-1]}
    assert methods == {
        "psi",
        "factorial",
        "iterative",
        "lerch",
        "lagrange",
        "expansion",
        "eisenstein",
    }


def test_verify_deterministic_across_threads(capsys):
    argv = ["verify", "--n", "2", "--pmax", "61", "--format", "json"]
    code_a, out_a, _ = run_capture(capsys, argv + ["--threads", "1"])
    code_b, out_b, _ = run_capture(capsys, argv + ["--threads", "3"])
    assert code_a == code_b == 0
    assert out_a == out_b


def test_verify_latex(capsys):
    code, out, _ = run_capture(
        capsys, ["verify", "--n", "1", "--pmax", "7", "--format", "latex"]
    )
    assert code == 0
    assert out.startswith("\\begin{tabular}")
    assert "% checks=3 passed=3 failed=0" in out


def test_verify_pmin_must_exceed_depth(capsys):
    code, out, err = run_capture(capsys, ["verify", "--n", "3", "--pmin", "3"])
    assert code == 2
    assert out == ""
    assert err.startswith("wilson-super: error:")


def test_verify_threads_env(capsys, monkeypatch):
    monkeypatch.setenv("WILSON_SUPER_THREADS", "2")
    code, out, _ = run_capture(capsys, ["verify", "--n", "1", "--pmax", "13"])
    assert code == 0
    assert out.splitlines()[-1].endswith("failed=0")


def test_verify_threads_env_invalid(capsys, monkeypatch):
    for bad in ("zero", "0", "-3"):
        monkeypatch.setenv("WILSON_SUPER_THREADS", bad)
        code, out, err = run_capture(capsys, ["verify", "--n", "1", "--pmax", "13"])
        assert code == 2
        assert "WILSON_SUPER_THREADS" in err


def test_verify_failure_exits_one(capsys, monkeypatch):
    monkeypatch.setattr(congruences, "oracle_wilson", lambda p, n: -1)
    code, out, err = run_capture(capsys, ["verify", "--n", "1", "--pmax", "7"])
    assert code == 1
    assert "FAIL" in out
    assert out.splitlines()[-1].endswith("failed=3")


def test_verify_out_file(tmp_path, capsys):
    target = tmp_path / "verify.jsonl"
    code, out, _ = run_capture(
        capsys,
        ["verify", "--n", "1", "--pmax", "7", "--format", "json", "--out", str(target)],
    )
    assert code == 0
    assert out == ""
    lines = target.read_text().splitlines()
    assert json.loads(lines[-1])["summary"]["failed"] == 0


# conjectures ------------------------------------------------------------------


def test_conjectures_text(capsys):
    code, out, _ = run_capture(capsys, ["conjectures", "--n-max", "6"])
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "n=1 method=termcount terms=1 pfs=1 EQUAL"
    assert lines[-1] == "all identities hold: yes"


def test_conjectures_pm1(capsys):
    code, out, _ = run_capture(capsys, ["conjectures", "--n-max", "4", "--pm1"])
    assert code == 0
    assert "method=pm1-bell" in out
    assert "method=pm1-gf" in out
    assert "sign=-1" in out
    assert out.splitlines()[-1] == "all identities hold: yes"


def test_conjectures_json(capsys):
    code, out, _ = run_capture(
        capsys, ["conjectures", "--n-max", "5", "--pm1", "--format", "json"]
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["command"] == "conjectures"
    assert payload["all_hold"] is True
    assert len(payload["termcount"]) == 5
    assert len(payload["pm1"]) == 2 * 2 * 5
    assert {entry["method"] for entry in payload["pm1"]} == {"pm1-bell", "pm1-gf"}


def test_conjectures_latex(capsys):
    code, out, _ = run_capture(
        capsys, ["conjectures", "--n-max", "3", "--format", "latex"]
    )
    assert code == 0
    assert out.startswith("\\begin{tabular}")
    assert "% all_hold=true" in out


def test_conjectures_strict_passes(capsys):
    code, _, _ = run_capture(capsys, ["conjectures", "--n-max", "5", "--strict"])
    assert code == 0


def test_conjectures_strict_failure_exits_one(capsys, monkeypatch):
    from wilson_super import conjectures as conj_module
    from wilson_super.conjectures import TermCountReport, TermCountRow

    fake = TermCountReport(rows=(TermCountRow(n=1, count=0, bound=1),))
    monkeypatch.setattr(conj_module, "check_term_count", lambda n_max, chain: fake)
    code, out, _ = run_capture(capsys, ["conjectures", "--n-max", "1", "--strict"])
    assert code == 1
    assert "BELOW" in out
    code, out, _ = run_capture(capsys, ["conjectures", "--n-max", "1"])
    assert code == 0


def test_main_wraps_run(capsys, monkeypatch):
    monkeypatch.setattr("sys.argv", ["wilson-super", "psi", "--n", "1"])
    with pytest.raises(SystemExit) as excinfo:
        main()
    assert excinfo.value.code == 0
    assert "psi_1 = x1" in capsys.readouterr().out


def test_unknown_command_usage_error(capsys):
    with pytest.raises(SystemExit) as excinfo:
        run(["frobnicate"])
    assert excinfo.value.code == 2
