import json

import pytest

from aurea.cli import main
from aurea.exact import parse_rational


def run_cli(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, argv):
    code, out, err = run_cli(capsys, argv)
    assert code == 0, err
    return [json.loads(line) for line in out.splitlines()]


def test_rho_example(capsys):
    records = run_json(capsys, ["limits", "rho", "--r", "1", "--s", "1", "--digits", "10"])
    assert records == [
        {
            "command": "limits rho",
            "params": {"r": "1/1", "s": "1/1", "digits": 10},
            "result": {"rho": {"a": "1/2", "b": "1/2", "d": 5}, "decimal": "1.6180339887"},
        }
    ]


def test_forbidden_example(capsys):
    records = run_json(capsys, ["riccati", "forbidden", "--p", "1", "--q", "1", "--branch", "plus", "--depth", "4"])
    assert records[0]["result"]["elements"] == ["-1/1", "-2/1", "-3/2", "-5/3"]


def test_certificate_example(capsys):
    records = run_json(capsys, ["limits", "certificate", "--f0", "1", "--fk", "1", "--eps", "1/1000000"])
    assert records[0]["result"] == {"M": "1/2", "c": "1/6", "N": 32}


def test_repeated_runs_are_byte_identical(capsys):
    argv = ["riccati", "solve", "--p", "2", "--q", "3", "--branch", "minus", "--x0", "5/4", "--n", "12"]
    _, first, _ = run_cli(capsys, argv)
    _, second, _ = run_cli(capsys, argv)
    assert first == second and first


def test_output_rationals_round_trip(capsys):
    records = run_json(capsys, ["riccati", "orbit", "--p", "1", "--q", "1", "--branch", "plus", "--x0", "1", "--n", "6"])
    for text in records[0]["result"]["trajectory"]:
        assert parse_rational(text) is not None


def test_horadam_range_and_fast(capsys):
    slow = run_json(capsys, ["horadam", "--w0", "0", "--w1", "1", "--p", "1", "--q=-1", "--n", "0..7"])
    assert slow[0]["result"]["terms"] == ["0/1", "1/1", "1/1", "2/1", "3/1", "5/1", "8/1", "13/1"]
    fast = run_json(capsys, ["horadam", "--w0", "0", "--w1", "1", "--p", "1", "--q=-1", "--n", "0..7", "--fast"])
    assert fast[0]["result"]["terms"] == slow[0]["result"]["terms"]
    single = run_json(capsys, ["horadam", "--w0", "0", "--w1", "1", "--p", "1", "--q=-1", "--n=-4"])
    assert single[0]["result"] == {"start": -4, "terms": ["-3/1"]}


def test_orbit_reports_pole_with_exit_zero(capsys):
    records = run_json(capsys, ["riccati", "orbit", "--p", "1", "--q", "1", "--branch", "plus", "--x0=-2", "--n", "5"])
    result = records[0]["result"]
    assert result["status"] == "pole_at_step(2)"
    assert result["classification"] == "forbidden_depth(2)"
    assert result["trajectory"] == ["-2/1", "-1/1"]


def test_solve_matches_and_forbidden_seed_exits_2(capsys):
    records = run_json(capsys, ["riccati", "solve", "--p", "1", "--q", "1", "--branch", "plus", "--x0", "1", "--n", "4"])
    assert records[0]["result"]["match"] is True
    code, out, err = run_cli(capsys, ["riccati", "solve", "--p", "1", "--q", "1", "--branch", "plus", "--x0=-2", "--n", "5"])
    assert code == 2 and not out and "forbidden" in err


def test_classify_surd(capsys):
    records = run_json(
        capsys,
        ["riccati", "classify", "--p", "1", "--q", "1", "--branch", "plus", "--surd=-1/2,1/2,5", "--depth", "5"],
    )
    assert records[0]["result"]["classification"] == "fixed_point"


def test_classify_requires_a_value(capsys):
    code, _, err = run_cli(capsys, ["riccati", "classify", "--p", "1", "--q", "1", "--branch", "plus", "--depth", "5"])
    assert code == 3 and "x0" in err


def test_subst_check_record(capsys):
    records = run_json(capsys, ["riccati", "subst-check", "--p", "1", "--q", "1", "--t0", "0", "--t1", "1", "--n", "6"])
    result = records[0]["result"]
    assert result["t_values"] == ["0/1", "1/1", "1/1", "2/1", "3/1", "5/1", "8/1", "13/1"]
    assert result["passed"] is True and result["status"] == "completed"


def test_estimate_backward_shows_target_and_claimed(capsys):
    records = run_json(
        capsys,
        [
            "limits", "estimate", "--r", "1", "--s", "1",
            "--parity", "standard", "--direction", "backward",
            "--n", "60", "--seed0", "0", "--seed1", "1", "--digits", "10",
        ],
    )
    result = records[0]["result"]
    assert result["target"] == {"a": "1/2", "b": "-1/2", "d": 5}
    assert result["claimed"] == {"a": "-1/2", "b": "-1/2", "d": 5}
    assert result["target_decimal"] == "-0.6180339887"
    assert result["claimed_decimal"] == "-1.6180339887"
    assert result["estimate"] == "-0.6180339887"


def test_estimate_forward_has_no_claimed(capsys):
    records = run_json(
        capsys,
        ["limits", "estimate", "--r", "2", "--s", "1", "--parity", "standard", "--direction", "forward", "--n", "40"],
    )
    result = records[0]["result"]
    assert result["claimed"] is None
    assert result["target"] == {"a": "1/1", "b": "1/1", "d": 2}


def test_cf_record(capsys):
    records = run_json(capsys, ["limits", "cf", "--m", "10", "--digits", "6"])
    assert records[0]["result"] == {"convergent": "55/89", "decimal": "0.617978"}


def test_csv_format(capsys):
    code, out, err = run_cli(capsys, ["--format", "csv", "limits", "cf", "--m", "3"])
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("command,")
    assert "2/3" in lines[1]
    code, out2, _ = run_cli(capsys, ["limits", "cf", "--m", "3", "--format", "csv"])
    assert out2 == out


def test_bad_rational_exits_3(capsys):
    code, _, err = run_cli(capsys, ["horadam", "--w0", "zero", "--w1", "1", "--p", "1", "--q", "1", "--n", "3"])
    assert code == 3 and "invalid rational" in err


def test_unknown_option_exits_3(capsys):
    code, _, err = run_cli(capsys, ["limits", "cf", "--m", "3", "--bogus"])
    assert code == 3


def test_domain_error_exits_2(capsys):
    code, _, err = run_cli(capsys, ["riccati", "orbit", "--p", "0", "--q", "1", "--branch", "plus", "--x0", "1", "--n", "3"])
    assert code == 2 and "positive" in err


def test_help_exits_0(capsys):
    assert run_cli(capsys, ["--help"])[0] == 0


@pytest.fixture
def seed_file(tmp_path):
    path = tmp_path / "seed.txt"
    path.write_text(
        "k=3/1 kind=standard r=1/1 s=1/1\n0/1 1/1 1/1\n1/1 2/1 1/1\n2/1 1/1 5/1\n",
        encoding="utf-8",
    )
    return str(path)


def test_fibfunc_extend_per_offset_records(capsys, seed_file):
    records = run_json(capsys, ["fibfunc", "extend", "--seed-file", seed_file, "--nmin=-2", "--nmax", "4"])
    assert [r["params"]["offset"] for r in records] == ["0/1", "1/1", "2/1"]
    assert records[0]["result"]["values"] == ["1/1", "0/1", "1/1", "1/1", "2/1", "3/1", "5/1"]


def test_fibfunc_trace_single_offset(capsys, seed_file):
    records = run_json(capsys, ["fibfunc", "trace", "--seed-file", seed_file, "--nmax", "3", "--offset-index", "0"])
    assert len(records) == 1
    assert records[0]["result"]["ratios"] == ["1/1", "1/2", "2/3", "3/5"]


def test_fibfunc_verify_reports(capsys, seed_file):
    records = run_json(capsys, ["fibfunc", "verify", "--seed-file", seed_file, "--eps", "1/1000000000"])
    assert len(records) == 3
    for record in records:
        result = record["result"]
        assert result["converged"] is True and result["first_step"] <= 60
        assert result["target"] == {"a": "1/2", "b": "1/2", "d": 5}
        assert result["certificate"] is not None
        assert parse_rational(result["certificate"]["M"]) > 0


def test_fibfunc_degenerate_seed_exits_2(capsys, tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("k=1/1 kind=standard r=1/1 s=1/1\n0/1 0/1 0/1\n", encoding="utf-8")
    code, _, err = run_cli(capsys, ["fibfunc", "verify", "--seed-file", str(path), "--eps", "1/10"])
    assert code == 2 and "degenerate" in err


def test_fibfunc_missing_file_exits_3(capsys, tmp_path):
    code, _, err = run_cli(capsys, ["fibfunc", "extend", "--seed-file", str(tmp_path / "none.txt"), "--nmin", "0", "--nmax", "2"])
    assert code == 3


def test_fibfunc_malformed_seed_exits_3(capsys, tmp_path):
    path = tmp_path / "short.txt"
    path.write_text("k=1/1 kind=standard r=1/1 s=1/1\n0/1 1/1\n", encoding="utf-8")
    code, _, err = run_cli(capsys, ["fibfunc", "extend", "--seed-file", str(path), "--nmin", "0", "--nmax", "2"])
    assert code == 3
