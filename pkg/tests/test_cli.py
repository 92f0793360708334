import io
import json
import subprocess
import sys

import pytest

from richness.cli import main
from richness.io import bundled_data_path

BUNDLED_CSV = str(bundled_data_path("flowers.csv"))

TINY_SCENARIO = """
[field]
model = "uniform"
true_categories = 4
field_size = 120

[experiment]
sample_size = 20
trials = 5
seed = 3
methods = ["fisher", "jackknife:1"]
"""


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_estimate_reproduces_worked_example(capsys):
    code, out, err = run_cli(capsys, "estimate", "--input", BUNDLED_CSV)
    assert code == 0
    assert err == ""
    for value in ("5.9773", "5.9545", "5.9318", "0.6601", "6.9662"):
        assert value in out
    c_max_column = [line.rstrip().rsplit(None, 1)[-1]
                    for line in out.splitlines()
                    if "two_sided" in line or "one_sided" in line]
    assert c_max_column == ["7", "6", "6", "8", "8", "7"]


def test_estimate_json_single_method(capsys):
    code, out, _ = run_cli(capsys, "estimate", "--input", BUNDLED_CSV,
                           "--methods", "jackknife:2", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    (row,) = payload["estimates"]
    assert row["method"] == "jackknife:2"
    assert row["estimate"] == pytest.approx(5.9545, abs=5e-4)
    (answer,) = payload["answers"]
    assert answer["std_dev"] == pytest.approx(0.6601, abs=1e-3)


def test_estimate_reads_stdin(capsys, monkeypatch):
    monkeypatch.setattr(sys, "stdin", io.StringIO("a,2\nb,1\n"))
    code, out, _ = run_cli(capsys, "estimate", "--input", "-",
                           "--methods", "jackknife:1", "--format", "json")
    assert code == 0
    assert json.loads(out)["sample"]["size"] == 3


def test_estimate_tsv_input(capsys, tmp_path):
    path = tmp_path / "data.tsv"
    path.write_text("a\t2\nb\t1\n", encoding="utf-8")
    code, out, _ = run_cli(capsys, "estimate", "--input", str(path),
                           "--input-format", "tsv", "--methods", "fisher",
                           "--format", "json")
    assert code == 0
    assert json.loads(out)["sample"]["richness"] == 2


def test_estimate_empty_file_is_parse_error(capsys, tmp_path):
    path = tmp_path / "empty.csv"
    path.write_text("", encoding="utf-8")
    code, out, err = run_cli(capsys, "estimate", "--input", str(path))
    assert code == 3
    assert out == ""
    assert "no data rows" in err


def test_estimate_missing_file_is_parse_error(capsys, tmp_path):
    code, _, err = run_cli(capsys, "estimate", "--input",
                           str(tmp_path / "absent.csv"))
    assert code == 3
    assert "cannot read" in err


def test_estimate_compute_errors_exit_4(capsys, tmp_path):
    # all-singleton sample: Fisher's relation has no finite root
    path = tmp_path / "singletons.csv"
    path.write_text("a,1\nb,1\n", encoding="utf-8")
    code, _, err = run_cli(capsys, "estimate", "--input", str(path),
                           "--methods", "fisher")
    assert code == 4
    assert err != ""
    # jackknife order must stay below the sample size
    code, _, err = run_cli(capsys, "estimate", "--input", BUNDLED_CSV,
                           "--methods", "jackknife:44")
    assert code == 4


@pytest.mark.parametrize("argv", [
    ("estimate", "--input", "x.csv", "--methods", "chao"),
    ("estimate", "--input", "x.csv", "--risk", "1.5"),
    ("estimate", "--input", "x.csv", "--replicates", "1"),
    ("estimate", "--input", "x.csv", "--seed", "-1"),
    ("estimate", "--input", "x.csv", "--jackknife-orders", "a,b"),
    ("estimate", "--input", "x.csv", "--jackknife-orders", "0"),
])
def test_usage_errors_exit_2(capsys, argv):
    code, out, err = run_cli(capsys, *argv)
    assert code == 2
    assert out == ""


def test_unknown_flag_exits_2(capsys):
    assert run_cli(capsys, "estimate", "--frobnicate")[0] == 2
    assert run_cli(capsys)[0] == 2


def test_help_exits_0(capsys):
    assert run_cli(capsys, "--help")[0] == 0
    assert run_cli(capsys, "estimate", "--help")[0] == 0


def test_jackknife_orders_flag_selects_methods(capsys):
    code, out, _ = run_cli(capsys, "estimate", "--input", BUNDLED_CSV,
                           "--jackknife-orders", "2", "--format", "json")
    assert code == 0
    methods = [row["method"] for row in json.loads(out)["estimates"]]
    assert methods == ["fisher", "bootstrap", "jackknife:2"]


def test_one_sided_reporting(capsys):
    code, out, _ = run_cli(capsys, "estimate", "--input", BUNDLED_CSV,
                           "--sidedness", "one_sided", "--format", "json")
    assert code == 0
    answers = json.loads(out)["answers"]
    assert [a["sidedness"] for a in answers] == ["one_sided"] * 5


def test_simulate_tiny_scenario(capsys, tmp_path):
    path = tmp_path / "tiny.toml"
    path.write_text(TINY_SCENARIO, encoding="utf-8")
    code, out, err = run_cli(capsys, "simulate", "--scenario", str(path))
    assert code == 0 and err == ""
    assert "coverage" in out
    again = run_cli(capsys, "simulate", "--scenario", str(path))
    assert again == (0, out, "")


def test_simulate_json(capsys, tmp_path):
    path = tmp_path / "tiny.toml"
    path.write_text(TINY_SCENARIO, encoding="utf-8")
    code, out, _ = run_cli(capsys, "simulate", "--scenario", str(path),
                           "--format", "json")
    assert code == 0
    assert json.loads(out)["trials"] == 5


def test_simulate_missing_or_invalid_scenario(capsys, tmp_path):
    code, _, err = run_cli(capsys, "simulate", "--scenario",
                           str(tmp_path / "none.toml"))
    assert code == 3 and "cannot read" in err
    bad = tmp_path / "bad.toml"
    bad.write_text("[field]\nmodel = 'uniform'\n", encoding="utf-8")
    assert run_cli(capsys, "simulate", "--scenario", str(bad))[0] == 3


def test_simulate_oversized_sample_exits_4(capsys, tmp_path):
    path = tmp_path / "big.toml"
    path.write_text(TINY_SCENARIO.replace("sample_size = 20",
                                          "sample_size = 500"),
                    encoding="utf-8")
    code, _, err = run_cli(capsys, "simulate", "--scenario", str(path))
    assert code == 4
    assert "exceeds field population" in err


def test_selftest_passes(capsys):
    code, out, _ = run_cli(capsys, "selftest")
    assert code == 0
    assert "30/30 checks passed" in out


def test_selftest_verbose_lists_checks(capsys):
    code, out, _ = run_cli(capsys, "selftest", "--verbose")
    assert code == 0
    assert "ok   fisher_alpha" in out
    assert "ok   jackknife_dual_route" in out


def test_selftest_corrupted_fixture_fails_named_check(capsys, tmp_path):
    path = tmp_path / "corrupt.csv"
    path.write_text("color,count\npurple,13\nred,10\nyellow,10\norange,9\nwhite,1\n",
                    encoding="utf-8")
    code, out, _ = run_cli(capsys, "selftest", "--data", str(path))
    assert code == 1
    assert "FAIL fixture_counts" in out


def test_selftest_unreadable_fixture(capsys, tmp_path):
    code, out, _ = run_cli(capsys, "selftest", "--data",
                           str(tmp_path / "gone.csv"))
    assert code == 1
    assert "FAIL fixture_load" in out


def test_console_script_runs_byte_identically():
    argv = [sys.executable, "-m", "richness", "estimate", "--input",
            BUNDLED_CSV, "--format", "json"]
    first = subprocess.run(argv, capture_output=True, check=True)
    second = subprocess.run(argv, capture_output=True, check=True)
    assert first.stdout == second.stdout
    assert json.loads(first.stdout)["schema"] == "richness-report"
