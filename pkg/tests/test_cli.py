import json
import shutil
import subprocess

import pytest
from click.testing import CliRunner

from xline.cli import bench_rows, main


@pytest.fixture
def run():
    runner = CliRunner()

    def invoke(*args):
        return runner.invoke(main, list(args))

    return invoke


def test_verify_sampled_pass(run):
    r = run("verify", "--scheme", "gh6", "--p", "10007", "--a", "2", "--d", "5", "--trials", "500")
    assert r.exit_code == 0, r.output
    assert json.loads(r.output)["verdict"] == "pass"


def test_verify_unknown_scheme(run):
    r = run("verify", "--scheme", "gh7", "--p", "10007", "--a", "2", "--d", "5")
    assert r.exit_code == 2
    assert "unknown scheme" in r.output


def test_verify_bad_curve_is_usage_error(run):
    r = run("verify", "--scheme", "hu8", "--p", "101", "--a", "2", "--b", "2")
    assert r.exit_code == 2


def test_verify_mutation_hook_fails(run):
    r = run("verify", "--scheme", "gh6", "--p", "103", "--a", "2", "--d", "5",
            "--mutate-constant", "ad=3", "--format", "table")
    assert r.exit_code == 1
    assert "fail" in r.output


def test_verify_writes_file(run, tmp_path):
    out = tmp_path / "rep.json"
    r = run("verify", "--scheme", "hu2", "--p", "101", "--a", "2", "--b", "5", "--out", str(out))
    assert r.exit_code == 0
    assert json.loads(out.read_text())["mode"] == "exhaustive"


def test_verify_curve_json(run, tmp_path):
    cfg = tmp_path / "curve.json"
    cfg.write_text(json.dumps({"model": "huff", "p": "10007", "a": "2", "b": "5"}))
    r = run("verify", "--scheme", "hu16", "--curve", str(cfg), "--trials", "50")
    assert r.exit_code == 0, r.output


def test_ladder_n1_echoes(run):
    r = run("ladder", "--scheme", "hu8", "--p", "10007", "--a", "2", "--b", "5", "--n", "1")
    doc = json.loads(r.output)
    assert r.exit_code == 0 and doc["f_P"] == doc["f_nP"]


def test_ladder_check_and_hex(run):
    r = run("ladder", "--scheme", "h18", "--p", "10007", "--d", "7", "--n", "0xdeadbeef", "--check", "--seed", "4")
    doc = json.loads(r.output)
    assert r.exit_code == 0, r.output
    assert doc["match"] is True and doc["oracle"] == doc["f_nP"]


def test_ladder_explicit_point(run):
    from xline.curves import Montgomery

    P = Montgomery(101, A=6, B=1).sample_point(seed=2)
    r = run("ladder", "--scheme", "mont2", "--p", "101", "--A", "6", "--B", "1", "--x", str(P.X), "--y", str(P.Y),
            "--n", "5", "--check", "--format", "table")
    assert r.exit_code == 0, r.output
    assert f"point: ['{P.X}', '{P.Y}']" in r.output and "match: True" in r.output


def test_ladder_degenerate_base_exits_1(run):
    # (0, 0) has order 2 and f = 0, so the A2 step cannot divide by it
    r = run("ladder", "--scheme", "mont2", "--p", "101", "--A", "6", "--B", "1", "--x", "0", "--y", "0", "--n", "2")
    assert r.exit_code == 1
    assert "cannot divide" in r.output


def test_ladder_point_not_on_curve(run):
    r = run("ladder", "--scheme", "mont2", "--p", "101", "--A", "6", "--B", "1", "--x", "1", "--y", "1", "--n", "2")
    assert r.exit_code == 2


@pytest.mark.parametrize("args", [("--n", "0"), ("--n", "abc"), ("--n", "3", "--x", "1")])
def test_ladder_usage_errors(run, args):
    r = run("ladder", "--scheme", "gh6", "--p", "10007", "--a", "2", "--d", "5", *args)
    assert r.exit_code == 2


def test_search_doub6(run):
    r = run("search", "--family", "gh", "--f", "xy", "--kind", "dbl")
    assert r.exit_code == 0, r.output
    doc = json.loads(r.output)
    assert doc["kind"] == "D" and doc["bounds"] == [4, 4]


def test_search_not_found(run):
    r = run("search", "--family", "gh", "--f", "xy", "--kind", "dbl", "--max-bound", "1", "--trials", "10")
    assert r.exit_code == 1


def test_search_usage(run):
    assert run("search", "--kind", "dbl").exit_code == 2
    assert run("search", "--family", "nope", "--f", "xy").exit_code == 2


def test_bench_table_and_rows(run):
    r = run("bench")
    assert r.exit_code == 0
    assert "hu8" in r.output and "mont2" in r.output
    rows = {row["scheme"]: row for row in bench_rows()}
    assert rows["hu8"]["M+S"] == rows["mont2"]["M+S"]
    r = run("bench", "--scheme", "hu8,mont2", "--format", "json")
    assert [x["scheme"] for x in json.loads(r.output)["rows"]] == ["hu8", "mont2"]
    assert run("bench", "--scheme", "zz").exit_code == 2


def test_console_script_installed():
    exe = shutil.which("xline")
    if exe is None:
        pytest.skip("console script not on PATH")
    out = subprocess.run([exe, "verify", "--scheme", "zz", "--p", "101"], capture_output=True, text=True)
    assert out.returncode == 2
