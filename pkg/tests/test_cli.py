import json
import subprocess
import sys

import pytest

from logfan import cli


def run(argv, capsys):
    code = cli.main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_fan_gl_to_file(tmp_path, capsys):
    path = tmp_path / "fan.json"
    code, _, _ = run(["fan", "gl", "--n", "2", "--out", str(path)], capsys)
    assert code == 0
    text = path.read_text(encoding="utf-8")
    assert text.endswith("\n")
    data = json.loads(text)
    assert data["ambient_rank"] == 2 and len(data["maximal_cones"]) == 4


def test_fan_fixed_even(capsys):
    code, out, _ = run(["fan", "fixed", "--kind", "D", "--r", "2"], capsys)
    assert code == 0
    assert [c["label"] for c in json.loads(out)["maximal_cones"]] == ["C+", "C-"]


@pytest.mark.parametrize("argv", [
    ["fan", "gl", "--n", "0"],
    ["fan", "gl", "--n", "9"],
    ["fan", "fixed", "--kind", "D", "--r", "1"],
    ["verify", "blowup", "--n", "5"],
    ["verify", "blowup", "--n", "2", "--f", "1.1/1.1 2.2/2.1"],
    ["verify", "blowup", "--n", "2", "--d", "3"],
    ["verify", "census", "--n", "2", "--q", "6"],
    ["verify", "census", "--n", "6", "--q", "2"],
])
def test_usage_errors(argv, capsys):
    code, _, err = run(argv, capsys)
    assert code == 2
    assert "usage" in err


def test_argparse_errors_exit_two(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["fan", "gl", "--n", "two"])
    assert exc.value.code == 2


def test_verify_blowup_auto(capsys):
    code, out, _ = run(["verify", "blowup", "--n", "2", "--d", "1", "--f", "auto"], capsys)
    assert code == 0
    rep = json.loads(out)
    assert rep["minors_checked"] == 16 and rep["all_divisible"] and rep["distinguished_ok"]
    assert set(rep) == {"n", "f", "d", "minors_checked", "all_divisible", "distinguished_ok"}


def test_verify_blowup_explicit_chart_all_depths(capsys):
    code, out, _ = run(["verify", "blowup", "--n", "2", "--f", "1.2/1.1 2.1/2.2"], capsys)
    assert code == 0
    assert [r["d"] for r in json.loads(out)["reports"]] == [1, 2]


def test_verify_census(capsys):
    code, out, _ = run(["verify", "census", "--n", "2", "--q", "2"], capsys)
    assert code == 0
    d = json.loads(out)
    assert d["total"] == 35
    assert d["by_stratum"] == {"Z0": 0, "Z1": 11, "Z2": 29, "Omega": 6}
    assert d["by_invariant"]["1,1"] == 9


def test_verify_census_displayed(capsys):
    code, out, _ = run(["verify", "census", "--n", "2", "--convention", "displayed"], capsys)
    assert code == 0
    assert json.loads(out)["by_stratum"]["Z0"] == 11


def test_verify_fixed(capsys):
    code, out, _ = run(["verify", "fixed", "--kind", "D", "--r", "2"], capsys)
    assert code == 0
    assert json.loads(out) == {"kind": "D", "r": 2, "maximal_cones": 2, "wonderful": False,
                               "chamber_lattice_index": 2}


def test_verify_all_three(capsys):
    code, out, _ = run(["verify", "all", "--n", "3"], capsys)
    assert code == 0
    lines = {l.split()[0]: l for l in out.splitlines()}
    assert "8 cones, smooth, tiling ok" in lines["fan"]
    assert "divisibility ok" in lines["blowup"]
    assert "exhaustive ok" in lines["limits"]
    assert all("PASS" in l for l in out.splitlines())


def test_failure_prints_witness(monkeypatch, capsys):
    monkeypatch.setattr(cli, "schur_rank_identity", lambda M, r, c: False)
    code, out, _ = run(["verify", "schur", "--samples", "3"], capsys)
    assert code == 1
    w = json.loads(out)
    assert w["check"] == "schur" and w["passed"] is False and "matrix" in w["witness"]


def test_verify_all_failure_exit_one(monkeypatch, capsys):
    monkeypatch.setattr(cli, "schur_rank_identity", lambda M, r, c: False)
    code, out, _ = run(["verify", "all", "--n", "2"], capsys)
    assert code == 1
    status = {l.split()[0]: l.split()[1] for l in out.splitlines() if l and not l.startswith(("{", " ", "}"))}
    assert status["schur"] == "FAIL" and status["fan"] == "PASS"


def test_output_is_deterministic(tmp_path, monkeypatch, capsys):
    outputs = []
    for threads in ("1", "1", "4"):
        monkeypatch.setenv("LOGFAN_THREADS", threads)
        path = tmp_path / f"run{len(outputs)}.json"
        code, out, _ = run(["verify", "all", "--n", "3", "--seed", "7", "--out", str(path)], capsys)
        assert code == 0
        outputs.append((out, path.read_bytes()))
    assert outputs[0] == outputs[1] == outputs[2]


def test_bad_thread_count(monkeypatch, capsys):
    monkeypatch.setenv("LOGFAN_THREADS", "many")
    code, _, _ = run(["verify", "all", "--n", "1"], capsys)
    assert code == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "logfan", "verify", "fan", "--n", "2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["maximal_cones"] == 4
