import json
import subprocess
import sys

import pytest

from qhodge.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_normal_form(capsys):
    assert run(capsys, "normal-form", "c*a")[1].strip() == "q^-1 * a*c"
    assert run(capsys, "normal-form", "as*a + cs*c")[1].strip() == "1"


def test_json_output(capsys):
    code, out, _ = run(capsys, "--format", "json", "haar", "c*cs")
    assert code == 0
    data = json.loads(out)
    assert data["den"]


def test_act_and_d(capsys):
    assert run(capsys, "act", "c", "--vector", "E", "--side", "right")[1].strip() == "a"
    assert run(capsys, "act", "a", "--vector", "Xz")[1].strip() == "a"
    assert "wz" in run(capsys, "d", "a")[1]
    assert run(capsys, "d", "theta")[1].strip() == "0"


def test_wedge_and_sigma(capsys):
    assert run(capsys, "wedge", "wp", "wm")[1].strip() == "(-q^2) * wm^wp"
    code, out, _ = run(capsys, "sigma")
    assert code == 0 and len(out.strip().splitlines()) == 9
    code, out, _ = run(capsys, "antisym", "--k", "3")
    assert "rank = 1" in out


def test_hodge(capsys):
    code, out, _ = run(capsys, "hodge", "--alpha", "1", "--beta", "q^6", "--gamma", "1", "--q", "1/2")
    assert code == 0
    assert "symmetric = true" in out and "sgn = -1" in out and "m_squared = 280" in out
    code, out, _ = run(capsys, "hodge")
    assert "matches closed form = true" in out
    code, out, _ = run(capsys, "hodge", "--sigma-inverse")
    assert "braiding: sigma_inv" in out


def test_sphere_and_laplacian(capsys):
    code, out, _ = run(capsys, "sphere-hodge", "--alpha", "1", "--q", "1/2")
    assert code == 0 and "neither" in out
    code, out, _ = run(capsys, "--format", "json", "laplacian", "--q", "1/2", "--alpha", "1",
                       "--gamma", "1", "--degree", "3", "--charge", "0")
    data = json.loads(out)
    assert data["path"] == "sturm" and data["signs"]["negative"] == 0


def test_grade_and_haar_solve(capsys):
    out = run(capsys, "grade", "a + cs + c*cs")[1]
    assert "L_-1: a" in out and "L_0: c*cs" in out
    out = run(capsys, "haar", "--solve", "2")[1]
    assert "h(c*cs) = 1/(1 + q^2)" in out


@pytest.mark.parametrize("argv", [["normal-form", "wm ^ E"], ["normal-form", "a +"],
                                  ["hodge", "--alpha", "0"], ["haar"],
                                  ["laplacian", "--q", "0.5", "--alpha", "1", "--gamma", "1", "--degree", "1"]])
def test_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err.startswith("qhodge: error")


def test_verify_exit_code(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "hopf")
    assert code == 0 and "0 failed" in out


def test_console_script_entry():
    res = subprocess.run([sys.executable, "-m", "qhodge", "normal-form", "c*a"], capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.strip() == "q^-1 * a*c"
