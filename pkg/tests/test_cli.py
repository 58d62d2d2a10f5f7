import json
import subprocess
import sys

import pytest

from symdehn.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_verdict_exit_codes(capsys):
    assert run(capsys, "verdict", "4", "--h2", "1/2")[0] == 0
    code, out, _ = run(capsys, "verdict", "4", "--v", "1/3")
    assert code == 1 and "pi_not_root_of_unity" in out
    code, _, err = run(capsys, "verdict", "6", "--v", "1/2")
    assert code == 2 and "flat" in err


@pytest.mark.parametrize(
    "argv",
    [
        ("verdict", "5", "--h2", "1"),
        ("verdict", "4", "--h2", "1/0"),
        ("verdict", "4"),
        ("verdict", "4", "--h2", "1", "--v", "1/3"),
        ("solve-norm", "--b-max", "1"),
        ("families", "--s-max", "0", "--d-max", "0"),
        ("frobnicate",),
    ],
)
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_solve_norm(capsys):
    code, out, _ = run(capsys, "--json", "solve-norm", "--b-max", "10", "--mode", "both")
    doc = json.loads(out)
    assert code == 0 and doc["payload"]["count"] == 4 and doc["payload"]["agreement"] is True
    code, out, _ = run(capsys, "solve-norm", "--b-max", "2")
    assert out.strip().startswith("(a,b)=(1,2)") and len(out.strip().splitlines()) == 1


def test_families(capsys):
    code, out, _ = run(capsys, "families", "--s-max", "3", "--d-max", "3")
    assert code == 0 and "(1,5)" in out and "(1,7)" in out
    code, out, _ = run(capsys, "families", "--s-max", "1", "--d-max", "1", "--json")
    certs = json.loads(out)["payload"]["certificates"]
    assert [(c["member"]["a"], c["member"]["b"]) for c in certs] == [(1, 5)]


def test_complexity(capsys):
    code, out, _ = run(capsys, "complexity", "4", "--h2", "4", "--ratio", "2")
    assert code == 0 and "complexity in [2, 2]" in out


def test_crystal(capsys):
    code, out, _ = run(capsys, "crystal")
    assert code == 0 and "W^60 = 1: False" in out


def test_verify_paper_small_bounds(capsys):
    code, out, _ = run(capsys, "verify-paper", "--q-max", "24", "--height-bound", "8", "--b-max", "16")
    assert code == 0 and out.strip().endswith("checks passed")
    assert "FAIL" not in out


def test_json_is_byte_stable(capsys):
    first = run(capsys, "--json", "verdict", "4", "--v", "1/3", "--verbose")[1]
    second = run(capsys, "verdict", "4", "--v", "1/3", "--verbose", "--json")[1]
    assert first == second


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "symdehn", "verdict", "4", "--h2", "1/2"], capture_output=True, text=True)
    assert proc.returncode == 0 and "trivial" in proc.stdout
