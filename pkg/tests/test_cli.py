import json

import numpy as np
import pytest

from inconc.cli import main
from inconc.states import dump_state, from_eigenvalues


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def half_state(tmp_path):
    path = tmp_path / "half.json"
    dump_state(from_eigenvalues([0.5, 0.5, 0]), path)
    return str(path)


@pytest.fixture
def qubit_state(tmp_path):
    path = tmp_path / "qubit.json"
    dump_state(from_eigenvalues([0.7, 0.3]), path, diagonal=True)
    return str(path)


def test_measure(capsys, half_state):
    code, out, _ = run(capsys, "measure", half_state)
    assert code == 0
    data = json.loads(out)
    assert data["P"] == pytest.approx(np.log2(1.5))
    assert data["bound"] is False
    code, out, _ = run(capsys, "measure", half_state, "--pretty")
    assert code == 0 and out.startswith("dim")


def test_concentrate(capsys, half_state, qubit_state):
    code, out, _ = run(capsys, "concentrate", half_state, "--json")
    data = json.loads(out)
    assert code == 0
    assert data["achieved_gain"] == pytest.approx(np.log2(1.5), abs=1e-11)
    assert len(data["unitary"]) == 9
    code, out, _ = run(capsys, "concentrate", half_state, "--unitary", "simple")
    assert json.loads(out)["achieved_gain"] == pytest.approx(np.log2(1.5), abs=1e-11)
    code, _, err = run(capsys, "concentrate", qubit_state, "--unitary", "simple")
    assert code == 4 and "d >= 3" in err


def test_invalid_and_malformed_input(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"dim": 2, "matrix": [[{"re": 0.5, "im": 0}, {"re": 0.9, "im": 0}], [{"re": 0.9, "im": 0}, {"re": 0.5, "im": 0}]]}))
    code, _, err = run(capsys, "measure", str(bad))
    assert code == 3
    report = json.loads(err)
    assert report["invariant"] == "psd"
    junk = tmp_path / "junk.json"
    junk.write_text("{not json")
    assert run(capsys, "measure", str(junk))[0] == 2
    assert run(capsys, "measure", str(tmp_path / "missing.json"))[0] == 2


def test_tolerance_flag(capsys, tmp_path):
    noisy = tmp_path / "noisy.json"
    noisy.write_text(json.dumps({"dim": 2, "eigenvalues": [0.6, 0.4 + 1e-7]}))
    assert run(capsys, "measure", str(noisy))[0] == 3
    assert run(capsys, "measure", str(noisy), "--tolerance", "1e-6")[0] == 0


def test_sweep(capsys, tmp_path):
    out = tmp_path / "s.csv"
    code, stdout, _ = run(capsys, "sweep-qutrit", "--step", "0.1", "--out", str(out), "--panel", "b")
    assert code == 0
    assert json.loads(stdout)["rows"] == len(out.read_text().splitlines()) - 1
    code, _, _ = run(capsys, "sweep-qutrit", "--step", "0.1", "--out", str(tmp_path / "no" / "s.csv"))
    assert code == 5
    assert run(capsys, "sweep-qutrit", "--step", "0.3", "--out", str(out))[0] == 2


def test_mpemba(capsys):
    code, out, _ = run(capsys, "mpemba")
    assert code == 0 and json.loads(out)["inversion"] is True
    code, out, _ = run(capsys, "mpemba", "--scan", "0.01")
    data = json.loads(out)
    assert data["contains_p_plus"] is True
    assert run(capsys, "mpemba", "--p1", "0.2")[0] == 2


def test_activate(capsys, qubit_state):
    code, out, _ = run(capsys, "activate", qubit_state)
    data = json.loads(out)
    assert code == 0
    assert data["simulated_gain"] == pytest.approx(-np.log2(0.7), abs=1e-9)
    assert run(capsys, "activate", qubit_state, "--p", "2")[0] == 2


def test_randomness(capsys, half_state, qubit_state):
    code, out, _ = run(capsys, "randomness", half_state)
    data = json.loads(out)
    assert code == 0 and data["construction"] is True
    assert (data["i_star"], data["j_star"], data["k_star"]) == (1, 0, 2)
    code, out, _ = run(capsys, "randomness", qubit_state)
    assert code == 0 and json.loads(out)["construction"] is False


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--dims", "2,3", "--trials", "10")
    assert code == 0 and json.loads(out)["passed"] is True
    code, out, err = run(capsys, "verify", "--dims", "3", "--trials", "5", "--inject-fault", "ky_fan")
    assert code == 1
    assert "FAIL ky_fan_oracle[d=3]" in err
    assert run(capsys, "verify", "--dims", "9")[0] == 2
    assert run(capsys, "verify", "--dims", "x")[0] == 2


def test_bad_arguments_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["concentrate"])
    assert exc.value.code == 2
