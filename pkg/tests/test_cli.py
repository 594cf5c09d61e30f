import json

import pytest

from reprlab.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_char_json(capsys):
    code, out, err = run(capsys, "char", "--lambda", "3,2", "--rho", "2,1,1,1")
    assert code == 0
    data = json.loads(out)
    assert data["character"] == 1 and data["dimension"] == 5
    assert "seed=0" in err


def test_seed_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("REPR_LAB_SEED", "17")
    code, out, err = run(capsys, "sample", "plancherel", "--n", "12")
    assert code == 0 and "seed=17" in err
    assert json.loads(out)["seed"] == 17
    code2, out2, _ = run(capsys, "sample", "plancherel", "--n", "12", "--seed", "17")
    assert json.loads(out2)["partition"] == json.loads(out)["partition"]


def test_csv_and_out_file(capsys, tmp_path):
    target = tmp_path / "p.csv"
    code, _, _ = run(capsys, "p-sharp", "--lambda", "3,2", "--rho", "2", "--format", "csv", "--out", str(target))
    assert code == 0
    lines = target.read_text().splitlines()
    assert lines[0].startswith("lambda,rho,value")


def test_bad_input_exit_code(capsys):
    code, _, err = run(capsys, "char", "--lambda", "3,x")
    assert code == 2 and "error" in err


def test_missing_required_argument_exits_two():
    with pytest.raises(SystemExit) as exc:
        main(["char"])
    assert exc.value.code == 2


def test_sample_file_feeds_other_commands(capsys, tmp_path):
    code, out, _ = run(capsys, "sample", "plancherel", "--n", "9", "--seed", "4")
    f = tmp_path / "lam.json"
    f.write_text(out)
    code, out, _ = run(capsys, "char", "--lambda", str(f), "--rho", "2")
    assert code == 0 and json.loads(out)["lambda"] == json.loads(f.read_text())["partition"]


def test_supercharacter_commands(capsys):
    code, out, _ = run(capsys, "supercharacter", "measure", "--pi", "1,5,7|2|3,4,9|6,8")
    data = json.loads(out)
    assert code == 0 and data["mass"] == "5/9" and data["dim"] == 14
    code, out, _ = run(capsys, "supercharacter", "induce", "--pi", "1,3|2")
    assert code == 0 and "1,4|2,3" in out
    code, out, _ = run(capsys, "supercharacter", "value", "--pi", "1,3|2", "--sigma", "1,3|2", "--q", "3")
    assert code == 0 and json.loads(out)["value"] == -3


def test_stanley_and_spin(capsys):
    code, out, _ = run(capsys, "stanley", "positivity", "--k", "5", "--m", "2")
    assert code == 0
    code, out, _ = run(capsys, "spin-char", "--lambda", "3,2,1", "--k", "3")
    data = json.loads(out)
    assert code == 0 and data["explicit"] == data["series"] == -60


def test_report_exit_codes(capsys):
    code, out, _ = run(capsys, "report", "limit-shape", "--kind", "setpartition", "--n", "60", "--trials", "3")
    assert code == 0 and json.loads(out)["passed"]


def test_plot_is_deterministic(tmp_path, capsys):
    a, b = tmp_path / "a.svg", tmp_path / "b.svg"
    assert main(["plot", "shape", "--n", "200", "--seed", "2", "--out", str(a)]) == 0
    assert main(["plot", "shape", "--n", "200", "--seed", "2", "--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    assert a.read_text().lstrip().startswith("<?xml")
