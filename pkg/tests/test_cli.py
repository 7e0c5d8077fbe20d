import json

from addcycles.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_regulator(capsys):
    assert run(capsys, "regulator", "Gamma3") == (0, "7/24\n", "")


def test_boundary(capsys):
    code, out, _ = run(capsys, "boundary", "GammaBar1")
    assert code == 0 and out.strip() == "+1·(1, 2)"
    code, out, _ = run(capsys, "boundary", "--json", "GammaBar1")
    assert json.loads(out)["boundary"] == [{"coeff": 1, "x": {"q": "1", "c": "1"}, "b": "2"}]


def test_tensor(capsys):
    code, out, _ = run(capsys, "tensor", "--json", "C2(2;3,5)")
    assert code == 0 and json.loads(out) in ({}, [])


def test_admissible(capsys):
    assert run(capsys, "admissible", "Gamma2")[0] == 0
    code, out, _ = run(capsys, "admissible", "curve(t, 1+t, 5)")
    assert code == 1 and "not admissible" in out


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--check", "V10", "--samples", "5", "--seed", "7", "--json", "--repaired")
    assert code == 0 and json.loads(out)[0]["status"] == "pass"
    code, out, _ = run(capsys, "verify", "--check", "V10", "--samples", "2", "--seed", "7")
    assert code == 1 and out.startswith("V10  fail")


def test_errors(capsys):
    code, _, err = run(capsys, "regulator", "Q(1.5)")
    assert code == 2 and "^" in err
    code, _, err = run(capsys, "regulator", "Qtilde(1/2)")
    assert code == 2 and err.startswith("error:")


def test_catalog(capsys):
    code, out, _ = run(capsys, "catalog", "--json")
    assert code == 0 and {r["name"] for r in json.loads(out)} >= {"Gamma3", "D"}
