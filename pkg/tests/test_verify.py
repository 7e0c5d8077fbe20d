import json
from fractions import Fraction as F

import pytest

from addcycles import cycles, verify


def test_deterministic():
    a = [v.to_json() for v in verify.run(["V1", "V7"], samples=5, seed=4)]
    b = [v.to_json() for v in verify.run(["V7", "V1"], samples=5, seed=4)]
    assert a == b


def test_v6_repaired():
    (v,) = verify.run(["V6"], repaired=True)
    assert v.status == "pass"
    got = {w.claim: w.computed for w in v.witnesses}
    assert got["∂Γ3 = 0"] == "0" and got["R2(Γ3) = 7/24"] == "7/24"


def test_v9_witness():
    (v,) = verify.run(["V9"], samples=20, seed=7, repaired=True)
    w = next(w for w in v.witnesses if w.input == "a=1/3" and w.claim == "R2(C_a) = a(1-a)")
    assert w.ok and w.computed == "2/9"
    # the printed scale gives 23/18 instead
    (v,) = verify.run(["V9"], samples=20, seed=7)
    w = next(w for w in v.witnesses if w.input == "a=1/3" and w.claim == "R2(C_a) = a(1-a)")
    assert not w.ok and w.computed == "23/18"


def test_mutation_caught(monkeypatch):
    real = cycles.make_C2
    monkeypatch.setattr(cycles, "make_C2", lambda a, b1, b2: -real(a, b1, b2))
    (v,) = verify.run(["V1"], samples=50, seed=1)
    assert v.status == "fail"
    assert any(not w.ok and w.input for w in v.witnesses)


def test_json_shape():
    (v,) = verify.run(["V10"], samples=3, seed=7)
    d = json.loads(json.dumps(v.to_json()))
    assert {"id", "status", "description", "paper_anchor", "witnesses", "notes"} <= set(d)
    assert any("assumption" in n for n in d["notes"])


def test_unknown_id():
    with pytest.raises(KeyError):
        verify.run(["V99"])


@pytest.mark.parametrize("edition, red", [(False, {"V5", "V6", "V7", "V8", "V9", "V10"}), (True, {"V7", "V9"})])
def test_statuses(edition, red):
    got = {v.id: v.status for v in verify.run(samples=2, seed=0, repaired=edition)}
    assert {k for k, s in got.items() if s != "pass"} == red
    assert "error" not in got.values()
