import ordfactor
import pytest


def verdicts(report):
    return {c["condition"]: c["verdict"] for c in report["checks"]}


def test_div60_passes():
    r = ordfactor.check("div:60", "D1,B4,F1")
    assert r["summary"]["verdict"] == "pass"
    assert verdicts(r) == {"D1": "true", "B4": "true", "F1": "true"}


def test_hilbert_witness():
    r = ordfactor.check("hilbert:441", "D1")
    (c,) = r["checks"]
    assert c["verdict"] == "false"
    assert c["witness"] == "9"


def test_text_round_trip():
    text = ordfactor.instance_text("div:12")
    assert ordfactor.check_text(text, "D1,D6")["checks"] == ordfactor.check("div:12", "D1,D6")["checks"]


def test_decompose():
    assert sorted(ordfactor.decompose("div:360", "360")) == [("2", 3), ("3", 2), ("5", 1)]
    assert ordfactor.decompose("hilbert:441", "9") is None


def test_errors():
    with pytest.raises(ValueError):
        ordfactor.check("div:60", "nonsense")
    with pytest.raises(ordfactor.InputError):
        ordfactor.check_text("[instance]\nkind = nope\n")
    assert "D1" in ordfactor.conditions()
