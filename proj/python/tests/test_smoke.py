import json
import pathlib

import pytest

import jumploci

CORPUS = pathlib.Path(__file__).resolve().parents[2] / "corpus"


def load(name):
    return json.loads((CORPUS / f"{name}.json").read_text())


def test_four_line_locus():
    report = jumploci.invariants(load("fourlines"))
    assert report["invariants"]["locus"]["components"] == ["{t1*t2*t3 = 1, t4 = 1}"]
    assert report["seed"] == jumploci.DEFAULT_SEED


def test_check_matches_fixture():
    report = jumploci.check(load("braid"))
    assert [v["status"] for v in report["verdicts"]] == ["holds"] * 6
    fixture = json.loads((CORPUS / "braid.expected.json").read_text())
    assert fixture["verdicts"] == report["verdicts"]


def test_theorem_alias():
    report = jumploci.check(load("pencil3"), theorems=["cor5.4"])
    assert [v["status"] for v in report["verdicts"]] == ["not_applicable"]
    assert jumploci.resolve_theorem("prop5.2") == "cone_containment"
    with pytest.raises(ValueError):
        jumploci.check(load("pencil3"), theorems=["nope"])


def test_presentation_helpers():
    status, comps = jumploci.support_locus(3, [1, 2, 3], ["abcaCBAA", "abcbCBAB"])
    assert status == "exact" and comps == ["{t1*t2*t3 = 1}"]
    assert jumploci.twisted_rank(2, [1, 2], ["abAB"], ["0", "0"]) == 2
    assert jumploci.twisted_rank(3, [1, 2, 3], ["abcaCBAA", "abcbCBAB"], ["1/3", "1/3", "1/3"]) == 1


def test_euler_and_errors():
    assert jumploci.euler_characteristic(2, [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"], ["1", "1", "1"]]) == "1"
    with pytest.raises(jumploci.InputError, match="non-reduced divisor"):
        jumploci.invariants({"kind": "arrangement", "ambient_dim": 2, "hyperplanes": [[1, 0, 0], [2, 0, 0]]})
