import json
from pathlib import Path

import pytest

import whakit

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def test_version():
    assert whakit.__version__ == "0.1.0"


def test_check_catalog_and_fixture():
    for reports in (whakit.check("sweedler"), whakit.check("face_2.json", FIXTURES)):
        assert reports
        assert all(r["passed"] for r in reports)


def test_face_bundle_matches_fixture():
    assert whakit.face_bundle(2) == (FIXTURES / "face_2.json").read_text()


def test_face_structure():
    rep = whakit.face_structure(3)
    assert rep["passed"]
    assert rep["info"]["dim_carrier"] == "9"


def test_cli_exit_codes(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    assert whakit.run("check", "face:2").code == 0
    assert whakit.run("frobnicate").code == 2
    bad = whakit.run("check", FIXTURES / "corrupted" / "sweedler_commutative.json")
    assert bad.code == 1
    assert "algebra.associativity" in bad.stdout
    doc = json.loads(whakit.run("report").stdout)
    assert doc["passed"] is False


def test_errors_are_raised():
    with pytest.raises(whakit.WhakitError):
        whakit.check("no_such_algebra")
    with pytest.raises(whakit.WhakitError):
        whakit.face_bundle(1)
