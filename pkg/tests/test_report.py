import runpy
from fractions import Fraction
from pathlib import Path

import pytest
import yaml

from hpseudo.report import make_report, plain, render, section, summary_lines

DEMOS = Path(__file__).resolve().parent.parent / "demos"


def test_plain_converts_to_builtins():
    x = {(1, 2): [Fraction(1, 3), (4, None)], "s": {2, 1}, "b": True}
    assert plain(x) == {"(1, 2)": ["1/3", [4, None]], "s": [1, 2], "b": True}


def test_section_detail_only_on_failure():
    s = section("demo", [("a", True, "ignored"), ("b", False, "why"), ("c", 0)])
    assert not s["ok"]
    assert s["checks"] == [{"check": "a", "ok": True}, {"check": "b", "ok": False, "detail": "why"},
                           {"check": "c", "ok": False}]


def test_report_verdict_and_round_trip():
    good = section("g", [("x", True)], {"v": Fraction(-2, 5)})
    bad = section("b", [("y", False, "broken")])
    assert make_report("c", {}, [good])["verdict"] == "PASS"
    r = make_report("c", {"cap": 3}, [good, bad])
    assert r["verdict"] == "FAIL"
    assert yaml.safe_load(render(r)) == r
    assert render(r) == render(make_report("c", {"cap": 3}, [good, bad]))
    assert summary_lines(r) == ["PASS g", "FAIL b", "       failed: y (broken)"]


@pytest.mark.parametrize("name", ["singular_vectors.py", "split_complex.py"])
def test_demo_runs(name, capsys):
    runpy.run_path(str(DEMOS / name), run_name="__main__")
    out = capsys.readouterr().out
    assert "True" in out or "verdict: PASS" in out
    assert "False" not in out and "FAIL" not in out
