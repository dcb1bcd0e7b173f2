import json

import pytest
from hypothesis import given, strategies as st

from trigmono.report import (
    Check,
    Report,
    presentation_from_json,
    presentation_from_text,
    presentation_to_gap,
    presentation_to_json,
    presentation_to_text,
)
from trigmono.words import trigonal_presentation, weierstrass_presentation

statuses = st.sampled_from(["pass", "fail", "info"])
names = st.text("abcdefgh _-", min_size=1, max_size=12).filter(lambda s: s.strip() == s)


@given(st.lists(st.tuples(names, statuses, names), max_size=8))
def test_report_summary_and_json_roundtrip(items):
    r = Report("verify", {"g": 4})
    for name, status, details in items:
        r.checks.append(Check(name, status, details))
    assert (r.summary == "fail") == any(s == "fail" for _, s, _ in items)
    back = Report.from_json(r.to_json())
    assert back.to_dict() == r.to_dict()


def test_report_json_schema():
    r = Report("lattice", {"g": 1})
    r.add("radical", True, "dim 2")
    r.info("eps", "-1")
    d = json.loads(r.to_json())
    assert list(d) == ["command", "parameters", "checks", "summary"]
    assert d["checks"][0] == {"name": "radical", "status": "pass", "details": "dim 2"}
    assert d["summary"] == "pass"


def test_report_text_layout():
    r = Report("order", {"g": 1})
    r.add("match", False, "6 != 2")
    assert r.to_text().splitlines() == [
        "command: order", "parameters: g=1", "[fail] match: 6 != 2", "summary: fail"]


def test_bad_status_and_inconsistent_summary():
    with pytest.raises(ValueError):
        Check("x", "maybe")
    d = Report("x").to_dict()
    d["summary"] = "fail"
    with pytest.raises(ValueError):
        Report.from_dict(d)


@pytest.mark.parametrize("p", [trigonal_presentation(4), weierstrass_presentation(2)])
def test_presentation_roundtrips(p):
    assert presentation_from_text(presentation_to_text(p), p.prefix) == p
    assert presentation_from_json(presentation_to_json(p)) == p


def test_text_format_header():
    lines = presentation_to_text(trigonal_presentation(4)).splitlines()
    assert lines[0] == "gens: 10"
    assert lines[1] == "braid_1_2: t1*t2*t1*t2^-1*t1^-1*t2^-1"


def test_gap_format():
    text = presentation_to_gap(weierstrass_presentation(1))
    assert text.startswith("F := FreeGroup(4);;")
    assert "T4 := F.4;;" in text
    assert text.rstrip().endswith("G := F / rels;;")
