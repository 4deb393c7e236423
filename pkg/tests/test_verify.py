import json

import pytest

from sproutlab.verify import (
    MATCH,
    MISMATCH,
    UNCHECKED,
    allowlist_document,
    classify,
    load_allowlist,
    render_reports,
    verify_family,
)
from importlib import resources


def _verdicts(reports):
    return {(r.quantity, r.params): r.verdict for r in reports}


def test_small_paths():
    v = _verdicts(verify_family("path", 2, 4))
    assert v[("max", (3,))] == MATCH
    assert v[("max", (4,))] == MISMATCH
    assert v[("min", (3,))] == v[("min", (4,))] == MATCH


def test_small_cycles():
    v = _verdicts(verify_family("cycle", 3, 4))
    assert v[("max", (3,))] == MATCH and v[("max", (4,))] == MISMATCH
    assert v[("min", (4,))] == MATCH


def test_bipartite_2_2():
    v = _verdicts(verify_family("bipartite", 2, 2))
    assert v[("min", (2, 2))] == MISMATCH
    assert v[("min_labeling", (2, 2))] == MATCH


def test_star_centers_match():
    reports = verify_family("star", 1, 6)
    assert all(r.verdict == MATCH for r in reports)


def test_unchecked_above_cap():
    reports = verify_family("path", 12, 12)
    assert {r.verdict for r in reports} == {UNCHECKED}
    assert all(r.oracle_value is None for r in reports)


def test_report_fields():
    r = verify_family("path", 4, 4)[1]
    d = r.to_dict()
    assert d["formula"] == 5 and d["oracle"] == 7 and d["verdict"] == MISMATCH
    assert d["paper_ref"]


def test_renderers():
    reports = verify_family("path", 3, 4)
    assert "<-- MISMATCH" in render_reports(reports, "text")
    assert len(json.loads(render_reports(reports, "json"))) == 4
    assert render_reports(reports, "csv").splitlines()[0].startswith("family,params")
    with pytest.raises(ValueError):
        render_reports(reports, "xml")


def test_unknown_family():
    with pytest.raises(ValueError):
        verify_family("petersen", 1, 3)


def test_classify():
    reports = verify_family("path", 3, 4)
    allow = {("path", "max", (4,)), ("path", "min", (3,))}
    split = classify(reports, allow)
    assert [r.params for r in split["expected"]] == [(4,)]
    assert split["unexpected"] == []
    assert [r.key() for r in split["stale"]] == [("path", "min", (3,))]
    assert classify(reports, set())["unexpected"][0].params == (4,)


def test_allowlist_round_trip(tmp_path):
    reports = verify_family("cycle", 3, 6)
    f = tmp_path / "allow.json"
    f.write_text(json.dumps(allowlist_document(reports)))
    assert load_allowlist(str(f)) == {r.key() for r in reports if r.verdict == MISMATCH}


@pytest.mark.slow
def test_bundled_allowlist_is_exact():
    """Regression lock: recomputing the bundled ranges reproduces the allowlist exactly."""
    doc = json.loads(resources.files("sproutlab").joinpath("data/expected_mismatches.json").read_text())
    reports = []
    for family, (a, b) in doc["ranges"].items():
        reports += verify_family(family, a, b, jobs=4)
    split = classify(reports, load_allowlist())
    assert split["unexpected"] == [], [r.to_dict() for r in split["unexpected"]]
    assert split["stale"] == [], [r.to_dict() for r in split["stale"]]
    assert {r.key() for r in split["expected"]} == load_allowlist()
