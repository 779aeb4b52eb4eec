"""Corpus enumeration, guard pooling, comparisons, and emitters."""
import json

import pytest

from semicurve.curve import closed_form_table, initial_closed_form
from semicurve.errors import UserInputError
from semicurve.ideals import MonomialIdeal
from semicurve.semigroup import CurveInstance, derive
from semicurve.survey import (
    Bounds,
    COLON_SELECTORS,
    CSV_HEADER,
    Format,
    GuardStatus,
    MatchStatus,
    compare_selector,
    emit,
    enumerate_instances,
    evaluate_guards,
    run_instance,
    survey,
)

MINI_BOUNDS = Bounds((1, 2), 15, 15)
W_PARAMS_LINE = "u=3 v=3 w=2 z=2 lam=1 mu=2 q=1 r=1 q_z=0 r_z=2 eps=1 case=CASE1"


@pytest.fixture(scope="module")
def mini():
    return survey(MINI_BOUNDS, depth=2)


def test_mini_survey_green(mini):
    assert mini.ok
    assert len(mini.instances) == 578 and mini.rejects == 1732
    assert all(rep.gb_passed for rep in mini.instances)
    assert all(rep.in_ideal_match is MatchStatus.MATCH for rep in mini.instances)
    assert all(rep.rr_verdict.value == "CLOSED_EVIDENCE" for rep in mini.instances)
    assert not mini.failed_instances


def test_enumeration_is_lexicographic(mini):
    texts = [rep.instance.text() for rep in mini.instances]
    keys = [(len(rep.instance.arith), rep.instance.arith, rep.instance.extra)
            for rep in mini.instances]
    assert keys == sorted(keys)
    assert texts[0] == "3,4;5"
    assert "5,8,11;7" in texts


def test_enumerate_instances_pairs_with_rejects():
    instances, rejects = enumerate_instances(Bounds((1,), 2, 2))
    assert instances == [] and rejects == 2
    instances, rejects = enumerate_instances(Bounds((), 9, 9))
    assert instances == [] and rejects == 0


def test_empty_bounds_survey():
    report = survey(Bounds((), 5, 5), depth=2)
    assert report.ok and report.instances == () and report.rejects == 0


def test_guards_are_pooled_per_instance(mini):
    w = next(rep for rep in mini.instances if rep.instance.text() == "5,8,11;7")
    assert w.guard.status is GuardStatus.GUARD_VIOLATED_INFO
    assert len(w.guard.reasons) == 8
    kinds = sorted({r.split(":")[0] for r in w.guard.reasons})
    assert kinds == ["G1", "G3", "exponents"]
    # Every comparison carries the same pooled guard object.
    assert all(c.guard is w.guard for c in w.colon)
    assert all(c.match is MatchStatus.SKIPPED for c in w.colon)


def test_worked_instance_report(mini):
    w = next(rep for rep in mini.instances if rep.instance.text() == "5,8,11;7")
    assert not w.failed
    assert len(w.errata) == 3
    assert sorted(e.selector for e in w.errata) == [
        "COLON_X1_TO_P", "COLON_X1_TO_PM1", "SOCLE_RHO_CHI"]
    xn = next(c for c in w.colon if c.selector.value == "COLON_XN")
    assert xn.ideal_equal and xn.sets_equal


def test_required_witness_instance():
    rep = run_instance(CurveInstance.parse("21,22,23,24;16"), depth=2)
    assert rep.guard.status is GuardStatus.GUARDED_MATCH_REQUIRED
    assert rep.guard.reasons == ()
    assert all(c.match is MatchStatus.MATCH for c in rep.colon)
    assert all(c.ideal_equal and c.sets_equal for c in rep.colon)
    assert rep.errata == () and not rep.failed


def test_mismatch_when_guard_satisfied_and_engine_tampered():
    curve = CurveInstance.parse("21,22,23,24;16")
    dp = derive(curve)
    tables = [closed_form_table(dp, curve, s) for s in COLON_SELECTORS]
    guard = evaluate_guards(dp, tables)
    assert guard.status is GuardStatus.GUARDED_MATCH_REQUIRED
    real = initial_closed_form(dp, curve)
    bogus = MonomialIdeal(real.arity, [tuple(2 * e for e in g) for g in real.gens],
                          weights=real.weights)
    comparison = compare_selector(curve, bogus, tables[0], guard)
    assert comparison.match is MatchStatus.MISMATCH
    assert comparison.ideal_equal is False
    honest = compare_selector(curve, real, tables[0], guard)
    assert honest.match is MatchStatus.MATCH


def test_run_instance_rejects_invalid():
    with pytest.raises(UserInputError):
        run_instance(CurveInstance.parse("4,6,8;5"))


def test_errata_only_under_violated_guards(mini):
    for rep in mini.instances:
        for entry in rep.errata:
            assert rep.guard.status is GuardStatus.GUARD_VIOLATED_INFO
        deviating = [c for c in rep.colon
                     if c.ideal_equal is False and c.guard.status
                     is GuardStatus.GUARD_VIOLATED_INFO]
        assert len(deviating) == len(rep.errata)


def test_emit_json_deterministic_and_parses(mini):
    blob1 = emit(mini, Format.JSON)
    blob2 = emit(mini, Format.JSON)
    assert isinstance(blob1, bytes) and blob1 == blob2
    data = json.loads(blob1)
    assert data["ok"] is True
    assert data["totals"]["instances"] == 578
    w = next(i for i in data["instances"] if i["instance"] == "5,8,11;7")
    assert w["guard"]["status"] == "GUARD_VIOLATED_INFO"
    assert len(w["guard"]["reasons"]) == 8
    assert set(w["colon"]) == {s.value for s in COLON_SELECTORS}
    assert w["colon"]["COLON_XN"]["ideal_equal"] is True
    # Emitted JSON mirrors the dict form exactly.
    assert data == json.loads(json.dumps(mini.to_dict()))


def test_emit_csv_layout(mini):
    lines = emit(mini, Format.CSV).decode().splitlines()
    assert lines[0] == ",".join(CSV_HEADER)
    assert len(lines) == 1 + len(mini.instances)
    w_row = next(l for l in lines if l.startswith('"5,8,11;7"'))
    cells = w_row.split(",")[3:]
    assert cells[0] == "CASE1" or "CASE1" in w_row


def test_emit_text_content(mini):
    text = emit(mini, Format.TEXT).decode()
    assert W_PARAMS_LINE in text
    w_line = next(l for l in text.splitlines() if l.startswith("5,8,11;7 "))
    assert "verdict=CLOSED_EVIDENCE" in w_line
    assert "colon_xn=SKIPPED" in w_line
    errata_lines = [l for l in text.splitlines() if l.startswith("errata: 5,8,11;7")]
    assert len(errata_lines) == 3
    assert any("COLON_XN" in l for l in errata_lines) is False


def test_case_counts_and_stats(mini):
    counts = mini.case_counts
    assert counts["CASE1"] + counts.get("CASE2", 0) == len(mini.instances)
    stats = mini.colon_stats
    for selector in (s.value for s in COLON_SELECTORS):
        entry = stats[selector]
        assert entry["required"] == entry["required_matched"]
        assert entry["required"] + entry["skipped"] == len(mini.instances)
    reasons = mini.guard_reason_counts
    assert set(reasons) <= {"G1", "G2", "G3", "exponents"}
    assert reasons["G1"] > 0
