"""Colon-chain closedness evidence and the certified non-closed control."""
import pytest

from semicurve.curve import initial_closed_form
from semicurve.errors import InternalCheckError, UserInputError
from semicurve.ideals import MonomialIdeal
from semicurve.ratliff_rush import (
    PowerCache,
    Verdict,
    certify_witness,
    combined_report,
    primary_to_max,
    reduce_variables,
    rr_chain,
    scaled_in_power,
    socle_complement,
    socle_probe,
    variables_ideal,
)
from semicurve.semigroup import CurveInstance, derive

from oracles import product_gens, in_ideal

NEGATIVE_CONTROL = MonomialIdeal(2, [(4, 0), (3, 1), (1, 3), (0, 4)])


def _w_reduced():
    curve = CurveInstance.parse("5,8,11;7")
    ideal, dropped = reduce_variables(initial_closed_form(derive(curve), curve))
    assert dropped == (0,)
    return ideal


def test_negative_control_chain():
    rep = rr_chain(NEGATIVE_CONTROL, 3)
    assert rep.verdict is Verdict.NOT_CLOSED
    assert rep.witness == (2, 2) and rep.witness_depth == 1
    assert rep.chain_equal == (False, False, False)
    assert rep.stabilized_at == 1
    # J_1 strictly contains the ideal and the witness generates the gap.
    assert rep.chain[0] != NEGATIVE_CONTROL
    assert (2, 2) in rep.chain[0]


def test_negative_control_probe():
    rep = socle_probe(NEGATIVE_CONTROL, 3)
    assert rep.verdict is Verdict.NOT_CLOSED
    assert rep.witness == (2, 2) and rep.witness_depth == 1
    assert (2, 2) in rep.candidates
    row = rep.membership_table[rep.candidates.index((2, 2))]
    assert row == (True, True, True)


def test_negative_control_witness_by_exhaustive_divisibility():
    # Independent re-check: witness * gen lies in I^2 for every generator,
    # yet the witness itself is outside I.
    gens = list(NEGATIVE_CONTROL.gens)
    square = product_gens(gens, gens)
    assert not in_ideal((2, 2), gens)
    for g in gens:
        prod = tuple(a + b for a, b in zip((2, 2), g))
        assert in_ideal(prod, square)


def test_worked_instance_closed_evidence():
    ideal = _w_reduced()
    rep = rr_chain(ideal, 4)
    assert rep.verdict is Verdict.CLOSED_EVIDENCE
    assert rep.chain_equal == (True, True, True, True)
    assert rep.stabilized_at == 1
    assert all(J == ideal for J in rep.chain)
    probe = socle_probe(ideal, 4)
    assert probe.verdict is Verdict.CLOSED_EVIDENCE
    assert set(probe.candidates) == {(0, 0, 2), (0, 1, 0), (1, 0, 0)}
    assert all(not any(row) for row in probe.membership_table)
    assert not probe.degenerate


def test_reduce_variables():
    ideal = MonomialIdeal(4, [(0, 2, 0, 0), (0, 0, 1, 1)], weights=(5, 8, 11, 7))
    red, dropped = reduce_variables(ideal)
    assert dropped == (0,)
    assert red.arity == 3 and red.weights == (8, 11, 7)
    assert red.gens == ((0, 0, 2), (0, 1, 1)) or set(red.gens) == {(2, 0, 0), (0, 1, 1)}
    full = MonomialIdeal(2, [(1, 0), (0, 1)])
    same, none_dropped = reduce_variables(full)
    assert same == full and none_dropped == ()


def test_primary_to_max():
    assert primary_to_max(_w_reduced())
    # A pure power is missing for the first variable here.
    assert not primary_to_max(MonomialIdeal(2, [(1, 1), (0, 2)]))
    assert primary_to_max(MonomialIdeal(1, [(3,)]))


def test_socle_complement():
    assert set(socle_complement(_w_reduced())) == {(0, 0, 2), (0, 1, 0), (1, 0, 0)}
    with pytest.raises(UserInputError):
        socle_complement(MonomialIdeal(2, []))
    with pytest.raises(UserInputError):
        socle_complement(MonomialIdeal(2, [(0, 0)]))
    with pytest.raises(UserInputError):
        socle_complement(MonomialIdeal(2, [(1, 2)]))


def test_chain_input_validation():
    for bad in (MonomialIdeal(2, []), MonomialIdeal(2, [(0, 0)])):
        with pytest.raises(UserInputError):
            rr_chain(bad, 2)
        with pytest.raises(UserInputError):
            socle_probe(bad, 2)
    with pytest.raises(UserInputError):
        rr_chain(NEGATIVE_CONTROL, 0)


def test_certify_witness():
    powers = PowerCache(NEGATIVE_CONTROL)
    certify_witness(NEGATIVE_CONTROL, (2, 2), 1, powers)
    with pytest.raises(InternalCheckError):
        certify_witness(NEGATIVE_CONTROL, (4, 0), 1, powers)
    with pytest.raises(InternalCheckError):
        certify_witness(NEGATIVE_CONTROL, (1, 1), 1, powers)


def test_scaled_in_power():
    powers = PowerCache(NEGATIVE_CONTROL)
    assert scaled_in_power((2, 2), powers.get(1), powers.get(2))
    assert not scaled_in_power((1, 1), powers.get(1), powers.get(2))


def test_power_cache():
    powers = PowerCache(NEGATIVE_CONTROL)
    assert powers.get(0).is_unit
    assert powers.get(1) == NEGATIVE_CONTROL
    assert powers.get(3) == NEGATIVE_CONTROL.power(3)


def test_variables_ideal():
    assert variables_ideal(3).gens == ((0, 0, 1), (0, 1, 0), (1, 0, 0))


def test_combined_report_schema():
    rep = combined_report(NEGATIVE_CONTROL, 3)
    assert sorted(rep) == ["chain_equal", "depth", "membership_table",
                           "socle_candidates", "verdict", "witness",
                           "witness_depth"]
    assert rep["depth"] == 3 and rep["verdict"] == "NOT_CLOSED"
    assert rep["witness"] == [2, 2] and rep["witness_depth"] == 1

    closed = combined_report(_w_reduced(), 2)
    assert closed["verdict"] == "CLOSED_EVIDENCE"
    assert "witness" not in closed
    assert closed["chain_equal"] == [True, True]
