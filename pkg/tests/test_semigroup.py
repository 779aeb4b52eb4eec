"""Sequence validation, semigroup membership, and derived parameters."""
import json

import pytest

from semicurve.semigroup import (
    Case,
    CurveInstance,
    derive,
    in_S,
    member,
    t_decompose,
    validate,
)

from oracles import members_upto, sequence_params

W_TEXT = "5,8,11;7"
W_PARAMS = {"u": 3, "v": 3, "w": 2, "z": 2, "lam": 1, "mu": 2,
            "q": 1, "r": 1, "q_z": 0, "r_z": 2, "eps": 1, "case": "CASE1"}


def test_instance_parsing_and_roundtrip():
    w = CurveInstance.parse(W_TEXT)
    assert w.arith == (5, 8, 11) and w.extra == 7
    assert w.p == 2 and w.n == 3 and w.arity == 4
    assert w.weights == (5, 8, 11, 7)
    assert w.text() == W_TEXT
    assert CurveInstance.from_json(w.to_json()) == w
    with pytest.raises(ValueError):
        CurveInstance.parse("5,8,11")
    with pytest.raises(ValueError):
        CurveInstance.parse("5,8;11;7")


def test_validation_rejections():
    # Not an arithmetic progression.
    assert not validate((4, 6, 9), 5).ok
    # gcd > 1 over all generators.
    report = validate((4, 6, 8), 2)
    assert not report.ok and report.first
    # Extra generator redundant in the semigroup of the others.
    assert not validate((4, 6, 8), 10).ok
    # Non-increasing arithmetic part.
    assert not validate((8, 6, 4), 5).ok
    # Nonpositive entries.
    assert not validate((0, 3, 6), 5).ok
    assert validate((5, 8, 11), 7).ok


def test_membership_against_brute_force():
    for gens in [(5, 8, 11, 7), (3, 7), (4, 6, 9), (6, 7, 8, 9)]:
        limit = 120
        table = members_upto(gens, limit)
        for x in range(limit + 1):
            assert member(gens, x) == (x in table), (gens, x)
    assert member((5, 8), 0) and not member((5, 8), -3)


def test_ladder_decomposition():
    arith = (5, 8, 11)  # p = 2
    assert t_decompose(0, arith) == (-1, 2, 0)
    assert t_decompose(1, arith) == (0, 1, 8)
    assert t_decompose(2, arith) == (0, 2, 11)
    assert t_decompose(3, arith) == (1, 1, 19)
    with pytest.raises(ValueError):
        t_decompose(-1, arith)


def test_worked_instance_params_exact():
    w = CurveInstance.parse(W_TEXT)
    assert derive(w).to_dict() == W_PARAMS


def test_derived_params_match_independent_oracle():
    for text in ("5,8,11;7", "4,7,10;13", "5,7,9;8", "7,8,9;11", "6,7,8;9",
                 "21,22,23,24;16"):
        curve = CurveInstance.parse(text)
        got = derive(curve).to_dict()
        want = sequence_params(curve.arith, curve.extra)
        assert len(want["w_lam_solutions"]) == 1, text
        assert len(want["z_mu_solutions"]) == 1, text
        for key in ("u", "v", "w", "z", "lam", "mu", "q", "r", "q_z", "r_z", "eps"):
            assert got[key] == want[key], (text, key)


def test_case_split():
    assert derive(CurveInstance.parse("5,8,11;7")).case is Case.CASE1
    # eps = 0 and q_z = 0 together flip the case.
    dp = derive(CurveInstance.parse("7,8,9;11"))
    assert dp.eps == 0 and dp.q_z == 0 and dp.case is Case.CASE2


def test_in_S_definition():
    w = CurveInstance.parse(W_TEXT)
    gens = w.weights
    limit = 100
    gamma = members_upto(gens, limit)
    for gamma_val in range(limit - gens[0]):
        expected = gamma_val in gamma and (gamma_val - gens[0]) not in gamma
        assert in_S(w, gamma_val) == expected


def test_instance_json_shape():
    w = CurveInstance.parse(W_TEXT)
    payload = json.loads(w.to_json())
    assert payload == {"arith": [5, 8, 11], "extra": 7}
