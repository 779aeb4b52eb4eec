"""Command-line interface: subcommands, exit codes, JSON payloads, files."""
import json

import pytest

from semicurve import cli

W = "5,8,11;7"
NEGATIVE_CONTROL = json.dumps(
    {"arity": 2, "gens": [[4, 0], [3, 1], [1, 3], [0, 4]]})


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_validate_accepts_and_rejects(capsys):
    code, out, _ = run(capsys, "validate", W)
    assert code == 0 and "valid" in out
    code, out, err = run(capsys, "validate", "4,6,8;5")
    assert code == 1
    assert "semigroup" in out + err


def test_validate_json(capsys):
    code, out, _ = run(capsys, "validate", "--json", W)
    assert code == 0
    data = json.loads(out)
    assert data["ok"] is True and data["instance"] == W


def test_params(capsys):
    code, out, _ = run(capsys, "params", "--json", W)
    assert code == 0
    data = json.loads(out)
    assert data["u"] == 3 and data["q_z"] == 0 and data["case"] == "CASE1"


def test_params_bad_instance_text(capsys):
    code, _, err = run(capsys, "params", "oops")
    assert code == 1 and "error:" in err


def test_gens(capsys):
    code, out, _ = run(capsys, "gens", "--json", W)
    assert code == 0
    data = json.loads(out)
    assert len(data["generators"]) == 6 and data["arity"] == 4
    assert [[0, 1, 1, 0], [1, 0, 0, 2]] in data["generators"]


def test_inideal(capsys):
    code, out, _ = run(capsys, "inideal", "--json", W)
    assert code == 0
    data = json.loads(out)
    assert data["closed_form_match"] is True
    assert [0, 2, 0, 0] in data["gens"]


def test_gb_verify(capsys):
    code, out, _ = run(capsys, "gb-verify", "--json", W)
    assert code == 0
    data = json.loads(out)
    assert data["passed"] is True and data["pairs_checked"] >= 1


def test_colon_guard_violated_instance(capsys):
    code, out, _ = run(capsys, "colon", W)
    assert code == 0
    assert "GUARD_VIOLATED_INFO" in out
    code, out, _ = run(capsys, "colon", "--json", "--selector", "xn", W)
    assert code == 0
    data = json.loads(out)
    assert data["guard"]["status"] == "GUARD_VIOLATED_INFO"
    assert len(data["comparisons"]) == 1
    assert data["comparisons"][0]["ideal_equal"] is True


def test_colon_guard_satisfied_instance(capsys):
    code, out, _ = run(capsys, "colon", "--json", "21,22,23,24;16")
    assert code == 0
    data = json.loads(out)
    assert data["guard"]["status"] == "GUARDED_MATCH_REQUIRED"
    assert all(c["match"] == "MATCH" for c in data["comparisons"])
    assert len(data["comparisons"]) == 4


def test_rr_on_instance_closed(capsys):
    code, out, _ = run(capsys, "rr", "--json", W)
    assert code == 0
    data = json.loads(out)
    assert data["verdict"] == "CLOSED_EVIDENCE" and data["depth"] == 4


def test_rr_negative_control_exit_3(capsys):
    code, out, _ = run(capsys, "rr", "--json", NEGATIVE_CONTROL)
    assert code == 3
    data = json.loads(out)
    assert data["verdict"] == "NOT_CLOSED"
    assert data["witness"] == [2, 2] and data["witness_depth"] == 1


def test_probe_negative_control_exit_3(capsys):
    code, out, _ = run(capsys, "probe", "--json", NEGATIVE_CONTROL)
    assert code == 3
    data = json.loads(out)
    assert data["verdict"] == "NOT_CLOSED"


def test_rr_ideal_from_file(tmp_path, capsys):
    path = tmp_path / "ideal.json"
    path.write_text(NEGATIVE_CONTROL)
    code, out, _ = run(capsys, "rr", str(path))
    assert code == 3
    assert "NOT_CLOSED" in out


def test_rr_depth_flag_and_env(capsys, monkeypatch):
    code, out, _ = run(capsys, "rr", "--json", "--depth", "2", W)
    assert json.loads(out)["depth"] == 2 and code == 0
    monkeypatch.setenv("SEMICURVE_RR_DEPTH", "3")
    code, out, _ = run(capsys, "rr", "--json", W)
    assert json.loads(out)["depth"] == 3 and code == 0
    monkeypatch.setenv("SEMICURVE_RR_DEPTH", "banana")
    code, _, err = run(capsys, "rr", W)
    assert code == 1 and "error:" in err
    monkeypatch.setenv("SEMICURVE_RR_DEPTH", "0")
    code, _, err = run(capsys, "rr", W)
    assert code == 1


def test_run_pipeline(capsys):
    code, out, _ = run(capsys, "run", "--json", W)
    assert code == 0
    data = json.loads(out)
    assert data["gb_passed"] is True
    assert data["verdict"] == "CLOSED_EVIDENCE"
    assert data["guard"]["status"] == "GUARD_VIOLATED_INFO"


def test_survey_small(capsys):
    code, out, _ = run(capsys, "survey", "--p", "1", "--max-mp", "6",
                       "--max-mn", "6", "--depth", "2", "--format", "text")
    assert code == 0
    assert "ok" in out


def test_survey_json_to_file(tmp_path, capsys):
    target = tmp_path / "survey.json"
    code, out, _ = run(capsys, "survey", "--p", "1", "--max-mp", "6",
                       "--max-mn", "6", "--depth", "2", "--format", "json",
                       "--out", str(target))
    assert code == 0
    data = json.loads(target.read_text())
    assert data["ok"] is True and data["depth"] == 2


def test_out_file_for_instance_command(tmp_path, capsys):
    target = tmp_path / "params.json"
    code, _, _ = run(capsys, "params", "--json", "--out", str(target), W)
    assert code == 0
    assert json.loads(target.read_text())["case"] == "CASE1"


def test_bad_ideal_json(capsys):
    code, _, err = run(capsys, "rr", '{"arity": 2, "gens": [[1]]}')
    assert code == 1 and "error:" in err


def test_unknown_subcommand(capsys):
    with pytest.raises(SystemExit):
        cli.main(["frobnicate"])
