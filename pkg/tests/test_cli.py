"""Command-line behavior: rendering, JSON mode, exit-code contract."""

from __future__ import annotations

import json

from tgw.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out


def test_check_pass(capsys):
    code, out = run(capsys, "check", "B2")
    assert code == 0
    assert "all axioms hold" in out


def test_check_z3_finding(capsys):
    code, out = run(capsys, "check", "Z3")
    assert code == 1
    assert "violation" in out


def test_check_z3_lenient_warns(capsys):
    code, out = run(capsys, "check", "Z3", "--lenient")
    assert code == 0
    assert "warning" in out


def test_check_json_round_trips(capsys):
    code, out = run(capsys, "check", "Z3", "--lenient", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["command"] == "check"
    assert payload["result"][0]["passed"] is False
    assert json.loads(json.dumps(payload)) == payload


def test_ideals_and_spec(capsys):
    code, out = run(capsys, "ideals", "B2xB2")
    assert code == 0 and "4 ideal(s)" in out
    code, out = run(capsys, "spec", "B2xB2")
    assert code == 0 and "2 prime point(s)" in out and "holds" in out


def test_simples_density_radical(capsys):
    code, out = run(capsys, "simples", "B2")
    assert code == 0 and "1 simple" in out
    code, out = run(capsys, "density", "B2")
    assert code == 0 and "density Yes" in out
    code, out = run(capsys, "radical", "B2")
    assert code == 0 and "J(B2) = {0}" in out


def test_density_z3_with_anchor(capsys):
    code, out = run(capsys, "density", "Z3", "--lenient", "--anchor", "0")
    assert code == 0 and "density Yes" in out


def test_ext_tor_adjunction(capsys):
    code, out = run(capsys, "ext", "B2")
    assert code == 0 and "trivial" in out
    code, out = run(capsys, "tor", "B2")
    assert code == 0 and "trivial" in out
    code, out = run(capsys, "adjunction", "B2")
    assert code == 0 and "bijection: Yes" in out


def test_localize_gelfand(capsys):
    code, out = run(capsys, "localize", "B2xB2")
    assert code == 0 and "well-defined: True" in out
    code, out = run(capsys, "gelfand", "B2xB2")
    assert code == 0 and "injective: True" in out


def test_modules_command(capsys):
    code, out = run(capsys, "modules", "B2")
    assert code == 0
    assert "B2-regular over B2: passes" in out
    assert "B2-T2 over B2: passes" in out


def test_embed_stdout_and_file(capsys, tmp_path):
    code, out = run(capsys, "embed", "B2xB2", "--format", "dot")
    assert code == 0 and '[label="0.250000"]' in out
    code, out = run(capsys, "embed", "B2xB2", "--format", "json")
    assert json.loads(out)["structure"] == "B2xB2"
    target = tmp_path / "graph.csv"
    code, out = run(capsys, "embed", "B2xB2", "--format", "csv",
                    "--out", str(target))
    assert code == 0 and target.exists()
    assert len(target.read_text().strip().splitlines()) == 3


def test_embed_with_valuation_and_weight_files(capsys, tmp_path):
    valuation = tmp_path / "valuation.json"
    valuation.write_text(json.dumps({"g0": [0, 1, 5, 9], "g1": [0, 1, 5, 9]}))
    weights = tmp_path / "weights.json"
    weights.write_text(json.dumps({"weights": [1.0, 0.25]}))
    code, out = run(capsys, "embed", "B2xB2", "--format", "csv",
                    "--valuation", str(valuation), "--weights", str(weights))
    assert code == 0
    import csv as csvmod
    rows = list(csvmod.reader(out.strip().splitlines()))
    assert rows[1][1] == "1"  # first point weight from the file
    assert rows[2][1] == "0.25"


def test_report_contents_and_exit(capsys):
    code, out = run(capsys, "report")
    assert code == 0
    assert "2, 2, 1, Yes, Boolean" in out
    assert "|T|, |Gamma|, Ext1(M,M), Tor1(M,M), Interpretation" in out
    assert "2, 2, 2, 2, Yes" in out
    assert "warning: Z3" in out


def test_report_deterministic(capsys):
    _, first = run(capsys, "report")
    _, second = run(capsys, "report")
    assert first == second


def test_exit_2_on_bad_inputs(capsys):
    assert main(["check", "/nonexistent/path.json"]) == 2
    assert main(["nosuchcommand", "B2"]) == 2
    assert main(["embed"]) == 2  # missing fixture argument


def test_exit_2_on_budget(capsys, monkeypatch):
    monkeypatch.setenv("TGW_BUDGET", "1")
    assert main(["ideals", "B2xB2"]) == 2
    monkeypatch.setenv("TGW_BUDGET", "notanint")
    assert main(["ideals", "B2"]) == 2


def test_json_mode_all_commands(capsys):
    for argv in (["ideals", "B2"], ["spec", "B2"], ["simples", "B2"],
                 ["density", "B2"], ["ext", "B2"], ["tor", "B2"],
                 ["adjunction", "B2"], ["radical", "B2"], ["localize", "B2"],
                 ["gelfand", "B2"], ["report"]):
        code = main(argv + ["--format", "json"])
        out = capsys.readouterr().out
        payload = json.loads(out)
        assert payload["exit_code"] == code == 0, argv
