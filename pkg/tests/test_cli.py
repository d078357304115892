import json
from pathlib import Path

import pytest

from quiverfan.cli import SCHEMA_VERSION, run

DATA = Path(__file__).resolve().parent.parent / "data"


def call(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def report(capsys, *argv):
    code, out, _ = call(capsys, *argv, "--json")
    return code, json.loads(out)


def test_euler(capsys):
    code, rep = report(capsys, "euler", "--quiver", str(DATA / "a2.qv"), "--alpha", "1,0", "--beta", "0,1")
    assert code == 0
    assert rep["results"] == {"euler": -1}
    assert rep["schema_version"] == SCHEMA_VERSION


def test_clusters(capsys):
    code, rep = report(capsys, "clusters", "--quiver", str(DATA / "a2.qv"), "--bound", "2")
    assert code == 0 and rep["results"]["count"] == 5 and rep["caveats"] == []


def test_dbeta_cones(capsys):
    code, rep = report(capsys, "dbeta", "cones", "--quiver", str(DATA / "a2.qv"), "--beta", "0,1")
    gens = sorted(c["generators"] for c in rep["results"]["cones"])
    assert code == 0 and gens == [[[-1, -1]], [[1, 1]]]


def test_builtin_quiver_name(capsys):
    code, rep = report(capsys, "rootclass", "--quiver", "K2", "--alpha", "1,1")
    assert code == 0 and rep["results"]["class"] == "imaginary-schur"


def test_negative_vector_syntax(capsys):
    code, rep = report(capsys, "split-weight", "--quiver", "A2", "--alpha=-1,2")
    assert rep["results"] == {"alpha_plus": [0, 3], "delta": [1, 0]}


@pytest.mark.parametrize("argv", [
    ["homext", "--quiver", "A2", "--alpha", "1,1", "--beta", "1,0"],
    ["embeds", "--quiver", "A2", "--alpha", "0,1", "--beta", "1,1"],
    ["canon", "--quiver", "A2", "--alpha", "2,1"],
    ["stability", "--quiver", "A2", "--sigma=1,-1", "--beta", "1,1"],
    ["stable-dims", "--quiver", "triangle", "--alpha", "1,1,2", "--bound", "3"],
    ["stable-decomp", "--quiver", "A2", "--sigma", "0,0", "--beta", "1,1"],
    ["ext-quiver", "--quiver", "T434", "--roots", "4,3,2,1,0,3,1,2,3;0,0,0,0,1,0,0,0,0"],
    ["isometry", "--quiver", "triangle", "--roots", "0,0,1;0,1,0", "--seed", "5"],
    ["dbeta", "halfspaces", "--quiver", "A2", "--beta", "1,1"],
    ["dbeta", "contains", "--quiver", "A2", "--beta", "1,1", "--alpha", "2,0"],
    ["compat", "--quiver", "A2", "--x", "1,1", "--y", "neg:1"],
    ["finstab", "--quiver", "A2", "--alpha", "2,2"],
    ["refine", "--quiver", "A2", "--roots", "0,1;1,0", "--eta", "1,1"],
    ["thm13", "--quiver", "A2", "--bound", "2", "--box", "2"],
    ["oracle", "homext", "--quiver", "A2", "--alpha", "1,1", "--beta", "1,1"],
    ["oracle", "stability", "--quiver", "A2", "--sigma=1,-1", "--beta", "1,1", "--fields", "2"],
    ["oracle", "det", "--quiver", "A2", "--alpha", "1,1", "--beta", "0,1", "--seed", "3"],
])
def test_every_command_is_deterministic(capsys, argv):
    code1, out1, _ = call(capsys, *argv, "--json")
    code2, out2, _ = call(capsys, *argv, "--json")
    assert code1 == code2 == 0
    assert out1 == out2
    json.loads(out1)
    code3, human, _ = call(capsys, *argv)
    assert code3 == 0 and human


def test_caveats_reported(capsys):
    _, rep = report(capsys, "stable-dims", "--quiver", "K2", "--sigma=1,-1", "--bound", "4")
    assert rep["caveats"] == ["bounded-search"]
    _, rep = report(capsys, "thm13", "--quiver", "triangle", "--bound", "3", "--box", "4")
    assert "bounded-search" in rep["caveats"]
    assert rep["results"]["witness"] == [1, 1, 1]
    _, rep = report(capsys, "oracle", "homext", "--quiver", "A3", "--alpha", "2,2,2", "--beta", "2,2,2")
    assert rep["results"]["hom"] - rep["results"]["ext"] == 4
    assert rep["caveats"] == []
    _, rep = report(capsys, "oracle", "homext", "--quiver", "A3", "--alpha", "2,1,1", "--beta", "1,2,2")
    assert rep["caveats"] == ["sampled-oracle"]
    assert (rep["results"]["hom"], rep["results"]["ext"]) == (1, 1)


def test_violation_exit_code(capsys):
    code, rep = report(capsys, "isometry", "--quiver", "triangle", "--roots", "0,0,1;0,1,1")
    assert code == 1 and rep["violation"] and rep["results"]["counterexample"]


def test_usage_errors(capsys):
    assert call(capsys, "euler", "--quiver", "A2", "--alpha", "1,0")[0] == 2
    assert call(capsys, "euler", "--quiver", "missing.qv", "--alpha", "1,0", "--beta", "0,1")[0] == 2
    assert call(capsys, "euler", "--alpha", "1,0", "--beta", "0,1")[0] == 2
    with pytest.raises(SystemExit) as exc:
        run(["euler", "--quiver", "A2", "--alpha", "1,x", "--beta", "0,1"])
    assert exc.value.code == 2
    assert call(capsys, "refine", "--quiver", "triangle", "--roots", "0,1,1;1,0,0", "--eta", "1,1")[0] == 2
    with pytest.raises(SystemExit) as exc:
        run(["no-such-command"])
    assert exc.value.code == 2


def test_resource_error_exit_code(capsys):
    code, _, err = call(capsys, "stable-dims", "--quiver", "T434", "--sigma", "0,0,0,0,0,0,0,0,0", "--bound", "6")
    assert code == 2 and "budget" in err


def test_timing_is_opt_in(capsys):
    _, rep = report(capsys, "euler", "--quiver", "A2", "--alpha", "1,0", "--beta", "0,1")
    assert "seconds" not in rep
    _, rep = report(capsys, "euler", "--quiver", "A2", "--alpha", "1,0", "--beta", "0,1", "--timing")
    assert "seconds" in rep


def test_parse_error_exit_code(capsys, tmp_path):
    bad = tmp_path / "bad.qv"
    bad.write_text('{"vertices": ["1", "2"], "arrows": [["1", "2"], ["2", "1"]]}')
    assert call(capsys, "euler", "--quiver", str(bad), "--alpha", "1,0", "--beta", "0,1")[0] == 2


def test_verify_all_prints_one_line_per_criterion(capsys, monkeypatch):
    from quiverfan import acceptance

    monkeypatch.setattr(acceptance, "CRITERIA", [acceptance.criterion_3, acceptance.criterion_7])
    code, out, _ = call(capsys, "verify-all")
    assert code == 0
    assert out.splitlines() == [
        "[PASS] criterion 3: cluster counts",
        "[PASS] criterion 7: pinned Ext-quivers",
    ]
    failing = acceptance.CriterionResult(0, "always fails", False)
    monkeypatch.setattr(acceptance, "CRITERIA", [lambda: failing])
    code, rep = report(capsys, "verify-all")
    assert code == 1 and rep["violation"]
