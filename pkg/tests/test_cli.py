import json
import subprocess
import sys

import pytest

from klrtab.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_graph_dot(capsys):
    code, out, _ = run(capsys, "crystal", "graph", "--n", "2", "--lambda", "1,1", "--format", "dot")
    assert code == 0
    assert out.startswith("digraph crystal {")
    assert out.count("[label=\"") - out.count("->") == 8


def test_graph_chain_and_trivial(capsys):
    code, out, _ = run(capsys, "crystal", "graph", "--n", "1", "--lambda", "1", "--format", "json")
    data = json.loads(out)
    assert code == 0 and len(data["vertices"]) == 2 and data["edges"] == [[0, 1, 1]]
    code, out, _ = run(capsys, "crystal", "graph", "--n", "2", "--lambda", "0,0", "--format", "json")
    assert len(json.loads(out)["vertices"]) == 1


def test_graph_bad_lambda(capsys):
    code, _, err = run(capsys, "crystal", "graph", "--n", "2", "--lambda", "1")
    assert code == 2 and "coefficients" in err
    code, _, _ = run(capsys, "crystal", "graph", "--n", "2", "--lambda", "1,-1")
    assert code == 2


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["crystal"])
    assert exc.value.code == 2


def test_verify_phi_lambda(capsys):
    code, out, _ = run(capsys, "verify", "phi-lambda", "--n", "2", "--lambda", "1,1")
    report = json.loads(out)
    assert code == 0 and report["ok"] and report["runs"][0]["tableaux"] == 8


def test_verify_example_1(capsys):
    code, out, _ = run(capsys, "verify", "example-1", "--format", "text")
    assert code == 0
    assert "i_T = 2" in out and "epsilon = 3" in out
    assert "T_plus = 1,1,2,2,4,6/2,2,4,5/3,5/5,6/6" in out


def test_verify_other_checks(capsys, tmp_path):
    report_path = tmp_path / "r.json"
    code, _, _ = run(capsys, "verify", "multiplicity", "--max-mu", "4", "--n", "4",
                     "--report", str(report_path))
    assert code == 0 and json.loads(report_path.read_text())["ok"]
    for what in ("serre", "binfinity", "readings"):
        code, out, _ = run(capsys, "verify", what, "--n", "3", "--partition", "2,1",
                           "--samples", "50")
        assert code == 0, what
    code, _, _ = run(capsys, "verify", "example-ml")
    assert code == 0


def test_verify_failure_exit_code(capsys, monkeypatch):
    import klrtab.cli as cli
    monkeypatch.setitem(cli.VERIFIERS, "serre", lambda args: {"check": "serre", "ok": False,
                                                              "failures": ["x"]})
    code, out, _ = run(capsys, "verify", "serre", "--n", "2", "--partition", "1")
    assert code == 1 and json.loads(out)["ok"] is False


def test_char_segments(capsys):
    code, out, _ = run(capsys, "char", "--segments", "1,2;1,1", "--format", "text")
    assert code == 0 and out == "2 * (1,1,2)\n(1,2,1)\n"
    code, out, _ = run(capsys, "char", "--segments", "1,2;1,1", "--graded")
    data = json.loads(out)
    coeffs = {tuple(t["word"]): t["coeff"] for t in data["terms"]}
    assert coeffs[(1, 1, 2)] == {"-1": 1, "1": 1}
    assert {w: sum(c.values()) for w, c in coeffs.items()} == {(1, 1, 2): 2, (1, 2, 1): 1}
    code, _, _ = run(capsys, "char", "--segments", "1;2")
    assert code == 2


def test_char_tableau(capsys, tmp_path):
    path = tmp_path / "t.json"
    path.write_text(json.dumps({"shape": [2, 1], "rows": [[1, 1], [2]]}))
    code, out, _ = run(capsys, "char", "--tableau", str(path), "--n", "2")
    data = json.loads(out)
    assert code == 0 and data["terms"] == [{"word": [], "coeff": {"0": 1}}]
    code, _, _ = run(capsys, "char", "--tableau", str(tmp_path / "missing.json"))
    assert code == 2


def test_char_refuses_huge_expansion(capsys):
    code, _, err = run(capsys, "char", "--segments", "1,3;2,3", "--max-interleavings", "10")
    assert code == 2 and "20 interleavings" in err
    code, _, _ = run(capsys, "char", "--segments", "1,3;2,3", "--max-interleavings", "20")
    assert code == 0


def test_output_is_deterministic():
    cmd = [sys.executable, "-m", "klrtab", "crystal", "graph", "--n", "3", "--lambda", "1,0,1"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second and first.startswith(b"digraph")
