"""Command-line behaviour: verbs, exit codes, files, determinism."""

import json

import pytest

from penrel.cli import main
from penrel.reptheory import cantor_rep, rep_to_json
from penrel.relalg import Relation
from penrel.reptheory import RelRep


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_sequences_enumerate(capsys):
    code, out, _ = run(capsys, "sequences", "enumerate", "-L", "3")
    assert code == 0
    assert out.splitlines() == ["000", "001", "010", "100", "101"]


def test_sequences_count(capsys):
    code, out, _ = run(capsys, "sequences", "count", "-L", "8")
    assert code == 0
    assert out.strip() == "55"


def test_theory_print_counts(capsys):
    code, out, _ = run(capsys, "theory", "print", "--pent", "--max-level", "2")
    assert code == 0
    assert len(out.splitlines()) == 33


def test_theory_print_pens_json(capsys):
    code, out, _ = run(capsys, "theory", "print", "--pens", "--max-level", "1", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["theory"] == "pens"
    assert {a["name"] for a in data["axioms"]} >= {"C1_0", "D1_0", "Cp_L"}


def test_rep_cantor_check_round_trip(tmp_path, capsys):
    for level in (0, 1, 4, 8, 10):
        path = tmp_path / f"c{level}.json"
        code, _, _ = run(capsys, "rep", "cantor", "--level", str(level), "--out", str(path))
        assert code == 0
        code, out, _ = run(capsys, "rep", "check", "--file", str(path), "--pent")
        assert code == 0, level
        assert "all axioms PASS" in out


def test_rep_check_failure_exits_1(tmp_path, capsys):
     # both generators full: consistency fails with a printed witness
    full = Relation.full(2)
    rep = RelRep(("x", "y"), 1, {(0, "L"): full, (0, "S"): full})
    path = tmp_path / "bad.json"
    path.write_text(rep_to_json(rep))
    code, out, _ = run(capsys, "rep", "check", "--file", str(path), "--pent")
    assert code == 1
    assert "C1_0" in out and "witness" in out


def test_rep_check_json_report(tmp_path, capsys):
    path = tmp_path / "c3.json"
    run(capsys, "rep", "cantor", "--level", "3", "--out", str(path))
    code, out, _ = run(capsys, "rep", "check", "--file", str(path), "--json")
    assert code == 0
    data = json.loads(out)
    assert data["all_pass"] and data["total"] == len(data["verdicts"])


def test_rep_classify(tmp_path, capsys):
    path = tmp_path / "c4.json"
    run(capsys, "rep", "cantor", "--level", "4", "--out", str(path))
    code, out, _ = run(capsys, "rep", "classify", "--file", str(path))
    assert code == 0
    assert "algebraically irreducible: True" in out


def test_rep_sum_decompose_compare(tmp_path, capsys):
    a = tmp_path / "a.json"
    b = tmp_path / "b.json"
    run(capsys, "rep", "cantor", "--level", "3", "--out", str(a))
    run(capsys, "rep", "cantor", "--level", "3", "--out", str(b))
    summed = tmp_path / "sum.json"
    code, _, _ = run(
        capsys, "rep", "sum", "--file", str(a), "--file", str(b), "--out", str(summed)
    )
    assert code == 0
    code, out, _ = run(capsys, "rep", "decompose", "--file", str(summed), "--json")
    assert code == 0
    assert json.loads(out)["component_count"] == 2
    code, out, _ = run(capsys, "rep", "compare", "--file", str(a), "--file", str(b))
    assert code == 0
    assert out.startswith("equivalent")
    code, out, _ = run(capsys, "rep", "compare", "--file", str(a), "--file", str(summed))
    assert code == 1
    assert "not equivalent" in out


def test_rep_seq_and_modhom(tmp_path, capsys):
    path = tmp_path / "c3.json"
    run(capsys, "rep", "cantor", "--level", "3", "--out", str(path))
    code, out, _ = run(capsys, "rep", "seq", "--file", str(path))
    assert code == 0
    assert "101 : 101" in out
    code, out, _ = run(capsys, "rep", "modhom", "--file", str(path))
    assert code == 0
    assert "PASS" in out


def test_rep_induced(tmp_path, capsys):
    spec = {
        "states": ["p0", "p1"],
        "blocks": [["p0", "p1"]],
        "sigma": {"p0": "0", "p1": "1"},
    }
    path = tmp_path / "spec.json"
    path.write_text(json.dumps(spec))
    code, out, _ = run(capsys, "rep", "induced", "--file", str(path))
    assert code == 0
    data = json.loads(out)
    assert data["trunc_level"] == 1
    assert data["generators"]["W:0:L"] == [[0, 0], [1, 0]]


def test_tiling_svg(tmp_path, capsys):
    path = tmp_path / "t.svg"
    code, _, _ = run(capsys, "tiling", "svg", "--order", "5", "--out", str(path))
    assert code == 0
    assert path.read_text().count("<polygon") == 13


def test_tiling_match_and_inflate(capsys):
    code, out, _ = run(capsys, "tiling", "match", "--order", "6")
    assert code == 0
    assert "PASS" in out
    code, out, _ = run(capsys, "tiling", "inflate", "--order", "3", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["leaf_count"] == 5
    assert {leaf["sequence"] for leaf in data["leaves"]} == {
        "000", "001", "010", "100", "101"
    }


def test_tiling_rep_checks_out(tmp_path, capsys):
    path = tmp_path / "geo.json"
    code, _, _ = run(capsys, "tiling", "rep", "--order", "4", "--out", str(path))
    assert code == 0
    code, out, _ = run(capsys, "rep", "check", "--file", str(path))
    assert code == 0
    assert "all axioms PASS" in out


def test_usage_errors_exit_2(tmp_path, capsys):
    with pytest.raises(SystemExit) as exc:
        main(["rep", "unknown-verb"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["tiling", "svg", "--order", "5", "--bogus-flag"])
    assert exc.value.code == 2
    code, _, err = run(capsys, "rep", "check", "--file", str(tmp_path / "missing.json"))
    assert code == 2
    assert "error:" in err
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, _, err = run(capsys, "rep", "check", "--file", str(bad))
    assert code == 2


def test_compare_requires_two_files(tmp_path, capsys):
    a = tmp_path / "a.json"
    a.write_text(rep_to_json(cantor_rep(2)))
    code, _, err = run(capsys, "rep", "compare", "--file", str(a))
    assert code == 2
    assert "twice" in err


def test_outputs_are_deterministic(tmp_path, capsys):
    first = run(capsys, "theory", "print", "--pent", "--max-level", "4")
    second = run(capsys, "theory", "print", "--pent", "--max-level", "4")
    assert first == second
    a = run(capsys, "rep", "cantor", "--level", "5")
    b = run(capsys, "rep", "cantor", "--level", "5")
    assert a == b
    s1 = run(capsys, "tiling", "svg", "--order", "4")
    s2 = run(capsys, "tiling", "svg", "--order", "4")
    assert s1 == s2
