import json

import pytest

from dqp.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--format", "json")
    return code, json.loads(out), out, err


def test_invariants_json_values(capsys):
    code, doc, _, _ = run_json(capsys, "invariants", "--n", "5", "--q", "3", "--p", "2")
    assert code == 0
    assert doc["schema"] == "dqp-invariants/1"
    assert doc["results"]["le_numbers"] == [[3, 1], [2, 4], [1, 4], [0, 0]]
    assert doc["results"]["euler_obstruction_hypersurface"] == 2
    assert doc["results"]["euler_obstruction_sigma1"] == 0
    assert doc["results"]["sphere_dimension"] == 3
    assert doc["results"]["reduced_euler_characteristic"] == -1
    names = [c["name"] for c in doc["checks"]]
    assert "massey-alternating-sum" in names
    assert all(c["status"] == "pass" for c in doc["checks"])


def test_invariants_p1_omits_hypersurface_obstruction(capsys):
    code, doc, _, _ = run_json(capsys, "invariants", "--n", "2", "--q", "1", "--p", "1")
    assert code == 0
    assert doc["results"]["le_numbers"] == [[1, 1], [0, 2]]
    assert "euler_obstruction_hypersurface" not in doc["results"]
    assert "needs p > 1" in doc["results"]["euler_obstruction_note"]


def test_invariants_validation_exit(capsys):
    code, out, err = run(capsys, "invariants", "--n", "4", "--q", "3", "--p", "2")
    assert code == 2
    assert out == ""
    assert "n must satisfy n >= q + p" in err


def test_invariants_json_round_trips(capsys):
    _, doc, raw, _ = run_json(capsys, "invariants", "--n", "9", "--q", "6", "--p", "3")
    assert json.dumps(doc, indent=2, sort_keys=True) + "\n" == raw


def test_invariants_json_has_no_timings(capsys):
    _, doc, _, _ = run_json(capsys, "invariants", "--n", "5", "--q", "3", "--p", "2")
    assert "elapsed" not in doc
    assert "elapsed" not in doc["results"]


def test_invariants_csv(capsys):
    code, out, err = run(
        capsys, "invariants", "--n", "5", "--q", "3", "--p", "2", "--format", "csv"
    )
    assert code == 0
    lines = out.split("\n")
    assert lines[0] == "section,key,value,detail"
    assert "results.le_numbers,3,1," in lines
    assert "results.le_numbers,0,0," in lines
    assert "\r" not in out


def test_lecycles_all_indices(capsys):
    code, doc, _, _ = run_json(capsys, "lecycles", "--p", "2")
    assert code == 0
    rows = doc["results"]["systems"]
    assert [r["i"] for r in rows] == [1, 2]
    for r in rows:
        assert r["le_number_chow"] == r["le_number_closed_form"]
        assert r["multiplicity_chow"] == r["multiplicity_closed_form"]


def test_lecycles_single_index(capsys):
    code, doc, _, _ = run_json(capsys, "lecycles", "--p", "3", "--i", "2")
    assert code == 0
    row = doc["results"]["systems"][0]
    assert row["le_number_chow"] == 12
    assert row["dimension"] == 4


def test_lecycles_rejects_p1(capsys):
    code, _, err = run(capsys, "lecycles", "--p", "1")
    assert code == 2
    assert "p >= 2" in err


def test_chow_both_algorithms(capsys):
    code, doc, _, _ = run_json(
        capsys, "chow", "--n", "2", "--m", "1", "--classes", "1,1;1,1;0,2"
    )
    assert code == 0
    assert doc["results"]["ring"] == 2
    assert doc["results"]["fulton"] == 2
    assert doc["results"]["intersection_number"] == 2


def test_chow_class_count_mismatch(capsys):
    code, _, err = run(capsys, "chow", "--n", "2", "--m", "1", "--classes", "1,1")
    assert code == 2
    assert "classes" in err


def test_chow_fulton_budget_exit(capsys):
    classes = ";".join(["1,1"] * 25)
    code, _, err = run(
        capsys,
        "chow", "--n", "13", "--m", "12", "--classes", classes,
        "--algorithm", "fulton",
    )
    assert code == 3
    assert "limit" in err


def test_closure_membership(capsys):
    code, doc, _, _ = run_json(
        capsys, "closure", "--ideal", "y1^2,y2^2", "--monomial", "y1*y2"
    )
    assert code == 0
    assert doc["results"]["member"] is True
    assert doc["results"]["facet_route"] is True


def test_closure_non_member(capsys):
    code, doc, _, _ = run_json(
        capsys, "closure", "--ideal", "y1^2,y2^2", "--monomial", "y1"
    )
    assert code == 0
    assert doc["results"]["member"] is False


def test_closure_reduction_mode(capsys):
    code, doc, _, _ = run_json(
        capsys,
        "closure", "--ideal", "y1^2,y2^2",
        "--full", "y1^2,y1*y2,y2^2",
        "--mode", "reduction",
    )
    assert code == 0
    assert doc["results"]["reduction"] is True


def test_closure_reduction_false_case(capsys):
    code, doc, _, _ = run_json(
        capsys,
        "closure", "--ideal", "y1^2", "--full", "y1^2,y2^2", "--mode", "reduction",
    )
    assert code == 0
    assert doc["results"]["reduction"] is False


def test_closure_grammar_whitespace_and_powers(capsys):
    'the grammar ignores whitespace and accepts the x-prefix'
    code, doc, _, _ = run_json(
        capsys, "closure", "--ideal", " x1 ^ 2 , x2^2 ", "--monomial", "x1 x2"
    )
    assert code == 0
    assert doc["results"]["member"] is True


def test_closure_grammar_errors(capsys):
    code, _, err = run(capsys, "closure", "--ideal", "z1^2", "--monomial", "z1")
    assert code == 2
    code, _, err = run(capsys, "closure", "--ideal", "y1^2,x2^2", "--monomial", "y1")
    assert code == 2
    assert "prefix" in err
    code, _, err = run(capsys, "closure", "--ideal", "y1^2")
    assert code == 2
    assert "monomial" in err


def test_count_command(capsys):
    code, doc, _, _ = run_json(
        capsys, "count", "--p", "2", "--prime", "3", "--jobs", "1"
    )
    assert code == 0
    assert doc["results"]["observed"] == 72
    assert doc["results"]["predicted"] == 72
    assert doc["results"]["enumerated"] == 243


def test_count_budget_flag(capsys):
    code, _, err = run(
        capsys, "count", "--p", "3", "--prime", "11", "--budget", "1000"
    )
    assert code == 3
    assert "exceeds" in err


def test_count_budget_env(capsys, monkeypatch):
    monkeypatch.setenv("DQP_BUDGET", "100")
    code, _, err = run(capsys, "count", "--p", "2", "--prime", "3")
    assert code == 3
    monkeypatch.setenv("DQP_BUDGET", "not-a-number")
    code, _, err = run(capsys, "count", "--p", "2", "--prime", "3")
    assert code == 2


def test_count_jobs_equivalence(capsys):
    observed = []
    for jobs in ("1", "2", "8"):
        _, doc, _, _ = run_json(
            capsys, "count", "--p", "2", "--prime", "5", "--jobs", jobs
        )
        observed.append(doc["results"]["observed"])
    assert observed == [600, 600, 600]


def test_verify_core_scope(capsys):
    code, doc, _, _ = run_json(capsys, "verify", "--scope", "core", "--pmax", "3")
    assert code == 0
    assert doc["results"]["suites"] == ["core"]
    assert doc["results"]["checks_passed"] == doc["results"]["checks_run"] > 0


def test_verify_rejects_bad_scope(capsys):
    with pytest.raises(SystemExit) as info:
        main(["verify", "--scope", "everything"])
    assert info.value.code == 2
    capsys.readouterr()


def test_out_file(capsys, tmp_path):
    target = tmp_path / "report.json"
    code, out, _ = run(
        capsys,
        "invariants", "--n", "5", "--q", "3", "--p", "2",
        "--format", "json", "--out", str(target),
    )
    assert code == 0
    assert out == ""
    doc = json.loads(target.read_text())
    assert doc["command"] == "invariants"


def test_table_format_mentions_elapsed(capsys):
    code, out, _ = run(capsys, "invariants", "--n", "5", "--q", "3", "--p", "2")
    assert code == 0
    assert "elapsed:" in out
    assert "le_numbers:" in out
