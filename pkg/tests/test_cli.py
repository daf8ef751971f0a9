import json

import pytest

from twostack.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_sort_identity(capsys):
    code, out, _ = run(capsys, "sort", "1 2 3")
    assert code == 0
    assert out == "1 2 3\n"


def test_sort_passes(capsys):
    code, out, _ = run(capsys, "sort", "3 5 2 4 1", "--passes", "2")
    assert code == 0
    assert out == "1 2 3 4 5\n"


def test_sortable_witness_yes(capsys):
    code, out, _ = run(capsys, "sortable", "3 5 2 4 1", "--t", "2")
    assert code == 0
    assert out.splitlines() == ["yes", "passes needed: 2"]


def test_sortable_witness_no(capsys):
    code, out, _ = run(capsys, "sortable", "3 2 4 1", "--t", "2")
    assert code == 0
    assert out.splitlines()[0] == "no"


def test_stats_text(capsys):
    code, out, _ = run(capsys, "stats", "3 1 2")
    assert code == 0
    assert out.splitlines() == [
        "descents: 1",
        "ascents: 1",
        "runs: 2",
        "rl-maxima: 3 2",
        "type: 1",
    ]


def test_pattern(capsys):
    code, out, _ = run(capsys, "pattern", "3 5 2 4 1", "--q", "2 3 1")
    assert (code, out) == (0, "yes\n")
    code, out, _ = run(capsys, "pattern", "1 2 3", "--q", "2 1")
    assert (code, out) == (0, "no\n")


def test_fmap_finv_round_trip(capsys):
    code, out, _ = run(capsys, "fmap", "3 1 2")
    assert code == 0
    assert out.splitlines() == ["perm: 2 1", "mark: 2"]
    code, out, _ = run(capsys, "finv", "2 1", "--mark", "2")
    assert (code, out) == (0, "3 1 2\n")


def test_fmap_rejects_type2(capsys):
    code, _, err = run(capsys, "fmap", "1 3 2")
    assert code == 2
    assert err.startswith("error:")


def test_count_w_formula(capsys):
    code, out, _ = run(capsys, "count", "w", "--n", "4", "--k", "2")
    assert (code, out) == (0, "10\n")


def test_count_w_brute_matches_formula_end_to_end(capsys):
    for n in range(1, 9):
        for k in range(1, n + 1):
            _, brute, _ = run(
                capsys, "count", "w", "--n", str(n), "--k", str(k), "--method", "brute"
            )
            _, formula, _ = run(capsys, "count", "w", "--n", str(n), "--k", str(k))
            assert brute == formula


def test_count_trees_both_methods(capsys):
    code, out, _ = run(capsys, "count", "trees", "--n", "4", "--k", "2")
    assert (code, out) == (0, "10\n")
    code, out, _ = run(
        capsys, "count", "trees", "--n", "4", "--k", "2", "--method", "enum"
    )
    assert (code, out) == (0, "10\n")


def test_count_total_catalan_maps(capsys):
    code, out, _ = run(capsys, "count", "total", "--n", "9")
    assert (code, out) == (0, "49335\n")
    code, out, _ = run(capsys, "count", "catalan", "--n", "4")
    assert (code, out) == (0, "14\n")
    code, out, _ = run(capsys, "count", "maps", "--f", "2", "--pv", "3")
    assert (code, out) == (0, "10\n")


def test_count_missing_flags(capsys):
    code, _, err = run(capsys, "count", "w", "--n", "4")
    assert code == 2
    assert "--k" in err


def test_count_bad_method_combination(capsys):
    code, _, err = run(capsys, "count", "catalan", "--n", "4", "--method", "brute")
    assert code == 2


def test_table_csv(capsys):
    code, out, _ = run(capsys, "table", "--n", "3", "--format", "csv")
    assert code == 0
    assert out == "n,k,count\n3,1,1\n3,2,4\n3,3,1\n"


def test_table_json_counts_are_strings(capsys):
    code, out, _ = run(capsys, "table", "--n", "4", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert set(payload) == {"command", "input", "result"}
    assert payload["result"]["rows"][1] == {"k": 2, "count": "10"}


def test_enumerate_perms_stream(capsys):
    code, out, _ = run(capsys, "enumerate", "perms", "--n", "3")
    assert code == 0
    assert out.splitlines() == ["1 2 3", "1 3 2", "2 1 3", "2 3 1", "3 1 2", "3 2 1"]


def test_enumerate_perms_filters(capsys):
    code, out, _ = run(
        capsys, "enumerate", "perms", "--n", "4", "--filter", "2ss", "--runs", "2"
    )
    assert code == 0
    assert len(out.splitlines()) == 10  # W(4,2)


def test_enumerate_trees_stream(capsys):
    code, out, _ = run(capsys, "enumerate", "trees", "--nodes", "4", "--leaves", "2")
    assert code == 0
    assert out.splitlines() == [
        "(1 (1 (1) (1)))",
        "(2 (1) (1 (1)))",
        "(2 (1 (1)) (1))",
        "(2 (2 (1) (1)))",
    ]


def test_enumerate_trees_json_lines(capsys):
    code, out, _ = run(
        capsys, "enumerate", "trees", "--nodes", "3", "--format", "json"
    )
    assert code == 0
    lines = [json.loads(line) for line in out.splitlines()]
    assert len(lines) == 2
    assert all(set(line) == {"command", "input", "result"} for line in lines)
    assert lines[1]["result"] == {
        "label": 2,
        "children": [
            {"label": 1, "children": []},
            {"label": 1, "children": []},
        ],
    }


def test_enumerate_flag_mixups_rejected(capsys):
    code, _, err = run(capsys, "enumerate", "perms", "--n", "3", "--leaves", "2")
    assert code == 2
    code, _, err = run(capsys, "enumerate", "trees", "--nodes", "3", "--runs", "2")
    assert code == 2


def test_verify_pass_exit_zero(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "symmetry", "--max-n", "20")
    assert code == 0
    assert "PASS" in out


def test_verify_json_report(capsys):
    code, out, _ = run(
        capsys, "verify", "--suite", "joint-rl", "--max-n", "3", "--format", "json"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["result"]["passed"] is True
    assert all(check["ok"] for check in payload["result"]["checks"])


def test_verify_mismatch_exit_one(capsys, monkeypatch):
    # sabotage the closed form so the suite must report a mismatch
    monkeypatch.setattr("twostack.counting.w_total", lambda n: 0)
    code, out, _ = run(capsys, "verify", "--suite", "total", "--max-n", "3")
    assert code == 1
    assert "FAIL" in out


def test_invalid_permutation_exit_two(capsys):
    code, _, err = run(capsys, "sort", "1 1 2")
    assert code == 2
    assert err.startswith("error:")


def test_unknown_flag_rejected(capsys):
    code, _, err = run(capsys, "sort", "1 2", "--bogus")
    assert code == 2


def test_csv_rejected_outside_table(capsys):
    code, _, err = run(capsys, "count", "catalan", "--n", "3", "--format", "csv")
    assert code == 2


def test_json_envelope_is_schema_stable(capsys):
    invocations = [
        ("sort", "2 1"),
        ("sortable", "2 1", "--t", "1"),
        ("stats", "2 1"),
        ("pattern", "2 1", "--q", "1 2"),
        ("fmap", "1 2"),
        ("finv", "1", "--mark", "1"),
        ("count", "catalan", "--n", "3"),
        ("table", "--n", "2"),
        ("verify", "--suite", "symmetry", "--max-n", "5"),
    ]
    for argv in invocations:
        code, out, _ = run(capsys, *argv, "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert set(payload) == {"command", "input", "result"}
        assert payload["command"] == argv[0]
