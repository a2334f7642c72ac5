"""Command-line interface: output shapes, exit codes, determinism."""

import json

import pytest

from tdspace import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_words_recursion(capsys):
    code, out, _ = run(capsys, "words", "-n", "6", "--recursion")
    assert code == 0
    assert "total 1539281" in out


def test_words_both_routes_agree(capsys):
    code, out, _ = run(capsys, "words", "-n", "3", "--recursion", "--enumerate")
    assert code == 0
    assert "routes agree" in out


def test_words_csv(capsys):
    code, out, _ = run(capsys, "words", "-n", "2", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "n,route,length,count"
    assert "2,recursion,2,2" in lines
    assert "2,recursion,3,1" in lines


def test_words_json(capsys):
    code, out, _ = run(capsys, "words", "-n", "4", "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert doc["routes"]["recursion"]["total"] == 377
    assert doc["agree"] is True


def test_words_enumeration_budget(capsys):
    code, _, err = run(capsys, "words", "-n", "6", "--enumerate")
    assert code == 2
    assert "budget" in err


def test_count_worked_example(capsys):
    code, out, _ = run(capsys, "count", '{"steps":[[1,1],[1,0],[2,3]]}', "--oracle")
    assert code == 0
    assert "site=fence(1) factor=27" in out
    assert "site=fence(3) factor=2" in out
    assert "site=node(1b) factor=10" in out
    assert "27 * 2 * 10 = 540" in out
    assert "oracle 540 agrees" in out


def test_count_trivial_evolution(capsys):
    code, out, _ = run(capsys, "count", '{"steps":[]}')
    assert code == 0
    assert "1 = 1" in out


def test_count_json(capsys):
    code, out, _ = run(capsys, "count", '{"steps":[[1,1]]}', "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert doc["value"] == 5
    assert doc["factors"] == [{"site": "fence(1)", "factor": 5}]


def test_count_from_file(tmp_path, capsys):
    path = tmp_path / "ev.json"
    path.write_text('{"steps":[[1,0]]}')
    code, out, _ = run(capsys, "count", str(path))
    assert code == 0
    assert "= 3" in out


def test_count_oracle_mismatch_is_exit_3(capsys, monkeypatch):
    monkeypatch.setattr(cli, "count_extensions_bruteforce", lambda *a, **k: 7)
    code, _, err = run(capsys, "count", '{"steps":[[1,1]]}', "--oracle")
    assert code == 3
    assert "disagrees" in err


def test_count_rejects_bad_steps(capsys):
    code, _, err = run(capsys, "count", '{"steps":[[9,9]]}')
    assert code == 1
    assert "error" in err


def test_table_csv(capsys):
    code, out, _ = run(capsys, "table", "-n", "3", "--format", "csv")
    assert code == 0
    assert out.strip().splitlines() == [
        "n,words,cnvs,td_graphs,evolutions,paths",
        "3,22,225,288,627,627",
    ]


def test_table_workers_identical(capsys):
    _, serial, _ = run(capsys, "table", "-n", "2")
    _, parallel, _ = run(capsys, "table", "-n", "2", "--workers", "3")
    assert serial == parallel


def test_table_depth_budget(capsys):
    code, _, err = run(capsys, "table", "-n", "5")
    assert code == 2
    assert "budget" in err


def test_table_memory_budget(capsys, monkeypatch):
    monkeypatch.setenv("TD_MAX_MEM", "1000")
    code, _, err = run(capsys, "table", "-n", "3")
    assert code == 2


def test_table_bad_mem_env(capsys, monkeypatch):
    monkeypatch.setenv("TD_MAX_MEM", "lots")
    code, _, err = run(capsys, "table", "-n", "2")
    assert code == 1
    assert "TD_MAX_MEM" in err


@pytest.mark.parametrize(
    "suite,extra",
    [
        ("structure", ["-n", "3"]),
        ("induction", ["-n", "3"]),
        ("kernel", ["-n", "2", "--seed", "5", "--trees", "20"]),
        ("grand-total", ["-n", "3"]),
    ],
)
def test_verify_suites_pass(capsys, suite, extra):
    code, out, _ = run(capsys, "verify", "--suite", suite, *extra)
    assert code == 0
    assert "suite passed" in out
    assert "FAIL" not in out


def test_verify_json_report(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "structure", "-n", "2", "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert doc["passed"] is True
    assert {c["name"] for c in doc["checks"]} == {"trees-validate", "formula-vs-oracle"}


def test_verify_kernel_requires_seed(capsys):
    code, _, err = run(capsys, "verify", "--suite", "kernel", "-n", "1")
    assert code == 1
    assert "--seed" in err


def test_verify_time_limit(capsys):
    code, _, err = run(
        capsys, "verify", "--suite", "structure", "-n", "4", "--time-limit", "1e-9"
    )
    assert code == 2


def test_verify_failure_is_exit_3(capsys, monkeypatch):
    monkeypatch.setattr(cli, "closed_form", lambda n: -1)
    code, out, _ = run(capsys, "verify", "--suite", "grand-total", "-n", "2")
    assert code == 3
    assert "FAIL formula-vs-closed-form" in out


def test_export_major_dot(capsys):
    code, out, _ = run(capsys, "export", '{"steps":[[1,1]]}', "--what", "major")
    assert code == 0
    assert out.startswith("digraph")
    assert '"1a" -> "1b"' in out or '"1a" -> "2b"' in out


def test_export_tree_json_to_file(tmp_path, capsys):
    target = tmp_path / "tree.json"
    code, out, _ = run(
        capsys,
        "export",
        '{"steps":[[1,1],[1,0],[2,3]]}',
        "--what",
        "tree",
        "--format",
        "json",
        "-o",
        str(target),
    )
    assert code == 0
    assert out == ""
    doc = json.loads(target.read_text())
    assert doc["n"] == 4


def test_export_hasse(capsys):
    code, out, _ = run(capsys, "export", '{"steps":[]}', "--what", "hasse")
    assert code == 0
    assert "digraph" in out


def test_induce_first_word(capsys):
    code, out, _ = run(capsys, "induce", '{"steps":[]}')
    assert code == 0
    assert "fiber size 3" in out
    assert "fiber sum 11 = 1 * 11 [matches]" in out


def test_induce_json(capsys):
    code, out, _ = run(capsys, "induce", '{"steps":[[1,1]]}', "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert doc["fiber_sum"] == doc["predicted"] == 5 * 57
    assert len(doc["fiber"]) == sum(1 for _ in doc["fiber"])
    assert all(set(e) == {"steps", "word", "nodeset", "count"} for e in doc["fiber"])


def test_beta_sweep(capsys):
    code, out, _ = run(capsys, "beta", "--seed", "17", "--trees", "30", "--size", "10")
    assert code == 0
    assert "30/30 trees pass" in out


def test_beta_sweep_deterministic(capsys):
    _, first, _ = run(capsys, "beta", "--seed", "23", "--trees", "12")
    _, second, _ = run(capsys, "beta", "--seed", "23", "--trees", "12")
    assert first == second


@pytest.mark.parametrize(
    "argv",
    [
        ["beta", "--trees", "5"],
        ["frobnicate"],
        ["words", "--bogus"],
        ["verify", "--suite", "nope"],
    ],
)
def test_usage_errors_exit_1_not_2(capsys, argv):
    """argparse's native usage exit is 2, which this interface reserves
    for exceeded budgets."""
    with pytest.raises(SystemExit) as exc:
        cli.main(argv)
    assert exc.value.code == 1
    assert "usage:" in capsys.readouterr().err
