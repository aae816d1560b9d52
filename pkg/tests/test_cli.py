import json
import subprocess
import sys

import pytest

from subpath import cli
from subpath.explore import catalogue
from subpath.verify import Case

MIXED_SPEC = "3,2,1,1,4;3,1,3,2,4"


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv)
    return code, json.loads(out)


def test_formula_cycle(capsys):
    code, doc = run_json(capsys, "formula", "cycle", "--n", "12")
    assert code == 0 and doc["result"] == "144"
    assert doc["command"] == "formula" and isinstance(doc["elapsed_ms"], int)
    assert doc["inputs"]["n"] == 12


@pytest.mark.parametrize(
    "argv, value",
    [
        (["formula", "tree", "--n", "6"], "21"),
        (["formula", "complete", "--n", "4"], "34"),
        (["formula", "biclique", "--a", "2", "--b", "3"], "38"),
        (["formula", "unicyclic", "--sizes", "2,1,1"], "15"),
        (["formula", "ladder", "--k", "2"], "55"),
        (["formula", "hexbounds", "--k", "3"], "512 513"),
        (["formula", "random-exp", "--n", "6", "--p", "1/2"], "339/4"),
    ],
)
def test_formula_plain(capsys, argv, value):
    code, out, _ = run(capsys, "--plain", *argv)
    assert code == 0 and out.strip() == value


def test_plain_flag_after_subcommand(capsys):
    code, out, _ = run(capsys, "formula", "cycle", "--n", "5", "--plain")
    assert code == 0 and out.strip() == "25"


def test_big_values_are_decimal_strings(capsys):
    _, doc = run_json(capsys, "formula", "complete", "--n", "30")
    assert isinstance(doc["result"], str) and len(doc["result"]) > 30
    assert int(doc["result"]) > 2**64


def test_chain_and_build_round_trip(capsys, tmp_path):
    out = tmp_path / "chain.edges"
    code, doc = run_json(capsys, "chain", "--spec", MIXED_SPEC, "--classify", "--build", str(out))
    assert code == 0 and doc["result"]["pn"] == "2403" and doc["result"]["n"] == 19
    assert doc["result"]["classification"]["tags"] == ["kink-chain"]
    code, counted = run_json(capsys, "count", "--input", str(out), "--format", "edgelist")
    assert code == 0 and counted["result"]["pn"] == doc["result"]["pn"]


def test_chain_two_hexagons(capsys):
    code, out, _ = run(capsys, "chain", "--spec", "4,4;4,4", "--plain")
    assert code == 0 and out.strip() == "161"


def test_chain_bad_spec(capsys):
    code, out, err = run(capsys, "chain", "--spec", "1,2;2,2")
    assert code == 2 and out == "" and "a_1" in json.loads(err)["error"]


def test_chain_family(capsys):
    code, doc = run_json(capsys, "chain-family", "--g", "6,6,6")
    assert code == 0 and doc["result"]["size"] == 3
    _, doc = run_json(capsys, "chain-family", "--g", "6,6,6", "--dedupe")
    assert doc["result"]["size"] == 2
    code, doc = run_json(capsys, "chain-family", "--g", "6,6,6,6", "--extremal")
    assert code == 0 and doc["result"]["holds"]
    assert [m["spec"] for m in doc["result"]["minimizers"]] == ["4,2,2,4;4,2,2,4"]


def test_count_and_profile(capsys, tmp_path):
    f = tmp_path / "k4.g6"
    f.write_text("C~\n")
    code, out, _ = run(capsys, "count", "--input", str(f), "--plain")
    assert code == 0 and out.strip() == "34"
    code, doc = run_json(capsys, "profile", "--input", str(f))
    assert doc["result"]["profile"] == ["4", "6", "12", "12"]
    assert doc["result"]["closed_form_match"]


def test_count_errors(capsys, tmp_path):
    bad = tmp_path / "bad.g6"
    bad.write_text("C~x\n")
    assert run(capsys, "count", "--input", str(bad))[0] == 2
    many = tmp_path / "many.g6"
    many.write_text("C~\nC~\n")
    assert run(capsys, "count", "--input", str(many))[0] == 2
    assert run(capsys, "count", "--input", str(tmp_path / "missing"))[0] == 2
    edges = tmp_path / "loop.edges"
    edges.write_text("0 1\n1 1\n")
    code, _, err = run(capsys, "count", "--input", str(edges), "--format", "edgelist")
    assert code == 2 and "line 2" in err


def test_count_budget(capsys, tmp_path):
    f = tmp_path / "k8.g6"
    f.write_text("G~~~~{\n")
    code, _, err = run(capsys, "count", "--input", str(f), "--budget", "50")
    assert code == 3 and "budget" in json.loads(err)["error"]


def test_scan(capsys, tmp_path):
    f = tmp_path / "c4.g6"
    f.write_text("\n".join(catalogue("connected", 4)) + "\n")
    code, doc = run_json(capsys, "scan", "--input", str(f), "--objective", "max")
    assert code == 0 and doc["result"]["extremal_value"] == "34"
    code, doc = run_json(capsys, "scan", "--input", str(f), "--objective", "min", "--top", "2")
    assert doc["result"]["extremal_value"] == "10" and len(doc["result"]["entries"]) == 2
    code, _, _ = run(capsys, "scan", "--input", str(f), "--filter", "cubic")
    assert code == 0
    code, _, _ = run(capsys, "scan", "--input", str(f), "--filter", "bipartite", "--objective", "min")
    assert code == 0


def test_random_is_deterministic(capsys):
    argv = ["random", "--n", "6", "--p", "1/2", "--trials", "500", "--seed", "11"]
    _, a = run_json(capsys, *argv)
    _, b = run_json(capsys, *argv)
    assert a["result"] == b["result"]
    assert a["result"]["exact_expectation"] == "339/4"


def test_random_rejects_float_probability(capsys):
    code, _, _ = run(capsys, "random", "--n", "6", "--p", "0.5", "--trials", "5", "--seed", "1")
    assert code == 2


def test_verify_pass(capsys):
    code, doc = run_json(capsys, "verify", "--suite", "ladder")
    assert code == 0 and doc["result"]["passed"]
    assert all(c["passed"] for c in doc["result"]["suites"][0]["cases"])
    code, doc = run_json(capsys, "verify", "--suite", "cycles", "--max-size", "6")
    assert len(doc["result"]["suites"][0]["cases"]) == 4


def test_verify_failure_exit_code(capsys, monkeypatch):
    monkeypatch.setattr(cli, "run_suite", lambda name, size: [Case("forced", False, "x")])
    code, out, _ = run(capsys, "verify", "--suite", "trees", "--plain")
    assert code == 1 and out.strip() == "fail"


def test_threads_flag_and_env(capsys, monkeypatch):
    code, doc = run_json(capsys, "--threads", "1", "formula", "cycle", "--n", "3")
    assert code == 0 and doc["inputs"]["threads"] == 1
    monkeypatch.setenv("SUBPATH_THREADS", "1")
    _, doc = run_json(capsys, "formula", "cycle", "--n", "3")
    assert doc["inputs"]["threads"] == 1


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "subpath", "--plain", "formula", "cycle", "--n", "7"],
        capture_output=True,
        text=True,
        check=True,
    )
    assert proc.stdout.strip() == "49"
