import json
import subprocess
import sys

import pytest

from permucycle.cli import main
from permucycle.generate import generate


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_generate_compact(capsys):
    code, out, err = run(capsys, "generate", "--n", "3", "--compact")
    assert code == 0 and out == "012032\n"
    assert "length=6" in err


def test_generate_spaced(capsys):
    code, out, _ = run(capsys, "generate", "--n", "4")
    assert out == " ".join("012301423042103421302143") + "\n"
    assert not out.endswith(" \n")


@pytest.mark.parametrize("argv", [["generate", "--n", "2"], ["generate", "--n", "10", "--compact"],
                                  ["tree", "--n", "4"], ["tree", "--n", "11"], ["census", "--n", "5"],
                                  ["bounds", "--n", "1"]])
def test_bad_arguments_exit_2(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2 and out == "" and "error" in err


def test_verify_exit_codes(capsys, tmp_path):
    good = tmp_path / "w4.txt"
    good.write_text("012301423042103421302143\n")
    assert run(capsys, "verify", "--n", "4", "--input", str(good))[0] == 0
    bad = tmp_path / "bad.txt"
    bad.write_text("012301423042103421302144\n")
    code, out, err = run(capsys, "verify", "--n", "4", "--input", str(bad))
    assert code == 1 and out == "" and "first failure" in err
    junk = tmp_path / "junk.txt"
    junk.write_text("zero one two\n")
    assert run(capsys, "verify", "--n", "4", "--input", str(junk))[0] == 2
    assert run(capsys, "verify", "--n", "4", "--input", str(tmp_path / "missing"))[0] == 2


@pytest.mark.parametrize("n", [5, 6, 7])
def test_generate_verify_round_trip(capsys, tmp_path, n):
    path = tmp_path / "w.txt"
    assert run(capsys, "generate", "--n", str(n), "--output", str(path))[0] == 0
    assert path.read_text().split() == [str(s) for s in generate(n).symbols]
    assert run(capsys, "verify", "--n", str(n), "--input", str(path))[0] == 0


def test_tree_records(capsys):
    code, out, _ = run(capsys, "tree", "--n", "5")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "tree 5 24 23"
    assert sum(ln.startswith("v ") for ln in lines) == 24
    assert sum(ln.startswith("e ") for ln in lines) == 23


def test_tree_graphviz(capsys):
    import pydot

    code, out, _ = run(capsys, "tree", "--n", "5", "--graphviz")
    assert code == 0
    (graph,) = pydot.graph_from_dot_data(out)
    assert len(graph.get_edges()) == 23


def test_bounds(capsys):
    code, out, _ = run(capsys, "bounds", "--n", "5")
    report = json.loads(out)
    assert code == 0 and report["lower"] == 420 and report["upper"] == 6 * 2 ** 115


def test_bounds_large_reports_digits(capsys):
    report = json.loads(run(capsys, "bounds", "--n", "10")[1])
    assert report["upper"] is None and report["upper_digits"] == 1092376
    assert report["lower"] is None and report["lower_digits"] == 39664


def test_census(capsys):
    code, out, _ = run(capsys, "census", "--n", "3", "--words")
    report = json.loads(out)
    assert code == 0
    assert report["exact_count"] == report["verified"] == 4
    assert report["contains_paper_word"] and "012032" in report["words"]
    assert report["upper"] == 32


def test_stcount(capsys, tmp_path):
    path = tmp_path / "k4.edges"
    path.write_text("p 4 6\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n")
    code, out, _ = run(capsys, "stcount", "--graph", str(path))
    assert code == 0 and json.loads(out)["spanning_trees"] == 16
    assert run(capsys, "stcount", "--graph", str(tmp_path / "none"))[0] == 2


def test_deterministic(capsys):
    assert run(capsys, "tree", "--n", "6")[1] == run(capsys, "tree", "--n", "6")[1]


def test_shell_pipeline():
    cmd = [sys.executable, "-m", "permucycle"]
    gen = subprocess.run(cmd + ["generate", "--n", "6"], capture_output=True, text=True, check=True)
    ver = subprocess.run(cmd + ["verify", "--n", "6"], input=gen.stdout, capture_output=True, text=True)
    assert ver.returncode == 0
    assert "valid" in ver.stderr and ver.stdout == ""
