import json
import subprocess
import sys

import pytest

from dptree import parse_graph
from dptree.cli import main

from helpers import C4, INSTANCE_C, INSTANCE_D, TRIANGLE


@pytest.fixture
def files(tmp_path):
    def write(name, text):
        path = tmp_path / name
        path.write_text(text + "\n")
        return str(path)

    return write


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_check_instance_c(files, capsys):
    code, out, _ = run(capsys, "check", "-g", files("c.txt", INSTANCE_C), "-u", "0", "-v", "2")
    assert code == 0
    assert "P=(0,1,2)" in out
    assert "V_1 (anchor 1): [1, 3]" in out


def test_check_instance_b(files, capsys):
    code, out, _ = run(capsys, "check", "-g", files("b.txt", C4), "-u", "0", "-v", "2")
    assert code == 1
    assert "condition (1) fails: multiple shortest paths" in out


def test_check_missing_file(tmp_path, capsys):
    code, _, err = run(capsys, "check", "-g", str(tmp_path / "nope.txt"), "-u", "0", "-v", "1")
    assert code == 2 and "cannot read" in err


@pytest.mark.parametrize(
    "argv",
    [
        ["check", "-u", "0", "-v", "1"],
        ["check", "-g", "x", "-u", "a", "-v", "1"],
        ["check", "-g", "x", "-u", "-1", "-v", "1"],
        ["bogus"],
    ],
)
def test_bad_arguments_exit_2(argv, capsys):
    with pytest.raises(SystemExit) as info:
        main(argv)
    assert info.value.code == 2


def test_check_bad_vertex_and_equal_roots(files, capsys):
    path = files("c.txt", INSTANCE_C)
    assert run(capsys, "check", "-g", path, "-u", "0", "-v", "9")[0] == 2
    assert run(capsys, "check", "-g", path, "-u", "1", "-v", "1")[0] == 2


def test_check_invalid_graph(files, capsys):
    code, _, err = run(capsys, "check", "-g", files("bad.txt", "p dptree 4 2\ne 0 1 1\ne 2 3 1"), "-u", "0", "-v", "1")
    assert code == 2 and "DISCONNECTED" in err


def test_check_json_is_recheckable(files, capsys):
    code, out, _ = run(capsys, "check", "-g", files("d.txt", INSTANCE_D), "-u", "0", "-v", "2", "--json")
    assert code == 1
    doc = json.loads(out)
    assert doc["conditions"] == {"1": True, "2": True, "3": False}
    assert doc["violation"]["clause"] == "BALANCE_CLAUSE"
    assert (doc["violation"]["x"], doc["violation"]["y"]) == (0, 3)
    # recompute condition 3 from the document alone
    prefix = doc["path"]["prefix"]
    block_of = doc["partition"]["block_of"]
    anchor_dist = doc["partition"]["anchor_dist"]
    first_bad = None
    for x, y, w in doc["edges"]:
        i, j = block_of[x], block_of[y]
        if i == j:
            continue
        gap = abs(prefix[i] - prefix[j])
        if w < gap or abs(anchor_dist[x] - anchor_dist[y]) > w - gap:
            first_bad = (x, y)
            break
    assert first_bad == (0, 3)
    v = doc["violation"]
    assert v["imbalance"] > v["weight"] - v["gap"]


def test_check_json_tie(files, capsys):
    code, out, _ = run(capsys, "check", "-g", files("a.txt", TRIANGLE), "-u", "0", "-v", "1", "--json")
    assert code == 1
    doc = json.loads(out)
    assert doc["tie"] == {"vertex": 2, "anchors": [0, 1], "distance": 10**9}
    assert doc["partition"] is None and doc["conditions"]["3"] is None


def test_construct_and_verify(files, tmp_path, capsys):
    graph_path = files("c.txt", INSTANCE_C)
    tree_path = str(tmp_path / "t.txt")
    assert run(capsys, "construct", "-g", graph_path, "-u", "0", "-v", "2", "-o", tree_path)[0] == 0
    assert open(tree_path).read() == "e 0 1\ne 1 2\ne 1 3\n"
    for r in ("0", "2"):
        assert run(capsys, "verify", "-g", graph_path, "-t", tree_path, "-r", r)[0] == 0


def test_construct_instance_d(files, capsys):
    code, out, _ = run(capsys, "construct", "-g", files("d.txt", INSTANCE_D), "-u", "0", "-v", "2")
    assert code == 1
    assert "BALANCE_CLAUSE on edge (0,3)" in out


def test_construct_tree_input(files, capsys):
    text = "p dptree 4 3\ne 0 1 1\ne 1 2 2.5\ne 1 3 1"
    code, out, _ = run(capsys, "construct", "-g", files("t.txt", text), "-u", "3", "-v", "2")
    assert code == 0
    assert out.split() == "e 0 1 e 1 2 e 1 3".split()


def test_verify_failure_witness(files, capsys):
    graph_path = files("c.txt", INSTANCE_C)
    tree_path = files("t.txt", "e 0 1\ne 1 2\ne 0 3")
    code, out, _ = run(capsys, "verify", "-g", graph_path, "-t", tree_path, "-r", "2")
    assert code == 1
    assert "vertex 3 has d_T=9 but d_G=4" in out


@pytest.mark.parametrize("tree", ["e 0 1\ne 1 3\ne 0 3", "e 0 1\ne 1 2\ne 0 2", "e 0 1\ne 1 2", "x 0 1"])
def test_verify_malformed_tree(files, capsys, tree):
    graph_path = files("c.txt", INSTANCE_C)
    assert run(capsys, "verify", "-g", graph_path, "-t", files("t.txt", tree), "-r", "0")[0] == 2


def test_oracle_agree_no(files, capsys):
    code, out, _ = run(capsys, "oracle", "-g", files("a.txt", TRIANGLE), "-u", "0", "-v", "1")
    assert code == 0
    assert out.splitlines()[0] == "theorem: no, oracle: no, AGREE"


def test_oracle_agree_yes(files, capsys):
    code, out, _ = run(capsys, "oracle", "-g", files("c.txt", INSTANCE_C), "-u", "0", "-v", "2")
    assert code == 0
    assert out.splitlines() == ["theorem: yes, oracle: yes (count 1), AGREE", "e 0 1", "e 1 2", "e 1 3"]


def test_oracle_disagree(files, capsys):
    chord = "p dptree 3 3\ne 0 1 4\ne 0 2 2\ne 1 2 2"
    code, out, _ = run(capsys, "oracle", "-g", files("x.txt", chord), "-u", "0", "-v", "1")
    assert code == 3
    assert "DISAGREE" in out


def test_oracle_cap(files, capsys):
    code, _, err = run(capsys, "oracle", "-g", files("c.txt", INSTANCE_C), "-u", "0", "-v", "2", "--cap", "1")
    assert code == 2 and "cap" in err


def test_gen(tmp_path, capsys):
    a, b = str(tmp_path / "a.txt"), str(tmp_path / "b.txt")
    args = ["gen", "--n", "6", "--m", "9", "--seed", "42", "--max-weight", "3"]
    assert run(capsys, *args, "-o", a)[0] == 0
    assert run(capsys, *args, "-o", b)[0] == 0
    assert open(a, "rb").read() == open(b, "rb").read()
    g = parse_graph(open(a).read())
    assert g.n == 6 and g.m == 9
    assert run(capsys, "check", "-g", a, "-u", "0", "-v", "5")[0] in (0, 1)


def test_gen_single_edge(capsys):
    code, out, _ = run(capsys, "gen", "--n", "2", "--m", "1")
    assert code == 0 and out == "p dptree 2 1\ne 0 1 1\n"


def test_gen_invalid(capsys):
    assert run(capsys, "gen", "--n", "3", "--m", "5")[0] == 2


def test_module_entry_point(files):
    proc = subprocess.run(
        [sys.executable, "-m", "dptree", "check", "-g", files("c.txt", INSTANCE_C), "-u", "0", "-v", "2"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "common DP-tree exists: yes" in proc.stdout
