import csv
import io
import json
import subprocess
import sys

import pytest

from yfjump.cli import run
from yfjump.counting import pairs_up_to_rank


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), out=out)
    return code, out.getvalue()


def test_count():
    assert call("count", "--from", "e", "--to", "22", "--steps", "2") == (0, "7\n")
    for method in ("oracle", "recursive", "closed"):
        assert call("count", "--from", "1", "--to", "21", "--steps", "2", "--method", method) == (0, "4\n")


def test_count_methods_agree_on_grid():
    for w, v in list(pairs_up_to_rank(5, 2))[::7]:
        w, v = w or "e", v or "e"
        outs = {call("count", "--from", w, "--to", v, "--steps", "4", "--method", m)[1]
                for m in ("oracle", "recursive", "closed")}
        assert len(outs) == 1


def test_chains_covers_order():
    assert call("chains", "--from", "e", "--to", "22") == (0, "3\n")
    assert call("covers", "--word", "21") == (0, "121 211 22\n")
    assert call("covers", "--word", "22", "--down") == (0, "12 21\n")
    assert call("covers", "--word", "e", "--format", "json") == (0, '["1"]\n')
    assert call("order", "--left", "1", "--right", "2") == (0, "true\n")
    assert call("order", "--left", "11", "--right", "2") == (0, "false\n")


def test_fcoef_and_qpoly():
    assert call("fcoef", "--to", "22") == (0, "[3, 4, 1]\n")
    assert call("fcoef", "--from", "1", "--to", "21") == (0, "[2, 1]\n")
    code, out = call("qpoly", "--from", "1", "--to", "21")
    assert code == 0 and out.splitlines() == ["1 + p", "[1, 1]"]
    code, out = call("qpoly", "--to", "22", "--eval", "1/2")
    assert out.splitlines() == ["1 + 2*p", "[1, 2]", "2/1 2"]


def test_measure():
    code, out = call("measure", "--tail", "2", "--p", "1/2", "--K", "1", "--word", "1", "--level", "1")
    assert code == 0
    assert out.split()[0] == "1/4"


def test_levelmass_json():
    code, out = call("levelmass", "--tail", "2", "--p", "1/2", "--K", "1", "--level", "1",
                     "--max-len", "3", "--format", "json")
    doc = json.loads(out)
    assert doc["masses"] == {"e": "1/2", "1": "1/4", "2": "1/8", "12": "1/16", "112": "1/32"}
    assert doc["total"] == "31/32"


def test_converge_csv():
    code, out = call("converge", "--tail", "2", "--p", "1/2", "--K", "1", "--word", "1",
                     "--level", "1", "--m", "10,50,200")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0
    assert [r["m"] for r in rows] == ["10", "50", "200"]
    errs = [float(r["abs_error_float"]) for r in rows]
    assert errs[0] > errs[1] > errs[2]
    assert rows[0]["value_num"] == "20" and rows[0]["value_den"] == "77"


def test_sample_is_reproducible():
    argv = ("sample", "--tail", "2", "--p", "1/2", "--K", "1", "--levels", "6", "--seed", "4")
    a, b = call(*argv), call(*argv)
    assert a == b and a[0] == 0
    assert a[1].split()[0] == "e"


def test_graph_dot():
    code, out = call("graph", "--max-rank", "3")
    assert code == 0
    assert out.startswith("digraph YF {")
    assert '"e" -> "1";' in out and '"2" -> "21";' in out
    assert out.count("->") == 7
    code, out = call("graph", "--max-rank", "4", "--K", "0")
    assert out.count("->") == 4


@pytest.mark.parametrize(
    "argv",
    [
        ("count", "--from", "3", "--to", "2", "--steps", "1"),
        ("count", "--from", "", "--to", "2", "--steps", "1"),
        ("measure", "--tail", "12", "--p", "1/2", "--K", "1", "--word", "1", "--level", "1"),
        ("measure", "--tail", "2", "--p", "0", "--K", "1", "--word", "1", "--level", "1"),
        ("measure", "--tail", "2", "--p", "3/2", "--K", "1", "--word", "1", "--level", "1"),
        ("measure", "--tail", "22", "--p", "1/2", "--K", "1", "--word", "1", "--level", "1"),
        ("fcoef", "--from", "11", "--to", "2"),
        ("graph", "--max-rank", "3", "--format", "csv"),
        ("count", "--from", "e", "--to", "2", "--steps", "-1"),
        ("bogus",),
    ],
)
def test_validation_errors_exit_2(argv, capsys):
    code, _ = call(*argv)
    assert code == 2


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "yfjump", "count", "--from", "e", "--to", "22", "--steps", "2"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout == "7\n"
