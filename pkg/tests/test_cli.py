import json
import subprocess
import sys

import pytest

from latnorm import corpus
from latnorm.cli import main
from latnorm.formats import parse_lattice


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_check_text_and_json(capsys):
    code, out, _ = run(capsys, "check", "s72_star")
    assert code == 0 and "one_distributive: true" in out and "distributive: false" in out
    code, out, _ = run(capsys, "check", "s72", "--json")
    rep = json.loads(out)
    assert code == 0 and rep["kind"] == "classification" and rep["format"] == 1
    assert rep["flags"]["distributive"] is False


def test_forbidden_exit_codes(capsys):
    assert run(capsys, "forbidden", "m3_4")[0] == 1
    assert run(capsys, "forbidden", "b3")[0] == 0


def test_search_exit_codes(capsys):
    code, out, _ = run(capsys, "search", "s72")
    assert code == 1 and "status: exhausted-none" in out
    code, out, _ = run(capsys, "search", "fig4_L")
    assert code == 0 and out.count("# solution") == 1
    assert run(capsys, "search", "fig4_L", "--tnorm")[0] == 1
    assert run(capsys, "search", "m3", "--node-budget", "2")[0] == 3
    code, out, _ = run(capsys, "search", "c3", "--all", "--json")
    rep = json.loads(out)
    assert code == 0 and len(rep["solutions"]) == 2 and rep["status"] == "found"


def test_construct_matches_golden(capsys, tmp_path):
    out = tmp_path / "t.csv"
    assert run(capsys, "construct", "planar", "fig4_L", "--a", "f", "--b", "h", "-o", str(out))[0] == 0
    assert out.read_text() == corpus.table1_text()
    code, _, err = run(capsys, "construct", "planar", "fig4_L", "--a", "e", "--b", "h")
    assert code == 2 and "bi-irreducible" in err


def test_verify(capsys, tmp_path):
    t = tmp_path / "t1.csv"
    t.write_text(corpus.table1_text())
    code, out, _ = run(capsys, "verify", "fig4_L", str(t))
    assert code == 1 and "associative: FAIL" in out
    assert run(capsys, "verify", "fig4_L", str(t), "--pseudo")[0] == 0
    assert run(capsys, "verify", "fig4_L", str(t), "--law", "join_distributive")[0] == 0
    assert run(capsys, "verify", "fig4_L", str(t), "--law", "bogus")[0] == 2
    bad = tmp_path / "bad.csv"
    bad.write_text("T,0,1\n0,0,0\n1,0,1\n")
    assert run(capsys, "verify", "fig4_L", str(bad))[0] == 2


def test_lattice_builders(capsys, tmp_path):
    o = tmp_path / "o.lat"
    assert run(capsys, "sum", "--glued", "c2", "m3", "-o", str(o))[0] == 0
    assert parse_lattice(o.read_text()).n == 6
    assert run(capsys, "sum", "--ordinal", "c2", "m3", "-o", str(o))[0] == 0
    assert parse_lattice(o.read_text()).n == 7
    assert run(capsys, "product", "c2", "c3", "-o", str(o))[0] == 0
    assert parse_lattice(o.read_text()).n == 6
    assert run(capsys, "eye", "b2", "--square", "0,a,b,1", "-o", str(o))[0] == 0
    code, out, _ = run(capsys, "check", str(o))
    assert "modular: true" in out and "distributive: false" in out
    assert run(capsys, "eye", "c3", "--square", "0,a,1", "-o", str(o))[0] == 2
    assert run(capsys, "eye", "c3", "--square", "0,a,a,1", "-o", str(o))[0] == 2


def test_enumerate_and_corpus(capsys, tmp_path):
    d = tmp_path / "enum"
    assert run(capsys, "enumerate", "--n", "6", "--modular", "-o", str(d))[0] == 0
    assert len(list(d.glob("*.lat"))) == 8
    code, out, _ = run(capsys, "enumerate", "--n", "5")
    assert out.count("elements") == 5
    code, out, _ = run(capsys, "corpus", "list")
    assert code == 0 and len(out.splitlines()) == len(corpus.names())
    code, out, _ = run(capsys, "corpus", "show", "s72")
    assert out == corpus.source_text("s72")
    assert run(capsys, "corpus", "show", "nope")[0] == 2
    e = tmp_path / "exp"
    assert run(capsys, "corpus", "export", str(e))[0] == 0
    assert (e / "table1.csv").read_text() == corpus.table1_text()
    assert run(capsys, "check", str(e / "fig4_L.lat"))[0] == 0


def test_laws(capsys):
    code, out, _ = run(capsys, "laws", "--corpus")
    assert code == 0 and "counterexamples: 0" in out and "s72_star" in out
    code, out, _ = run(capsys, "laws", "--enumerated", "5", "--json")
    assert code == 0 and json.loads(out)["ok"] is True


def test_render(capsys, tmp_path):
    code, out, _ = run(capsys, "render", "fig4_L", "--highlight", "f,g,h")
    assert code == 0 and out.count("fillcolor=black") == 3
    assert run(capsys, "render", "fig4_L", "--highlight", "zz")[0] == 2


def test_input_errors(capsys, tmp_path):
    code, _, err = run(capsys, "check", "no/such/file.lat")
    assert code == 2 and "no such file" in err
    bad = tmp_path / "bad.lat"
    bad.write_text("elements 0 1\ncover 0 q\n")
    code, _, err = run(capsys, "check", str(bad))
    assert code == 2 and "line 2" in err
    with pytest.raises(SystemExit) as e:
        main(["search"])
    assert e.value.code == 2


def test_reports_are_deterministic(capsys):
    a = run(capsys, "check", "fig4_L", "--json")[1]
    b = run(capsys, "check", "fig4_L", "--json")[1]
    assert a == b


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "latnorm.cli", "search", "s72"], capture_output=True, text=True)
    assert r.returncode == 1 and "exhausted-none" in r.stdout
