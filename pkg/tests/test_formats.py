import json

import pytest
from hypothesis import given

from conftest import lattices, tables
from latnorm import corpus
from latnorm.analysis import classify
from latnorm.core import chain
from latnorm.errors import LatSyntaxError, ShapeMismatch, UnknownLabel
from latnorm.formats import (dump_report, emit_dot, emit_lattice, emit_optable, lattice_hash,
                             load_report, make_report, parse_lattice, parse_optable)
from latnorm.tnorm import t_meet, verify_tnorm

PINNED = {
    "c2": "b61f6f94a03786b6986c3414c20c8f9b63b0c6c5447ff8cead82ef2af36f2f2a",
    "c3": "d1457dccc7c15d14bf014ec32e86af8a0da434dad5a1c6d5179140d16e26c6a6",
    "c4": "dc4be69f23f7ab49f38d1239f4c371623abb389b28c1daf16b6c310e7d035a64",
    "b2": "6f4bdd3fe976640db79c6fa706f42938383074ee6b67878047e754c2405811e3",
    "b3": "e34fd04b94ad0f212a7ffe211b53a7ab6fa0741034b173e8e9f0572f7d704cbb",
    "grid23": "3bc590dd53e9382c79ae5801738aa54e324cda889ad0c8912c1dab53ff2ece0e",
    "n5": "fb8221297301141d43f603aa1de5f465a5662239374da9043df29e3c243a0204",
    "m3": "a52b6a3c3ced837f4f301201cc9096763fdc7fed1f9a11e3e5034d805bee0ef6",
    "m3_2": "d21953c4141f26819032d1a2065450e252237894b156799809511d957fd8ab7e",
    "m3_4": "2dcd48098006e62184b4ae83938ea6b8d4fb36c5169f97ebd48ec19298f60e7e",
    "s72": "4c59595b290d6c1bc418746a4ae578a64899eab261f7ea0f6e9ffea5cf95d4e4",
    "s72_star": "e852d2f2fdc6a2c3c34f6f1d1a3a95186482c5082fb4eb3f72d6359a4d821838",
    "fig3_s": "af5f93bf7feefbbdca0a0018e0bf0b8a23cd315e543371bc582791762199bf12",
    "fig3_splus": "47f7bb0b58c7f9efa48e8ed9d52650e9c877278e45bb4a28175813712044cb3e",
    "fig4_L": "923e92b6f8c59a97998ff83aff05e05de9a600c9cef5b8e143edc2b4da3baacc",
}


def test_corpus_hashes_are_pinned():
    assert corpus.names() == list(PINNED)
    assert {nm: lattice_hash(corpus.get(nm)) for nm in corpus.names()} == PINNED


def test_corpus_entries():
    e = corpus.entry("s72")
    assert e.build() == corpus.get("s72") and e.build().n == 9
    assert "Figure 1" in e.provenance
    with pytest.raises(KeyError):
        corpus.entry("nope")


def test_parse_minimal():
    L = parse_lattice("elements 0 1\ncover 0 1")
    assert L.n == 2 and L.labels == ("0", "1") and L.name is None


@pytest.mark.parametrize("text,line", [
    ("cover a b", 1),
    ("elements 0 1\ncover 0 1 2", 2),
    ("elements 0 1\n\nfrobnicate", 3),
    ("format 2\nelements 0", 1),
    ("elements 0 1\nelements 0 1", 2),
    ("# nothing here", None),
])
def test_syntax_errors_carry_lines(text, line):
    with pytest.raises(LatSyntaxError) as e:
        parse_lattice(text)
    assert e.value.line == line


def test_unknown_label_line():
    with pytest.raises(UnknownLabel) as e:
        parse_lattice("# c\nelements 0 1\ncover 0 1\ncover 0 x\n")
    assert e.value.line == 4


@given(lattices)
def test_lattice_round_trip(L):
    text = emit_lattice(L)
    M = parse_lattice(text)
    assert M == L
    assert emit_lattice(M) == text


def test_corpus_files_are_normalized_modulo_comments():
    for nm in corpus.names():
        src = corpus.source_text(nm)
        body = "".join(line + "\n" for line in src.splitlines() if not line.startswith("#"))
        assert body == emit_lattice(corpus.get(nm)), nm


def test_table1_golden():
    T = corpus.table1()
    assert T.at("h", "f") == "a" and T.at("g", "h") == "e"
    assert T.at("f", "h") == "a" and T.at("g", "g") == "f" and T.at("f", "e") == "0"
    assert emit_optable(T) == corpus.table1_text()


@given(tables())
def test_optable_round_trip(T):
    assert parse_optable(emit_optable(T), T.lattice) == T


def test_optable_reorders_and_validates():
    L = chain(3)
    text = "T,2,0,1\n1,1,0,1\n0,0,0,0\n2,2,0,1\n"
    assert parse_optable(text, L) == t_meet(L)
    with pytest.raises(ShapeMismatch):
        parse_optable("\n".join(corpus.table1_text().splitlines()[:-1]), corpus.get("c4"))
    nine = "\n".join(r.rsplit(",", 1)[0] for r in corpus.table1_text().splitlines()[:-1])
    with pytest.raises(ShapeMismatch):
        parse_optable(nine, corpus.get("fig4_L"))
    with pytest.raises(UnknownLabel):
        parse_optable("T,0,1,2\n0,0,0,0\n1,0,1,1\n2,0,1,x\n", L)
    with pytest.raises(UnknownLabel):
        parse_optable("T,0,1,z\n0,0,0,0\n1,0,1,1\n2,0,1,2\n", L)


def test_dot_output():
    c2 = emit_dot(corpus.get("c2"))
    assert c2.startswith("// format: 1\n")
    assert c2.count("->") == 1 and c2.count("[label=") == 2
    m3 = emit_dot(corpus.get("m3"))
    assert m3.count("->") == 6 and m3.count("[label=") == 5
    L = corpus.get("fig4_L")
    dot = emit_dot(L, [L.idx(x) for x in "fgh"])
    assert dot.count("fillcolor=black") == 3
    assert '"f" [label="f", style=filled' in dot
    assert emit_dot(L) == emit_dot(L)


def test_dot_highlights_a_witness():
    T = corpus.table1()
    w = verify_tnorm(T).results["associative"]
    assert emit_dot(T.lattice, w).count("fillcolor=black") == len(set(w.indices))


def test_report_round_trip():
    L = corpus.get("fig4_L")
    rep = make_report("classification", L, classify(L).as_dict(L))
    assert list(rep)[:6] == ["format", "tool", "version", "kind", "lattice", "input_sha256"]
    text = dump_report(rep)
    assert load_report(text) == rep
    assert dump_report(load_report(text)) == text
    assert json.loads(text)["input_sha256"] == PINNED["fig4_L"]
