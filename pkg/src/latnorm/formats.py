"""Text formats: ``.lat`` lattices, CSV operation tables, DOT diagrams, JSON reports.

A ``.lat`` file is line oriented::

    # comments run to the end of the line
    format 1
    name s72
    elements 0 m n b c d u v 1
    cover 0 m
    cover 0 n
    ...

``format`` and ``name`` are optional; ``elements`` must precede every
``cover``.  :func:`emit_lattice` writes the normalized form (no comments,
covers sorted by element position), which :func:`parse_lattice` reads back
unchanged.
"""
from __future__ import annotations

import csv
import hashlib
import io
import json
from typing import Iterable

from . import __version__
from .analysis import Witness
from .core import FiniteLattice, build_from_covers
from .errors import LatSyntaxError, ShapeMismatch, UnknownLabel
from .tnorm import OpTable

FORMAT_VERSION = 1


def parse_lattice(text: str) -> FiniteLattice:
    labels = None
    name = None
    covers = []
    seen_format = False
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        word, *rest = line.split()
        if word == "format":
            if seen_format or labels is not None or rest != [str(FORMAT_VERSION)]:
                raise LatSyntaxError(f"expected 'format {FORMAT_VERSION}' before the elements", lineno)
            seen_format = True
        elif word == "name":
            if len(rest) != 1 or name is not None:
                raise LatSyntaxError("'name' takes exactly one word and may appear once", lineno)
            name = rest[0]
        elif word == "elements":
            if labels is not None:
                raise LatSyntaxError("duplicate 'elements' line", lineno)
            if not rest:
                raise LatSyntaxError("'elements' needs at least one label", lineno)
            labels = rest
        elif word == "cover":
            if labels is None:
                raise LatSyntaxError("'cover' before 'elements'", lineno)
            if len(rest) != 2:
                raise LatSyntaxError("'cover' takes exactly two labels", lineno)
            for lab in rest:
                if lab not in labels:
                    raise UnknownLabel(f"undeclared label {lab!r}", lineno)
            covers.append((rest[0], rest[1]))
        else:
            raise LatSyntaxError(f"unknown directive {word!r}", lineno)
    if labels is None:
        raise LatSyntaxError("missing 'elements' line")
    return build_from_covers(labels, covers, name=name)


def emit_lattice(L: FiniteLattice, header: Iterable[str] = ()) -> str:
    """Normalized ``.lat`` text; ``header`` lines are written as leading comments."""
    out = [f"# {h}" for h in header]
    out.append(f"format {FORMAT_VERSION}")
    if L.name and len(L.name.split()) == 1:
        out.append(f"name {L.name}")
    out.append("elements " + " ".join(L.labels))
    out += [f"cover {x} {y}" for x, y in L.cover_labels()]
    return "\n".join(out) + "\n"


def lattice_hash(L: FiniteLattice) -> str:
    """SHA-256 of the normalized text, ignoring the name."""
    return hashlib.sha256(emit_lattice(L.renamed(None)).encode()).hexdigest()


def parse_optable(text: str, L: FiniteLattice) -> OpTable:
    rows = [r for r in csv.reader(io.StringIO(text)) if r and any(c.strip() for c in r)]
    if not rows:
        raise ShapeMismatch("empty table")
    rows = [[c.strip() for c in r] for r in rows]
    head = rows[0][1:]
    body = rows[1:]
    n = L.n
    if len(head) != n or len(body) != n or any(len(r) != n + 1 for r in body):
        raise ShapeMismatch(f"expected a {n}x{n} grid with a label row and column")
    for line, labels in ((1, head), *((k + 2, [r[0]]) for k, r in enumerate(body))):
        for lab in labels:
            if lab not in L.labels:
                raise UnknownLabel(f"label {lab!r} is not in the lattice", line)
    if len(set(head)) != n or len({r[0] for r in body}) != n:
        raise ShapeMismatch("repeated row or column label")
    cols = [L.idx(lab) for lab in head]
    table = [[0] * n for _ in range(n)]
    for k, r in enumerate(body):
        x = L.idx(r[0])
        for c, cell in zip(cols, r[1:]):
            if cell not in L.labels:
                raise UnknownLabel(f"cell value {cell!r} is not in the lattice", k + 2)
            table[x][c] = L.idx(cell)
    return OpTable(L, tuple(map(tuple, table)))


def emit_optable(T: OpTable, corner: str = "T") -> str:
    L = T.lattice
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow([corner, *L.labels])
    for x in range(L.n):
        w.writerow([L.labels[x], *(L.labels[v] for v in T.table[x])])
    return buf.getvalue()


def _q(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def emit_dot(L: FiniteLattice, highlight: Witness | Iterable[int] | None = None) -> str:
    """Hasse diagram in DOT, bottom-up, one rank per element height."""
    if isinstance(highlight, Witness):
        marked = set(highlight.indices)
    else:
        marked = set(highlight or ())
    out = [f"// format: {FORMAT_VERSION}", f"digraph {_q(L.name or 'L')} {{",
           "  rankdir=BT;", "  node [shape=circle, fontsize=11];", "  edge [arrowhead=none];"]
    for x in range(L.n):
        attrs = f"label={_q(L.labels[x])}"
        if x in marked:
            attrs += ", style=filled, fillcolor=black, fontcolor=white"
        out.append(f"  {_q(L.labels[x])} [{attrs}];")
    for h in sorted(set(L.height)):
        members = " ".join(_q(L.labels[x]) + ";" for x in range(L.n) if L.height[x] == h)
        out.append(f"  {{ rank=same; {members} }}")
    for x, y in L.cover_labels():
        out.append(f"  {_q(x)} -> {_q(y)};")
    out.append("}")
    return "\n".join(out) + "\n"


def make_report(kind: str, L: FiniteLattice, payload: dict) -> dict:
    return {
        "format": FORMAT_VERSION,
        "tool": "latnorm",
        "version": __version__,
        "kind": kind,
        "lattice": L.name,
        "input_sha256": lattice_hash(L),
        **payload,
    }


def dump_report(report: dict) -> str:
    return json.dumps(report, indent=2, ensure_ascii=False) + "\n"


def load_report(text: str) -> dict:
    return json.loads(text)
