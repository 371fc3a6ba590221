"""Command-line front end.

Exit codes carry verdicts: 0 for the positive answer, 1 for the negative
one, 3 when a search ran out of budget, 2 for bad input or usage.
Reports go to stdout, diagnostics to stderr.
"""
from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import analysis, corpus, search, tnorm
from .core import FiniteLattice, add_eye, direct_product, glued_sum, ordinal_sum
from .errors import LatticeError
from .formats import (dump_report, emit_dot, emit_lattice, emit_optable, make_report,
                      parse_lattice, parse_optable)


class UsageError(Exception):
    pass


def load_lattice(ref: str) -> FiniteLattice:
    """A path to a ``.lat`` file, or the name of a corpus entry."""
    p = Path(ref)
    if p.is_file():
        L = parse_lattice(p.read_text())
        return L if L.name else L.renamed(p.stem)
    if ref in corpus.names():
        return corpus.get(ref)
    raise UsageError(f"{ref}: no such file or corpus entry")


def _write(text: str, out: str | None):
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _elems(L: FiniteLattice, spec: str) -> list[int]:
    try:
        return [L.idx(s.strip()) for s in spec.split(",") if s.strip()]
    except KeyError as e:
        raise UsageError(f"unknown element {e.args[0]!r}") from None


def _flags_text(d: dict) -> str:
    return "".join(f"{k}: {str(v).lower()}\n" for k, v in d.items())


def _witness_text(L, w) -> str:
    if w is None:
        return "none"
    pairs = ", ".join(f"{r}={L.labels[i]}" for r, i in w.elements)
    return f"{w.name} [{pairs}]" + (f" {w.detail}" if w.detail else "")


# --------------------------------------------------------------------------
# subcommands


def cmd_check(a) -> int:
    L = load_lattice(a.file)
    rep = analysis.classify(L)
    if a.json:
        _write(dump_report(make_report("classification", L, rep.as_dict(L))), None)
        return 0
    d = rep.as_dict(L)
    out = [f"lattice: {L.name} ({L.n} elements)\n", _flags_text(d["flags"])]
    for key in ("atoms", "join_irreducible", "meet_irreducible", "bi_irreducible"):
        out.append(f"{key}: {' '.join(d[key]) or '-'}\n")
    for k, w in rep.witnesses.items():
        out.append(f"witness {k}: {_witness_text(L, w)}\n")
    if rep.flags["modular"]:
        out.append(f"forbidden 1-sublattice: {_witness_text(L, rep.forbidden)}\n")
    _write("".join(out), None)
    return 0


def cmd_forbidden(a) -> int:
    L = load_lattice(a.file)
    w = analysis.find_forbidden_1_sublattice(L)
    if a.json:
        body = {"found": w is not None, "witness": None if w is None else w.as_dict(L)}
        _write(dump_report(make_report("forbidden", L, body)), None)
    else:
        _write(f"forbidden 1-sublattice: {_witness_text(L, w)}\n", None)
    return 0 if w is None else 1


def cmd_search(a) -> int:
    L = load_lattice(a.file)
    limit = a.limit if a.limit is not None else (10**9 if a.all else 1)
    cfg = search.SearchConfig(solution_limit=limit, node_budget=a.node_budget, threads=a.threads)
    fn = search.exists_left_continuous_tnorm if a.tnorm else search.exists_join_distributive_pseudo_tnorm
    res = fn(L, cfg)
    kind = "tnorm" if a.tnorm else "pseudo_tnorm"
    if a.json:
        body = {"problem": kind, "status": res.status, "nodes_explored": res.nodes_explored,
                "solutions": [[[L.labels[v] for v in row] for row in T.table] for T in res.solutions]}
        _write(dump_report(make_report("search", L, body)), None)
    else:
        out = [f"problem: {kind}\nstatus: {res.status}\nnodes: {res.nodes_explored}\n"]
        for k, T in enumerate(res.solutions):
            out.append(f"\n# solution {k + 1}\n{emit_optable(T)}")
        _write("".join(out), None)
    return {search.FOUND: 0, search.EXHAUSTED: 1, search.BUDGET: 3}[res.status]


def cmd_construct(a) -> int:
    L = load_lattice(a.file)
    T = tnorm.construct_planar(L, a.a, a.b)
    _write(emit_optable(T), a.output)
    return 0


def cmd_verify(a) -> int:
    L = load_lattice(a.file)
    T = parse_optable(Path(a.table).read_text(), L)
    if a.law:
        bad = [x for x in a.law if x not in tnorm.LAWS]
        if bad:
            raise UsageError(f"unknown law {bad[0]!r}; choose from {', '.join(tnorm.LAWS)}")
        rep = tnorm.verify(T, laws=tuple(a.law), required=tuple(a.law))
    elif a.pseudo:
        rep = tnorm.verify_pseudo_tnorm(T)
    else:
        rep = tnorm.verify_tnorm(T)
    if a.json:
        _write(dump_report(make_report("verification", L, rep.as_dict(L))), None)
    else:
        out = [f"ok: {str(rep.ok).lower()}\n"]
        for law, w in rep.results.items():
            mark = "*" if law in rep.required else " "
            out.append(f"{mark} {law}: {'pass' if w is None else 'FAIL ' + _witness_text(L, w)}\n")
        _write("".join(out), None)
    return 0 if rep.ok else 1


def cmd_sum(a) -> int:
    L1, L2 = load_lattice(a.left), load_lattice(a.right)
    S = glued_sum(L1, L2) if a.glued else ordinal_sum(L1, L2)
    _write(emit_lattice(S), a.output)
    return 0


def cmd_product(a) -> int:
    _write(emit_lattice(direct_product(load_lattice(a.left), load_lattice(a.right))), a.output)
    return 0


def cmd_eye(a) -> int:
    L = load_lattice(a.file)
    sq = [s.strip() for s in a.square.split(",")]
    if len(sq) != 4:
        raise UsageError("--square takes four comma-separated labels lo,x,y,hi")
    _write(emit_lattice(add_eye(L, sq, label=a.label)), a.output)
    return 0


def cmd_enumerate(a) -> int:
    Ls = search.enumerate_lattices(a.n, modular=a.modular or None, atomistic=a.atomistic or None,
                                   distributive=a.distributive or None)
    if a.output:
        os.makedirs(a.output, exist_ok=True)
        for L in Ls:
            Path(a.output, f"{L.name}.lat").write_text(emit_lattice(L))
        print(f"{len(Ls)} lattices written to {a.output}")
    else:
        _write("\n".join(emit_lattice(L) for L in Ls), None)
        print(f"# {len(Ls)} lattices", file=sys.stderr)
    return 0


def cmd_corpus(a) -> int:
    if a.action == "list":
        for nm in corpus.names():
            print(f"{nm:12} {corpus.get(nm).n:3}  {corpus.PROVENANCE[nm]}")
    elif a.action == "show":
        if not a.name:
            raise UsageError("corpus show needs a NAME")
        try:
            _write(corpus.source_text(a.name), None)
        except KeyError as e:
            raise UsageError(str(e.args[0])) from None
    else:
        if not a.name:
            raise UsageError("corpus export needs a DIR")
        os.makedirs(a.name, exist_ok=True)
        for nm in corpus.names():
            Path(a.name, f"{nm}.lat").write_text(corpus.source_text(nm))
        Path(a.name, "table1.csv").write_text(corpus.table1_text())
        print(f"{len(corpus.names())} lattices and table1.csv written to {a.name}")
    return 0


def cmd_laws(a) -> int:
    cfg = search.SearchConfig(node_budget=a.node_budget)
    rep = search.run_law_suite("corpus" if a.corpus else a.enumerated, cfg=cfg)
    if a.json:
        _write(dump_report({"format": 1, "tool": "latnorm", "kind": "law_suite", **rep.as_dict()}), None)
    else:
        out = [f"scope: {rep.scope}\nlattices: {len(rep.rows)}\n"
               f"counterexamples: {len(rep.counterexamples)}\n"]
        out += [f"  {c.check} on {c.lattice}: {c.detail}\n" for c in rep.counterexamples]
        out.append(f"converse witnesses (1-distributive, no pseudo-t-norm): "
                   f"{' '.join(rep.converse_witnesses) or '-'}\n")
        out.append(f"budget exceeded: {' '.join(rep.budget_exceeded) or '-'}\n")
        _write("".join(out), None)
    return 0 if rep.ok else 1


def cmd_render(a) -> int:
    L = load_lattice(a.file)
    marked = _elems(L, a.highlight) if a.highlight else None
    _write(emit_dot(L, marked), a.output)
    return 0


# --------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(2)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="latnorm", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    s = sub.add_parser("check", help="classify a lattice")
    s.add_argument("file")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("forbidden", help="look for M3, M3,2 or M3,4 as a 1-sublattice")
    s.add_argument("file")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_forbidden)

    s = sub.add_parser("search", help="decide existence of a ∨-distributive pseudo-t-norm or t-norm")
    s.add_argument("file")
    s.add_argument("--tnorm", action="store_true", help="require associativity and neutrality")
    s.add_argument("--all", action="store_true", help="collect every solution")
    s.add_argument("--limit", type=int)
    s.add_argument("--node-budget", type=int, default=search.SearchConfig.node_budget)
    s.add_argument("--threads", type=int, default=1)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_search)

    s = sub.add_parser("construct", help="build a pseudo-t-norm from a known construction")
    s.add_argument("kind", choices=["planar"])
    s.add_argument("file")
    s.add_argument("--a", required=True)
    s.add_argument("--b", required=True)
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_construct)

    s = sub.add_parser("verify", help="check an operation table against the laws")
    s.add_argument("file")
    s.add_argument("table")
    s.add_argument("--law", action="append", help="law to require (repeatable)")
    s.add_argument("--pseudo", action="store_true", help="require the pseudo-t-norm laws only")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("sum", help="ordinal or glued sum")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--ordinal", action="store_true")
    g.add_argument("--glued", action="store_true")
    s.add_argument("left")
    s.add_argument("right")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_sum)

    s = sub.add_parser("product", help="direct product")
    s.add_argument("left")
    s.add_argument("right")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_product)

    s = sub.add_parser("eye", help="insert an eye into a covering square")
    s.add_argument("file")
    s.add_argument("--square", required=True, metavar="lo,x,y,hi")
    s.add_argument("--label")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_eye)

    s = sub.add_parser("enumerate", help="all lattices of a given size up to isomorphism")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--modular", action="store_true")
    s.add_argument("--atomistic", action="store_true")
    s.add_argument("--distributive", action="store_true")
    s.add_argument("-o", "--output", metavar="DIR")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("corpus", help="the bundled named lattices")
    s.add_argument("action", choices=["list", "show", "export"])
    s.add_argument("name", nargs="?", help="entry name for show, directory for export")
    s.set_defaults(func=cmd_corpus)

    s = sub.add_parser("laws", help="run the structural law suite")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--corpus", action="store_true")
    g.add_argument("--enumerated", type=int, metavar="N")
    s.add_argument("--node-budget", type=int, default=search.SearchConfig.node_budget)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_laws)

    s = sub.add_parser("render", help="Hasse diagram as DOT")
    s.add_argument("file")
    s.add_argument("--highlight", metavar="e1,e2,...")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_render)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, LatticeError, OSError, ValueError) as e:
        where = f" (line {e.line})" if getattr(e, "line", None) else ""
        print(f"latnorm: error: {e}{where}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
