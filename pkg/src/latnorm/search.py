"""Exhaustive existence search for ∨-distributive pseudo-t-norms and t-norms.

A ∨-distributive operation is fixed by its values on join-irreducible
second arguments: T(x, y) = ⋁ {T(x, j) : j ∈ J(L), 0 < j ≤ y}.  In the
commutative case the same holds for the first argument, so the free
variables are F(i, j) = T(i, j) for i ≤ j in J(L) \\ {0}, each ranging
over the down-set of i ∧ j.  Constraints are attached to the last
variable they mention and checked as soon as it is assigned.
"""
from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from itertools import combinations, product

from . import analysis
from .analysis import join_irreducibles
from .core import FiniteLattice, from_leq
from .errors import NotALattice, TooLarge
from .tnorm import OpTable, verify

log = logging.getLogger(__name__)

FOUND = "found"
EXHAUSTED = "exhausted-none"
BUDGET = "budget-exceeded"

MAX_ENUMERATION = 8


@dataclass(frozen=True)
class SearchConfig:
    require_associative: bool = False
    require_commutative: bool = True
    solution_limit: int = 1
    node_budget: int = 10**8
    threads: int = 1

    def __post_init__(self):
        if self.solution_limit < 1 or self.node_budget < 1 or self.threads < 1:
            raise ValueError("solution_limit, node_budget and threads must be positive")


@dataclass
class SearchOutcome:
    status: str
    solutions: list[OpTable] = field(default_factory=list)
    nodes_explored: int = 0

    @property
    def found(self) -> bool:
        return self.status == FOUND


class _Problem:
    """Variables, ordered domains and bucketed constraints for one lattice."""

    def __init__(self, L: FiniteLattice, cfg: SearchConfig):
        self.L, self.cfg = L, cfg
        J = L.join_table
        jp = [j for j in L.linear_extension if j in set(join_irreducibles(L)) and j != L.bottom]
        self.jp = jp
        down = L.downsets
        if cfg.require_commutative:
            # all pairs among the first k join-irreducibles come before the (k+1)-th
            keys = [(jp[a], jp[b]) for b in range(len(jp)) for a in range(b + 1)]
            self.var = {}
            for k, (i, j) in enumerate(keys):
                self.var[(i, j)] = self.var[(j, i)] = k
            self.domains = [sorted(down[L.meet_table[i][j]]) for i, j in keys]
            rows = jp
        else:
            # row x, column j; j = 0 carries T(x, 0), which is not forced for x ∉ {0, 1}
            cols = [L.bottom] + jp
            rows = [x for x in L.linear_extension if x not in (L.bottom, L.top)]
            keys = [(x, j) for x in rows for j in cols]
            self.var = {key: k for k, key in enumerate(keys)}
            self.domains = [list(range(L.n)) for _ in keys]
        self.keys = keys
        nv = len(keys)
        self.checks = [[] for _ in range(nv)]

        # need[x][y]: variables whose join gives T(x, y); None marks a fixed cell
        self.need = [[self._need(x, y) for y in range(L.n)] for x in range(L.n)]

        def add(varset, fn):
            if varset:
                self.checks[max(varset)].append(fn)

        if cfg.require_commutative:
            # monotone in both arguments
            for (i, j), (i2, j2) in combinations(keys, 2):
                k, k2 = self.var[(i, j)], self.var[(i2, j2)]
                lo, hi = ((k2, k) if self._below((i2, j2), (i, j))
                          else (k, k2) if self._below((i, j), (i2, j2)) else (None, None))
                if lo is not None:
                    add({lo, hi}, self._le_check(lo, hi))
            # T(1, j) = j: some i ≥ j must reach j, since j is join-irreducible
            for j in jp:
                ks = [self.var[(i, j)] for i in jp if L.leq[j][i]]
                add(set(ks), self._reach_check(ks, j))
        else:
            for x in rows:
                for j2, j in product([L.bottom] + jp, repeat=2):
                    if j2 != j and L.leq[j2][j]:
                        lo, hi = self.var[(x, j2)], self.var[(x, j)]
                        add({lo, hi}, self._le_check(lo, hi))
        # ∨-distributivity in the second argument
        for x in rows:
            for y, z in combinations(range(L.n), 2):
                if L.comparable(y, z):
                    continue
                yz = J[y][z]
                ks = self.need[x][yz]
                if ks is None:
                    continue
                add(set(ks), self._jd_check(x, y, z))

    def _below(self, p, q) -> bool:
        le = self.L.leq
        (i2, j2), (i, j) = p, q
        return (le[i2][i] and le[j2][j]) or (le[i2][j] and le[j2][i])

    def _need(self, x, y):
        L = self.L
        if self.cfg.require_commutative:
            return sorted({self.var[(i, j)] for i in self.jp if L.leq[i][x]
                           for j in self.jp if L.leq[j][y]})
        if x in (L.bottom, L.top):
            return None
        return sorted({self.var[(x, j)] for j in [L.bottom] + self.jp if L.leq[j][y]})

    def value(self, val, x: int, y: int) -> int:
        L = self.L
        ks = self.need[x][y]
        if ks is None:
            return y if x == L.top else L.bottom
        acc = L.bottom
        J = L.join_table
        for k in ks:
            acc = J[acc][val[k]]
        return acc

    def _le_check(self, lo, hi):
        le = self.L.leq
        return lambda val: le[val[lo]][val[hi]]

    def _reach_check(self, ks, j):
        return lambda val: any(val[k] == j for k in ks)

    def _jd_check(self, x, y, z):
        J = self.L.join_table
        yz = J[y][z]
        return lambda val: self.value(val, x, yz) == J[self.value(val, x, y)][self.value(val, x, z)]

    def table(self, val) -> OpTable:
        n = self.L.n
        return OpTable(self.L, tuple(tuple(self.value(val, x, y) for y in range(n)) for x in range(n)))

    def accept(self, T: OpTable) -> bool:
        laws = ["T1", "monotone", "join_distributive"]
        if self.cfg.require_commutative:
            laws.append("commutative")
        if self.cfg.require_associative:
            laws += ["associative", "neutral"]
        return verify(T, laws=laws, required=laws).ok

    def run(self, first_values=None, budget=None, limit=None) -> SearchOutcome:
        budget = self.cfg.node_budget if budget is None else budget
        limit = self.cfg.solution_limit if limit is None else limit
        nv = len(self.keys)
        val = [0] * nv
        sols: list[OpTable] = []
        nodes = 0
        exceeded = False

        def dfs(k: int) -> bool:
            nonlocal nodes, exceeded
            if k == nv:
                T = self.table(val)
                if self.accept(T):
                    sols.append(T)
                    return len(sols) >= limit
                return False
            dom = self.domains[k] if k or first_values is None else first_values
            for v in dom:
                nodes += 1
                if nodes > budget:
                    exceeded = True
                    return True
                val[k] = v
                if all(chk(val) for chk in self.checks[k]) and dfs(k + 1):
                    return True
            return False

        dfs(0)
        if sols:
            status = FOUND
        elif exceeded:
            status = BUDGET
        else:
            status = EXHAUSTED
        return SearchOutcome(status, sols, min(nodes, budget))


def _run_branch(args):
    L, cfg, v = args
    return _Problem(L, cfg).run(first_values=[v])


def _search(L: FiniteLattice, cfg: SearchConfig) -> SearchOutcome:
    prob = _Problem(L, cfg)
    if cfg.threads == 1 or not prob.keys:
        out = prob.run()
    else:
        # fork on the first variable; merge in branch order so the answer
        # matches the single-threaded run
        branches = [(L, cfg, v) for v in prob.domains[0]]
        with ProcessPoolExecutor(max_workers=cfg.threads) as ex:
            parts = list(ex.map(_run_branch, branches))
        sols = [T for p in parts for T in p.solutions][: cfg.solution_limit]
        nodes = sum(p.nodes_explored for p in parts)
        if sols:
            status = FOUND
        elif any(p.status == BUDGET for p in parts):
            status = BUDGET
        else:
            status = EXHAUSTED
        out = SearchOutcome(status, sols, nodes)
    log.debug("search %s on %s: %s after %d nodes", cfg, L.name, out.status, out.nodes_explored)
    return out


def exists_join_distributive_pseudo_tnorm(L: FiniteLattice, cfg: SearchConfig | None = None) -> SearchOutcome:
    cfg = SearchConfig() if cfg is None else cfg
    return _search(L, cfg)


def exists_left_continuous_tnorm(L: FiniteLattice, cfg: SearchConfig | None = None) -> SearchOutcome:
    cfg = SearchConfig() if cfg is None else cfg
    return _search(L, replace(cfg, require_associative=True, require_commutative=True))


def reconstruct_from_join_irreducibles(T: OpTable) -> OpTable:
    """Rebuild T from its columns at join-irreducible arguments by join-expansion."""
    L = T.lattice
    jp = [j for j in join_irreducibles(L) if j != L.bottom]

    def cell(x, y):
        return L.join_all(T.table[x][j] for j in jp if L.leq[j][y])

    return OpTable.from_function(L, cell)


# --------------------------------------------------------------------------
# enumeration of small lattices


def _poset_invariant(leq, x):
    n = len(leq)
    down = sum(leq[y][x] for y in range(n))
    up = sum(leq[x][y] for y in range(n))
    return down, up


def _poset_iso(a, b) -> bool:
    n = len(a)
    if n != len(b):
        return False
    ia = [_poset_invariant(a, x) for x in range(n)]
    ib = [_poset_invariant(b, x) for x in range(n)]
    if sorted(ia) != sorted(ib):
        return False
    f = [-1] * n
    used = [False] * n

    def extend(x):
        if x == n:
            return True
        for y in range(n):
            if used[y] or ib[y] != ia[x]:
                continue
            if all(a[x][u] == b[y][f[u]] and a[u][x] == b[f[u]][y] for u in range(x)):
                f[x], used[y] = y, True
                if extend(x + 1):
                    return True
                used[y] = False
        return False

    return extend(0)


def _posets(k: int) -> list[tuple[tuple[bool, ...], ...]]:
    """All posets on k points up to isomorphism, grown by adding a maximal point."""
    level = [()]
    for size in range(k):
        nxt: list = []
        buckets: dict = {}
        for P in level:
            # every down-closed subset can be the strict down-set of the new point
            for bits in product((False, True), repeat=size):
                ideal = [i for i in range(size) if bits[i]]
                if any(P[j][i] and not bits[j] for i in ideal for j in range(size)):
                    continue
                Q = [list(row) + [bits[i]] for i, row in enumerate(P)] + [[False] * size + [True]]
                Q = tuple(tuple(r) for r in Q)
                key = tuple(sorted(_poset_invariant(Q, x) for x in range(size + 1)))
                bucket = buckets.setdefault(key, [])
                if not any(_poset_iso(Q, R) for R in bucket):
                    bucket.append(Q)
                    nxt.append(Q)
        level = nxt
    return level


def enumerate_lattices(n: int, modular: bool | None = None, atomistic: bool | None = None,
                       distributive: bool | None = None) -> list[FiniteLattice]:
    """All n-element lattices up to isomorphism, optionally filtered (None = no filter).

    Names ``Ln_k`` number the unfiltered list, so a lattice keeps its name
    whatever filters are applied.
    """
    if n > MAX_ENUMERATION:
        raise TooLarge(f"enumeration is capped at n = {MAX_ENUMERATION}")
    if n < 1:
        return []
    if n == 1:
        found = [from_leq(["0"], [[True]])]
    else:
        # a lattice is its bounds wrapped around an arbitrary poset of n - 2 points
        k = n - 2
        labels = ["0"] + [chr(ord("a") + i) for i in range(k)] + ["1"]
        found = []
        for P in _posets(k):
            leq = [[x == 0 or y == n - 1 for y in range(n)] for x in range(n)]
            for x, y in product(range(k), repeat=2):
                leq[x + 1][y + 1] = P[x][y]
            try:
                found.append(from_leq(labels, leq))
            except NotALattice:
                pass
    out = []
    for idx, L in enumerate(found):
        if modular is not None and analysis.is_modular(L) != modular:
            continue
        if atomistic is not None and analysis.is_atomistic(L) != atomistic:
            continue
        if distributive is not None and analysis.is_distributive(L) != distributive:
            continue
        out.append(L.renamed(f"L{n}_{idx}"))
    return out


# --------------------------------------------------------------------------
# law suite


@dataclass
class Counterexample:
    check: str
    lattice: str
    detail: str


@dataclass
class SuiteReport:
    scope: str
    rows: list[dict] = field(default_factory=list)
    counterexamples: list[Counterexample] = field(default_factory=list)
    # 1-distributive lattices with no ∨-distributive pseudo-t-norm: the
    # converse of "search found ⇒ 1-distributive" is not expected to hold
    converse_witnesses: list[str] = field(default_factory=list)
    budget_exceeded: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def as_dict(self) -> dict:
        return {
            "scope": self.scope,
            "ok": self.ok,
            "lattices": len(self.rows),
            "counterexamples": [vars(c) for c in self.counterexamples],
            "converse_witnesses": list(self.converse_witnesses),
            "budget_exceeded": list(self.budget_exceeded),
            "rows": self.rows,
        }


def lattice_facts(L: FiniteLattice, cfg: SearchConfig | None = None) -> dict:
    """Every flag the law checks consult, computed once per lattice."""
    cfg = SearchConfig() if cfg is None else cfg
    pseudo = exists_join_distributive_pseudo_tnorm(L, cfg)
    tnorm = exists_left_continuous_tnorm(L, cfg)
    modular = analysis.is_modular(L)
    return {
        "name": L.name,
        "n": L.n,
        "modular": modular,
        "modular_via_n5": analysis.is_modular_via_n5(L),
        "distributive": analysis.is_distributive(L),
        "one_distributive": analysis.is_1_distributive(L),
        "atomistic": analysis.is_atomistic(L),
        "boolean": analysis.is_boolean(L),
        "rectangular_algebraic": analysis.is_rectangular_algebraic(L)[0],
        "forbidden_free": analysis.find_forbidden_1_sublattice(L) is None if modular else None,
        "pseudo_search": pseudo.status,
        "tnorm_search": tnorm.status,
    }


def _check_lattice(f: dict, report: SuiteReport):
    name = f["name"]
    bad = lambda check, detail: report.counterexamples.append(Counterexample(check, name, detail))  # noqa: E731
    if BUDGET in (f["pseudo_search"], f["tnorm_search"]):
        report.budget_exceeded.append(name)
    searched = BUDGET not in (f["pseudo_search"], f["tnorm_search"])
    pseudo, tn = f["pseudo_search"] == FOUND, f["tnorm_search"] == FOUND

    if f["modular"] != f["modular_via_n5"]:
        bad("modular_iff_no_n5", f"law says {f['modular']}, N5 scan says {f['modular_via_n5']}")
    if f["distributive"] and not (f["modular"] and f["one_distributive"]):
        bad("distributive_implies", "distributive but not modular or not 1-distributive")
    if f["atomistic"]:
        vals = [f["one_distributive"], f["boolean"]] + ([pseudo, tn] if searched else [])
        if len(set(vals)) > 1:
            bad("atomistic_equivalence", f"1-dist/boolean/pseudo/tnorm = {vals}")
    if f["modular"] and f["one_distributive"] != f["forbidden_free"]:
        bad("modular_forbidden", f"1-distributive={f['one_distributive']} "
                                 f"but forbidden-free={f['forbidden_free']}")
    if f["modular"] and f["rectangular_algebraic"]:
        vals = [f["one_distributive"], f["distributive"]] + ([pseudo, tn] if searched else [])
        if len(set(vals)) > 1:
            bad("rectangular_equivalence", f"1-dist/distributive/pseudo/tnorm = {vals}")
    if searched:
        if tn and not pseudo:
            bad("tnorm_implies_pseudo", "t-norm found but no pseudo-t-norm")
        if pseudo and not f["one_distributive"]:
            bad("search_implies_1dist", "∨-distributive pseudo-t-norm on a non-1-distributive lattice")
        if f["one_distributive"] and not pseudo:
            report.converse_witnesses.append(name)


def _check_pair(L1: FiniteLattice, L2: FiniteLattice, cfg: SearchConfig, report: SuiteReport):
    from .core import glued_sum, ordinal_sum

    name = f"{L1.name}|{L2.name}"
    o, g = ordinal_sum(L1, L2), glued_sum(L1, L2)
    d2 = analysis.is_1_distributive(L2)
    if analysis.is_1_distributive(g) != d2:
        report.counterexamples.append(Counterexample("glued_sum_1dist", name, f"L2 1-dist={d2}"))
    if analysis.is_1_distributive(o) != d2:
        report.counterexamples.append(Counterexample("ordinal_sum_1dist", name, f"L2 1-dist={d2}"))
    so, s2 = exists_left_continuous_tnorm(o, cfg), exists_left_continuous_tnorm(L2, cfg)
    if BUDGET in (so.status, s2.status):
        report.budget_exceeded.append(name)
    elif so.found != s2.found:
        report.counterexamples.append(Counterexample(
            "ordinal_sum_tnorm", name, f"on L1+L2: {so.status}, on L2: {s2.status}"))


def run_law_suite(scope="corpus", pair_bases=None, cfg: SearchConfig | None = None) -> SuiteReport:
    """Evaluate the structural equivalences on every lattice in scope.

    ``scope`` is ``"corpus"``, an int N (all enumerated lattices with
    2..N elements) or an explicit list of lattices.  ``pair_bases`` lists
    the lattices whose ordered pairs exercise the sum laws; the corpus
    scope defaults to c2, c3, m3.
    """
    from . import corpus

    cfg = SearchConfig() if cfg is None else cfg
    if scope == "corpus":
        lattices = [corpus.get(nm) for nm in corpus.names()]
        label = "corpus"
        if pair_bases is None:
            pair_bases = [corpus.get(nm) for nm in ("c2", "c3", "m3")]
    elif isinstance(scope, int):
        lattices = [L for n in range(2, scope + 1) for L in enumerate_lattices(n)]
        label = f"enumerated({scope})"
    else:
        lattices = list(scope)
        label = "custom"
    report = SuiteReport(label)
    for L in lattices:
        f = lattice_facts(L, cfg)
        report.rows.append(f)
        _check_lattice(f, report)
    for L1, L2 in product(pair_bases or [], repeat=2):
        _check_pair(L1, L2, cfg, report)
    return report
