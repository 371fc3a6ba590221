"""Operation tables on a finite lattice: axiom checks and the concrete constructions."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Callable

import numpy as np

from .analysis import (
    Witness,
    classify_elements,
    is_1_distributive,
    is_modular,
)
from .core import (
    Elem,
    FiniteLattice,
    direct_product,
    find_isomorphism,
    glued_sum_maps,
    interval,
)
from .errors import (
    LatticeMismatch,
    NotAnOrdinalCut,
    PostVerificationFailed,
    PreconditionFailed,
    SubsetSweepTooLarge,
)

SWEEP_LIMIT = 20


@dataclass(frozen=True)
class OpTable:
    lattice: FiniteLattice
    table: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = self.lattice.n
        if len(self.table) != n or any(len(row) != n for row in self.table):
            raise LatticeMismatch(f"table is not {n}x{n}")
        if any(not 0 <= v < n for row in self.table for v in row):
            raise LatticeMismatch("table cell outside the lattice")

    def __call__(self, x: int, y: int) -> int:
        return self.table[x][y]

    @classmethod
    def from_function(cls, L: FiniteLattice, fn: Callable[[int, int], int]) -> "OpTable":
        return cls(L, tuple(tuple(fn(x, y) for y in range(L.n)) for x in range(L.n)))

    def at(self, x: Elem, y: Elem) -> str:
        """Label-level lookup, handy in tests and at the REPL."""
        L = self.lattice
        return L.labels[self.table[L.idx(x)][L.idx(y)]]


def _w(name, detail, **elems) -> Witness:
    return Witness("law", name, tuple(elems.items()), detail)


# --------------------------------------------------------------------------
# individual laws; each returns the lexicographically first failure


def check_T1(T: OpTable) -> Witness | None:
    L, t = T.lattice, T.table
    for a in range(L.n):
        if t[L.top][a] != a:
            return _w("T1", "T(1,a) ≠ a", a=a)
        if t[L.bottom][a] != L.bottom:
            return _w("T1", "T(0,a) ≠ 0", a=a)
    return None


def check_monotone(T: OpTable) -> Witness | None:
    L, t = T.lattice, T.table
    for a, b, c in product(range(L.n), repeat=3):
        if L.leq[b][c] and not L.leq[t[a][b]][t[a][c]]:
            return _w("monotone", "b ≤ c but T(a,b) ≰ T(a,c)", a=a, b=b, c=c)
    return None


def check_commutative(T: OpTable) -> Witness | None:
    n, t = T.lattice.n, T.table
    for a in range(n):
        for b in range(a + 1, n):
            if t[a][b] != t[b][a]:
                return _w("commutative", "T(a,b) ≠ T(b,a)", a=a, b=b)
    return None


def check_associative(T: OpTable) -> Witness | None:
    n, t = T.lattice.n, T.table
    for a, b, c in product(range(n), repeat=3):
        if t[t[a][b]][c] != t[a][t[b][c]]:
            return _w("associative", "T(T(a,b),c) ≠ T(a,T(b,c))", a=a, b=b, c=c)
    return None


def check_neutral(T: OpTable) -> Witness | None:
    L, t = T.lattice, T.table
    for a in range(L.n):
        if t[L.top][a] != a or t[a][L.top] != a:
            return _w("neutral", "1 is not neutral for a", a=a)
    return None


def check_below_meet(T: OpTable) -> Witness | None:
    L, t = T.lattice, T.table
    for a, b in product(range(L.n), repeat=2):
        if not L.leq[t[a][b]][L.meet_table[a][b]]:
            return _w("below_meet", "T(a,b) ≰ a∧b", a=a, b=b)
    return None


def check_join_distributive(T: OpTable) -> Witness | None:
    L, t, J = T.lattice, T.table, T.lattice.join_table
    for a, b, c in product(range(L.n), repeat=3):
        if t[a][J[b][c]] != J[t[a][b]][t[a][c]]:
            return _w("join_distributive", "T(a,b∨c) ≠ T(a,b)∨T(a,c)", a=a, b=b, c=c)
    return None


def check_meet_distributive(T: OpTable) -> Witness | None:
    L, t, M = T.lattice, T.table, T.lattice.meet_table
    for a, b, c in product(range(L.n), repeat=3):
        if t[a][M[b][c]] != M[t[a][b]][t[a][c]]:
            return _w("meet_distributive", "T(a,b∧c) ≠ T(a,b)∧T(a,c)", a=a, b=b, c=c)
    return None


def _sweep(T: OpTable, use_join: bool) -> Witness | None:
    """Check T(a, ⋁S) = ⋁ T(a,s) (or the meet version) over every nonempty S."""
    L = T.lattice
    n = L.n
    if n > SWEEP_LIMIT:
        raise SubsetSweepTooLarge(f"{n} elements exceed the subset sweep limit of {SWEEP_LIMIT}")
    op = np.asarray(L.join_table if use_join else L.meet_table, dtype=np.int64)
    t = np.asarray(T.table, dtype=np.int64)
    unit = L.bottom if use_join else L.top
    for a in range(n):
        # acc[mask] = ⋁S, img[mask] = ⋁ T(a,s), filled one element at a time
        acc = np.full(1 << n, unit, dtype=np.int64)
        img = np.full(1 << n, unit, dtype=np.int64)
        for s in range(n):
            lo, hi = 1 << s, 1 << (s + 1)
            acc[lo:hi] = op[acc[:lo], s]
            img[lo:hi] = op[img[:lo], t[a, s]]
        bad = np.nonzero(t[a, acc[1:]] != img[1:])[0]
        if bad.size:
            mask = int(bad[0]) + 1
            subset = [s for s in range(n) if mask >> s & 1]
            name = "left_continuous" if use_join else "right_continuous"
            sym = "⋁" if use_join else "⋀"
            elems = {"a": a, **{f"s{k}": s for k, s in enumerate(subset)}}
            return _w(name, f"T(a,{sym}S) ≠ {sym}T(a,s)", **elems)
    return None


@dataclass
class ContinuityResult:
    passed: bool
    witness: Witness | None
    pairwise: bool
    sweep: bool | None  # None when the sweep was not run

    @property
    def agree(self) -> bool:
        return self.sweep is None or self.sweep == self.pairwise


def _continuity(T: OpTable, use_join: bool, mode: str) -> ContinuityResult:
    if mode not in ("auto", "pairwise", "sweep"):
        raise ValueError(f"unknown mode {mode!r}")
    name = "left_continuous" if use_join else "right_continuous"
    sweep = None
    sweep_w = None
    if mode == "sweep" or (mode == "auto" and T.lattice.n <= SWEEP_LIMIT):
        sweep_w = _sweep(T, use_join)
        sweep = sweep_w is None
    if mode == "sweep":
        return ContinuityResult(sweep, sweep_w, sweep, sweep)
    pw = check_join_distributive(T) if use_join else check_meet_distributive(T)
    if pw is not None:
        pw = Witness("law", name, pw.elements, pw.detail)
    return ContinuityResult(pw is None, pw if pw is not None else sweep_w, pw is None, sweep)


def verify_left_continuous(T: OpTable, mode: str = "auto") -> ContinuityResult:
    """Pairwise join-distributivity, plus the full subset sweep when n ≤ SWEEP_LIMIT."""
    return _continuity(T, True, mode)


def verify_right_continuous(T: OpTable, mode: str = "auto") -> ContinuityResult:
    return _continuity(T, False, mode)


def verify_join_distributive(T: OpTable) -> Witness | None:
    return check_join_distributive(T)


def verify_meet_distributive(T: OpTable) -> Witness | None:
    return check_meet_distributive(T)


LAW_CHECKS = {
    "T1": check_T1,
    "monotone": check_monotone,
    "commutative": check_commutative,
    "associative": check_associative,
    "neutral": check_neutral,
    "join_distributive": check_join_distributive,
    "meet_distributive": check_meet_distributive,
    "left_continuous": lambda T: verify_left_continuous(T).witness,
    "right_continuous": lambda T: verify_right_continuous(T).witness,
    "below_meet": check_below_meet,
}
LAWS = tuple(LAW_CHECKS)


@dataclass
class VerificationReport:
    results: dict[str, Witness | None]
    required: tuple[str, ...] = ()
    continuity: dict[str, ContinuityResult] = field(default_factory=dict)

    def passed(self, law: str) -> bool:
        return self.results[law] is None

    @property
    def ok(self) -> bool:
        return all(self.results[law] is None for law in self.required)

    @property
    def failures(self) -> dict[str, Witness]:
        return {k: w for k, w in self.results.items() if w is not None}

    def as_dict(self, L: FiniteLattice) -> dict:
        return {
            "ok": self.ok,
            "required": list(self.required),
            "laws": {k: {"pass": w is None, "witness": None if w is None else w.as_dict(L)}
                     for k, w in self.results.items()},
        }


def verify(T: OpTable, laws=LAWS, required=()) -> VerificationReport:
    results = {}
    cont = {}
    for law in laws:
        if law == "left_continuous":
            cont[law] = verify_left_continuous(T)
            results[law] = cont[law].witness
        elif law == "right_continuous":
            cont[law] = verify_right_continuous(T)
            results[law] = cont[law].witness
        else:
            results[law] = LAW_CHECKS[law](T)
    return VerificationReport(results, tuple(required), cont)


def verify_pseudo_tnorm(T: OpTable, L: FiniteLattice | None = None) -> VerificationReport:
    """T1 and monotonicity (commutativity is required too, as a standing assumption)."""
    if L is not None and L != T.lattice:
        raise LatticeMismatch("table belongs to a different lattice")
    return verify(T, laws=LAWS, required=("T1", "monotone", "commutative"))


def verify_tnorm(T: OpTable, L: FiniteLattice | None = None) -> VerificationReport:
    if L is not None and L != T.lattice:
        raise LatticeMismatch("table belongs to a different lattice")
    return verify(T, laws=LAWS, required=("neutral", "monotone", "commutative", "associative"))


def law_violated(T: OpTable, w: Witness) -> bool:
    """Re-evaluate a table-law witness; True when the failure reproduces."""
    L, t = T.lattice, T.table
    M, J, le = L.meet_table, L.join_table, L.leq
    e = dict(w.elements)
    a = e.get("a")
    if w.name == "T1":
        return t[L.top][a] != a or t[L.bottom][a] != L.bottom
    if w.name == "neutral":
        return t[L.top][a] != a or t[a][L.top] != a
    if w.name == "monotone":
        return le[e["b"]][e["c"]] and not le[t[a][e["b"]]][t[a][e["c"]]]
    if w.name == "commutative":
        return t[a][e["b"]] != t[e["b"]][a]
    if w.name == "associative":
        b, c = e["b"], e["c"]
        return t[t[a][b]][c] != t[a][t[b][c]]
    if w.name == "below_meet":
        return not le[t[a][e["b"]]][M[a][e["b"]]]
    if w.name in ("join_distributive", "meet_distributive", "left_continuous", "right_continuous"):
        use_join = w.name in ("join_distributive", "left_continuous")
        op, unit = (J, L.bottom) if use_join else (M, L.top)
        S = [i for r, i in w.elements if r != "a"]
        whole, img = unit, unit
        for s in S:
            whole, img = op[whole][s], op[img][t[a][s]]
        return t[a][whole] != img
    raise ValueError(f"unknown law {w.name!r}")


# --------------------------------------------------------------------------
# constructions


def t_meet(L: FiniteLattice) -> OpTable:
    return OpTable(L, L.meet_table)


def t_weakest(L: FiniteLattice) -> OpTable:
    """x∧y when one argument is the top, 0 otherwise."""
    return OpTable.from_function(
        L, lambda x, y: L.meet_table[x][y] if L.top in (x, y) else L.bottom)


def glued_combine(L1: FiniteLattice, L2: FiniteLattice, T1: OpTable, T2: OpTable) -> OpTable:
    """T1 on L1, T2 on L2 and ∧ across the two parts, on the glued sum L1 ∔ L2."""
    if T1.lattice != L1 or T2.lattice != L2:
        raise LatticeMismatch("tables do not belong to the given lattices")
    G, e1, e2 = glued_sum_maps(L1, L2)
    inv1 = {g: x for x, g in enumerate(e1)}
    inv2 = {g: x for x, g in enumerate(e2)}

    def cell(x, y):
        if x in inv1 and y in inv1:
            return e1[T1.table[inv1[x]][inv1[y]]]
        if x in inv2 and y in inv2:
            return e2[T2.table[inv2[x]][inv2[y]]]
        return G.meet_table[x][y]

    return OpTable.from_function(G, cell)


def project_tstar(L: FiniteLattice, b: Elem, T: OpTable) -> OpTable:
    """Collapse T onto the upper part [b, 1] of an ordinal cut at b.

    Values that fall below b are sent to b.  The result lives on the
    interval lattice (labels kept from L).
    """
    if T.lattice != L:
        raise LatticeMismatch("table belongs to a different lattice")
    b = L.idx(b)
    iv = interval(L, b, L.top)
    for x in range(L.n):
        if x not in iv and not L.lt(x, b):
            raise NotAnOrdinalCut(f"{L.labels[x]!r} is neither above nor below {L.labels[b]!r}")
    U = iv.lattice
    pos = {x: k for k, x in enumerate(iv.members)}

    def cell(i, j):
        v = T.table[iv.members[i]][iv.members[j]]
        return pos[v] if v in pos else pos[b]

    return OpTable.from_function(U, cell)


def construct_planar(L: FiniteLattice, a: Elem, b: Elem) -> OpTable:
    """The ∨-distributive pseudo-t-norm built from a left bi-irreducible ``a`` and right ``b``.

    T = 0 on [0,b) × H1 and H1 × [0,b), a∧x∧y on H2 × H2, x∧y elsewhere,
    with H1 = L − [b,1] and H2 = H1 − [0,b).
    """
    a, b = L.idx(a), L.idx(b)
    M, J = L.meet_table, L.join_table
    bi = set(classify_elements(L)[3])
    for name, x in (("a", a), ("b", b)):
        if x not in bi:
            raise PreconditionFailed(f"{name} bi-irreducible",
                                     f"{L.labels[x]!r} is not bi-irreducible")
    if J[a][b] != L.top:
        raise PreconditionFailed("a∨b = 1", f"{L.labels[a]}∨{L.labels[b]} = {L.labels[J[a][b]]}")
    ab = M[a][b]
    upper = interval(L, ab, L.top).lattice
    grid = direct_product(interval(L, ab, a).lattice, interval(L, ab, b).lattice)
    if find_isomorphism(upper, grid) is None:
        raise PreconditionFailed("[a∧b,1] ≅ [a∧b,a] × [a∧b,b]",
                                 "the upper interval is not the product of its two sides")
    if not is_modular(L):
        raise PreconditionFailed("modular", "L is not modular")
    if not is_1_distributive(L):
        raise PreconditionFailed("1-distributive", "L is not 1-distributive")

    below_b = {x for x in range(L.n) if L.lt(x, b)}
    H1 = {x for x in range(L.n) if not L.leq[b][x]}
    H2 = H1 - below_b

    def cell(x, y):
        if (x in below_b and y in H1) or (x in H1 and y in below_b):
            return L.bottom
        if x in H2 and y in H2:
            return M[a][M[x][y]]
        return M[x][y]

    T = OpTable.from_function(L, cell)
    rep = verify(T, laws=("T1", "monotone", "commutative", "join_distributive", "below_meet"),
                 required=("T1", "monotone", "commutative", "join_distributive", "below_meet"))
    if not rep.ok:
        bad = ", ".join(rep.failures)
        raise PostVerificationFailed(f"constructed table fails: {bad}")
    return T
