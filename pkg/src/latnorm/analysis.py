"""Structural deciders for finite lattices, each with a re-checkable witness.

Every ``find_*`` function returns ``None`` when the property holds (or the
pattern is absent) and a :class:`Witness` otherwise; the ``is_*`` wrappers
collapse that to a boolean.  Scans run over index tuples in lexicographic
order, so the witness returned is always the smallest one.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, permutations, product

from .core import (
    FiniteLattice,
    boolean_lattice,
    find_isomorphism,
    induced,
    is_sublattice,
)
from . import patterns


@dataclass(frozen=True)
class Witness:
    kind: str  # "law" or "embedding"
    name: str
    elements: tuple[tuple[str, int], ...]
    detail: str = ""
    pattern: FiniteLattice | None = field(default=None, compare=False, repr=False)

    def __getitem__(self, role: str) -> int:
        for r, i in self.elements:
            if r == role:
                return i
        raise KeyError(role)

    @property
    def indices(self) -> tuple[int, ...]:
        return tuple(i for _, i in self.elements)

    def labelled(self, L: FiniteLattice) -> dict[str, str]:
        return {r: L.labels[i] for r, i in self.elements}

    def as_dict(self, L: FiniteLattice) -> dict:
        return {"kind": self.kind, "name": self.name,
                "elements": self.labelled(L), "detail": self.detail}


def _law(name, L, detail, **elems) -> Witness:
    return Witness("law", name, tuple(elems.items()), detail)


# --------------------------------------------------------------------------
# special elements


def join_irreducibles(L: FiniteLattice) -> tuple[int, ...]:
    """Literal definition: q = x ∨ y forces q ∈ {x, y}; the bottom qualifies vacuously."""
    reducible = {L.join_table[x][y] for x, y in combinations(range(L.n), 2)
                 if L.join_table[x][y] not in (x, y)}
    return tuple(q for q in range(L.n) if q not in reducible)


def meet_irreducibles(L: FiniteLattice) -> tuple[int, ...]:
    reducible = {L.meet_table[x][y] for x, y in combinations(range(L.n), 2)
                 if L.meet_table[x][y] not in (x, y)}
    return tuple(q for q in range(L.n) if q not in reducible)


def atoms(L: FiniteLattice) -> tuple[int, ...]:
    return tuple(L.upper_covers[L.bottom])


def classify_elements(L: FiniteLattice):
    """``(atoms, join_irr, meet_irr, bi_irr)`` as sorted index tuples."""
    j, m = join_irreducibles(L), meet_irreducibles(L)
    bi = tuple(sorted(set(j) & set(m)))
    return atoms(L), j, m, bi


# --------------------------------------------------------------------------
# identities


def find_modular_violation(L: FiniteLattice) -> Witness | None:
    M, J, le = L.meet_table, L.join_table, L.leq
    for a, b, c in product(range(L.n), repeat=3):
        if le[b][a]:
            lhs, rhs = M[a][J[b][c]], J[b][M[a][c]]
            if lhs != rhs:
                return _law("modular", L, "a ≥ b but a∧(b∨c) ≠ b∨(a∧c)", a=a, b=b, c=c)
    return None


def is_modular(L: FiniteLattice) -> bool:
    return find_modular_violation(L) is None


def find_distributive_violation(L: FiniteLattice) -> Witness | None:
    M, J = L.meet_table, L.join_table
    for x, y, z in product(range(L.n), repeat=3):
        if M[x][J[y][z]] != J[M[x][y]][M[x][z]]:
            return _law("distributive", L, "x∧(y∨z) ≠ (x∧y)∨(x∧z)", x=x, y=y, z=z)
    return None


def is_distributive(L: FiniteLattice) -> bool:
    return find_distributive_violation(L) is None


def _one_dist_failure(L: FiniteLattice, c: int):
    M, J = L.meet_table, L.join_table
    for a, b in product(range(L.n), repeat=2):
        if J[a][b] == L.top and J[M[c][a]][M[c][b]] != c:
            return a, b
    return None


def one_distributive_elements(L: FiniteLattice) -> tuple[int, ...]:
    return tuple(c for c in range(L.n) if _one_dist_failure(L, c) is None)


def find_one_distributive_violation(L: FiniteLattice) -> Witness | None:
    for c in range(L.n):
        ab = _one_dist_failure(L, c)
        if ab is not None:
            return _law("one_distributive", L, "a∨b = 1 but (c∧a)∨(c∧b) ≠ c",
                        c=c, a=ab[0], b=ab[1])
    return None


def is_1_distributive(L: FiniteLattice) -> bool:
    return find_one_distributive_violation(L) is None


def find_atomistic_violation(L: FiniteLattice) -> Witness | None:
    A = atoms(L)
    for x in range(L.n):
        if L.join_all(a for a in A if L.leq[a][x]) != x:
            return _law("atomistic", L, "x is not the join of the atoms below it", x=x)
    return None


def is_atomistic(L: FiniteLattice) -> bool:
    return find_atomistic_violation(L) is None


def is_boolean(L: FiniteLattice) -> bool:
    k = len(atoms(L))
    return L.n == 1 << k and find_isomorphism(L, boolean_lattice(k)) is not None


def find_complement_violation(L: FiniteLattice) -> Witness | None:
    for x in range(L.n):
        if not any(L.meet_table[x][y] == L.bottom and L.join_table[x][y] == L.top
                   for y in range(L.n)):
            return _law("complemented", L, "x has no complement", x=x)
    return None


def is_complemented(L: FiniteLattice) -> bool:
    return find_complement_violation(L) is None


def law_violated(L: FiniteLattice, w: Witness) -> bool:
    """Re-evaluate a lattice-law witness; True when the violation reproduces."""
    M, J, le = L.meet_table, L.join_table, L.leq
    e = dict(w.elements)
    if w.kind == "embedding":
        return embedding_holds(L, w)
    if w.name == "modular":
        a, b, c = e["a"], e["b"], e["c"]
        return le[b][a] and M[a][J[b][c]] != J[b][M[a][c]]
    if w.name == "distributive":
        x, y, z = e["x"], e["y"], e["z"]
        return M[x][J[y][z]] != J[M[x][y]][M[x][z]]
    if w.name == "one_distributive":
        c, a, b = e["c"], e["a"], e["b"]
        return J[a][b] == L.top and J[M[c][a]][M[c][b]] != c
    if w.name == "atomistic":
        x = e["x"]
        return L.join_all(a for a in atoms(L) if le[a][x]) != x
    if w.name == "complemented":
        x = e["x"]
        return not any(M[x][y] == L.bottom and J[x][y] == L.top for y in range(L.n))
    raise ValueError(f"unknown law {w.name!r}")


# --------------------------------------------------------------------------
# sublattice embeddings


def find_sublattice_embedding(L: FiniteLattice, pattern: FiniteLattice,
                              require_top: bool = False) -> Witness | None:
    """Injective lattice homomorphism pattern -> L (image closed under L's ∧, ∨).

    With ``require_top`` the pattern's top must land on L's top.
    """
    if pattern.n > L.n:
        return None
    order = pattern.linear_extension
    pos = {p: k for k, p in enumerate(order)}
    PM, PJ, Ple = pattern.meet_table, pattern.join_table, pattern.leq
    LM, LJ, Lle = L.meet_table, L.join_table, L.leq
    f = [-1] * pattern.n
    used = [False] * L.n
    # each (u, v, result) triple is checked once all three are placed
    ops_at = [[] for _ in range(pattern.n)]
    for u in range(pattern.n):
        for v in range(u + 1, pattern.n):
            for table, ltable in ((PM, LM), (PJ, LJ)):
                r = table[u][v]
                ops_at[max(pos[u], pos[v], pos[r])].append((u, v, r, ltable))

    def consistent(p: int, k: int) -> bool:
        x = f[p]
        for q in order[:k]:
            y = f[q]
            if Ple[p][q] != Lle[x][y] or Ple[q][p] != Lle[y][x]:
                return False
        return all(lt[f[u]][f[v]] == f[r] for u, v, r, lt in ops_at[k])

    def extend(k: int) -> bool:
        if k == pattern.n:
            return True
        p = order[k]
        if require_top and p == pattern.top:
            cands = [L.top]
        else:
            cands = range(L.n)
        for x in cands:
            if used[x]:
                continue
            f[p], used[x] = x, True
            if consistent(p, k) and extend(k + 1):
                return True
            f[p], used[x] = -1, False
        return False

    if not extend(0):
        return None
    elems = tuple((pattern.labels[p], f[p]) for p in range(pattern.n))
    detail = f"{pattern.name} as {'1-' if require_top else ''}sublattice"
    return Witness("embedding", pattern.name or "pattern", elems, detail, pattern)


def embedding_holds(L: FiniteLattice, w: Witness) -> bool:
    """The witness image is ∧/∨-closed and isomorphic to its pattern via the stated map."""
    P = w.pattern
    f = [w[lab] for lab in P.labels]
    if len(set(f)) != P.n or not is_sublattice(L, f):
        return False
    return all(P.leq[p][q] == L.leq[f[p]][f[q]] for p in range(P.n) for q in range(P.n))


def find_n5_sublattice(L: FiniteLattice) -> Witness | None:
    return find_sublattice_embedding(L, patterns.n5())


def is_modular_via_n5(L: FiniteLattice) -> bool:
    return find_n5_sublattice(L) is None


def _candidate_sets(L: FiniteLattice, a: int, b: int, c: int):
    M, J = L.meet_table, L.join_table
    one = L.top
    o = M[M[a][b]][c]
    bc, ac = J[b][c], J[a][c]
    yield patterns.m3(), (a, b, c, o, one)
    yield patterns.m3_2(), (a, b, c, o, M[a][bc], bc, one)
    yield patterns.m3_4(), (a, b, c, o, M[a][bc], M[b][ac], ac, bc, M[ac][bc], one)


def _match(L: FiniteLattice, members, pattern: FiniteLattice) -> Witness | None:
    s = sorted(set(members))
    if len(s) != pattern.n or not is_sublattice(L, s):
        return None
    iso = find_isomorphism(pattern, induced(L, s))
    if iso is None:
        return None
    elems = tuple((pattern.labels[p], s[iso[p]]) for p in range(pattern.n))
    return Witness("embedding", pattern.name, elems, f"{pattern.name} as 1-sublattice", pattern)


def find_forbidden_1_sublattice(L: FiniteLattice, method: str = "scan") -> Witness | None:
    """First of M3, M3,2, M3,4 (in that order) embedded as a sublattice through L's top.

    ``scan`` builds candidate element sets from triples (a, b, c) with
    a ∨ b = 1; every pattern is generated by three such elements together
    with 1, so the scan is complete.  ``generic`` runs the backtracking
    embedding search instead; both give the same verdict.
    """
    if method == "generic":
        for P in patterns.forbidden_patterns():
            w = find_sublattice_embedding(L, P, require_top=True)
            if w is not None:
                return w
        return None
    if method != "scan":
        raise ValueError(f"unknown method {method!r}")
    triples = [t for t in permutations(range(L.n), 3)
               if L.join_table[t[0]][t[1]] == L.top
               and not any(L.comparable(x, y) for x, y in combinations(t, 2))]
    for k in range(3):
        for a, b, c in triples:
            pattern, members = list(_candidate_sets(L, a, b, c))[k]
            w = _match(L, members, pattern)
            if w is not None:
                return w
    return None


def is_rectangular_algebraic(L: FiniteLattice) -> tuple[bool, tuple[int, int] | None]:
    """Exactly two bi-irreducibles outside {0, 1}, and they are complements.

    Only the algebraic half of rectangularity; the planar boundary condition
    is not checked.
    """
    bi = [x for x in classify_elements(L)[3] if x not in (L.bottom, L.top)]
    if len(bi) == 2:
        u, v = bi
        if L.meet(u, v) == L.bottom and L.join(u, v) == L.top:
            return True, (u, v)
    return False, None


# --------------------------------------------------------------------------
# summary


@dataclass
class ClassificationReport:
    atoms: tuple[int, ...]
    join_irr: tuple[int, ...]
    meet_irr: tuple[int, ...]
    bi_irr: tuple[int, ...]
    flags: dict[str, bool]
    one_distributive_elements: tuple[int, ...]
    witnesses: dict[str, Witness]
    rectangular_pair: tuple[int, int] | None
    forbidden: Witness | None
    notes: list[str] = field(default_factory=list)

    def as_dict(self, L: FiniteLattice) -> dict:
        lab = lambda xs: [L.labels[x] for x in xs]  # noqa: E731
        return {
            "atoms": lab(self.atoms),
            "join_irreducible": lab(self.join_irr),
            "meet_irreducible": lab(self.meet_irr),
            "bi_irreducible": lab(self.bi_irr),
            "flags": dict(self.flags),
            "one_distributive_elements": lab(self.one_distributive_elements),
            "rectangular_pair": None if self.rectangular_pair is None else lab(self.rectangular_pair),
            "forbidden_1_sublattice": None if self.forbidden is None else self.forbidden.as_dict(L),
            "witnesses": {k: w.as_dict(L) for k, w in self.witnesses.items()},
            "notes": list(self.notes),
        }


def classify(L: FiniteLattice) -> ClassificationReport:
    A, J, M, B = classify_elements(L)
    found = {
        "modular": find_modular_violation(L),
        "distributive": find_distributive_violation(L),
        "one_distributive": find_one_distributive_violation(L),
        "atomistic": find_atomistic_violation(L),
        "complemented": find_complement_violation(L),
    }
    flags = {k: w is None for k, w in found.items()}
    flags["boolean"] = is_boolean(L)
    rect, pair = is_rectangular_algebraic(L)
    flags["rectangular_algebraic"] = rect
    forbidden = find_forbidden_1_sublattice(L) if flags["modular"] else None
    order = ["modular", "distributive", "one_distributive", "atomistic", "boolean",
             "complemented", "rectangular_algebraic"]
    return ClassificationReport(
        atoms=A, join_irr=J, meet_irr=M, bi_irr=B,
        flags={k: flags[k] for k in order},
        one_distributive_elements=one_distributive_elements(L),
        witnesses={k: w for k, w in found.items() if w is not None},
        rectangular_pair=pair,
        forbidden=forbidden,
        notes=["rectangularity: boundary unchecked"],
    )
