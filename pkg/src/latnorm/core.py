"""Finite bounded lattices as immutable, index-based values.

Elements are identified by their position in ``labels``; every table is
indexed the same way.  Most helpers accept either an index (``int``) or a
label (``str``) for an element and resolve it with :meth:`FiniteLattice.idx`.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from typing import Iterable, Sequence

from .errors import (
    CycleDetected,
    DuplicateLabel,
    IntervalEmpty,
    NotACoveringSquare,
    NotALattice,
    UnknownLabel,
)

Elem = int | str


@dataclass(frozen=True)
class FiniteLattice:
    labels: tuple[str, ...]
    leq: tuple[tuple[bool, ...], ...]
    covers: frozenset[tuple[int, int]]
    meet_table: tuple[tuple[int, ...], ...]
    join_table: tuple[tuple[int, ...], ...]
    bottom: int
    top: int
    name: str | None = field(default=None, compare=False)

    def __len__(self):
        return len(self.labels)

    def __repr__(self):
        tag = f" {self.name!r}" if self.name else ""
        return f"<FiniteLattice{tag} n={len(self)}>"

    @property
    def n(self) -> int:
        return len(self.labels)

    @cached_property
    def _index(self) -> dict[str, int]:
        return {lab: i for i, lab in enumerate(self.labels)}

    def idx(self, x: Elem) -> int:
        if isinstance(x, str):
            try:
                return self._index[x]
            except KeyError:
                raise UnknownLabel(f"no element labelled {x!r}") from None
        if not 0 <= x < self.n:
            raise UnknownLabel(f"element index {x} out of range")
        return int(x)

    def label(self, i: int) -> str:
        return self.labels[i]

    def meet(self, x: int, y: int) -> int:
        return self.meet_table[x][y]

    def join(self, x: int, y: int) -> int:
        return self.join_table[x][y]

    def le(self, x: int, y: int) -> bool:
        return self.leq[x][y]

    def lt(self, x: int, y: int) -> bool:
        return x != y and self.leq[x][y]

    def comparable(self, x: int, y: int) -> bool:
        return self.leq[x][y] or self.leq[y][x]

    def join_all(self, xs: Iterable[int]) -> int:
        acc = self.bottom
        for x in xs:
            acc = self.join_table[acc][x]
        return acc

    def meet_all(self, xs: Iterable[int]) -> int:
        acc = self.top
        for x in xs:
            acc = self.meet_table[acc][x]
        return acc

    @cached_property
    def lower_covers(self) -> tuple[tuple[int, ...], ...]:
        low = [[] for _ in range(self.n)]
        for x, y in sorted(self.covers):
            low[y].append(x)
        return tuple(tuple(c) for c in low)

    @cached_property
    def upper_covers(self) -> tuple[tuple[int, ...], ...]:
        up = [[] for _ in range(self.n)]
        for x, y in sorted(self.covers):
            up[x].append(y)
        return tuple(tuple(c) for c in up)

    @cached_property
    def downsets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(y for y in range(self.n) if self.leq[y][x]) for x in range(self.n))

    @cached_property
    def upsets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(y for y in range(self.n) if self.leq[x][y]) for x in range(self.n))

    @cached_property
    def linear_extension(self) -> tuple[int, ...]:
        """Indices sorted so that x < y implies x comes first."""
        return tuple(sorted(range(self.n), key=lambda x: (len(self.downsets[x]), x)))

    @cached_property
    def height(self) -> tuple[int, ...]:
        """Length of the longest chain from the bottom to each element."""
        h = [0] * self.n
        for x in self.linear_extension:
            for y in self.upper_covers[x]:
                h[y] = max(h[y], h[x] + 1)
        return tuple(h)

    @cached_property
    def depth(self) -> tuple[int, ...]:
        """Length of the longest chain from each element to the top."""
        d = [0] * self.n
        for x in reversed(self.linear_extension):
            for y in self.lower_covers[x]:
                d[y] = max(d[y], d[x] + 1)
        return tuple(d)

    def cover_labels(self) -> list[tuple[str, str]]:
        return [(self.labels[x], self.labels[y]) for x, y in sorted(self.covers)]

    def renamed(self, name: str | None) -> "FiniteLattice":
        return FiniteLattice(self.labels, self.leq, self.covers, self.meet_table,
                             self.join_table, self.bottom, self.top, name)


@dataclass(frozen=True)
class Interval:
    """The interval ``[lo, hi]`` of a parent lattice."""

    parent: FiniteLattice
    lo: int
    hi: int
    members: tuple[int, ...]

    def __contains__(self, x: int) -> bool:
        return x in self._member_set

    @cached_property
    def _member_set(self) -> frozenset[int]:
        return frozenset(self.members)

    @cached_property
    def lattice(self) -> FiniteLattice:
        """The induced lattice, keeping the parent's labels."""
        return induced(self.parent, self.members,
                       name=f"[{self.parent.labels[self.lo]},{self.parent.labels[self.hi]}]")

    def to_parent(self, i: int) -> int:
        return self.members[i]

    def from_parent(self, x: int) -> int:
        return self.members.index(x)


# --------------------------------------------------------------------------
# construction


def from_leq(labels: Sequence[str], leq: Sequence[Sequence[bool]], name: str | None = None) -> FiniteLattice:
    """Build a lattice from a full order matrix (assumed to be a partial order)."""
    labels = tuple(labels)
    n = len(labels)
    if len(set(labels)) != n:
        dup = sorted({lab for lab in labels if labels.count(lab) > 1})
        raise DuplicateLabel(f"duplicate labels: {dup}")
    if n == 0:
        raise NotALattice("empty poset")
    leq = tuple(tuple(bool(v) for v in row) for row in leq)
    for x in range(n):
        if not leq[x][x]:
            raise NotALattice(f"order is not reflexive at {labels[x]!r}")
        for y in range(x + 1, n):
            if leq[x][y] and leq[y][x]:
                raise CycleDetected(f"{labels[x]!r} and {labels[y]!r} are mutually below each other")

    up = [sum(1 << y for y in range(n) if leq[x][y]) for x in range(n)]
    down = [sum(1 << y for y in range(n) if leq[y][x]) for x in range(n)]
    for x in range(n):
        for y in range(n):
            if leq[x][y] and up[y] & ~up[x]:
                raise NotALattice(f"order is not transitive through {labels[x]!r} <= {labels[y]!r}")

    def bound(xs_mask: int, sets: list[int], what: str, x: int, y: int) -> int:
        # the unique member z of the bound set whose own bound set covers the whole set
        m = xs_mask
        while m:
            z = (m & -m).bit_length() - 1
            if xs_mask & ~sets[z] == 0:
                return z
            m &= m - 1
        raise NotALattice(f"{labels[x]!r} and {labels[y]!r} have no {what}")

    join = [[0] * n for _ in range(n)]
    meet = [[0] * n for _ in range(n)]
    for x in range(n):
        for y in range(x, n):
            j = bound(up[x] & up[y], up, "least upper bound", x, y)
            m = bound(down[x] & down[y], down, "greatest lower bound", x, y)
            join[x][y] = join[y][x] = j
            meet[x][y] = meet[y][x] = m

    bottom = next(x for x in range(n) if up[x] == (1 << n) - 1)
    top = next(x for x in range(n) if down[x] == (1 << n) - 1)

    covers = set()
    for x in range(n):
        for y in range(n):
            if x != y and leq[x][y]:
                between = (up[x] & down[y]) & ~((1 << x) | (1 << y))
                if not between:
                    covers.add((x, y))

    return FiniteLattice(labels, leq, frozenset(covers), tuple(map(tuple, meet)),
                         tuple(map(tuple, join)), bottom, top, name)


def build_from_covers(labels: Sequence[str], covers: Iterable[tuple[str, str]],
                      name: str | None = None) -> FiniteLattice:
    """Validate a Hasse diagram and return the lattice it describes.

    ``covers`` holds pairs ``(x, y)`` meaning x is covered by y.  Redundant
    pairs (implied by transitivity) are accepted and dropped from the cover
    relation of the result.
    """
    labels = tuple(labels)
    seen = set()
    for lab in labels:
        if lab in seen:
            raise DuplicateLabel(f"duplicate label {lab!r}")
        seen.add(lab)
    index = {lab: i for i, lab in enumerate(labels)}
    n = len(labels)
    succ = [set() for _ in range(n)]
    for x, y in covers:
        for lab in (x, y):
            if lab not in index:
                raise UnknownLabel(f"cover mentions undeclared label {lab!r}")
        if x == y:
            raise CycleDetected(f"{x!r} cannot cover itself")
        succ[index[x]].add(index[y])

    # reachability by DFS; any path back to the start is a cycle
    reach = []
    for s in range(n):
        seen_s = {s}
        stack = list(succ[s])
        while stack:
            v = stack.pop()
            if v == s:
                raise CycleDetected(f"covers imply {labels[s]!r} < {labels[s]!r}")
            if v in seen_s:
                continue
            seen_s.add(v)
            stack.extend(succ[v])
        reach.append(seen_s)
    leq = [[y in reach[x] for y in range(n)] for x in range(n)]
    return from_leq(labels, leq, name)


def induced(L: FiniteLattice, members: Iterable[int], name: str | None = None) -> FiniteLattice:
    """Restrict L's order to ``members`` (labels kept, parent order of indices kept)."""
    members = sorted(set(members))
    return from_leq([L.labels[x] for x in members],
                    [[L.leq[x][y] for y in members] for x in members], name)


def chain(n: int) -> FiniteLattice:
    if n < 1:
        raise ValueError("a chain needs at least one element")
    return from_leq([str(i) for i in range(n)],
                    [[i <= j for j in range(n)] for i in range(n)], name=f"C{n}")


def boolean_lattice(k: int) -> FiniteLattice:
    """The subset lattice of a k-set; labels are bit strings (``"0"`` when k = 0)."""
    if k < 0:
        raise ValueError("k must be non-negative")
    size = 1 << k
    labels = [format(i, f"0{k}b") if k else "0" for i in range(size)]
    return from_leq(labels, [[i & ~j == 0 for j in range(size)] for i in range(size)], name=f"B{k}")


def _disjoint_labels(a: Sequence[str], b: Sequence[str], b_skip: set[str] = frozenset()):
    if set(a) & (set(b) - set(b_skip)):
        return ["l." + x for x in a], ["r." + x for x in b]
    return list(a), list(b)


def ordinal_sum_maps(L1: FiniteLattice, L2: FiniteLattice):
    """L1 ⊕ L2 together with the index embeddings of L1 and L2 into it."""
    n1, n2 = L1.n, L2.n
    lab1, lab2 = _disjoint_labels(L1.labels, L2.labels)
    n = n1 + n2
    leq = [[False] * n for _ in range(n)]
    for x, y in product(range(n1), repeat=2):
        leq[x][y] = L1.leq[x][y]
    for x, y in product(range(n2), repeat=2):
        leq[n1 + x][n1 + y] = L2.leq[x][y]
    for x, y in product(range(n1), range(n2)):
        leq[x][n1 + y] = True
    L = from_leq(lab1 + lab2, leq, name=f"({L1.name}+{L2.name})")
    return L, tuple(range(n1)), tuple(range(n1, n))


def ordinal_sum(L1: FiniteLattice, L2: FiniteLattice) -> FiniteLattice:
    return ordinal_sum_maps(L1, L2)[0]


def glued_sum_maps(L1: FiniteLattice, L2: FiniteLattice):
    """L1 ∔ L2 (top of L1 identified with bottom of L2) plus both embeddings.

    The identified element keeps L1's top label.
    """
    n1, n2 = L1.n, L2.n
    lab1, lab2 = _disjoint_labels(L1.labels, L2.labels, {L2.labels[L2.bottom]})
    rest = [y for y in range(n2) if y != L2.bottom]
    emb2 = [0] * n2
    emb2[L2.bottom] = L1.top
    for k, y in enumerate(rest):
        emb2[y] = n1 + k
    n = n1 + len(rest)
    leq = [[False] * n for _ in range(n)]
    for x, y in product(range(n1), repeat=2):
        leq[x][y] = L1.leq[x][y]
    for x, y in product(range(n2), repeat=2):
        if L2.leq[x][y]:
            leq[emb2[x]][emb2[y]] = True
    for x, y in product(range(n1), rest):
        leq[x][emb2[y]] = True
    L = from_leq(lab1 + [lab2[y] for y in rest], leq, name=f"({L1.name}^{L2.name})")
    return L, tuple(range(n1)), tuple(emb2)


def glued_sum(L1: FiniteLattice, L2: FiniteLattice) -> FiniteLattice:
    return glued_sum_maps(L1, L2)[0]


def direct_product(L1: FiniteLattice, L2: FiniteLattice) -> FiniteLattice:
    """Componentwise order; element (x, y) sits at index x * |L2| + y, label ``"x:y"``."""
    pairs = list(product(range(L1.n), range(L2.n)))
    labels = [f"{L1.labels[x]}:{L2.labels[y]}" for x, y in pairs]
    leq = [[L1.leq[a][c] and L2.leq[b][d] for c, d in pairs] for a, b in pairs]
    return from_leq(labels, leq, name=f"({L1.name}x{L2.name})")


def dual(L: FiniteLattice) -> FiniteLattice:
    n = L.n
    leq = tuple(tuple(L.leq[y][x] for y in range(n)) for x in range(n))
    covers = frozenset((y, x) for x, y in L.covers)
    name = None if L.name is None else f"dual({L.name})"
    return FiniteLattice(L.labels, leq, covers, L.join_table, L.meet_table, L.top, L.bottom, name)


def interval(L: FiniteLattice, lo: Elem, hi: Elem) -> Interval:
    lo, hi = L.idx(lo), L.idx(hi)
    if not L.leq[lo][hi]:
        raise IntervalEmpty(f"{L.labels[lo]!r} is not below {L.labels[hi]!r}")
    members = tuple(x for x in range(L.n) if L.leq[lo][x] and L.leq[x][hi])
    return Interval(L, lo, hi, members)


def add_eye(L: FiniteLattice, square: Sequence[Elem], label: str | None = None) -> FiniteLattice:
    """Insert a new element into the covering square ``(lo, x, y, hi)``."""
    lo, x, y, hi = (L.idx(s) for s in square)
    ok = ((lo, x) in L.covers and (x, hi) in L.covers and (lo, y) in L.covers
          and (y, hi) in L.covers and x != y and L.meet(x, y) == lo and L.join(x, y) == hi)
    if not ok:
        names = ", ".join(L.labels[s] for s in (lo, x, y, hi))
        raise NotACoveringSquare(f"({names}) is not a covering square")
    if label is None:
        k = 1
        while f"eye{k}" in L.labels:
            k += 1
        label = f"eye{k}"
    elif label in L.labels:
        raise DuplicateLabel(f"label {label!r} already in use")
    covers = L.cover_labels() + [(L.labels[lo], label), (label, L.labels[hi])]
    return build_from_covers(L.labels + (label,), covers, name=L.name)


def generated_sublattice(L: FiniteLattice, gens: Iterable[int]) -> frozenset[int]:
    """Closure of ``gens`` under L's meet and join."""
    got = set(gens)
    frontier = list(got)
    while frontier:
        new = []
        for a in frontier:
            for b in list(got):
                for c in (L.meet_table[a][b], L.join_table[a][b]):
                    if c not in got:
                        got.add(c)
                        new.append(c)
        frontier = new
    return frozenset(got)


def is_sublattice(L: FiniteLattice, members: Iterable[int]) -> bool:
    s = set(members)
    return all(L.meet_table[a][b] in s and L.join_table[a][b] in s for a in s for b in s)


# --------------------------------------------------------------------------
# isomorphism


def _invariants(L: FiniteLattice) -> list[tuple[int, ...]]:
    return [(L.height[x], L.depth[x], len(L.lower_covers[x]), len(L.upper_covers[x]),
             len(L.downsets[x]), len(L.upsets[x])) for x in range(L.n)]


def find_isomorphism(L1: FiniteLattice, L2: FiniteLattice) -> tuple[int, ...] | None:
    """An order isomorphism L1 -> L2 as a tuple ``f`` with ``f[x]`` in L2, or None."""
    if L1.n != L2.n or len(L1.covers) != len(L2.covers):
        return None
    inv1, inv2 = _invariants(L1), _invariants(L2)
    if sorted(inv1) != sorted(inv2):
        return None
    n = L1.n
    cands = [[y for y in range(n) if inv2[y] == inv1[x]] for x in range(n)]
    # most constrained elements first, ties broken bottom-up
    order = sorted(range(n), key=lambda x: (len(cands[x]), L1.height[x], x))
    f = [-1] * n
    used = [False] * n

    def extend(k: int) -> bool:
        if k == n:
            return True
        x = order[k]
        for y in cands[x]:
            if used[y]:
                continue
            if all(L1.leq[x][u] == L2.leq[y][f[u]] and L1.leq[u][x] == L2.leq[f[u]][y]
                   for u in order[:k]):
                f[x], used[y] = y, True
                if extend(k + 1):
                    return True
                f[x], used[y] = -1, False
        return False

    return tuple(f) if extend(0) else None


def is_isomorphic(L1: FiniteLattice, L2: FiniteLattice) -> bool:
    return find_isomorphism(L1, L2) is not None
