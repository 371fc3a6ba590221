"""Brute-force reference implementations, deliberately independent of latnorm.

Everything here works on raw relations and explicit tables and never
calls into the package, so agreement with the optimized code is evidence
rather than tautology.
"""
from itertools import permutations, product


def _partial_orders(k):
    """Every labeled partial order on range(k), as a frozenset of strict pairs."""
    pairs = [(i, j) for i in range(k) for j in range(k) if i != j]
    for bits in product((0, 1), repeat=len(pairs)):
        rel = {p for p, b in zip(pairs, bits) if b}
        if any((j, i) in rel for i, j in rel):
            continue
        if any((i, l) not in rel for i, j in rel for jj, l in rel if j == jj and i != l):
            continue
        yield frozenset(rel)


def _is_lattice(n, le):
    for x, y in product(range(n), repeat=2):
        ub = [z for z in range(n) if le(x, z) and le(y, z)]
        if not any(all(le(z, w) for w in ub) for z in ub):
            return False
    return True


def _canonical(n, le):
    return min(tuple(le(p[x], p[y]) for x in range(n) for y in range(n))
               for p in permutations(range(n)))


def lattice_count(n):
    """Number of n-element lattices up to isomorphism.

    Any finite lattice is a poset on n - 2 inner points with a new bottom
    and top added, so the brute force ranges over labeled inner posets and
    compares canonical forms under all permutations.
    """
    if n <= 2:
        return 1 if n >= 1 else 0
    k = n - 2
    seen = set()
    for rel in _partial_orders(k):
        def le(x, y, rel=rel):
            if x == y or x == 0 or y == n - 1:
                return True
            if y == 0 or x == n - 1:
                return False
            return (x - 1, y - 1) in rel
        if _is_lattice(n, le):
            seen.add(_canonical(n, le))
    return len(seen)


class RawLattice:
    """Meet and join tables recomputed from an order relation."""

    def __init__(self, n, le):
        self.n = n
        self.le = le
        rng = range(n)
        self.meet = [[max((z for z in rng if le(z, x) and le(z, y)),
                          key=lambda z: sum(le(w, z) for w in rng)) for y in rng] for x in rng]
        self.join = [[min((z for z in rng if le(x, z) and le(y, z)),
                          key=lambda z: sum(le(w, z) for w in rng)) for y in rng] for x in rng]
        self.bottom = next(z for z in rng if all(le(z, w) for w in rng))
        self.top = next(z for z in rng if all(le(w, z) for w in rng))


def raw(L):
    """RawLattice from only the order matrix of a latnorm lattice."""
    return RawLattice(L.n, lambda x, y: bool(L.leq[x][y]))


def naive_exists(R, associative):
    """Generate and test every commutative table with T(1,x) = x and T(x,y) ≤ x∧y.

    Returns True when one of them is monotone and ∨-distributive (and
    associative when asked).
    """
    n, le, meet, join = R.n, R.le, R.meet, R.join
    cells = [(x, y) for x in range(n) for y in range(x, n) if R.top not in (x, y)]
    doms = [[z for z in range(n) if le(z, meet[x][y])] for x, y in cells]
    T = [[None] * n for _ in range(n)]
    for x in range(n):
        T[R.top][x] = T[x][R.top] = x
    for vals in product(*doms):
        for (x, y), v in zip(cells, vals):
            T[x][y] = T[y][x] = v
        if not all(le(T[x][y], T[x][z]) for x in range(n) for y in range(n) for z in range(n) if le(y, z)):
            continue
        if not all(T[x][join[y][z]] == join[T[x][y]][T[x][z]]
                   for x in range(n) for y in range(n) for z in range(n)):
            continue
        if associative and not all(T[T[x][y]][z] == T[x][T[y][z]]
                                   for x in range(n) for y in range(n) for z in range(n)):
            continue
        return True
    return False


def naive_one_distributive(R):
    n = R.n
    return all(R.join[R.meet[c][a]][R.meet[c][b]] == c
               for a in range(n) for b in range(n) if R.join[a][b] == R.top for c in range(n))


def naive_left_continuous(table, R):
    """Distributivity over every nonempty subset join, by direct enumeration."""
    n = R.n
    for mask in range(1, 1 << n):
        s = [i for i in range(n) if mask >> i & 1]
        j = s[0]
        for y in s[1:]:
            j = R.join[j][y]
        for x in range(n):
            acc = table[x][s[0]]
            for y in s[1:]:
                acc = R.join[acc][table[x][y]]
            if acc != table[x][j]:
                return False
    return True
