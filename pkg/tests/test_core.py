from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import lattices, tiny_lattices
from latnorm import corpus
from latnorm.core import (add_eye, boolean_lattice, build_from_covers, chain, direct_product, dual,
                          find_isomorphism, from_leq, generated_sublattice, glued_sum, glued_sum_maps,
                          induced, interval, is_isomorphic, is_sublattice, ordinal_sum,
                          ordinal_sum_maps)
from latnorm.errors import (CycleDetected, DuplicateLabel, IntervalEmpty, NotACoveringSquare,
                            NotALattice, UnknownLabel)
from oracles import raw


def test_chain_and_cube_shapes():
    C = chain(4)
    assert C.n == 4 and C.name == "C4"
    assert len(C.covers) == 3
    B = boolean_lattice(3)
    assert B.n == 8 and len(B.covers) == 12
    assert B.height[B.top] == 3


def test_build_from_covers_accepts_redundant_pairs():
    L = build_from_covers("0 a 1".split(), [("0", "a"), ("a", "1"), ("0", "1")])
    assert L.cover_labels() == [("0", "a"), ("a", "1")]


def test_construction_errors():
    with pytest.raises(DuplicateLabel):
        build_from_covers(["0", "0"], [])
    with pytest.raises(UnknownLabel):
        build_from_covers(["0", "1"], [("0", "x")])
    with pytest.raises(CycleDetected):
        build_from_covers(["0", "a", "1"], [("0", "a"), ("a", "0"), ("a", "1")])
    # two maximal elements: no top
    with pytest.raises(NotALattice):
        build_from_covers(["0", "a", "b"], [("0", "a"), ("0", "b")])
    # bowtie: a, b both below c and d, no least upper bound
    with pytest.raises(NotALattice):
        build_from_covers("0 a b c d 1".split(),
                          [("0", "a"), ("0", "b"), ("a", "c"), ("a", "d"), ("b", "c"),
                           ("b", "d"), ("c", "1"), ("d", "1")])
    with pytest.raises(NotALattice):
        from_leq(["x", "y", "z"], [[1, 1, 0], [0, 1, 1], [0, 0, 1]])


@given(lattices)
def test_tables_match_order(L):
    R = raw(L)
    assert [list(r) for r in L.meet_table] == R.meet
    assert [list(r) for r in L.join_table] == R.join
    assert (L.bottom, L.top) == (R.bottom, R.top)


@given(lattices, st.data())
def test_lattice_identities(L, data):
    x, y, z = (data.draw(st.integers(0, L.n - 1)) for _ in range(3))
    assert L.meet(x, L.join(x, y)) == x
    assert L.join(x, L.meet(x, y)) == x
    assert L.meet(L.meet(x, y), z) == L.meet(x, L.meet(y, z))
    assert L.join(x, y) == L.join(y, x)
    assert L.le(x, y) == (L.meet(x, y) == x)


@given(lattices)
def test_covers_are_the_transitive_reduction(L):
    for x, y in product(range(L.n), repeat=2):
        between = any(L.lt(x, z) and L.lt(z, y) for z in range(L.n))
        assert ((x, y) in L.covers) == (L.lt(x, y) and not between)


@given(lattices)
def test_dual_is_an_involution(L):
    D = dual(L)
    assert D.top == L.bottom
    assert is_isomorphic(dual(D), L)


@given(tiny_lattices, tiny_lattices)
def test_sums_and_products(A, B):
    O, e1, e2 = ordinal_sum_maps(A, B)
    assert O.n == A.n + B.n
    assert all(O.lt(e1[x], e2[y]) for x in range(A.n) for y in range(B.n))
    G, g1, g2 = glued_sum_maps(A, B)
    assert G.n == A.n + B.n - 1
    assert g1[A.top] == g2[B.bottom]
    P = direct_product(A, B)
    assert P.n == A.n * B.n
    assert is_isomorphic(P, direct_product(B, A))


def test_glued_labels():
    G = glued_sum(corpus.get("c2"), corpus.get("m3"))
    assert G.n == 6
    assert G.labels[G.bottom] == "l.0" and G.labels[G.top] == "r.1"
    H = ordinal_sum(chain(2), build_from_covers(["p", "q"], [("p", "q")]))
    assert H.labels == ("0", "1", "p", "q")


def test_interval():
    L = corpus.get("fig4_L")
    I = interval(L, "a", "1")
    assert {L.labels[x] for x in I.members} == {"a", "e", "f", "g", "h", "1"}
    assert I.lattice.labels[I.lattice.bottom] == "a"
    assert I.to_parent(I.from_parent(L.idx("g"))) == L.idx("g")
    assert L.idx("e") in I and L.idx("b") not in I
    with pytest.raises(IntervalEmpty):
        interval(L, "f", "h")


def test_add_eye_makes_m3_from_b2():
    B = boolean_lattice(2)
    E = add_eye(B, ["00", "01", "10", "11"])
    assert is_isomorphic(E, corpus.get("m3"))
    assert E.labels[-1] == "eye1"
    with pytest.raises(NotACoveringSquare):
        add_eye(chain(4), ["0", "1", "2", "3"])


def test_corpus_eyes_rebuild_the_figures():
    S = corpus.get("fig3_s")
    P = add_eye(S, ["0", "a", "b", "c"], "p")
    P = add_eye(P, ["0", "a", "b", "c"], "q")
    P = add_eye(P, ["e", "g", "h", "1"], "r")
    assert is_isomorphic(P, corpus.get("fig3_splus"))
    F = corpus.get("fig4_L")
    frame = induced(F, [F.idx(x) for x in "0 a b f e g h 1".split()])
    G = add_eye(add_eye(frame, ["0", "a", "b", "e"], "c"), ["0", "a", "b", "e"], "d")
    assert is_isomorphic(G, F)


@given(lattices, st.data())
def test_generated_sublattice_is_closed(L, data):
    gens = data.draw(st.sets(st.integers(0, L.n - 1), max_size=3))
    S = generated_sublattice(L, gens)
    assert set(gens) <= S
    assert is_sublattice(L, S) or not S


@given(lattices, st.randoms(use_true_random=False))
def test_isomorphism_survives_relabeling(L, rnd):
    perm = list(range(L.n))
    rnd.shuffle(perm)
    labels = [f"v{perm[i]}" for i in range(L.n)]
    order = sorted(range(L.n), key=lambda i: perm[i])
    leq = [[L.leq[order[i]][order[j]] for j in range(L.n)] for i in range(L.n)]
    M = from_leq([labels[i] for i in order], leq)
    f = find_isomorphism(L, M)
    assert f is not None
    assert all(L.leq[x][y] == M.leq[f[x]][f[y]] for x in range(L.n) for y in range(L.n))


def test_non_isomorphic_same_size():
    assert not is_isomorphic(corpus.get("m3"), corpus.get("n5"))
    assert not is_isomorphic(corpus.get("s72"), corpus.get("s72_star"))
