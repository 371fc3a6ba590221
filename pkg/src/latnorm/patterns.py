"""The small named lattices the deciders search for."""
from functools import lru_cache

from .core import FiniteLattice, build_from_covers


def _covers(text):
    return [tuple(p.split("<")) for p in text.split()]


@lru_cache(maxsize=None)
def n5() -> FiniteLattice:
    # pentagon: 0 < b < a < 1 on one side, c alone on the other
    return build_from_covers(["0", "b", "a", "c", "1"], _covers("0<b b<a a<1 0<c c<1"), name="N5")


@lru_cache(maxsize=None)
def m3() -> FiniteLattice:
    return build_from_covers(["0", "a", "b", "c", "1"], _covers("0<a 0<b 0<c a<1 b<1 c<1"), name="M3")


@lru_cache(maxsize=None)
def m3_2() -> FiniteLattice:
    # a diamond z < p, q, r < t with s stacked on p beside t
    return build_from_covers(
        ["z", "p", "q", "r", "t", "s", "1"],
        _covers("z<p z<q z<r p<t q<t r<t p<s s<1 t<1"),
        name="M3,2",
    )


@lru_cache(maxsize=None)
def m3_4() -> FiniteLattice:
    return build_from_covers(
        ["z", "p", "q", "r", "t", "s", "u", "v", "w", "1"],
        _covers("z<p z<q z<r p<t q<t r<t p<s r<u s<v t<v t<w u<w v<1 w<1"),
        name="M3,4",
    )


def forbidden_patterns() -> list[FiniteLattice]:
    return [m3(), m3_2(), m3_4()]
