"""Named lattices drawn from the figures, plus chains and Boolean cubes."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .core import FiniteLattice, build_from_covers
from .formats import parse_lattice, parse_optable
from .tnorm import OpTable


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    labels: tuple[str, ...]
    covers: tuple[tuple[str, str], ...]
    provenance: str

    def build(self) -> FiniteLattice:
        return build_from_covers(self.labels, self.covers, name=self.name)


PROVENANCE = {
    "c2": "two-element chain",
    "c3": "three-element chain",
    "c4": "four-element chain",
    "b2": "Boolean lattice 2^2",
    "b3": "Boolean lattice 2^3",
    "grid23": "C2 x C3, the smallest non-square rectangular grid",
    "n5": "pentagon N5 (non-modular five-element lattice)",
    "m3": "Figure 2, M3",
    "m3_2": "Figure 2, M3,2",
    "m3_4": "Figure 2, M3,4",
    "s72": "Figure 1, S_{7,2}",
    "s72_star": "Figure 1, S*_{7,2}",
    "fig3_s": "Figure 3, planar distributive S (labels assigned here)",
    "fig3_splus": "Figure 3, S+ = S with three eyes",
    "fig4_L": "Figure 4, planar modular lattice L",
}


def names() -> list[str]:
    return list(PROVENANCE)


def _text(filename: str) -> str:
    return resources.files("latnorm").joinpath("data", filename).read_text()


@lru_cache(maxsize=None)
def entry(name: str) -> CorpusEntry:
    if name not in PROVENANCE:
        raise KeyError(f"no corpus entry {name!r}; known: {', '.join(PROVENANCE)}")
    L = parse_lattice(_text(f"{name}.lat"))
    return CorpusEntry(name, L.labels, tuple(L.cover_labels()), PROVENANCE[name])


@lru_cache(maxsize=None)
def get(name: str) -> FiniteLattice:
    return entry(name).build()


def source_text(name: str) -> str:
    entry(name)
    return _text(f"{name}.lat")


def table1_text() -> str:
    return _text("table1.csv")


def table1() -> OpTable:
    """The pinned ∨-distributive pseudo-t-norm on fig4_L."""
    return parse_optable(table1_text(), get("fig4_L"))
