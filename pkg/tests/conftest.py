import os
import sys
from functools import lru_cache

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from latnorm import corpus  # noqa: E402
from latnorm.search import enumerate_lattices  # noqa: E402
from latnorm.tnorm import OpTable  # noqa: E402

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@lru_cache(maxsize=None)
def small_lattices(max_n=6):
    return tuple(L for n in range(1, max_n + 1) for L in enumerate_lattices(n))


@lru_cache(maxsize=None)
def corpus_lattices():
    return tuple(corpus.get(nm) for nm in corpus.names())


lattices = st.sampled_from(small_lattices() + corpus_lattices())
tiny_lattices = st.sampled_from(small_lattices(5))


@st.composite
def tables(draw, lattice_strategy=lattices, below_meet=False):
    """An arbitrary binary operation on a drawn lattice."""
    L = draw(lattice_strategy)
    cells = []
    for x in range(L.n):
        row = []
        for y in range(L.n):
            if below_meet:
                row.append(draw(st.sampled_from(sorted(L.downsets[L.meet_table[x][y]]))))
            else:
                row.append(draw(st.integers(0, L.n - 1)))
        cells.append(tuple(row))
    return OpTable(L, tuple(cells))


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[k])
