"""Finite lattices, pseudo-t-norms and the existence questions between them."""

__version__ = "0.1.0"

from .core import (  # noqa: E402
    FiniteLattice,
    Interval,
    add_eye,
    boolean_lattice,
    build_from_covers,
    chain,
    direct_product,
    dual,
    find_isomorphism,
    glued_sum,
    interval,
    is_isomorphic,
    ordinal_sum,
)
from .tnorm import OpTable  # noqa: E402

__all__ = [
    "FiniteLattice", "Interval", "OpTable", "add_eye", "boolean_lattice", "build_from_covers",
    "chain", "direct_product", "dual", "find_isomorphism", "glued_sum", "interval",
    "is_isomorphic", "ordinal_sum",
]
