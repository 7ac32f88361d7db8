"""Exact symbolic computation in free Boolean algebras over finite posets."""

from . import algebra, corpus, exprs, lattice, morphisms, poset, stone, suites, wqo
from .errors import PosetAlgError

__all__ = [
    "algebra",
    "corpus",
    "exprs",
    "lattice",
    "morphisms",
    "poset",
    "stone",
    "suites",
    "wqo",
    "PosetAlgError",
]

__version__ = "0.1.0"
