"""Dominating cycles, transition systems, and vertex splitting on small
cubic and 4-regular graphs, with exhaustive verification campaigns."""

from .core import (
    ClosedTrail,
    Matching,
    Multigraph,
    Triangle,
    build_multigraph,
    is_k_regular,
    list_triangles,
    matching_of,
)
from .transitions import TTrail, TransitionSystem

__version__ = "0.1.0"

__all__ = [
    "ClosedTrail",
    "Matching",
    "Multigraph",
    "Triangle",
    "TTrail",
    "TransitionSystem",
    "build_multigraph",
    "is_k_regular",
    "list_triangles",
    "matching_of",
    "__version__",
]
