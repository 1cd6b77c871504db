"""Star edge-colorings: checkers, an exact solver, and constructive colorers for special graph families."""

from .errors import (
    BudgetExhausted,
    ColoringSizeMismatch,
    ConstructionFailed,
    GraphError,
    ParamError,
    StarColorError,
)
from .exact import ExactResult, exists_star_k_coloring, star_chromatic_index
from .graph import Graph, HalinGraph, build_graph, color_count
from .verify import StarViolation, ViolationKind, check_proper, check_restricted_strong, check_star, is_star_coloring

__version__ = "0.1.0"

__all__ = [
    "BudgetExhausted",
    "ColoringSizeMismatch",
    "ConstructionFailed",
    "ExactResult",
    "Graph",
    "GraphError",
    "HalinGraph",
    "ParamError",
    "StarColorError",
    "StarViolation",
    "ViolationKind",
    "build_graph",
    "check_proper",
    "check_restricted_strong",
    "check_star",
    "color_count",
    "exists_star_k_coloring",
    "is_star_coloring",
    "star_chromatic_index",
]
