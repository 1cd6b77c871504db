"""Family generation and colorer selection shared by the CLI and the bench harness."""

from __future__ import annotations

from collections.abc import Sequence
from typing import Any

from . import families
from .colorers import (
    color_complete_halin,
    color_cubic_halin,
    color_cycle_square,
    color_necklace_odd,
    color_path_square,
    color_petersen_3n,
    tree_star_coloring,
)
from .errors import ParamError
from .graph import Graph, HalinGraph, is_tree

ALGORITHMS = (
    "auto",
    "cubic-halin",
    "necklace",
    "complete-halin",
    "tree",
    "path-square",
    "cycle-square",
    "petersen3n",
)

FAMILIES = (
    "k4", "net", "fan3", "fan3-drawn", "h0", "k5", "wheel",
    "path", "cycle", "complete", "star", "ladder",
    "necklace", "path-square", "cycle-square", "petersen", "petersen3n",
    "complete-halin", "cubic-halin",
)  # fmt: skip


def _need(value: int | None, flag: str, family: str) -> int:
    if value is None:
        raise ParamError(f"family {family!r} needs {flag}")
    return value


def generate(
    family: str,
    n: int | None = None,
    h: int | None = None,
    m: int | None = None,
    leaves: int | None = None,
    seed: int = 0,
    spec: Sequence[Any] | None = None,
) -> tuple[Graph, HalinGraph | None]:
    """Build a family member by name; Halin families also return their structure."""
    simple = {"k4", "net", "fan3", "fan3-drawn", "h0", "k5"}
    if family in simple:
        return families.named(family), None
    if family == "wheel":
        hg = families.wheel(_need(n, "--n", family))
        return hg.graph, hg
    plain = {
        "path": families.path,
        "cycle": families.cycle,
        "complete": families.complete,
        "star": families.star,
        "ladder": families.ladder,
        "path-square": families.path_square,
        "cycle-square": families.cycle_square,
    }
    if family in plain:
        return plain[family](_need(n, "--n", family)), None
    if family == "necklace":
        hg = families.necklace(_need(h, "--h", family))
        return hg.graph, hg
    if family == "petersen":
        return families.generalized_petersen(_need(m, "--m", family), _need(n, "--n", family)), None
    if family == "petersen3n":
        k = _need(n, "--n", family)
        return families.generalized_petersen(3 * k, k), None
    if family == "complete-halin":
        if spec is None:
            raise ParamError("family 'complete-halin' needs --spec")
        hg = families.complete_halin(spec)
        return hg.graph, hg
    if family == "cubic-halin":
        hg = families.random_cubic_halin(_need(leaves, "--leaves", family), seed)
        return hg.graph, hg
    raise ParamError(f"unknown family {family!r}", code="UNKNOWN_NAME")


def _same_edges(g: Graph, ref: Graph) -> bool:
    return g.order == ref.order and set(g.edges) == set(ref.edges)


def _aligned(g: Graph, ref: Graph, colors: list[int], algorithm: str) -> list[int]:
    """Re-index ``colors`` (aligned with ``ref``) onto the edge order of ``g``."""
    if not _same_edges(g, ref):
        raise ParamError(f"graph is not the {algorithm} instance of its size", code="GRAPH_MISMATCH")
    return [colors[ref.edge_id(u, v)] for u, v in g.edges]


def auto_algorithm(g: Graph, halin: HalinGraph | None) -> str:
    fam = g.meta.get("family") if g.meta else None
    if fam == "path-square":
        return "path-square"
    if fam == "cycle-square":
        return "cycle-square"
    if fam == "petersen" and g.meta.get("m") == 3 * g.meta.get("n", 0):
        return "petersen3n"
    if fam == "necklace":
        return "necklace" if g.meta.get("h", 0) % 2 == 1 else "cubic-halin"
    if fam == "complete-halin":
        return "complete-halin"
    if halin is not None and all(g.degree(v) == 3 for v in range(g.order)):
        return "cubic-halin"
    if is_tree(g):
        return "tree"
    raise ParamError("no constructive colorer applies to this graph", code="NO_ALGORITHM")


def color_by(algorithm: str, g: Graph, halin: HalinGraph | None = None) -> tuple[str, list[int]]:
    """Run the named colorer on ``g``; returns the algorithm actually used and the coloring."""
    if algorithm == "auto":
        algorithm = auto_algorithm(g, halin)
    if algorithm in ("cubic-halin", "complete-halin"):
        if halin is None:
            raise ParamError(f"{algorithm} needs the Halin structure in the graph file", code="NOT_HALIN")
        fn = color_cubic_halin if algorithm == "cubic-halin" else color_complete_halin
        return algorithm, fn(halin)
    if algorithm == "tree":
        return algorithm, tree_star_coloring(g)
    if algorithm == "path-square":
        ref = families.path_square(g.order)
        return algorithm, _aligned(g, ref, color_path_square(g.order), algorithm)
    if algorithm == "cycle-square":
        ref = families.cycle_square(g.order)
        return algorithm, _aligned(g, ref, color_cycle_square(g.order), algorithm)
    if algorithm == "petersen3n":
        if g.order % 6:
            raise ParamError("P(3n, n) has 6n vertices", code="GRAPH_MISMATCH")
        k = g.order // 6
        ref = families.generalized_petersen(3 * k, k)
        return algorithm, _aligned(g, ref, color_petersen_3n(k), algorithm)
    if algorithm == "necklace":
        if g.order % 2 or g.order < 4:
            raise ParamError("a necklace has 2h + 2 vertices", code="GRAPH_MISMATCH")
        h = (g.order - 2) // 2
        ref = families.necklace(h).graph
        return algorithm, _aligned(g, ref, color_necklace_odd(h), algorithm)
    raise ParamError(f"unknown algorithm {algorithm!r}")
