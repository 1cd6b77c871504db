"""Immutable simple graphs with dense vertex ids and stable edge indices.

Edge colorings throughout the package are plain integer sequences aligned with
``Graph.edges``; ``0`` marks an uncolored edge inside solvers only.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from typing import Any

from .errors import GraphError

Edge = tuple[int, int]


@dataclass(frozen=True, eq=False)
class Graph:
    order: int
    edges: tuple[Edge, ...]
    adjacency: tuple[tuple[tuple[int, int], ...], ...] = field(repr=False)
    labels: Mapping[int, str] | None = field(default=None, repr=False)
    # family metadata recorded by generators (used by ``color --algorithm auto``)
    meta: Mapping[str, Any] = field(default_factory=dict, repr=False)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.order == other.order and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.order, self.edges))

    @property
    def size(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def neighbors(self, v: int) -> list[int]:
        return [w for w, _ in self.adjacency[v]]

    def edge_id(self, u: int, v: int) -> int:
        """Index of edge ``uv``; ``KeyError`` if absent."""
        return self._index[(u, v) if u < v else (v, u)]

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self._index

    @property
    def _index(self) -> dict[Edge, int]:
        idx = self.__dict__.get("_edge_index")
        if idx is None:
            idx = {e: i for i, e in enumerate(self.edges)}
            object.__setattr__(self, "_edge_index", idx)
        return idx

    def label(self, v: int) -> str:
        if self.labels and v in self.labels:
            return self.labels[v]
        return str(v)

    def with_meta(self, **meta: Any) -> Graph:
        return Graph(self.order, self.edges, self.adjacency, self.labels, {**self.meta, **meta})


def build_graph(
    order: int,
    pairs: Iterable[Sequence[int]],
    labels: Mapping[int, str] | None = None,
    meta: Mapping[str, Any] | None = None,
) -> Graph:
    """Build a simple graph; edge indices follow the order of ``pairs``."""
    if order < 0:
        raise GraphError(f"negative order {order}", code="VERTEX_OUT_OF_RANGE")
    edges: list[Edge] = []
    seen: set[Edge] = set()
    adj: list[list[tuple[int, int]]] = [[] for _ in range(order)]
    for pair in pairs:
        u, v = int(pair[0]), int(pair[1])
        if not (0 <= u < order and 0 <= v < order):
            raise GraphError(f"edge ({u}, {v}) outside 0..{order - 1}", code="VERTEX_OUT_OF_RANGE")
        if u == v:
            raise GraphError(f"loop at vertex {u}", code="LOOP_EDGE")
        e = (u, v) if u < v else (v, u)
        if e in seen:
            raise GraphError(f"edge {e} given twice", code="DUPLICATE_EDGE")
        seen.add(e)
        eid = len(edges)
        edges.append(e)
        adj[e[0]].append((e[1], eid))
        adj[e[1]].append((e[0], eid))
    return Graph(
        order,
        tuple(edges),
        tuple(tuple(a) for a in adj),
        dict(labels) if labels else None,
        dict(meta) if meta else {},
    )


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.order:
        raise GraphError(f"vertex {v} outside 0..{g.order - 1}", code="VERTEX_OUT_OF_RANGE")


def bfs_distances(g: Graph, source: int) -> list[int | None]:
    _check_vertex(g, source)
    dist: list[int | None] = [None] * g.order
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for w, _ in g.adjacency[v]:
            if dist[w] is None:
                dist[w] = dist[v] + 1  # type: ignore[operator]
                queue.append(w)
    return dist


def distance(g: Graph, u: int, v: int) -> int | None:
    """Hop distance between ``u`` and ``v``; ``None`` when unreachable."""
    _check_vertex(g, v)
    return bfs_distances(g, u)[v]


def max_degree(g: Graph) -> int:
    return max((len(a) for a in g.adjacency), default=0)


def min_degree(g: Graph) -> int:
    return min((len(a) for a in g.adjacency), default=0)


def color_count(colors: Iterable[int]) -> int:
    return len({c for c in colors if c})


def is_connected(g: Graph) -> bool:
    if g.order == 0:
        return True
    return all(d is not None for d in bfs_distances(g, 0))


def is_tree(g: Graph) -> bool:
    return g.order >= 1 and g.size == g.order - 1 and is_connected(g)


def induced_relabel(g: Graph, vertices: Sequence[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced by ``vertices``, relabelled densely in the given order."""
    pos = {v: i for i, v in enumerate(vertices)}
    pairs = [(pos[u], pos[v]) for u, v in g.edges if u in pos and v in pos]
    return build_graph(len(vertices), pairs), pos


def edge_subgraph(g: Graph, edge_ids: Iterable[int]) -> tuple[Graph, list[int]]:
    """Graph on the same vertex set keeping only ``edge_ids``.

    Returns the subgraph and, for each of its edges, the host edge id.
    """
    ids = sorted(set(edge_ids))
    sub = build_graph(g.order, [g.edges[i] for i in ids])
    return sub, ids


@dataclass(frozen=True, eq=False)
class HalinGraph:
    """Halin graph ``G = T + C``: plane tree plus the cycle through its leaves."""

    graph: Graph
    tree_edges: frozenset[int]
    root: int
    cycle_order: tuple[int, ...]

    def __post_init__(self) -> None:
        g = self.graph
        tdeg = [0] * g.order
        for eid in self.tree_edges:
            u, v = g.edges[eid]
            tdeg[u] += 1
            tdeg[v] += 1
        tree, _ = edge_subgraph(g, self.tree_edges)
        if not is_tree(tree):
            raise GraphError("tree edges do not span a tree", code="INVALID_HALIN")
        leaves = set(self.cycle_order)
        if len(leaves) != len(self.cycle_order) or len(leaves) < 3:
            raise GraphError("cycle order must list >= 3 distinct leaves", code="INVALID_HALIN")
        for v in range(g.order):
            if v in leaves and tdeg[v] != 1:
                raise GraphError(f"cycle vertex {v} is not a tree leaf", code="INVALID_HALIN")
            if v not in leaves and tdeg[v] < 3:
                raise GraphError(f"interior vertex {v} has tree degree {tdeg[v]}", code="INVALID_HALIN")
        k = len(self.cycle_order)
        cycle = {
            tuple(sorted((self.cycle_order[i], self.cycle_order[(i + 1) % k]))) for i in range(k)
        }
        non_tree = {g.edges[i] for i in range(g.size) if i not in self.tree_edges}
        if cycle != non_tree:
            raise GraphError("non-tree edges are not the leaf cycle", code="INVALID_HALIN")

    @property
    def cycle_edges(self) -> list[int]:
        k = len(self.cycle_order)
        return [self.graph.edge_id(self.cycle_order[i], self.cycle_order[(i + 1) % k]) for i in range(k)]

    def tree(self) -> Graph:
        return edge_subgraph(self.graph, self.tree_edges)[0]


# --- JSON interchange -------------------------------------------------------


def graph_to_json(g: Graph, halin: HalinGraph | None = None) -> dict[str, Any]:
    doc: dict[str, Any] = {"order": g.order, "edges": [list(e) for e in g.edges]}
    if g.labels:
        doc["labels"] = {str(k): v for k, v in sorted(g.labels.items())}
    if g.meta:
        doc["family"] = dict(g.meta)
    if halin is not None:
        doc["halin"] = {
            "tree_edges": sorted(halin.tree_edges),
            "root": halin.root,
            "cycle": list(halin.cycle_order),
        }
    return doc


def graph_from_json(doc: Mapping[str, Any]) -> Graph:
    labels = doc.get("labels")
    return build_graph(
        int(doc["order"]),
        doc["edges"],
        labels={int(k): str(v) for k, v in labels.items()} if labels else None,
        meta=doc.get("family"),
    )


def halin_from_json(doc: Mapping[str, Any]) -> HalinGraph | None:
    h = doc.get("halin")
    if not h:
        return None
    return HalinGraph(graph_from_json(doc), frozenset(h["tree_edges"]), int(h["root"]), tuple(h["cycle"]))


def coloring_to_json(colors: Sequence[int]) -> dict[str, Any]:
    return {"colors": [int(c) for c in colors]}


def coloring_from_json(doc: Mapping[str, Any]) -> list[int]:
    colors = [int(c) for c in doc["colors"]]
    if any(c < 1 for c in colors):
        raise GraphError("serialized colorings must be total with colors >= 1", code="BAD_COLORING")
    return colors
