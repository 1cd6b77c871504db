"""Checkers for proper, star and restricted-strong edge colorings.

A *4-path* is a path with four edges on five distinct vertices; a *4-cycle*
has four edges on four distinct vertices. A proper coloring is a star coloring
when no 4-path and no 4-cycle uses only two colors.
"""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from enum import Enum
from typing import Any

from .errors import ColoringSizeMismatch
from .graph import Graph


class ViolationKind(str, Enum):
    IMPROPER_ADJACENT = "ImproperAdjacent"
    BICOLORED_PATH4 = "BicoloredPath4"
    BICOLORED_CYCLE4 = "BicoloredCycle4"
    STRONG_CONFLICT = "StrongConflict"


@dataclass(frozen=True)
class StarViolation:
    kind: ViolationKind
    vertices: tuple[int, ...]
    edge_ids: tuple[int, ...]
    colors: tuple[int, ...]

    def to_json(self) -> dict[str, Any]:
        return {
            "kind": self.kind.value,
            "vertices": list(self.vertices),
            "edge_ids": list(self.edge_ids),
            "colors": list(self.colors),
        }


def _check_size(g: Graph, colors: Sequence[int]) -> None:
    if len(colors) != g.size:
        raise ColoringSizeMismatch(f"{len(colors)} colors for {g.size} edges")


def check_proper(g: Graph, colors: Sequence[int]) -> StarViolation | None:
    """First pair of same-colored edges at a common vertex, or ``None``.

    Uncolored entries (0) are ignored.
    """
    _check_size(g, colors)
    for v in range(g.order):
        seen: dict[int, tuple[int, int]] = {}
        for w, eid in sorted(g.adjacency[v]):
            c = colors[eid]
            if not c:
                continue
            if c in seen:
                w0, e0 = seen[c]
                return StarViolation(ViolationKind.IMPROPER_ADJACENT, (w0, v, w), (e0, eid), (c,))
            seen[c] = (w, eid)
    return None


def _color_maps(g: Graph, colors: Sequence[int]) -> list[dict[int, tuple[int, int]]]:
    # valid only for proper colorings: each color occurs at most once per vertex
    at: list[dict[int, tuple[int, int]]] = [{} for _ in range(g.order)]
    for eid, (u, v) in enumerate(g.edges):
        c = colors[eid]
        if c:
            at[u][c] = (v, eid)
            at[v][c] = (u, eid)
    return at


def check_star(g: Graph, colors: Sequence[int]) -> StarViolation | None:
    """``None`` if ``colors`` is a star coloring, else the first violation.

    Scan order: properness first, then alternating walks from the lowest start
    vertex with neighbors taken in increasing order.
    """
    bad = check_proper(g, colors)
    if bad is not None:
        return bad
    at = _color_maps(g, colors)
    for s in range(g.order):
        for v1, e1 in sorted(g.adjacency[s]):
            x = colors[e1]
            if not x:
                continue
            for v2, e2 in sorted(g.adjacency[v1]):
                y = colors[e2]
                if v2 == s or not y:
                    continue
                hop = at[v2].get(x)
                if hop is None:
                    continue
                v3, e3 = hop
                hop = at[v3].get(y)
                if hop is None:
                    continue
                v4, e4 = hop
                if v4 == s:
                    return StarViolation(
                        ViolationKind.BICOLORED_CYCLE4, (s, v1, v2, v3), (e1, e2, e3, e4), (x, y)
                    )
                return StarViolation(
                    ViolationKind.BICOLORED_PATH4, (s, v1, v2, v3, v4), (e1, e2, e3, e4), (x, y)
                )
    return None


def is_star_coloring(g: Graph, colors: Sequence[int]) -> bool:
    return check_star(g, colors) is None


def check_restricted_strong(
    host: Graph, sub_edges: Sequence[int], colors: Sequence[int]
) -> StarViolation | None:
    """Strong-coloring condition on ``sub_edges`` with distances measured in ``host``.

    ``colors[i]`` is the color of host edge ``sub_edges[i]``. Two sub-edges
    conflict when they share a vertex or some host edge joins their endpoints.
    """
    if len(colors) != len(sub_edges):
        raise ColoringSizeMismatch(f"{len(colors)} colors for {len(sub_edges)} sub-edges")
    by_color: dict[int, list[int]] = {}
    for i, c in enumerate(colors):
        by_color.setdefault(c, []).append(i)
    found: list[tuple[tuple[int, int], StarViolation]] = []
    for c, idxs in by_color.items():
        for a in range(len(idxs)):
            for b in range(a + 1, len(idxs)):
                i, j = idxs[a], idxs[b]
                w = _strong_witness(host, sub_edges[i], sub_edges[j], c)
                if w is not None:
                    found.append(((i, j), w))
    return min(found, key=lambda t: t[0])[1] if found else None


def _strong_witness(host: Graph, e: int, f: int, c: int) -> StarViolation | None:
    a, b = host.edges[e]
    p, q = host.edges[f]
    if {a, b} & {p, q}:
        return StarViolation(ViolationKind.STRONG_CONFLICT, (a, b, p, q), (e, f), (c,))
    for x in (a, b):
        for y in (p, q):
            if host.has_edge(x, y):
                return StarViolation(
                    ViolationKind.STRONG_CONFLICT, (a, b, p, q), (e, f, host.edge_id(x, y)), (c,)
                )
    return None


def enumerate_4paths_and_4cycles(g: Graph) -> Iterator[tuple[str, tuple[int, ...]]]:
    """Every 4-path (once, up to reversal) and 4-cycle (once, up to symmetry).

    Yields ``("path", (v0..v4))`` and ``("cycle", (v0..v3))``.
    """
    nbrs = [sorted(g.neighbors(v)) for v in range(g.order)]
    for s in range(g.order):
        for a in nbrs[s]:
            for b in nbrs[a]:
                if b == s:
                    continue
                for c in nbrs[b]:
                    if c in (s, a):
                        continue
                    if s < a and s < b and s < c and a < c and g.has_edge(c, s):
                        yield "cycle", (s, a, b, c)
                    for d in nbrs[c]:
                        if d in (s, a, b) or d < s:
                            continue
                        yield "path", (s, a, b, c, d)


def walk_edges(g: Graph, kind: str, verts: Sequence[int]) -> list[int]:
    pairs = list(zip(verts, verts[1:]))
    if kind == "cycle":
        pairs.append((verts[-1], verts[0]))
    return [g.edge_id(u, v) for u, v in pairs]


def violation_holds(g: Graph, colors: Sequence[int], v: StarViolation) -> bool:
    """Re-check a witness against the graph and coloring from scratch."""
    try:
        if v.kind is ViolationKind.IMPROPER_ADJACENT:
            a, m, b = v.vertices
            e, f = v.edge_ids
            return (
                a != b
                and e == g.edge_id(a, m)
                and f == g.edge_id(m, b)
                and colors[e] == colors[f] == v.colors[0]
            )
        if v.kind is ViolationKind.STRONG_CONFLICT:
            e, f = v.edge_ids[:2]
            return colors[e] == colors[f] == v.colors[0] and (
                _strong_witness(g, e, f, v.colors[0]) is not None
            )
        kind = "cycle" if v.kind is ViolationKind.BICOLORED_CYCLE4 else "path"
        if len(set(v.vertices)) != (4 if kind == "cycle" else 5):
            return False
        ids = walk_edges(g, kind, v.vertices)
        if tuple(ids) != v.edge_ids:
            return False
        seq = [colors[i] for i in ids]
        x, y = v.colors
        return x != y and seq == [x, y, x, y]
    except KeyError:
        return False


class IncrementalColoring:
    """Partial proper coloring with O(deg) star-conflict queries.

    ``conflicts(eid, c)`` tells whether giving edge ``eid`` color ``c`` would
    create an improper adjacency or complete a bicolored 4-path / 4-cycle
    among the edges colored so far.
    """

    def __init__(self, g: Graph, colors: Sequence[int] | None = None) -> None:
        self.g = g
        self.colors = [0] * g.size
        self.at: list[dict[int, int]] = [{} for _ in range(g.order)]
        if colors is not None:
            for eid, c in enumerate(colors):
                if c:
                    self.assign(eid, c)

    def assign(self, eid: int, c: int) -> None:
        u, v = self.g.edges[eid]
        self.colors[eid] = c
        self.at[u][c] = v
        self.at[v][c] = u

    def unassign(self, eid: int) -> None:
        u, v = self.g.edges[eid]
        c = self.colors[eid]
        self.colors[eid] = 0
        del self.at[u][c]
        del self.at[v][c]

    def conflicts(self, eid: int, x: int) -> bool:
        a, b = self.g.edges[eid]
        at = self.at
        if x in at[a] or x in at[b]:
            return True
        for s, t in ((a, b), (b, a)):
            # edge st at the end of the walk: s-t (x), t-c (y), c-d (x), d-e (y)
            for y, c in at[t].items():
                d = at[c].get(x)
                if d is None or d == s:
                    continue
                if y in at[d]:
                    return True
            # edge st second in the walk: p-s (y), s-t (x), t-c (y), c-d (x)
            for y, p in at[s].items():
                c = at[t].get(y)
                if c is None or c == p:
                    continue
                if x in at[c]:
                    return True
        return False
