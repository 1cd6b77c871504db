"""Generators for the graph families and gadget graphs that the colorers target."""

from __future__ import annotations

import random
import re
from collections.abc import Sequence
from dataclasses import dataclass
from typing import Any, Union

from .errors import ParamError
from .graph import Graph, HalinGraph, bfs_distances, build_graph

# --- elementary graphs -----------------------------------------------------


def path(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ParamError(f"cycle needs n >= 3, got {n}")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star(leaves: int) -> Graph:
    return build_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def spider(legs: int, length: int) -> Graph:
    """``legs`` paths of ``length`` edges glued at vertex 0."""
    pairs = []
    nxt = 1
    for _ in range(legs):
        prev = 0
        for _ in range(length):
            pairs.append((prev, nxt))
            prev = nxt
            nxt += 1
    return build_graph(nxt, pairs)


def grid(m: int, n: int) -> Graph:
    """Cartesian product of paths with ``m`` and ``n`` vertices; vertex ``(r, c)`` is ``r*n + c``."""
    pairs = []
    for r in range(m):
        for c in range(n):
            v = r * n + c
            if c + 1 < n:
                pairs.append((v, v + 1))
            if r + 1 < m:
                pairs.append((v, v + n))
    return build_graph(m * n, pairs)


def ladder(m: int) -> Graph:
    return grid(2, m)


# --- powers ------------------------------------------------------------------


def power_graph(g: Graph, k: int) -> Graph:
    """Vertices at distance 1..k become adjacent. Original edges keep their indices."""
    if k < 1:
        raise ParamError(f"power needs k >= 1, got {k}")
    extra = []
    for u in range(g.order):
        dist = bfs_distances(g, u)
        for v in range(u + 1, g.order):
            d = dist[v]
            if d is not None and 2 <= d <= k:
                extra.append((u, v))
    return build_graph(g.order, list(g.edges) + extra, labels=g.labels)


def path_square(n: int) -> Graph:
    if n < 3:
        raise ParamError(f"path square needs n >= 3, got {n}")
    sq = power_graph(path(n), 2)
    labels = {i: f"v_{i + 1}" for i in range(n)}
    return build_graph(n, sq.edges, labels=labels, meta={"family": "path-square", "n": n})


def cycle_square(n: int) -> Graph:
    if n < 3:
        raise ParamError(f"cycle square needs n >= 3, got {n}")
    sq = power_graph(cycle(n), 2)
    return build_graph(n, sq.edges, meta={"family": "cycle-square", "n": n})


# --- generalized Petersen ----------------------------------------------------


def generalized_petersen(m: int, n: int) -> Graph:
    """P(m, n): outer ``u_i = i``, inner ``v_i = m + i`` for ``i`` in ``0..m-1``.

    Edge order: outer cycle ``u_i u_{i+1}``, inner ``v_i v_{i+n}`` (duplicates
    dropped), spokes ``u_i v_i``.
    """
    if m < 3 or not 1 <= n < m:
        raise ParamError(f"P({m},{n}) needs m >= 3 and 1 <= n < m")
    outer = [(i, (i + 1) % m) for i in range(m)]
    inner, seen = [], set()
    for i in range(m):
        e = tuple(sorted((m + i, m + (i + n) % m)))
        if e not in seen:
            seen.add(e)
            inner.append(e)
    spokes = [(i, m + i) for i in range(m)]
    labels = {i: f"u_{i}" for i in range(m)} | {m + i: f"v_{i}" for i in range(m)}
    return build_graph(
        2 * m, outer + inner + spokes, labels=labels, meta={"family": "petersen", "m": m, "n": n}
    )


# --- Halin graphs ------------------------------------------------------------


def _halin(
    order: int,
    tree_pairs: list[tuple[int, int]],
    cycle_order: Sequence[int],
    root: int,
    labels: dict[int, str] | None,
    meta: dict[str, Any],
) -> HalinGraph:
    k = len(cycle_order)
    cyc = [(cycle_order[i], cycle_order[(i + 1) % k]) for i in range(k)]
    g = build_graph(order, tree_pairs + cyc, labels=labels, meta=meta)
    return HalinGraph(g, frozenset(range(len(tree_pairs))), root, tuple(cycle_order))


def necklace(h: int) -> HalinGraph:
    """Necklace over a caterpillar with spine ``1..h``.

    Vertex ids: ``0``, spine ``1..h``, ``h+1``, and leaf ``i'`` is ``h+1+i``.
    The cycle visits ``0, 1', 2', ..., h', h+1``.
    """
    if h < 1:
        raise ParamError(f"necklace needs h >= 1, got {h}")

    def prime(i: int) -> int:
        return h + 1 + i

    tree = [(0, 1)] + [(i, i + 1) for i in range(1, h)] + [(h, h + 1)]
    tree += [(i, prime(i)) for i in range(1, h + 1)]
    order = [0] + [prime(i) for i in range(1, h + 1)] + [h + 1]
    labels = {i: str(i) for i in range(h + 2)} | {prime(i): f"{i}'" for i in range(1, h + 1)}
    return _halin(2 * h + 2, tree, order, 1, labels, {"family": "necklace", "h": h})


SpecNode = Union[int, Sequence["SpecNode"]]


@dataclass(frozen=True)
class CompleteHalinSpec:
    """Rooted plane tree given as nested child lists.

    A node is the list of its children (``[]`` is a leaf); an integer ``k`` is
    shorthand for a node with ``k`` leaf children. ``[5, 5, 5]`` is a root with
    three children, each carrying five leaves.
    """

    children: Sequence[SpecNode]

    def normalized(self) -> list:
        def norm(node: SpecNode) -> list:
            if isinstance(node, bool):
                raise ParamError("spec entries must be ints or lists", code="INVALID_SPEC")
            if isinstance(node, int):
                if node < 0:
                    raise ParamError("negative child count", code="INVALID_SPEC")
                return [[] for _ in range(node)]
            return [norm(c) for c in node]

        return norm(list(self.children))


def complete_halin(spec: CompleteHalinSpec | Sequence[SpecNode]) -> HalinGraph:
    if not isinstance(spec, CompleteHalinSpec):
        spec = CompleteHalinSpec(spec)
    root = spec.normalized()
    if len(root) < 3:
        raise ParamError("root needs at least 3 children", code="INVALID_SPEC")
    depths: set[int] = set()

    def walk(node: list, depth: int) -> None:
        if not node:
            depths.add(depth)
            return
        if depth > 0 and len(node) < 2:
            raise ParamError("interior vertices need at least 2 children", code="INVALID_SPEC")
        for c in node:
            walk(c, depth + 1)

    walk(root, 0)
    if len(depths) != 1:
        raise ParamError(f"leaves at unequal depths {sorted(depths)}", code="INVALID_SPEC")

    # ids in BFS order; leaves of equal depth then appear left to right
    tree: list[tuple[int, int]] = []
    leaves: list[int] = []
    labels = {0: "r"}
    parent_group: dict[int, int] = {}
    level = [(0, root)]
    next_id = 1
    group = 0
    while level:
        nxt = []
        for vid, node in level:
            if node and all(not c for c in node):
                group += 1
            for j, child in enumerate(node, start=1):
                cid = next_id
                next_id += 1
                tree.append((vid, cid))
                if child:
                    labels[cid] = f"w{cid}"
                    nxt.append((cid, child))
                else:
                    leaves.append(cid)
                    parent_group[cid] = group
                    labels[cid] = f"u_{{{group},{j}}}"
        level = nxt
    depth = depths.pop()
    meta = {"family": "complete-halin", "spec": root, "depth": depth}
    return _halin(next_id, tree, leaves, 0, labels, meta)


def random_cubic_halin(leaf_count: int, seed: int = 0) -> HalinGraph:
    """Cubic Halin graph grown from K_{1,3} by splitting uniformly chosen leaves."""
    if leaf_count < 3:
        raise ParamError(f"cubic Halin graph needs >= 3 leaves, got {leaf_count}")
    rng = random.Random(seed)
    tree = [(0, 1), (0, 2), (0, 3)]
    cyc = [1, 2, 3]
    next_id = 4
    while len(cyc) < leaf_count:
        pos = rng.randrange(len(cyc))
        leaf = cyc[pos]
        a, b = next_id, next_id + 1
        next_id += 2
        tree += [(leaf, a), (leaf, b)]
        cyc[pos : pos + 1] = [a, b]
    meta = {"family": "cubic-halin", "leaves": leaf_count, "seed": seed}
    return _halin(next_id, tree, cyc, 0, None, meta)


def wheel(n: int) -> HalinGraph:
    """Hub ``0`` joined to the rim cycle ``1..n``."""
    if n < 3:
        raise ParamError(f"wheel needs n >= 3, got {n}")
    return complete_halin([0] * n)


# --- named gadgets -------------------------------------------------------------


def net() -> Graph:
    """Triangle 0-1-2 with pendant vertices 3, 4, 5 at 0, 1, 2."""
    return build_graph(6, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)], meta={"family": "net"})


def k4() -> Graph:
    """Triangle 0-1-2 (edges 01, 12, 02) then spokes from 3."""
    return build_graph(4, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 3), (2, 3)], meta={"family": "k4"})


def fan3() -> Graph:
    """The five-vertex fan ``v1..v5`` (ids 0..4) used for the 6-color lower bound.

    Edges ``v1v2, v2v3, v3v4, v4v5, v1v3, v2v4, v3v5``: the square of the path
    ``v1..v5``, hub ``v3``.
    """
    pairs = [(0, 1), (1, 2), (2, 3), (3, 4), (0, 2), (1, 3), (2, 4)]
    labels = {i: f"v{i + 1}" for i in range(5)}
    return build_graph(5, pairs, labels=labels, meta={"family": "fan3"})


def fan3_drawn() -> Graph:
    """Alternative reading of the fan drawing: closed trail ``v1..v5 v1`` plus chord ``v2v4``."""
    pairs = [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (1, 3)]
    labels = {i: f"v{i + 1}" for i in range(5)}
    return build_graph(5, pairs, labels=labels, meta={"family": "fan3-drawn"})


def h0() -> Graph:
    """Triangle 0-1-2; vertex ``3+i`` hangs off ``i`` and carries leaves ``6+2i``, ``7+2i``."""
    pairs = [(0, 1), (1, 2), (0, 2)]
    pairs += [(i, 3 + i) for i in range(3)]
    for i in range(3):
        pairs += [(3 + i, 6 + 2 * i), (3 + i, 7 + 2 * i)]
    return build_graph(12, pairs, meta={"family": "h0"})


_WHEEL = re.compile(r"^wheel\(?(\d+)\)?$")


def named(name: str) -> Graph:
    key = name.strip().lower()
    simple = {"k4": k4, "net": net, "fan3": fan3, "fan3-drawn": fan3_drawn, "h0": h0}
    if key in simple:
        return simple[key]()
    if key == "k5":
        return complete(5).with_meta(family="k5")
    m = _WHEEL.match(key)
    if m:
        return wheel(int(m.group(1))).graph
    raise ParamError(f"unknown graph name {name!r}", code="UNKNOWN_NAME")
