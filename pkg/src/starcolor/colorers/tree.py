"""Star edge coloring of trees with at most floor(3*Delta/2) colors.

Edges are colored top-down from a maximum-degree root. When the child edges
of ``v`` (parent ``p``) are colored, the only possible bicolored 4-path ends
at the new edge and runs ``c - v - p - q - r``: it needs the new color to
repeat the color of ``pq`` and ``q`` to carry the color of ``pv``. So colors
absent at ``p`` are always safe, and a color of an edge ``pq`` may be reused
at ``v`` provided ``q`` never uses the color of ``pv``. Among the children of
``p`` the permission to reuse is handed out along a round-robin tournament,
so no two siblings borrow from each other; edges to leaf children are always
safe, and the parent edge of ``p`` can be borrowed whenever its far end lacks
the color of ``pv``. Counting shows this
leaves enough colors within floor(3*Delta/2).
"""

from __future__ import annotations

from collections import deque

from ..errors import ConstructionFailed, ParamError
from ..graph import Graph, is_tree, max_degree
from ..verify import IncrementalColoring
from .common import backtrack_extend, validated


def _tournament_out(d: int, i: int) -> list[int]:
    out = [(i + s) % d for s in range(1, (d - 1) // 2 + 1)]
    if d % 2 == 0 and i < d // 2:
        out.append(i + d // 2)
    return out


def tree_star_coloring(t: Graph, palette_size: int | None = None, root: int | None = None) -> list[int]:
    if not is_tree(t):
        raise ParamError("input is not a tree", code="NOT_A_TREE")
    if t.size == 0:
        return []
    delta = max_degree(t)
    k = palette_size if palette_size is not None else 3 * delta // 2
    if root is None:
        root = min(range(t.order), key=lambda v: (-t.degree(v), v))

    parent = [-1] * t.order
    parent_edge = [-1] * t.order
    children: list[list[int]] = [[] for _ in range(t.order)]
    bfs = [root]
    seen = [False] * t.order
    seen[root] = True
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for w, eid in sorted(t.adjacency[v]):
            if not seen[w]:
                seen[w] = True
                parent[w], parent_edge[w] = v, eid
                children[v].append(w)
                bfs.append(w)
                queue.append(w)

    state = IncrementalColoring(t)
    if len(children[root]) > k:
        raise ConstructionFailed("palette smaller than the root degree", "tree:root")
    for c, w in enumerate(children[root], start=1):
        state.assign(parent_edge[w], c)

    for p in bfs:
        kids = [v for v in children[p] if children[v]]
        if not kids:
            continue
        at_p = set(state.at[p])
        fresh = [c for c in range(1, k + 1) if c not in at_p]
        g = parent[p]
        at_g = set(state.at[g]) if g >= 0 else set()
        color = {v: state.colors[parent_edge[v]] for v in children[p]}
        # a leaf child never carries a second edge, so its color is always safe
        free = sorted(color[v] for v in children[p] if not children[v])
        # siblings that cannot borrow the parent edge take the larger out-sets
        kids.sort(key=lambda v: (g >= 0 and color[v] not in at_g, v))
        d = len(kids)
        group: list[int] = []
        greedy_ok = True
        for i, v in enumerate(kids):
            borrow = [color[kids[j]] for j in _tournament_out(d, i)]
            if g >= 0 and color[v] not in at_g:
                borrow.append(state.colors[parent_edge[p]])
            candidates = fresh + sorted(free + borrow)
            for w in children[v]:
                eid = parent_edge[w]
                group.append(eid)
                if not greedy_ok:
                    continue
                for c in candidates:
                    if not state.conflicts(eid, c):
                        state.assign(eid, c)
                        break
                else:
                    greedy_ok = False
        if not greedy_ok:
            for eid in group:
                if state.colors[eid]:
                    state.unassign(eid)
            backtrack_extend(state, group, list(range(1, k + 1)), f"tree:vertex={p}")
    return validated(t, state.colors, "tree")
