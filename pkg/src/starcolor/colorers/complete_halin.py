"""Star coloring of complete Halin graphs (all leaves at one depth, Delta >= 6)."""

from __future__ import annotations

from collections import deque

from ..errors import ConstructionFailed, ParamError
from ..graph import HalinGraph, edge_subgraph, max_degree
from ..verify import IncrementalColoring
from .common import validated
from .tree import tree_star_coloring


def _tree_parents(hg: HalinGraph) -> tuple[list[int], list[int]]:
    g = hg.graph
    nbrs: list[list[int]] = [[] for _ in range(g.order)]
    for e in hg.tree_edges:
        a, b = g.edges[e]
        nbrs[a].append(b)
        nbrs[b].append(a)
    parent = [-1] * g.order
    depth = [-1] * g.order
    depth[hg.root] = 0
    queue = deque([hg.root])
    while queue:
        a = queue.popleft()
        for b in nbrs[a]:
            if depth[b] < 0:
                depth[b], parent[b] = depth[a] + 1, a
                queue.append(b)
    return parent, depth


def leaf_groups(hg: HalinGraph) -> list[list[int]]:
    """Maximal runs of cycle leaves sharing a tree parent, in cycle order.

    The cycle is rotated so that the first run starts right after a change of
    parent.
    """
    parent, _ = _tree_parents(hg)
    cyc = list(hg.cycle_order)
    k = len(cyc)
    start = next((i for i in range(k) if parent[cyc[i]] != parent[cyc[i - 1]]), 0)
    cyc = cyc[start:] + cyc[:start]
    groups: list[list[int]] = []
    for leaf in cyc:
        if groups and parent[groups[-1][0]] == parent[leaf]:
            groups[-1].append(leaf)
        else:
            groups.append([leaf])
    return groups


def _group_order(j: int) -> tuple[bool, list[int]]:
    """Order in which the path edges ``u_m u_{m+1}`` (m = 1..j-1) get colored.

    Returns whether edge ``j-3`` is pre-colored with the extra color, and the
    remaining edge indices ``m``.
    """
    if j <= 3:
        return False, list(range(1, j))
    if j == 4:
        return False, [1, 3, 2]
    order = [1, j - 1, 2, *range(3, j - 1)]
    seen: set[int] = {j - 3}
    out = []
    for m in order:
        if m not in seen:
            seen.add(m)
            out.append(m)
    return True, out


def color_complete_halin(hg: HalinGraph) -> list[int]:
    """Star coloring with at most floor(3*Delta/2) + 1 colors.

    The tree takes colors 1..floor(3*Delta/2); the extra color ``c0`` goes on
    the cycle edges joining consecutive leaf groups. Inside each group the
    path edges are colored in a fixed order, each with the smallest color
    that keeps the partial coloring star.
    """
    g = hg.graph
    _, depth = _tree_parents(hg)
    leaf_depths = {depth[v] for v in hg.cycle_order}
    if len(leaf_depths) != 1:
        raise ParamError("leaves are not all at the same depth", code="NOT_COMPLETE")
    if leaf_depths == {1}:
        raise ParamError("wheels are not covered", code="IS_WHEEL")
    delta = max_degree(g)
    if delta < 6:
        raise ParamError(f"maximum degree {delta} < 6", code="DELTA_TOO_SMALL")
    k = 3 * delta // 2
    c0 = k + 1

    tree, tree_ids = edge_subgraph(g, hg.tree_edges)
    colors = [0] * g.size
    for eid, c in zip(tree_ids, tree_star_coloring(tree, palette_size=k)):
        colors[eid] = c
    state = IncrementalColoring(g, colors)
    palette = range(1, c0 + 1)
    case = f"complete-halin:delta={delta}"

    def put(a: int, b: int, c: int) -> None:
        eid = g.edge_id(a, b)
        if state.conflicts(eid, c):
            raise ConstructionFailed(f"color {c} is not admissible on {a}-{b}", case, colors=state.colors)
        state.assign(eid, c)

    groups = leaf_groups(hg)
    for i, grp in enumerate(groups):
        put(grp[-1], groups[(i + 1) % len(groups)][0], c0)
    for i, grp in enumerate(groups):
        j = len(grp)
        pre, order = _group_order(j)
        if pre:
            put(grp[j - 4], grp[j - 3], c0)
        for m in order:
            a, b = grp[m - 1], grp[m]
            eid = g.edge_id(a, b)
            c = next((c for c in palette if not state.conflicts(eid, c)), None)
            if c is None:
                raise ConstructionFailed(f"no admissible color for {a}-{b} in group {i}", case, colors=state.colors)
            state.assign(eid, c)
    return validated(g, state.colors, case)
