from __future__ import annotations

from collections.abc import Iterable, Sequence

from ..errors import ConstructionFailed
from ..graph import Graph
from ..verify import IncrementalColoring, check_star


def validated(g: Graph, colors: Sequence[int], case: str) -> list[int]:
    """Return ``colors`` as a list if it is a total star coloring, else raise."""
    colors = list(colors)
    if len(colors) != g.size or any(c < 1 for c in colors):
        raise ConstructionFailed("coloring is not total", case, colors=colors)
    bad = check_star(g, colors)
    if bad is not None:
        raise ConstructionFailed(f"{bad.kind.value} at {bad.vertices}", case, bad, colors)
    return colors


def greedy_extend(
    state: IncrementalColoring,
    edges: Iterable[int],
    palette: Sequence[int],
    case: str,
) -> None:
    """Color ``edges`` in order, each with the first palette color passing the local check."""
    for eid in edges:
        for c in palette:
            if not state.conflicts(eid, c):
                state.assign(eid, c)
                break
        else:
            u, v = state.g.edges[eid]
            raise ConstructionFailed(f"no admissible color for edge {u}-{v}", case, colors=state.colors)


def backtrack_extend(
    state: IncrementalColoring,
    edges: Sequence[int],
    palette: Sequence[int],
    case: str,
) -> None:
    """Like :func:`greedy_extend` but revisits earlier choices among ``edges`` on a dead end.

    The first solution in lexicographic palette order is kept, so the result
    equals the greedy one whenever greedy succeeds.
    """
    edges = list(edges)
    choice = [0] * len(edges)
    i = 0
    while 0 <= i < len(edges):
        eid = edges[i]
        if state.colors[eid]:
            state.unassign(eid)
        j = choice[i]
        while j < len(palette) and state.conflicts(eid, palette[j]):
            j += 1
        if j == len(palette):
            choice[i] = 0
            i -= 1
            continue
        state.assign(eid, palette[j])
        choice[i] = j + 1
        i += 1
    if i < 0:
        raise ConstructionFailed("local extension is infeasible", case, colors=state.colors)
