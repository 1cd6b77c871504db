"""Star 6-coloring of 3-regular Halin graphs by shrinking the leaf cycle.

Each step removes the leaves under a deepest pair of interior vertices and
contracts them onto ``w``, which becomes a leaf of a smaller cubic Halin graph.
After the small graph is colored, the removed edges are put back: some copy a
color from the contracted edges and the rest are chosen with a local check.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from ..errors import ConstructionFailed, ParamError
from ..exact import star_chromatic_index
from ..graph import Graph, HalinGraph, build_graph
from ..verify import IncrementalColoring
from .common import backtrack_extend, validated

PALETTE = (1, 2, 3, 4, 5, 6)

Pair = tuple[int, int]


def _pair(a: int, b: int) -> Pair:
    return (a, b) if a < b else (b, a)


@dataclass
class _Level:
    tree: dict[int, set[int]]
    cycle: list[int]

    def edges(self) -> list[Pair]:
        out = sorted({_pair(a, b) for a, nbrs in self.tree.items() for b in nbrs})
        k = len(self.cycle)
        out += [_pair(self.cycle[i], self.cycle[(i + 1) % k]) for i in range(k)]
        return out

    def graph(self) -> tuple[Graph, list[Pair]]:
        ids = {v: i for i, v in enumerate(sorted(self.tree))}
        pairs = self.edges()
        return build_graph(len(ids), [(ids[a], ids[b]) for a, b in pairs]), pairs


@dataclass(frozen=True)
class _Step:
    """One reduction; ``v`` is ``None`` when ``w`` itself carries the leaf ``v1``."""

    x: int
    w: int
    u: int
    u1: int
    u2: int
    v: int | None
    v1: int
    v2: int
    z1: int
    z2: int | None


def _farthest(tree: dict[int, set[int]], src: int) -> tuple[int, dict[int, int]]:
    back = {src: src}
    queue = deque([src])
    last = src
    while queue:
        a = queue.popleft()
        last = a
        for b in sorted(tree[a]):
            if b not in back:
                back[b] = a
                queue.append(b)
    return last, back


def _diametral_path(tree: dict[int, set[int]]) -> list[int]:
    start = min(v for v, nbrs in tree.items() if len(nbrs) == 1)
    a, _ = _farthest(tree, start)
    b, back = _farthest(tree, a)
    path = [b]
    while path[-1] != a:
        path.append(back[path[-1]])
    return path


def _locate(cycle: list[int], first: set[int], then: tuple[set[int], ...]) -> list[int] | None:
    """Cycle window: one leaf, the pair ``first``, leaves from ``then`` in turn, one more leaf.

    Both directions are tried, so the pair ``first`` always precedes ``then``.
    """
    k = len(cycle)
    for seq in (cycle, cycle[::-1]):
        for i in range(k):
            window = [seq[(i + j) % k] for j in range(-1, 3 + len(then))]
            if len(set(window)) < len(window) or set(window[1:3]) != first:
                continue
            if all(window[3 + j] in s for j, s in enumerate(then)):
                return window
    return None


def _reduce(level: _Level) -> tuple[_Step, _Level]:
    tree, cycle = level.tree, level.cycle
    y = _diametral_path(tree)
    u, w, x = y[1], y[2], y[3]
    u_leaves = tree[u] - {w}
    (t,) = tree[w] - {x, u}
    if len(tree[t]) == 1:
        window = _locate(cycle, u_leaves, ({t},))
        assert window is not None
        z1, u1, u2, v1, v2 = window
        step = _Step(x, w, u, u1, u2, None, v1, v2, z1, None)
        gone = {u, u1, u2, v1}
        removed = {u1, u2, v1}
    else:
        v_leaves = tree[t] - {w}
        first = _locate(cycle, u_leaves, (v_leaves, v_leaves))
        assert first is not None
        z1, u1, u2, v1, v2, z2 = first
        step = _Step(x, w, u, u1, u2, t, v1, v2, z1, z2)
        gone = {u, t, u1, u2, v1, v2}
        removed = {u1, u2, v1, v2}
    new_tree = {a: nbrs - gone for a, nbrs in tree.items() if a not in gone}
    new_cycle: list[int] = []
    for leaf in cycle:
        if leaf in removed:
            if w not in new_cycle:
                new_cycle.append(w)
        else:
            new_cycle.append(leaf)
    return step, _Level(new_tree, new_cycle)


def _extend(step: _Step, level: _Level, phi: dict[Pair, int], case: str) -> dict[Pair, int]:
    s = step
    g, pairs = level.graph()
    eid = {p: i for i, p in enumerate(pairs)}
    psi = {p: c for p, c in phi.items() if p in eid}
    xw = phi[_pair(s.x, s.w)]
    if s.v is None:
        wz1, wv2 = phi[_pair(s.w, s.z1)], phi[_pair(s.w, s.v2)]
        psi[_pair(s.u1, s.u2)] = xw
        for a, b in ((s.w, s.v1), (s.z1, s.u1)):
            psi[_pair(a, b)] = wz1
        for a, b in ((s.u, s.u1), (s.v1, s.v2)):
            psi[_pair(a, b)] = wv2
        rest = [(s.u, s.w), (s.u2, s.v1), (s.u, s.u2)]
    else:
        assert s.z2 is not None
        wz1, wz2 = phi[_pair(s.w, s.z1)], phi[_pair(s.w, s.z2)]
        psi[_pair(s.u2, s.v1)] = xw
        for a, b in ((s.w, s.v), (s.v1, s.v2), (s.z1, s.u1)):
            psi[_pair(a, b)] = wz1
        for a, b in ((s.w, s.u), (s.u1, s.u2), (s.v2, s.z2)):
            psi[_pair(a, b)] = wz2
        rest = [(s.v, s.v2), (s.u, s.u1), (s.u, s.u2), (s.v, s.v1)]
    colors = [0] * g.size
    for p, c in psi.items():
        colors[eid[p]] = c
    state = IncrementalColoring(g, colors)
    backtrack_extend(state, [eid[_pair(a, b)] for a, b in rest], PALETTE, case)
    validated(g, state.colors, case)
    return {p: state.colors[i] for i, p in enumerate(pairs)}


def color_cubic_halin(hg: HalinGraph) -> list[int]:
    """Star coloring of a 3-regular Halin graph with at most 6 colors.

    Cycles of length at most 5 are solved exactly; longer ones are reduced
    one step at a time and rebuilt in reverse order.
    """
    g = hg.graph
    if any(g.degree(v) != 3 for v in range(g.order)):
        raise ParamError("graph is not 3-regular", code="NOT_CUBIC")
    tree: dict[int, set[int]] = {v: set() for v in range(g.order)}
    for e in hg.tree_edges:
        a, b = g.edges[e]
        tree[a].add(b)
        tree[b].add(a)
    level = _Level(tree, list(hg.cycle_order))
    stack: list[tuple[_Step, _Level]] = []
    while len(level.cycle) > 5:
        step, smaller = _reduce(level)
        stack.append((step, level))
        level = smaller

    base, pairs = level.graph()
    cert = star_chromatic_index(base, upper_hint=6).certificate
    phi = dict(zip(pairs, cert))
    while stack:
        step, level = stack.pop()
        kind = "w=v" if step.v is None else "wv-in-T"
        phi = _extend(step, level, phi, f"cubic-halin:cycle={len(level.cycle)}:{kind}")
    colors = [phi[e] for e in g.edges]
    if max(colors) > 6:
        raise ConstructionFailed("more than 6 colors", "cubic-halin", colors=colors)
    return validated(g, colors, "cubic-halin")
