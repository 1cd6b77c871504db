"""Exact star chromatic index by exhaustive backtracking.

Edges are colored in BFS order from a maximum-degree vertex. Palette symmetry
is broken by introducing colors in increasing order, and each tentative color
is pruned with the incremental star check from :mod:`starcolor.verify`.
"""

from __future__ import annotations

import os
from collections import deque
from collections.abc import Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .errors import BudgetExhausted, ParamError
from .graph import Graph, color_count, max_degree
from .verify import IncrementalColoring, check_star

DEFAULT_BUDGET = 10**8

FEASIBLE = "feasible"
INFEASIBLE = "infeasible"
EXHAUSTED = "budget_exhausted"


@dataclass
class SearchOutcome:
    status: str
    coloring: list[int] | None = None
    nodes: int = 0

    @property
    def feasible(self) -> bool:
        return self.status == FEASIBLE


@dataclass
class ExactResult:
    k: int
    certificate: list[int]
    nodes_explored: int
    infeasible_below: int
    queries: list[tuple[int, str]] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "certificate": list(self.certificate),
            "nodes": self.nodes_explored,
            "infeasible_below": self.infeasible_below,
        }


def edge_order(g: Graph) -> list[int]:
    """BFS edge order starting from a maximum-degree vertex (per component)."""
    order: list[int] = []
    placed = [False] * g.size
    visited = [False] * g.order
    by_degree = sorted(range(g.order), key=lambda v: (-g.degree(v), v))
    for start in by_degree:
        if visited[start] or g.degree(start) == 0:
            continue
        visited[start] = True
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w, eid in sorted(g.adjacency[v]):
                if not placed[eid]:
                    placed[eid] = True
                    order.append(eid)
                if not visited[w]:
                    visited[w] = True
                    queue.append(w)
    return order


def _search(
    g: Graph,
    k: int,
    budget: int,
    order: Sequence[int],
    prefix: Sequence[int] = (),
) -> SearchOutcome:
    state = IncrementalColoring(g)
    top = 0
    for eid, c in zip(order, prefix):
        if state.conflicts(eid, c):
            return SearchOutcome(INFEASIBLE)
        state.assign(eid, c)
        top = max(top, c)
    start = len(prefix)
    n = len(order)
    if start == n:
        return SearchOutcome(FEASIBLE, list(state.colors))

    nodes = 0
    # per-depth: next color to try, and the running max color before this depth
    next_color = [1] * (n + 1)
    top_before = [0] * (n + 1)
    depth = start
    top_before[depth] = top
    while depth >= start:
        eid = order[depth]
        limit = min(k, top_before[depth] + 1)
        c = next_color[depth]
        if state.colors[eid]:
            state.unassign(eid)
        placed = False
        while c <= limit:
            nodes += 1
            if nodes > budget:
                return SearchOutcome(EXHAUSTED, nodes=nodes)
            if not state.conflicts(eid, c):
                placed = True
                break
            c += 1
        if not placed:
            next_color[depth] = 1
            depth -= 1
            continue
        state.assign(eid, c)
        next_color[depth] = c + 1
        if depth + 1 == n:
            return SearchOutcome(FEASIBLE, list(state.colors), nodes)
        top_before[depth + 1] = max(top_before[depth], c)
        next_color[depth + 1] = 1
        depth += 1
    return SearchOutcome(INFEASIBLE, nodes=nodes)


def _prefixes(g: Graph, k: int, order: Sequence[int], want: int) -> list[tuple[int, ...]]:
    """Valid symmetry-reduced assignments of the first few edges, at least ``want`` of them."""
    frontier: list[tuple[int, ...]] = [()]
    depth = 0
    while len(frontier) < want and depth < len(order):
        grown = []
        for pre in frontier:
            state = IncrementalColoring(g)
            for eid, c in zip(order, pre):
                state.assign(eid, c)
            eid = order[depth]
            for c in range(1, min(k, max(pre, default=0) + 1) + 1):
                if not state.conflicts(eid, c):
                    grown.append(pre + (c,))
        frontier = grown
        depth += 1
        if not frontier:
            break
    return frontier


def _search_task(args: tuple) -> SearchOutcome:
    g, k, budget, order, prefix = args
    return _search(g, k, budget, order, prefix)


def exists_star_k_coloring(
    g: Graph, k: int, budget: int = DEFAULT_BUDGET, parallel: bool = False, workers: int | None = None
) -> SearchOutcome:
    """Decide whether ``g`` has a star edge coloring with at most ``k`` colors.

    In parallel mode the budget applies to each subtree separately; the
    feasible/infeasible answer matches sequential mode but the certificate
    may differ.
    """
    if k < 1:
        raise ParamError(f"palette size must be >= 1, got {k}")
    order = edge_order(g)
    if not parallel:
        out = _search(g, k, budget, order)
    else:
        out = _parallel(g, k, budget, order, workers)
    if out.coloring is not None:
        assert check_star(g, out.coloring) is None, "solver produced an invalid certificate"
    return out


def _parallel(g: Graph, k: int, budget: int, order: list[int], workers: int | None) -> SearchOutcome:
    workers = workers or os.cpu_count() or 1
    prefixes = _prefixes(g, k, order, 4 * workers)
    if not prefixes:
        return SearchOutcome(INFEASIBLE)
    total = 0
    exhausted = False
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for out in pool.map(_search_task, [(g, k, budget, order, p) for p in prefixes]):
            total += out.nodes
            if out.feasible:
                return SearchOutcome(FEASIBLE, out.coloring, total)
            exhausted |= out.status == EXHAUSTED
    return SearchOutcome(EXHAUSTED if exhausted else INFEASIBLE, nodes=total)


def star_chromatic_index(
    g: Graph,
    lower_hint: int | None = None,
    upper_hint: int | None = None,
    budget: int = DEFAULT_BUDGET,
    parallel: bool = False,
) -> ExactResult:
    """Smallest ``k`` admitting a star ``k``-edge-coloring, with a certificate.

    ``lower_hint`` only chooses where the ascending search starts; if it is
    already feasible the search walks down until infeasibility is proved or
    the maximum-degree bound is reached.
    """
    delta = max_degree(g)
    if g.size == 0:
        return ExactResult(0, [], 0, -1)
    lo = delta if lower_hint is None else max(lower_hint, 1)
    hi = g.size if upper_hint is None else upper_hint
    if lo > hi:
        raise ParamError(f"lower_hint {lo} exceeds upper_hint {hi}")
    nodes = 0
    queries: list[tuple[int, str]] = []

    def ask(k: int) -> SearchOutcome:
        nonlocal nodes
        out = exists_star_k_coloring(g, k, budget - nodes, parallel=parallel)
        nodes += out.nodes
        queries.append((k, out.status))
        return out

    k = lo
    best: SearchOutcome | None = None
    proven_infeasible = delta - 1  # a proper coloring needs at least delta colors
    while k <= hi:
        out = ask(k)
        if out.status == EXHAUSTED:
            raise BudgetExhausted(proven_infeasible + 1, None, nodes)
        if out.feasible:
            best = out
            break
        proven_infeasible = k
        k += 1
    if best is None:
        raise ParamError(f"no star coloring with at most {hi} colors", code="UPPER_HINT_TOO_SMALL")
    # walk down if the starting point was above a proved bound
    while k - 1 > proven_infeasible:
        out = ask(k - 1)
        if out.status == EXHAUSTED:
            raise BudgetExhausted(proven_infeasible + 1, k, nodes)
        if not out.feasible:
            proven_infeasible = k - 1
            break
        best = out
        k -= 1
    cert = best.coloring or []
    assert color_count(cert) == k
    return ExactResult(k, cert, nodes, k - 1, queries)
