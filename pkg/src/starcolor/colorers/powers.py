"""Star colorings of cycles and of squares of paths and cycles."""

from __future__ import annotations

from ..errors import ParamError
from ..families import cycle_square, path_square
from ..graph import Graph
from .common import validated
from .partition import PartitionSpec, compose_partition

# Tail blocks for the 3-coloring of C_n when 3 does not divide n. Found by
# exhaustive search on C_4 and C_8 and re-checked in tests for many n.
CYCLE3_TAIL = {0: (), 1: (1, 2, 1, 3), 2: (1, 2, 1, 3, 1, 2, 1, 3)}

# Period-4 star 4-coloring of the ladder P_2 x P_m, indexed by column mod 4:
# (top edge k->k+1, bottom edge k->k+1, rung k). Smallest period admitting a
# star 4-coloring; found by exhaustive search over periods 1..4.
LADDER4 = ((1, 2, 3), (2, 3, 4), (3, 4, 1), (4, 1, 2))

# Number of (1,2,3,4) blocks that replace (1,2,3,4,5) blocks in the
# restricted strong 5-coloring of the Hamiltonian cycle of C_n^2, by n mod 5.
STRONG5_SHORT_BLOCKS = {0: 0, 1: 4, 2: 3, 3: 2, 4: 1}

# Exact-solver certificates for the small cases, keyed by edge.
PATH_SQUARE_SMALL = {
    3: {(0, 1): 1, (1, 2): 3, (0, 2): 2},
    4: {(0, 1): 1, (1, 2): 2, (2, 3): 4, (0, 2): 3, (1, 3): 3},
}
K5_NINE = {
    (0, 1): 1, (1, 2): 3, (2, 3): 7, (3, 4): 9, (0, 4): 4,
    (0, 2): 2, (0, 3): 3, (1, 3): 5, (1, 4): 6, (2, 4): 8,
}  # fmt: skip


def _figure(outer: list[int], *walks: tuple[list[int], list[int]]) -> dict[tuple[int, int], int]:
    n = len(outer)
    table = {tuple(sorted((i, (i + 1) % n))): c for i, c in enumerate(outer)}
    for walk, colors in walks:
        for i, c in enumerate(colors):
            table[tuple(sorted((walk[i], walk[(i + 1) % len(walk)])))] = c
    return table


# Drawn colorings of C_7^2, C_10^2 and C_11^2. Outer colors follow the
# Hamiltonian cycle 0,1,...,n-1; inner colors follow each listed closed walk.
FIGURE_C7 = _figure([1, 2, 3, 4, 5, 6, 7], ([0, 2, 4, 6, 1, 3, 5], [4, 6, 1, 3, 5, 7, 2]))
FIGURE_C10 = _figure(
    [1, 2, 3, 1, 2, 3, 1, 2, 3, 2],
    ([0, 2, 4, 6, 8], [4, 5, 6, 7, 5]),
    ([1, 3, 5, 7, 9], [7, 8, 4, 8, 6]),
)
FIGURE_C11 = _figure(
    [1, 2, 3, 1, 2, 3, 1, 2, 3, 1, 4],
    ([0, 2, 4, 6, 8, 10, 1, 3, 5, 7, 9], [5, 4, 6, 4, 7, 6, 7, 8, 5, 8, 9]),
)


def from_table(g: Graph, table: dict[tuple[int, int], int]) -> list[int]:
    return [table[e] for e in g.edges]


def cycle_square_figure(n: int) -> list[int]:
    """The drawn coloring of ``C_n^2`` for ``n`` in 7, 10, 11 (not validated here)."""
    table = {7: FIGURE_C7, 10: FIGURE_C10, 11: FIGURE_C11}[n]
    return from_table(cycle_square(n), table)


def star_color_cycle(n: int, palette_offset: int = 0) -> list[int]:
    """Star 3-coloring of ``C_n`` (edge ``i`` joins ``i`` and ``i+1``)."""
    if n < 3:
        raise ParamError(f"cycle needs n >= 3, got {n}")
    if n == 5:
        raise ParamError("C_5 has no star 3-coloring", code="N_IS_FIVE")
    tail = CYCLE3_TAIL[n % 3]
    base = [1, 2, 3] * ((n - len(tail)) // 3) + list(tail)
    return [c + palette_offset for c in base]


def strong_color_outer_cycle(n: int, palette_offset: int = 0) -> list[int]:
    """5 colors on the Hamiltonian cycle of ``C_n^2`` such that any 4 consecutive edges differ.

    That is exactly restricted strong in ``C_n^2``. Needs ``n = 5a + 4b``,
    which fails for n in {1, 2, 3, 6, 7, 11}.
    """
    short = STRONG5_SHORT_BLOCKS[n % 5]
    if 4 * short > n:
        raise ParamError(f"no restricted strong 5-coloring pattern for n={n}")
    seq = [1, 2, 3, 4, 5] * ((n - 4 * short) // 5) + [1, 2, 3, 4] * short
    return [c + palette_offset for c in seq]


def path_square_partition(n: int) -> tuple[Graph, PartitionSpec]:
    """``P_n^2`` split into the ladder-like F and the matching H of edges ``v_i v_{i+1}``, i even.

    Labels are 1-based (``v_1`` is vertex 0), so H holds the ids ``(2j+1, 2j+2)``.
    """
    g = path_square(n)
    h = tuple(g.edge_id(i, i + 1) for i in range(1, n - 1, 2))
    hs = set(h)
    f = tuple(e for e in range(g.size) if e not in hs)
    return g, PartitionSpec(f, h)


def color_path_square(n: int) -> list[int]:
    if n < 3:
        raise ParamError(f"path square needs n >= 3, got {n}")
    if n in PATH_SQUARE_SMALL:
        g = path_square(n)
        return validated(g, from_table(g, PATH_SQUARE_SMALL[n]), f"path-square:n={n}")
    g, spec = path_square_partition(n)
    # F is a subgraph of the ladder: column j has top 2j, bottom 2j+1
    f_colors = []
    for eid in spec.f_edges:
        u, v = g.edges[eid]
        col = u // 2
        top, bottom, rung = LADDER4[col % 4]
        if v == u + 1:
            f_colors.append(rung)
        else:
            f_colors.append(top if u % 2 == 0 else bottom)
    h_colors = [5 + (j % 2) for j in range(len(spec.h_edges))]
    colors = compose_partition(g, spec, f_colors, h_colors)
    return validated(g, colors, f"path-square:n={n}")


def color_cycle_square(n: int) -> list[int]:
    if n < 5:
        raise ParamError(f"cycle square colorer needs n >= 5, got {n}")
    g = cycle_square(n)
    case = f"cycle-square:n={n}"
    if n == 5:
        return validated(g, from_table(g, K5_NINE), case)
    if n in (7, 10, 11):
        return validated(g, cycle_square_figure(n), case)
    colors = [0] * g.size
    outer = [g.edge_id(i, (i + 1) % n) for i in range(n)]
    if n % 2 == 0:
        for eid, c in zip(outer, star_color_cycle(n)):
            colors[eid] = c
        half = n // 2
        for parity, offset in ((0, 3), (1, 6)):
            inner = [g.edge_id(parity + 2 * j, (parity + 2 * j + 2) % n) for j in range(half)]
            for eid, c in zip(inner, star_color_cycle(half, offset)):
                colors[eid] = c
        return validated(g, colors, case)
    inner = [g.edge_id((2 * j) % n, (2 * j + 2) % n) for j in range(n)]
    spec = PartitionSpec(tuple(inner), tuple(outer))
    colors = compose_partition(g, spec, star_color_cycle(n, 5), strong_color_outer_cycle(n))
    return validated(g, colors, case)
