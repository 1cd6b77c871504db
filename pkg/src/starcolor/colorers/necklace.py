"""Star 5-coloring of necklaces with an odd spine length, plus the small drawn colorings."""

from __future__ import annotations

from ..errors import ParamError
from ..families import necklace
from ..graph import Graph
from .common import validated

A, B, C, D, F = 1, 2, 3, 4, 5


def _by_label(g: Graph, table: dict[tuple[str, str], int]) -> list[int]:
    ids = {g.label(v): v for v in range(g.order)}
    colors = [0] * g.size
    for (a, b), c in table.items():
        colors[g.edge_id(ids[a], ids[b])] = c
    return colors


# Drawn colorings of the necklaces N_1 (= K_4), N_2 and N_3, by vertex label.
FIGURE_N1 = {("0", "1'"): 1, ("1'", "2"): 2, ("2", "0"): 3, ("1", "0"): 4, ("1", "1'"): 5, ("1", "2"): 1}
FIGURE_N2 = {
    ("0", "1'"): 4, ("1'", "2'"): 5, ("2'", "3"): 4, ("3", "0"): 6,
    ("0", "1"): 2, ("1", "2"): 3, ("2", "3"): 2, ("1", "1'"): 1, ("2", "2'"): 1,
}  # fmt: skip
FIGURE_N3 = {
    ("0", "1"): 5, ("1", "2"): 2, ("2", "3"): 3, ("3", "4"): 4,
    ("1", "1'"): 1, ("2", "2'"): 1, ("3", "3'"): 1,
    ("0", "1'"): 3, ("1'", "2'"): 4, ("2'", "3'"): 5, ("3'", "4"): 2, ("4", "0"): 1,
}  # fmt: skip

# K_4 with edges 01, 12, 02, 03, 13, 23 (see families.k4): triangle, then spokes.
FIGURE_K4 = (1, 2, 3, 4, 5, 1)


def necklace_figure(h: int) -> list[int]:
    """Drawn coloring of ``N_h`` for h in 1, 2, 3 (not validated here)."""
    table = {1: FIGURE_N1, 2: FIGURE_N2, 3: FIGURE_N3}[h]
    return _by_label(necklace(h).graph, table)


def necklace_scheme(h: int) -> list[int]:
    """Raw 5-coloring for odd ``h >= 5``; letters a, b, c, d, f are colors 1..5."""
    g = necklace(h).graph

    def prime(i: int) -> int:
        return h + 1 + i

    colors = [0] * g.size

    def put(u: int, v: int, c: int) -> None:
        colors[g.edge_id(u, v)] = c

    put(0, 1, F)
    put(0, prime(1), C)
    for i in range(1, h + 1):
        put(i, prime(i), A)
    put(0, h + 1, A)
    spine = (B, C, D, F)
    opposite = (D, F, B, C)
    for i in range(1, h):
        put(i, i + 1, spine[(i - 1) % 4])
        put(prime(i), prime(i + 1), opposite[(i - 1) % 4])
    if (h - 1) % 4 == 0:
        put(h, h + 1, B)
        put(prime(h), h + 1, D)
    else:
        put(h, h + 1, D)
        put(prime(h), h + 1, B)
    return colors


def color_necklace_odd(h: int) -> list[int]:
    if h < 1:
        raise ParamError(f"necklace needs h >= 1, got {h}")
    if h % 2 == 0:
        raise ParamError("the 5-color scheme covers odd h only; use the cubic Halin colorer", code="EVEN_H")
    g = necklace(h).graph
    case = f"necklace:h={h}"
    if h <= 3:
        return validated(g, necklace_figure(h), case)
    return validated(g, necklace_scheme(h), case)
