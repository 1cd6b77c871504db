"""Star 5-coloring of the generalized Petersen graphs P(3n, n)."""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import ParamError
from ..families import generalized_petersen
from ..graph import Graph
from .common import validated

# Exact-solver certificate for P(6, 2), keyed by edge (u_i = i, v_i = 6 + i).
P62_FIVE = {
    (0, 1): 1, (1, 2): 2, (2, 3): 5, (3, 4): 2, (4, 5): 4, (0, 5): 2,
    (6, 8): 4, (7, 9): 4, (8, 10): 1, (9, 11): 1, (6, 10): 5, (7, 11): 5,
    (0, 6): 3, (1, 7): 3, (2, 8): 3, (3, 9): 3, (4, 10): 3, (5, 11): 3,
}  # fmt: skip

RESTART = "restart"
CONTINUOUS = "continuous"


@dataclass(frozen=True)
class PetersenPartition:
    """Edge ids of P(3n, n) by class, each indexed by ``i`` in ``0..3n-1``.

    ``e1[i]`` is ``u_i u_{i+1}``, ``e2[i]`` is ``v_i v_{i+n}``, ``e3[i]`` is ``u_i v_i``.
    """

    e1: tuple[int, ...]
    e2: tuple[int, ...]
    e3: tuple[int, ...]

    @classmethod
    def of(cls, g: Graph, n: int) -> PetersenPartition:
        m = 3 * n
        return cls(
            tuple(g.edge_id(i, (i + 1) % m) for i in range(m)),
            tuple(g.edge_id(m + i, m + (i + n) % m) for i in range(m)),
            tuple(g.edge_id(i, m + i) for i in range(m)),
        )


def petersen_3n_scheme(n: int, spoke_scheme: str = RESTART) -> tuple[Graph, list[int]]:
    """Raw (unvalidated) 5-coloring of P(3n, n) for ``n >= 3``.

    ``spoke_scheme`` controls the 5,4 alternation on spokes ``n..2n-1`` when
    ``n`` is odd: ``"restart"`` starts again with 5 at ``i = n``;
    ``"continuous"`` runs one alternation over ``0..2n-1``.
    """
    m = 3 * n
    g = generalized_petersen(m, n)
    part = PetersenPartition.of(g, n)
    f = [0] * g.size

    # triangles v_i v_{i+n} v_{i+2n}, colored in increasing subscript order
    for i in range(n):
        first, second, third = (4, 3, 2) if i % 2 == 0 else (5, 2, 1)
        f[part.e2[i]] = first
        f[part.e2[i + n]] = second
        f[part.e2[i + 2 * n]] = third

    for i in range(m):
        if i >= 2 * n:
            f[part.e3[i]] = (1, 3)[(i - 2 * n) % 2]
        elif n % 2 == 1 and spoke_scheme == RESTART and i >= n:
            f[part.e3[i]] = (5, 4)[(i - n) % 2]
        else:
            f[part.e3[i]] = (5, 4)[i % 2]

    def run(lo: int, hi: int, pattern: tuple[int, ...]) -> None:
        for i in range(lo, hi + 1):
            f[part.e1[i]] = pattern[(i - lo) % len(pattern)]

    def put(i: int, c: int) -> None:
        f[part.e1[i % m]] = c

    odd = n % 2 == 1
    r = n % 3
    if r == 0 and odd:
        run(0, 2 * n - 4, (3, 2, 1))
        put(2 * n - 3, 2)
        put(2 * n - 2, 3)
        put(2 * n - 1, 2)
        run(2 * n, 3 * n - 1, (5, 4, 2))
    elif r == 0:
        run(0, 2 * n - 1, (1, 3, 2, 3))
        run(2 * n, 3 * n - 1, (5, 4, 2))
    elif r == 1 and odd:
        run(0, n - 2, (2, 1, 3))
        put(n - 1, 1)
        run(n, 2 * n - 3, (2, 1, 3))
        put(2 * n - 2, 2)
        put(2 * n - 1, 3)
        run(2 * n, 3 * n - 3, (4, 5, 2))
        put(3 * n - 2, 4)
        put(3 * n - 1, 3)
    elif r == 1:
        run(0, 2 * n - 1, (2, 3, 1))
        run(2 * n, 3 * n - 2, (5, 2, 4))
        put(3 * n - 1, 1)
    elif odd:
        run(0, 2 * n - 1, (3, 1, 2))
        run(2 * n, 3 * n - 1, (4, 2, 5))
    else:
        run(0, 2 * n - 2, (1, 3, 2))
        put(2 * n - 1, 3)
        run(2 * n, 3 * n - 4, (5, 2, 4))
        put(3 * n - 3, 5)
        put(3 * n - 2, 4)
        put(3 * n - 1, 2)
    return g, f


def petersen_case(n: int) -> str:
    return f"petersen3n:n={n}:n%3={n % 3}:{'odd' if n % 2 else 'even'}"


def color_petersen_3n(n: int, spoke_scheme: str = RESTART) -> list[int]:
    """Star 5-coloring of P(3n, n), aligned with ``generalized_petersen(3n, n).edges``."""
    if n < 2:
        raise ParamError(f"P(3n, n) colorer needs n >= 2, got {n}")
    if spoke_scheme not in (RESTART, CONTINUOUS):
        raise ParamError(f"unknown spoke scheme {spoke_scheme!r}")
    if n == 2:
        g = generalized_petersen(6, 2)
        return validated(g, [P62_FIVE[e] for e in g.edges], petersen_case(2))
    g, f = petersen_3n_scheme(n, spoke_scheme)
    return validated(g, f, petersen_case(n))
