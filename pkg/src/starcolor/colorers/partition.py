"""Merging a star coloring of F with a restricted strong coloring of H (G = F + H)."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from ..errors import ParamError
from ..graph import Graph, edge_subgraph
from ..verify import check_restricted_strong, check_star


@dataclass(frozen=True)
class PartitionSpec:
    f_edges: tuple[int, ...]
    h_edges: tuple[int, ...]

    def validate(self, host: Graph) -> None:
        f, h = set(self.f_edges), set(self.h_edges)
        if f & h or (f | h) != set(range(host.size)):
            raise ParamError("F and H must partition the host edges")


def compose_partition(
    host: Graph,
    spec: PartitionSpec,
    f_coloring: Sequence[int],
    h_coloring: Sequence[int],
) -> list[int]:
    """Total host coloring from ``f_coloring`` (aligned with ``spec.f_edges``) and
    ``h_coloring`` (aligned with ``spec.h_edges``).

    The two sub-colorings must use disjoint palettes. The caller still runs
    :func:`check_star` on the result.
    """
    spec.validate(host)
    if len(f_coloring) != len(spec.f_edges) or len(h_coloring) != len(spec.h_edges):
        raise ParamError("sub-coloring length does not match its edge set", code="SUBCOLORING_INVALID")
    if set(f_coloring) & set(h_coloring):
        raise ParamError("F and H palettes overlap", code="PALETTES_OVERLAP")
    f_graph, f_ids = edge_subgraph(host, spec.f_edges)
    pos = {eid: i for i, eid in enumerate(spec.f_edges)}
    f_sub = [f_coloring[pos[eid]] for eid in f_ids]
    if check_star(f_graph, f_sub) is not None:
        raise ParamError("F coloring is not a star coloring", code="SUBCOLORING_INVALID")
    if check_restricted_strong(host, spec.h_edges, h_coloring) is not None:
        raise ParamError("H coloring is not restricted-strong in the host", code="SUBCOLORING_INVALID")
    out = [0] * host.size
    for eid, c in zip(spec.f_edges, f_coloring):
        out[eid] = c
    for eid, c in zip(spec.h_edges, h_coloring):
        out[eid] = c
    return out
