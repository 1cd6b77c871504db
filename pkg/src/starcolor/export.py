"""Graphviz DOT output."""

from __future__ import annotations

from collections.abc import Sequence

from .errors import ColoringSizeMismatch
from .graph import Graph

# Color ``c`` is drawn with PALETTE[(c - 1) % 12].
PALETTE = (
    "#e6194b", "#3cb44b", "#4363d8", "#f58231", "#911eb4", "#42d4f4",
    "#f032e6", "#9a6324", "#800000", "#469990", "#000075", "#808000",
)  # fmt: skip


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(g: Graph, colors: Sequence[int] | None = None, name: str = "G") -> str:
    if colors is not None and len(colors) != g.size:
        raise ColoringSizeMismatch(f"{len(colors)} colors for {g.size} edges")
    lines = [f"graph {_quote(name)} {{"]
    for v in range(g.order):
        label = g.label(v)
        lines.append(f"  {v} [label={_quote(label)}];")
    for eid, (u, v) in enumerate(g.edges):
        if colors is None:
            lines.append(f"  {u} -- {v};")
        else:
            c = int(colors[eid])
            lines.append(f'  {u} -- {v} [color="{PALETTE[(c - 1) % len(PALETTE)]}", label="{c}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
