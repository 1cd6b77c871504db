"""Command-line front end: ``starcolor <subcommand> ...``.

Exit codes: 0 success; 1 verify found a violation or exact proved no coloring
within ``--max-k``; 2 bad input; 3 construction failure or bench discrepancy;
4 search budget exhausted or bench timeout.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Sequence
from pathlib import Path
from typing import Any

from . import families
from .bench import run_paper_suite, write_report
from .colorers import cycle_square_figure, necklace_figure
from .colorers.necklace import FIGURE_K4
from .dispatch import ALGORITHMS, FAMILIES, color_by, generate
from .errors import BudgetExhausted, ConstructionFailed, ParamError, StarColorError
from .exact import DEFAULT_BUDGET, exists_star_k_coloring, star_chromatic_index
from .export import export_dot
from .graph import (
    Graph,
    HalinGraph,
    coloring_from_json,
    coloring_to_json,
    color_count,
    graph_from_json,
    graph_to_json,
    halin_from_json,
    max_degree,
)
from .verify import check_proper, check_restricted_strong, check_star

EXIT_OK, EXIT_VIOLATION, EXIT_INPUT, EXIT_FAILED, EXIT_BUDGET = 0, 1, 2, 3, 4

FIGURES = {
    "k4": lambda: (families.k4(), list(FIGURE_K4)),
    "necklace-1": lambda: (families.necklace(1).graph, necklace_figure(1)),
    "necklace-2": lambda: (families.necklace(2).graph, necklace_figure(2)),
    "necklace-3": lambda: (families.necklace(3).graph, necklace_figure(3)),
    "cycle-square-7": lambda: (families.cycle_square(7), cycle_square_figure(7)),
    "cycle-square-10": lambda: (families.cycle_square(10), cycle_square_figure(10)),
    "cycle-square-11": lambda: (families.cycle_square(11), cycle_square_figure(11)),
}


def _read_json(path: str) -> Any:
    return json.loads(Path(path).read_text(encoding="utf-8"))


def _write_json(path: str | None, doc: Any) -> None:
    text = json.dumps(doc, indent=2, ensure_ascii=False) + "\n"
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def _load_graph(path: str) -> tuple[Graph, HalinGraph | None]:
    doc = _read_json(path)
    return graph_from_json(doc), halin_from_json(doc)


def _emit(doc: dict[str, Any]) -> None:
    print(json.dumps(doc, ensure_ascii=False))


# --- subcommands ------------------------------------------------------------------


def cmd_gen(args: argparse.Namespace) -> int:
    spec = _read_json(args.spec) if args.spec else None
    g, halin = generate(args.family, n=args.n, h=args.h, m=args.m, leaves=args.leaves, seed=args.seed, spec=spec)
    _write_json(args.out, graph_to_json(g, halin))
    return EXIT_OK


def cmd_color(args: argparse.Namespace) -> int:
    g, halin = _load_graph(args.input)
    used = args.algorithm
    try:
        used, colors = color_by(args.algorithm, g, halin)
        fallback = False
    except (ConstructionFailed, ParamError) as exc:
        if args.fallback != "exact" or (isinstance(exc, ParamError) and exc.code == "GRAPH_MISMATCH"):
            raise
        print(f"{exc}; falling back to the exact solver", file=sys.stderr)
        colors = star_chromatic_index(g, budget=args.budget).certificate
        fallback = True
    _write_json(args.out, coloring_to_json(colors))
    _emit({"algorithm": "exact" if fallback else used, "colors_used": color_count(colors), "fallback": fallback})
    return EXIT_OK


def _read_sub(path: str, g: Graph) -> list[int]:
    doc = _read_json(path)
    items = doc["edges"] if isinstance(doc, dict) else doc
    out = []
    for item in items:
        if isinstance(item, int):
            if not 0 <= item < g.size:
                raise ParamError(f"edge id {item} out of range", code="VERTEX_OUT_OF_RANGE")
            out.append(item)
        else:
            u, v = item
            if not g.has_edge(u, v):
                raise ParamError(f"{u}-{v} is not an edge of the host graph")
            out.append(g.edge_id(u, v))
    return out


def cmd_verify(args: argparse.Namespace) -> int:
    g, _ = _load_graph(args.graph)
    colors = coloring_from_json(_read_json(args.coloring))
    if args.mode == "strong":
        if not args.sub:
            raise ParamError("--mode strong needs --sub")
        sub = _read_sub(args.sub, g)
        if len(colors) == g.size and len(sub) != g.size:
            colors = [colors[e] for e in sub]
        bad = check_restricted_strong(g, sub, colors)
    elif args.mode == "proper":
        bad = check_proper(g, colors)
    else:
        bad = check_star(g, colors)
    if bad is None:
        _emit({"ok": True, "mode": args.mode, "colors_used": color_count(colors)})
        return EXIT_OK
    _emit({"ok": False, "mode": args.mode, "violation": bad.to_json()})
    return EXIT_VIOLATION


def cmd_exact(args: argparse.Namespace) -> int:
    g, _ = _load_graph(args.graph)
    if args.max_k is not None and args.max_k < max_degree(g):
        _emit({"k": None, "status": "infeasible", "infeasible_below": args.max_k, "nodes": 0})
        return EXIT_VIOLATION
    try:
        res = star_chromatic_index(g, upper_hint=args.max_k, budget=args.budget, parallel=args.parallel)
    except BudgetExhausted as exc:
        _emit({"k": None, "status": "budget_exhausted", "lower": exc.lower, "nodes": exc.nodes})
        return EXIT_BUDGET
    except ParamError as exc:
        if exc.code != "UPPER_HINT_TOO_SMALL":
            raise
        # report the bound that was proved rather than an error
        out = exists_star_k_coloring(g, args.max_k, args.budget, parallel=args.parallel)
        _emit({"k": None, "status": "infeasible", "infeasible_below": args.max_k, "nodes": out.nodes})
        return EXIT_VIOLATION
    _emit(res.to_json())
    return EXIT_OK


def cmd_bench(args: argparse.Namespace) -> int:
    if args.suite != "paper":
        raise ParamError(f"unknown suite {args.suite!r}")
    report = run_paper_suite(budget=args.budget)
    paths = write_report(report, args.out)
    _emit({"exit_code": report.exit_code, "report": str(paths["markdown"]), "json": str(paths["json"])})
    return report.exit_code


def cmd_export(args: argparse.Namespace) -> int:
    g, _ = _load_graph(args.graph)
    colors = coloring_from_json(_read_json(args.coloring)) if args.coloring else None
    text = export_dot(g, colors)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_figure(args: argparse.Namespace) -> int:
    _, colors = FIGURES[args.name]()
    _write_json(args.out, coloring_to_json(colors))
    return EXIT_OK


# --- parser -------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="starcolor", description="Star edge-coloring toolkit.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("gen", help="generate a graph family member as JSON")
    s.add_argument("--family", required=True, choices=FAMILIES)
    s.add_argument("--n", type=int)
    s.add_argument("--h", type=int)
    s.add_argument("--m", type=int, help="outer cycle length for --family petersen")
    s.add_argument("--leaves", type=int)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--spec", help="JSON file with nested child lists (complete-halin)")
    s.add_argument("--out", required=True)
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("color", help="run a constructive colorer")
    s.add_argument("--algorithm", default="auto", choices=ALGORITHMS)
    s.add_argument("--in", dest="input", required=True)
    s.add_argument("--out", required=True)
    s.add_argument("--fallback", choices=["none", "exact"], default="none")
    s.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="node budget for the exact fallback")
    s.set_defaults(func=cmd_color)

    s = sub.add_parser("verify", help="check a coloring")
    s.add_argument("--graph", required=True)
    s.add_argument("--coloring", required=True)
    s.add_argument("--mode", choices=["star", "proper", "strong"], default="star")
    s.add_argument("--sub", help="JSON list of edge ids or [u, v] pairs (strong mode)")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("exact", help="exact star chromatic index")
    s.add_argument("--graph", required=True)
    s.add_argument("--max-k", type=int)
    s.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    s.add_argument("--parallel", action="store_true")
    s.set_defaults(func=cmd_exact)

    s = sub.add_parser("bench", help="recompute the published values and write a report")
    s.add_argument("--suite", default="paper", choices=["paper"])
    s.add_argument("--out", required=True)
    s.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="node budget per exact instance")
    s.set_defaults(func=cmd_bench)

    s = sub.add_parser("export", help="write Graphviz DOT")
    s.add_argument("--format", choices=["dot"], default="dot")
    s.add_argument("--graph", required=True)
    s.add_argument("--coloring")
    s.add_argument("--out")
    s.set_defaults(func=cmd_export)

    s = sub.add_parser("figure", help="emit a drawn coloring from the literature as a coloring file")
    s.add_argument("name", choices=sorted(FIGURES))
    s.add_argument("--out")
    s.set_defaults(func=cmd_figure)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return int(args.func(args))
    except ConstructionFailed as exc:
        doc: dict[str, Any] = {"error": exc.code, "case": exc.case, "message": str(exc)}
        if exc.violation is not None:
            doc["violation"] = exc.violation.to_json()
        print(json.dumps(doc), file=sys.stderr)
        return EXIT_FAILED
    except StarColorError as exc:
        print(json.dumps({"error": exc.code, "message": str(exc)}), file=sys.stderr)
        return EXIT_INPUT
    except (OSError, ValueError, KeyError, TypeError) as exc:
        print(json.dumps({"error": "BAD_INPUT", "message": str(exc)}), file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
