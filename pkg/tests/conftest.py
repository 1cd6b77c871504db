from __future__ import annotations

import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from starcolor.graph import Graph, build_graph  # noqa: E402

ACCEPTANCE: list[str] = []


def random_graph(rng: random.Random, max_order: int = 10, density: float | None = None) -> Graph:
    n = rng.randint(1, max_order)
    p = rng.uniform(0.2, 0.8) if density is None else density
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return build_graph(n, pairs)


def random_tree(rng: random.Random, n: int, max_deg: int) -> Graph:
    deg = [0] * n
    pairs = []
    for v in range(1, n):
        u = rng.choice([x for x in range(v) if deg[x] < max_deg])
        pairs.append((u, v))
        deg[u] += 1
        deg[v] += 1
    return build_graph(n, pairs)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(12345)


def pytest_terminal_summary(terminalreporter, exitstatus, config):  # noqa: ARG001
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def paper_run(tmp_path_factory):
    """One ``starcolor bench --suite paper`` run shared by several tests.

    Returns (exit code, seconds, output dir, parsed report.json).
    """
    import json
    import time

    from starcolor.cli import main

    out = tmp_path_factory.mktemp("bench")
    start = time.perf_counter()
    code = main(["bench", "--suite", "paper", "--out", str(out)])
    elapsed = time.perf_counter() - start
    doc = json.loads((out / "report.json").read_text(encoding="utf-8"))
    return code, elapsed, out, doc
