"""Acceptance criteria 1-5. Each test records one PASS/FAIL line in the terminal summary."""

import random
import time
from contextlib import contextmanager

from conftest import ACCEPTANCE, random_graph
from oracles import StarOracle, naive_star_index
from starcolor.bench import COMPLETE_HALIN_CORPUS, CUBIC_HALIN_SEEDS, DISCREPANCY
from starcolor.cli import main
from starcolor.colorers import (
    color_complete_halin,
    color_cubic_halin,
    color_cycle_square,
    color_necklace_odd,
    color_path_square,
    color_petersen_3n,
    cycle_square_figure,
    necklace_figure,
)
from starcolor.colorers.necklace import FIGURE_K4
from starcolor.exact import exists_star_k_coloring, star_chromatic_index
from starcolor.families import (
    complete,
    complete_halin,
    cycle,
    cycle_square,
    fan3,
    generalized_petersen,
    h0,
    k4,
    necklace,
    net,
    path_square,
    random_cubic_halin,
)
from starcolor.graph import color_count, max_degree
from starcolor.verify import check_star, is_star_coloring

EXACT_LIMIT_S = 60.0


@contextmanager
def criterion(number, title):
    try:
        yield
    except BaseException:
        ACCEPTANCE.append(f"criterion {number}: FAIL  {title}")
        raise
    ACCEPTANCE.append(f"criterion {number}: PASS  {title}")


def test_criterion_1_exact_values():
    table = [
        ("K4", k4(), 5),
        ("net", net(), 4),
        ("N1", necklace(1).graph, 5),
        ("N2", necklace(2).graph, 6),
        ("N3", necklace(3).graph, 5),
        ("P3^2", path_square(3), 3),
        ("P4^2", path_square(4), 4),
        ("P5^2", path_square(5), 6),
        ("P6^2", path_square(6), 6),
        ("K5", complete(5), 9),
        ("P(6,2)", generalized_petersen(6, 2), 5),
        ("C5", cycle(5), 4),
    ]
    with criterion(1, "exact star chromatic indices, < 60 s each"):
        # C5 is also checked against the naive oracle, independent of the solver
        assert naive_star_index(cycle(5)) == 4
        for name, g, want in table:
            start = time.perf_counter()
            res = star_chromatic_index(g)
            elapsed = time.perf_counter() - start
            assert res.k == want, f"{name}: got {res.k}, expected {want}"
            assert is_star_coloring(g, res.certificate) and color_count(res.certificate) == want
            assert elapsed < EXACT_LIMIT_S, f"{name} took {elapsed:.1f} s"


def test_criterion_2_lower_bound_lemmas():
    with criterion(2, "fan3 has no star 5-coloring, h0 has no star 4-coloring, < 60 s each"):
        for name, g, k in (("fan3", fan3(), 5), ("h0", h0(), 4)):
            start = time.perf_counter()
            out = exists_star_k_coloring(g, k)
            elapsed = time.perf_counter() - start
            assert out.status == "infeasible", f"{name}: {out.status}"
            assert elapsed < EXACT_LIMIT_S
            assert exists_star_k_coloring(g, k + 1).feasible


def _valid(g, colors):
    assert check_star(g, colors) is None
    return color_count(colors)


def test_criterion_3_constructive_colorers():
    with criterion(3, "constructive colorers validate within their stated color counts"):
        for n in range(2, 21):
            start = time.perf_counter()
            colors = color_petersen_3n(n)
            elapsed = time.perf_counter() - start
            assert _valid(generalized_petersen(3 * n, n), colors) == 5, f"P({3 * n},{n})"
            assert elapsed <= 1.0, f"P({3 * n},{n}) took {elapsed:.2f} s"

        for h in range(1, 50, 2):
            assert _valid(necklace(h).graph, color_necklace_odd(h)) <= 5, f"N_{h}"

        assert len(CUBIC_HALIN_SEEDS) == 100
        assert {leaves for leaves, _ in CUBIC_HALIN_SEEDS} == set(range(3, 41))
        for leaves, seed in CUBIC_HALIN_SEEDS:
            hg = random_cubic_halin(leaves, seed)
            assert _valid(hg.graph, color_cubic_halin(hg)) <= 6, f"cubic Halin {leaves}/{seed}"

        assert len(COMPLETE_HALIN_CORPUS) == 20
        deltas = set()
        for spec in COMPLETE_HALIN_CORPUS:
            hg = complete_halin(spec)
            d = max_degree(hg.graph)
            deltas.add(d)
            assert _valid(hg.graph, color_complete_halin(hg)) <= 3 * d // 2 + 1, f"spec {spec}"
        assert deltas <= set(range(6, 11)) and {6, 10} <= deltas

        for n in range(5, 201):
            assert _valid(path_square(n), color_path_square(n)) == 6, f"P_{n}^2"

        for n in range(6, 101, 2):
            assert _valid(cycle_square(n), color_cycle_square(n)) <= 9, f"C_{n}^2"
        for n in range(9, 100, 2):
            if n != 11:
                assert _valid(cycle_square(n), color_cycle_square(n)) <= 8, f"C_{n}^2"
        assert _valid(cycle_square(7), color_cycle_square(7)) == 7
        assert _valid(cycle_square(11), color_cycle_square(11)) == 9

        # drawn fixtures
        assert _valid(k4(), list(FIGURE_K4)) == 5
        for h, want in ((1, 5), (2, 6), (3, 5)):
            assert _valid(necklace(h).graph, necklace_figure(h)) == want
        assert _valid(cycle_square(7), cycle_square_figure(7)) == 7
        assert _valid(cycle_square(11), cycle_square_figure(11)) == 9
        c10 = cycle_square_figure(10)
        verdict = "valid" if is_star_coloring(cycle_square(10), c10) else "invalid"
        print(f"C_10^2 drawn coloring: {verdict}, {color_count(c10)} colors")


def test_criterion_4_oracle_equivalence():
    with criterion(4, "check_star and star_chromatic_index agree with brute force"):
        rng = random.Random(20190601)
        star_disagree = 0
        for _ in range(200):
            g = random_graph(rng, 10)
            colors = [rng.randint(1, 6) for _ in range(g.size)]
            star_disagree += (check_star(g, colors) is None) != StarOracle(g).ok(colors)
        assert star_disagree == 0

        index_disagree = 0
        tested = 0
        while tested < 50:
            g = random_graph(rng, 7)
            if g.size > 7:
                continue
            tested += 1
            index_disagree += star_chromatic_index(g).k != naive_star_index(g)
        assert index_disagree == 0


def test_criterion_5_paper_bench(paper_run, tmp_path, capsys):
    code, elapsed, out, doc = paper_run
    with criterion(5, "bench --suite paper under 10 min, exit 0 or 3, witnesses for discrepancies"):
        assert elapsed < 600
        assert code in (0, 3) and doc["exit_code"] == code
        for entry in doc["entries"]:
            if entry["status"] == DISCREPANCY:
                assert entry["witness"] and (out / entry["witness"]).is_file()
        # a second run must give byte-identical markdown
        assert main(["bench", "--suite", "paper", "--out", str(tmp_path)]) == code
        assert (tmp_path / "report.md").read_bytes() == (out / "report.md").read_bytes()
        capsys.readouterr()
        print(f"bench: {len(doc['entries'])} entries, exit {code}, {elapsed:.1f} s")
