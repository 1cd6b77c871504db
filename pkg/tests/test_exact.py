import random

import pytest

from conftest import random_graph
from oracles import StarOracle, naive_star_index
from starcolor.errors import BudgetExhausted, ParamError
from starcolor.exact import edge_order, exists_star_k_coloring, star_chromatic_index
from starcolor.families import complete, cycle, k4, necklace, net, path
from starcolor.graph import build_graph, color_count, max_degree
from starcolor.verify import is_star_coloring


def test_k4_decision():
    assert exists_star_k_coloring(k4(), 4).status == "infeasible"
    out = exists_star_k_coloring(k4(), 5)
    assert out.feasible and is_star_coloring(k4(), out.coloring) and color_count(out.coloring) <= 5


def test_edgeless_graph():
    g = build_graph(3, [])
    out = exists_star_k_coloring(g, 1)
    assert out.feasible and out.coloring == []
    res = star_chromatic_index(g)
    assert res.k == 0 and res.certificate == []


@pytest.mark.parametrize(
    "g, k",
    [(net(), 4), (necklace(2).graph, 6), (complete(5), 9), (path(5), 3), (cycle(5), 4)],
    ids=["net", "necklace2", "K5", "P5", "C5"],
)
def test_known_indices(g, k):
    res = star_chromatic_index(g)
    assert res.k == k
    assert res.infeasible_below == k - 1
    assert color_count(res.certificate) == k
    assert is_star_coloring(g, res.certificate)


def test_matches_naive_enumeration_on_50_random_graphs():
    rng = random.Random(4242)
    done = 0
    disagreements = 0
    while done < 50:
        g = random_graph(rng, 7)
        if g.size > 7:
            continue
        done += 1
        disagreements += star_chromatic_index(g).k != naive_star_index(g)
    assert disagreements == 0


def test_feasibility_is_monotone_and_bounded_by_degree():
    rng = random.Random(8)
    for _ in range(15):
        g = random_graph(rng, 7)
        res = star_chromatic_index(g)
        assert res.k >= max_degree(g)
        if res.k:
            assert exists_star_k_coloring(g, res.k + 1).feasible
        if res.k > 1:
            assert not exists_star_k_coloring(g, res.k - 1).feasible


def test_certificates_satisfy_the_oracle():
    rng = random.Random(10)
    for _ in range(20):
        g = random_graph(rng, 8)
        res = star_chromatic_index(g)
        assert StarOracle(g).ok(res.certificate) and all(c >= 1 for c in res.certificate)


def test_lower_hint_above_answer_walks_down():
    res = star_chromatic_index(k4(), lower_hint=6)
    assert res.k == 5 and res.infeasible_below == 4


def test_sequential_search_is_deterministic():
    a = star_chromatic_index(necklace(3).graph)
    b = star_chromatic_index(necklace(3).graph)
    assert a.certificate == b.certificate and a.nodes_explored == b.nodes_explored


def test_budget_exhaustion_reports_bracket():
    with pytest.raises(BudgetExhausted) as err:
        star_chromatic_index(complete(5), budget=50)
    assert err.value.lower >= 4 and err.value.code == "BUDGET_EXHAUSTED"
    out = exists_star_k_coloring(complete(5), 8, budget=10)
    assert out.status == "budget_exhausted"


def test_upper_hint_too_small():
    with pytest.raises(ParamError) as err:
        star_chromatic_index(k4(), upper_hint=4)
    assert err.value.code == "UPPER_HINT_TOO_SMALL"
    with pytest.raises(ParamError):
        star_chromatic_index(k4(), lower_hint=6, upper_hint=5)


def test_palette_must_be_positive():
    with pytest.raises(ParamError):
        exists_star_k_coloring(k4(), 0)


def test_parallel_answer_matches_sequential():
    for g in (k4(), net(), necklace(2).graph):
        seq = star_chromatic_index(g)
        par = star_chromatic_index(g, parallel=True)
        assert par.k == seq.k and is_star_coloring(g, par.certificate)
    assert exists_star_k_coloring(k4(), 4, parallel=True, workers=2).status == "infeasible"


def test_edge_order_is_a_permutation_starting_at_max_degree():
    g = build_graph(6, [(0, 1), (1, 2), (2, 3), (2, 4), (2, 5)])
    order = edge_order(g)
    assert sorted(order) == list(range(g.size))
    assert 2 in g.edges[order[0]]
