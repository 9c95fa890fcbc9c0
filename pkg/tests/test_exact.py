"""Exact search: minimality, budget semantics, limits."""

from __future__ import annotations

from itertools import combinations, product

import pytest

from splitclust import (
    BLUE,
    NEUTRAL,
    RED,
    Clustering,
    CorrelationGraph,
    SearchBudget,
    SearchLimitReached,
    complete_graph,
    cost,
    decide,
    gen_random,
    solve_exact,
    verify_clustering,
)
from oracles import brute_min_clustering_cost

BAD_TRIANGLE = complete_graph(3, [(0, 1), (1, 2)])


def test_trivial_graphs():
    assert solve_exact(CorrelationGraph(0, [], complete=True)) == Clustering(())
    f = solve_exact(complete_graph(1, []))
    assert f == Clustering([{0}])
    f = solve_exact(complete_graph(4, [(0, 1)]))
    assert f is not None and cost(f, 4) == 0


def test_bad_triangle_optimum():
    f = solve_exact(BAD_TRIANGLE)
    assert f is not None
    assert cost(f, 3) == 1
    assert verify_clustering(BAD_TRIANGLE, f).ok


def test_bad_star_optimum():
    g = complete_graph(5, [(0, 1), (0, 2), (0, 3), (0, 4)])
    f = solve_exact(g)
    assert f is not None and cost(f, 5) == 3


def test_budget_semantics():
    assert not decide(BAD_TRIANGLE, 0)
    assert decide(BAD_TRIANGLE, 1)
    assert solve_exact(BAD_TRIANGLE, SearchBudget(max_cost=0)) is None
    with pytest.raises(ValueError):
        decide(BAD_TRIANGLE, -1)


def test_vertex_cap():
    big = complete_graph(13, [])
    with pytest.raises(ValueError):
        solve_exact(big)
    f = solve_exact(big, vertex_cap=13)
    assert f is not None and cost(f, 13) == 0


def test_node_limit():
    g = gen_random(8, 0.5, 0.5, complete=True, seed=11)
    with pytest.raises(SearchLimitReached):
        solve_exact(g, SearchBudget(max_cost=8, node_limit=5))


def test_determinism():
    g = gen_random(7, 0.5, 0.5, complete=True, seed=3)
    a = solve_exact(g, SearchBudget(max_cost=7))
    b = solve_exact(g, SearchBudget(max_cost=7))
    assert a == b


def _all_complete_graphs(n):
    pairs = list(combinations(range(n), 2))
    for colors in product((BLUE, RED), repeat=len(pairs)):
        edges = [(u, v, c) for (u, v), c in zip(pairs, colors)]
        yield CorrelationGraph(n, edges, complete=True)


def test_matches_oracle_on_all_complete_4_graphs():
    for g in _all_complete_graphs(4):
        f = solve_exact(g, SearchBudget(max_cost=6))
        assert f is not None
        got = cost(f, 4)
        assert verify_clustering(g, f).ok
        assert got == brute_min_clustering_cost(g)
        if got > 0:
            assert solve_exact(g, SearchBudget(max_cost=got - 1)) is None


def test_matches_oracle_on_random_incomplete_4_graphs():
    for seed in range(120):
        g = gen_random(4, 0.4, 0.3, complete=False, seed=seed)
        f = solve_exact(g, SearchBudget(max_cost=6))
        assert f is not None
        assert verify_clustering(g, f).ok
        assert cost(f, 4) == brute_min_clustering_cost(g)


def test_blue_clique_forced_whole():
    # any blue clique larger than the budget sits inside one cluster
    for seed in range(60):
        n = 5 + seed % 3
        g = gen_random(n, 0.6, 0.4, complete=True, seed=seed)
        f = solve_exact(g, SearchBudget(max_cost=n))
        assert f is not None
        k = cost(f, n)
        for size in range(k + 1, n + 1):
            for clique in combinations(range(n), size):
                if all(
                    g.label(u, v) is BLUE for u, v in combinations(clique, 2)
                ):
                    assert any(set(clique) <= c for c in f)
