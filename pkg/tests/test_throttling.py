from itertools import combinations

import pytest

from psdthrottle.forcing import INFINITE, BudgetError, propagate
from psdthrottle.formulas import path_throttle, path_optimal_set
from psdthrottle.graphs import (
    Graph,
    WeightMap,
    contract_edge,
    make_balanced_spider,
    make_cycle,
    make_path,
    make_spider,
)
from psdthrottle.throttling import (
    th_plus,
    th_plus_of_set,
    th_plus_omega,
    th_plus_weighted,
    th_plus_weighted_of_set,
)

from conftest import naive_throttle, random_graph, random_tree


def test_of_set_values():
    p10 = make_path(10)
    plan = path_optimal_set(10)
    assert len(plan.witness_set) == 2
    assert th_plus_of_set(p10, plan.witness_set) == 4
    g = make_cycle(5)
    assert th_plus_of_set(g, range(5)) == 5
    assert th_plus_of_set(make_cycle(4), {0}) == INFINITE


@pytest.mark.parametrize(
    "g, value",
    [(make_path(10), 4), (make_spider((4, 3, 2)), 5), (make_path(1), 1), (make_cycle(4), 3)],
)
def test_th_plus_known(g, value):
    assert th_plus(g).value == value


def test_matches_naive_and_canonical_witness(rng):
    for _ in range(60):
        n = rng.randint(1, 8)
        g = random_tree(rng, n) if rng.random() < 0.5 else random_graph(rng, n, 0.4)
        best, arg = naive_throttle(g)
        res = th_plus(g)
        assert res.value == best
        assert res.witness_set == frozenset(arg)


def test_weighted_matches_naive(rng):
    for _ in range(50):
        n = rng.randint(1, 8)
        g = random_tree(rng, n)
        w = [rng.randint(1, 4) for _ in range(n)]
        best, arg = naive_throttle(g, w)
        res = th_plus_weighted(g, WeightMap(w))
        assert res.value == best
        assert res.witness_set == frozenset(arg)


def test_witness_reverifies(rng):
    for _ in range(40):
        g = random_tree(rng, rng.randint(1, 16))
        res = th_plus(g)
        sched = propagate(g, res.witness_set)
        assert sched.total_time == res.propagation_time
        assert res.value == len(res.witness_set) + res.propagation_time


def test_unit_weights_equal_unweighted(rng):
    for _ in range(20):
        g = random_tree(rng, rng.randint(1, 14))
        assert th_plus_weighted(g, WeightMap.uniform(g.n)).value == th_plus(g).value


@pytest.mark.parametrize("omega", [1, 2, 3])
def test_omega_equals_constant_weights(rng, omega):
    for _ in range(15):
        g = random_tree(rng, rng.randint(1, 13))
        a = th_plus_omega(g, omega)
        b = th_plus_weighted(g, WeightMap.uniform(g.n, omega))
        assert a.value == b.value


def test_omega_examples():
    assert th_plus_omega(make_path(10), 1).value == 4
    assert th_plus_omega(make_path(2), 2).value == 3  # one vertex, one round
    p5 = make_path(5)
    best = min(
        2 * len(b) + propagate(p5, b).total_time
        for k in range(1, 6)
        for b in combinations(range(5), k)
    )
    assert th_plus_omega(p5, 2).value == best == 4


def test_weighted_example_t37():
    t = make_balanced_spider(3, 7)
    dist = t.distances_from(0)
    w = WeightMap(1 if dist[v] in (1, 5) else 10 for v in range(t.n))
    a = {v for v in range(t.n) if dist[v] == 1}
    b = {v for v in range(t.n) if dist[v] == 5}
    assert th_plus_weighted_of_set(t, w, a) == 9
    assert th_plus_weighted_of_set(t, w, b) == 8
    assert th_plus_weighted_of_set(t, w, a | b) == 8
    for x in a:
        assert th_plus_weighted_of_set(t, w, b | {x}) == 7
    assert th_plus_weighted(t, w).value == 7


def test_rejects_non_integer_weights():
    with pytest.raises(TypeError):
        th_plus_weighted(make_path(2), [1, 0.5])
    with pytest.raises(TypeError):
        th_plus_omega(make_path(2), 1.5)


def test_budget_error():
    with pytest.raises(BudgetError) as exc:
        th_plus(make_path(32))
    assert exc.value.cap == 31
    assert th_plus(make_path(32), cap=40).value == path_throttle(32)


def test_budget_env(monkeypatch):
    monkeypatch.setenv("PSDTHROTTLE_CAP", "5")
    with pytest.raises(BudgetError):
        th_plus(make_path(6))


def test_required_vertices():
    res = th_plus(make_path(10), required=[0])
    assert 0 in res.witness_set and res.value == 5


def test_empty_graph():
    assert th_plus(Graph(0)).value == 0


def test_subtree_monotone(rng):
    for _ in range(40):
        t = random_tree(rng, rng.randint(2, 14))
        # grow a random connected subtree from a random vertex
        keep = {rng.randrange(t.n)}
        target = rng.randint(1, t.n)
        while len(keep) < target:
            frontier = sorted({y for x in keep for y in t.neighbors(x)} - keep)
            keep.add(rng.choice(frontier))
        assert th_plus(t.induced_subgraph(keep)).value <= th_plus(t).value


def test_contraction_monotone(rng):
    for _ in range(40):
        t = random_tree(rng, rng.randint(2, 12))
        base = th_plus(t).value
        u, v = rng.choice(t.sorted_edges())
        assert th_plus(contract_edge(t, u, v)).value <= base


def test_path_formula_small():
    for n in range(1, 22):
        assert th_plus(make_path(n)).value == path_throttle(n)
