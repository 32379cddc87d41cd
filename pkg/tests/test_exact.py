from __future__ import annotations

from constants import Problem
from core.incidence import build_instance, is_feasible
from core.io import generate_random
from models import GeomObject, Point, SetSystem
from reductions import graph_domination_number, graph_independence_number, random_connected_graph
from solvers import exact_ds, exact_is, exact_set_ds, max_independent


def test_pairwise_sharing_objects():
    inst = build_instance([GeomObject.disk(0, 0, 5), GeomObject.disk(1, 0, 5), GeomObject.disk(0, 1, 5)], [Point(0, 0)])
    assert exact_is(inst).optimum == 1
    assert exact_ds(inst).optimum == 1


def test_disjoint_coverage():
    objects = [GeomObject.square(100 * i, 0, 10) for i in range(6)]
    points = [Point(100 * i, 0) for i in range(6)]
    inst = build_instance(objects, points)
    assert exact_is(inst).optimum == 6
    assert exact_ds(inst).optimum == 6


def test_star():
    spokes = [Point(5, 0), Point(0, 5), Point(-5, 0), Point(0, -5), Point(3, 3)]
    objects = [GeomObject.disk(0, 0, 10)] + [GeomObject.disk(p.x, p.y, 1) for p in spokes]
    inst = build_instance(objects, spokes)

    ds = exact_ds(inst)
    assert (ds.optimum, ds.indices, ds.proven) == (1, (0,), True)
    assert exact_is(inst).optimum == 5


def test_matches_exhaustive_enumeration(oracles):
    for seed in range(20):
        inst = generate_random(seed, 10, 30)
        is_result, ds_result = exact_is(inst), exact_ds(inst)

        assert is_result.proven and ds_result.proven
        assert is_result.optimum == oracles["is"](inst)
        assert ds_result.optimum == oracles["ds"](inst)
        assert is_feasible(inst, is_result.witness, Problem.IS)
        assert is_feasible(inst, ds_result.witness, Problem.DS)


def test_budget_exhaustion_keeps_best_witness(pentagon):
    result = exact_is(pentagon, node_budget=1)
    assert not result.proven
    assert result.optimum == 2
    assert is_feasible(pentagon, result.witness, Problem.IS)

    full = exact_is(pentagon)
    assert (full.optimum, full.proven) == (2, True)


def test_zero_budget_is_not_the_default(pentagon):
    is_result = exact_is(pentagon, node_budget=0)
    assert not is_result.proven
    assert is_result.nodes_explored == 1
    assert is_feasible(pentagon, is_result.witness, Problem.IS)

    ds_result = exact_ds(pentagon, node_budget=0)
    assert not ds_result.proven
    assert is_feasible(pentagon, ds_result.witness, Problem.DS)


def test_cycle_adjacency():
    c5 = [(1 << (v + 1) % 5) | (1 << (v - 1) % 5) for v in range(5)]
    assert max_independent(c5).optimum == 2


def test_set_system_examples():
    assert exact_set_ds(SetSystem(2, ((1,), (1,)))).optimum == 1
    assert exact_set_ds(SetSystem(4, ((0,), (1, 2), (3,)))).optimum == 3
    assert exact_set_ds(SetSystem(1, ((), ()))).optimum == 2


def test_graph_oracles(oracles):
    for seed in range(10):
        g = random_connected_graph(seed, 8)
        assert graph_independence_number(g) == oracles["graph_mis"](g)
        assert graph_domination_number(g) == oracles["graph_mds"](g)
