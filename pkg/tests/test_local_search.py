from __future__ import annotations

import pytest

from constants import Problem, Shape
from core.incidence import build_instance, is_feasible
from core.io import generate_random
from models import GeomObject, LocalSearchConfig, Point, Strip
from solvers import exact_ds, exact_is, local_search_ds, local_search_is, verify_local_optimality
from utils.exceptions import InfeasibleSelection, PreconditionError, UnsupportedShape

SEARCH = {Problem.IS: local_search_is, Problem.DS: local_search_ds}


def _corpus(count: int, m: int, n: int):
    for shape in (Shape.disk, Shape.square):
        for seed in range(count):
            yield generate_random(seed, m, n, shape)


def test_empty_instance():
    inst = build_instance([], [])
    for problem, search in SEARCH.items():
        sol, trace = search(inst, LocalSearchConfig(t=2))
        assert sol.size == 0
        assert sol.feasible
        assert trace.exchanges == []


def test_config_validation():
    with pytest.raises(PreconditionError):
        LocalSearchConfig(t=0)
    with pytest.raises(PreconditionError):
        LocalSearchConfig(t=1, max_passes=0)


@pytest.mark.parametrize("problem", list(Problem))
def test_full_radius_matches_exact_optimum(problem):
    oracle = exact_is if problem is Problem.IS else exact_ds
    for inst in _corpus(100, 10, 30):
        sol, _ = SEARCH[problem](inst, LocalSearchConfig(t=inst.m or 1))
        expected = oracle(inst)
        assert expected.proven
        assert sol.size == expected.optimum


def _check_runs(insts, ts=(1, 2, 3)):
    for inst in insts:
        for problem, search in SEARCH.items():
            for t in ts:
                sol, trace = search(inst, LocalSearchConfig(t=t))
                assert is_feasible(inst, sol.selected, problem)
                assert verify_local_optimality(inst, sol.selected, problem, t)
                assert len(trace.exchanges) <= inst.m

                sizes = [0 if problem is Problem.IS else inst.m] + [e.size for e in trace.exchanges]
                steps = list(zip(sizes, sizes[1:]))
                if problem is Problem.IS:
                    assert all(b > a for a, b in steps)
                else:
                    assert all(b < a for a, b in steps)


def test_outputs_are_locally_optimal():
    _check_runs(_corpus(10, 15, 40))


@pytest.mark.slow
def test_outputs_are_locally_optimal_full_corpus():
    _check_runs(_corpus(100, 25, 60))


def test_sandwich_against_exact(small_corpus):
    for inst in small_corpus:
        for t in (1, 2):
            assert local_search_is(inst, LocalSearchConfig(t=t))[0].size <= exact_is(inst).optimum
            assert local_search_ds(inst, LocalSearchConfig(t=t))[0].size >= exact_ds(inst).optimum


def test_warm_start_from_local_optimum_is_idle():
    inst = generate_random(11, 14, 40)
    for problem, search in SEARCH.items():
        sol, _ = search(inst, LocalSearchConfig(t=2))
        again, trace = search(inst, LocalSearchConfig(t=2), start=sol.selected)
        assert again.selected == sol.selected
        assert trace.exchanges == []
        assert trace.passes == 1


def _crowd():
    # three disks around one point plus an isolated one
    objects = [GeomObject.disk(0, 0, 5), GeomObject.disk(1, 0, 5), GeomObject.disk(0, 1, 5), GeomObject.disk(90, 90, 5)]
    return build_instance(objects, [Point(0, 0), Point(90, 90)])


def test_infeasible_start_is_rejected():
    inst = _crowd()
    with pytest.raises(InfeasibleSelection):
        local_search_ds(inst, LocalSearchConfig(t=1), start=0)
    with pytest.raises(InfeasibleSelection):
        local_search_is(inst, LocalSearchConfig(t=1), start=0b011)


def test_max_passes_truncates():
    inst = _crowd()
    sol, trace = local_search_ds(inst, LocalSearchConfig(t=1, max_passes=1))
    assert trace.truncated
    assert trace.passes == 1
    assert len(trace.exchanges) == 1
    assert is_feasible(inst, sol.selected, Problem.DS)

    sol, trace = local_search_ds(inst, LocalSearchConfig(t=1))
    assert not trace.truncated
    assert sol.indices == (2, 3)


def test_candidate_order_seed_still_locally_optimal():
    inst = generate_random(5, 14, 40, Shape.square)
    for problem, search in SEARCH.items():
        sol, _ = search(inst, LocalSearchConfig(t=2, order_seed=99))
        assert verify_local_optimality(inst, sol.selected, problem, 2)


def test_reduction_shapes_are_refused():
    inst = build_instance([Strip("x", 0, 2)], [Point(1, 1)])
    with pytest.raises(UnsupportedShape):
        local_search_is(inst, LocalSearchConfig(t=1))


def test_verifier_rejects_infeasible_selection():
    inst = _crowd()
    with pytest.raises(InfeasibleSelection):
        verify_local_optimality(inst, 0, Problem.DS, 1)


def test_verifier_finds_improvements():
    inst = generate_random(2, 10, 30)
    # everything selected is never 1-locally optimal for DS unless all objects are forced
    if inst.conflicts.count(0) < inst.m:
        assert not verify_local_optimality(inst, inst.all_objects, Problem.DS, 1)
    assert verify_local_optimality(inst, 0, Problem.IS, 1) == (inst.m == 0)


def test_verifier_sees_one_for_two_swap():
    # the wide disk meets both narrow ones, which are disjoint
    objects = [GeomObject.disk(5, 0, 6), GeomObject.disk(0, 0, 2), GeomObject.disk(10, 0, 2)]
    inst = build_instance(objects, [Point(1, 0), Point(9, 0)])
    assert inst.incidence == (0b11, 0b01, 0b10)

    assert not verify_local_optimality(inst, 0b001, Problem.IS, 1)
    assert verify_local_optimality(inst, 0b110, Problem.IS, 1)


@pytest.mark.parametrize("t", [1, 2])
@pytest.mark.parametrize("problem", list(Problem))
def test_verifier_agrees_with_unpruned_enumeration(oracles, problem, t):
    for inst in _corpus(5, 7, 20):
        for sel in oracles["feasible"](inst, problem):
            assert verify_local_optimality(inst, sel, problem, t) == oracles["locally_optimal"](inst, sel, problem, t)


def test_verifier_agrees_on_search_outputs(oracles):
    for inst in _corpus(5, 9, 25):
        for problem, search in SEARCH.items():
            for t in (1, 2):
                sol, _ = search(inst, LocalSearchConfig(t=t))
                assert oracles["locally_optimal"](inst, sol.selected, problem, t)
                assert verify_local_optimality(inst, sol.selected, problem, t)
