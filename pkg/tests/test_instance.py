from __future__ import annotations

import pytest

from constants import Problem, Shape
from core.incidence import (
    build_instance,
    dominators,
    ds_forced_objects,
    is_feasible,
    is_feasible_ds,
    is_feasible_is,
    reduce_by_subset_rule,
    shares_point,
)
from core.io import generate_random, load, load_solution, loads, save, save_solution
from models import GeomObject, Point, Solution
from utils.bits import iter_bits, popcount, to_mask
from utils.exceptions import InfeasibleSelection, InstanceParseError, ObjectIndexError


@pytest.fixture
def chain():
    # A covers p0, B covers p0 and p1, C sits alone on p2
    objects = [GeomObject.disk(0, 0, 1), GeomObject.disk(5, 0, 6), GeomObject.disk(100, 0, 1)]
    points = [Point(0, 0), Point(10, 0), Point(100, 0)]
    return build_instance(objects, points)


def test_incidence_bitsets(chain):
    assert chain.incidence == (0b001, 0b011, 0b100)
    assert chain.coverers == (0b011, 0b010, 0b100)
    assert chain.conflicts == (0b010, 0b001, 0b000)
    assert chain.covered_points(1) == (0, 1)


def test_shared_point_relation(chain):
    assert shares_point(chain, 0, 1)
    assert not shares_point(chain, 0, 2)
    assert dominators(chain, 0) == (1,)
    assert dominators(chain, 2) == ()
    with pytest.raises(ObjectIndexError):
        shares_point(chain, 0, 3)


def test_feasibility(chain):
    assert is_feasible_is(chain, to_mask([0, 2]))
    assert not is_feasible_is(chain, to_mask([0, 1]))
    assert is_feasible_is(chain, 0)

    assert is_feasible_ds(chain, to_mask([0, 2]))
    assert not is_feasible_ds(chain, to_mask([0]))
    assert is_feasible(chain, chain.all_objects, Problem.DS)
    assert ds_forced_objects(chain) == 0b100


def test_subset_rule_swaps_to_largest_superset(chain):
    assert reduce_by_subset_rule(chain, to_mask([0, 2])) == to_mask([1, 2])
    with pytest.raises(InfeasibleSelection):
        reduce_by_subset_rule(chain, to_mask([0]))


def test_subset_rule_breaks_ties_by_index():
    objects = [GeomObject.disk(0, 0, 1), GeomObject.disk(4, 0, 5), GeomObject.disk(-4, 0, 5)]
    points = [Point(0, 0), Point(6, 0), Point(-6, 0)]
    inst = build_instance(objects, points)
    assert reduce_by_subset_rule(inst, to_mask([0])) == to_mask([1])


def test_duplicates_are_dropped():
    disk = GeomObject.disk(0, 0, 3)
    inst = build_instance([disk, disk], [Point(1, 1), Point(1, 1)])
    assert (inst.m, inst.n) == (1, 1)


def test_object_without_points_is_free_for_is_and_forced_for_ds():
    inst = build_instance([GeomObject.disk(0, 0, 2), GeomObject.disk(50, 50, 2)], [Point(0, 1)])
    assert inst.conflicts == (0, 0)
    assert is_feasible_is(inst, inst.all_objects)
    assert ds_forced_objects(inst) == inst.all_objects


def test_generate_random_is_deterministic():
    first = generate_random(7, 12, 40, Shape.square)
    assert first == generate_random(7, 12, 40, Shape.square)
    assert first != generate_random(8, 12, 40, Shape.square)
    assert first.shapes == {Shape.square}


def test_instance_file_round_trip(tmp_path):
    inst = generate_random(3, 9, 25)
    assert load(save(inst, tmp_path / "inst.json")) == inst


def test_parse_error_reports_field():
    text = '{"scale": 1, "objects": [{"kind": "disk", "cx": 0.5, "cy": 0, "extent": 1}], "points": []}'
    with pytest.raises(InstanceParseError) as info:
        loads(text)
    assert "cx" in info.value.field
    assert info.value.to_dict()["exit_code"] == 2


def test_parse_error_reports_line():
    with pytest.raises(InstanceParseError) as info:
        loads('{\n  "scale": 1,\n  "objects": [\n')
    assert info.value.line is not None


def test_unknown_kind_is_rejected():
    with pytest.raises(InstanceParseError):
        loads('{"scale": 1, "objects": [{"kind": "blob", "cx": 0, "cy": 0, "extent": 1}], "points": []}')


def test_solution_feasibility_is_recomputed(chain, tmp_path):
    path = save_solution(Solution(to_mask([0, 1]), Problem.IS, True), tmp_path / "sol.json")
    sol, spec = load_solution(path, chain)
    assert spec.feasible
    assert not sol.feasible
    assert sol.indices == (0, 1)


def _corpus(count: int, m: int, n: int):
    for seed in range(count):
        for shape in (Shape.disk, Shape.square):
            yield generate_random(seed, m, n, shape)


def test_forced_objects_are_in_every_dominating_set(oracles):
    seen_forced = False
    for inst in _corpus(10, 11, 20):
        forced = ds_forced_objects(inst)
        seen_forced |= bool(forced)
        for mask in oracles["feasible"](inst, Problem.DS):
            assert mask & forced == forced
    assert seen_forced


def test_feasibility_closure(oracles):
    for inst in _corpus(8, 8, 30):
        independent = set(oracles["feasible"](inst, Problem.IS))
        dominating = set(oracles["feasible"](inst, Problem.DS))
        for mask in range(1 << inst.m):
            assert is_feasible_is(inst, mask) == (mask in independent)
            assert is_feasible_ds(inst, mask) == (mask in dominating)

        for mask in independent:
            for i in iter_bits(mask):
                assert is_feasible_is(inst, mask & ~(1 << i))
        for mask in dominating:
            for i in range(inst.m):
                assert is_feasible_ds(inst, mask | 1 << i)


def test_shared_points_survive_added_points():
    for seed in range(10):
        inst = generate_random(seed, 10, 15)
        extra = generate_random(seed + 100, 0, 25).points
        grown = build_instance(inst.objects, inst.points + extra)
        assert grown.objects == inst.objects
        for i in range(inst.m):
            for j in range(inst.m):
                if shares_point(inst, i, j):
                    assert shares_point(grown, i, j)


def test_subset_rule_keeps_dominating_sets_and_never_grows(oracles):
    for inst in _corpus(15, 8, 25):
        for mask in oracles["feasible"](inst, Problem.DS):
            reduced = reduce_by_subset_rule(inst, mask)
            assert is_feasible_ds(inst, reduced)
            assert popcount(reduced) <= popcount(mask)


def test_subset_rule_follows_a_nested_chain():
    # L covers p0, D covers p0 and p1, D' covers all three
    objects = [GeomObject.disk(0, 0, 1), GeomObject.disk(5, 0, 6), GeomObject.disk(10, 0, 11)]
    inst = build_instance(objects, [Point(0, 0), Point(10, 0), Point(20, 0)])
    assert inst.incidence == (0b001, 0b011, 0b111)

    assert reduce_by_subset_rule(inst, to_mask([0])) == to_mask([2])
    assert reduce_by_subset_rule(inst, to_mask([1])) == to_mask([2])
    assert reduce_by_subset_rule(inst, to_mask([2])) == to_mask([2])


def test_subset_rule_leaves_incomparable_sets_alone():
    objects = [GeomObject.disk(0, 0, 2), GeomObject.disk(3, 0, 2)]
    inst = build_instance(objects, [Point(-1, 0), Point(1, 0), Point(4, 0)])
    assert inst.incidence == (0b011, 0b110)
    assert reduce_by_subset_rule(inst, to_mask([0])) == to_mask([0])
