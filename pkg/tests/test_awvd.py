from __future__ import annotations

import math

import pytest

from awvd import check_center_ownership, check_coverage_monotone, check_star_shaped, nearest_cell
from constants import Shape
from core.io import generate_random
from models import GeomObject, Point, Strip
from utils.exceptions import PreconditionError, UnsupportedShape


def test_single_disk_has_infinite_margin():
    cell = nearest_cell([GeomObject.disk(0, 0, 3)], Point(10, 10))
    assert cell.owner == 0
    assert math.isinf(cell.margin)


def test_bisector_tie_goes_to_lower_index():
    cell = nearest_cell([GeomObject.disk(-5, 0, 2), GeomObject.disk(5, 0, 2)], (0.0, 7.0))
    assert cell.owner == 0
    assert cell.margin == pytest.approx(0.0)


def test_center_is_owned_by_its_object():
    objects = [GeomObject.disk(0, 0, 10), GeomObject.disk(30, 0, 25), GeomObject.square(0, 40, 12)]
    for i, o in enumerate(objects):
        assert nearest_cell(objects, o.center).owner == i


def test_adding_a_farther_object_keeps_the_owner():
    objects = [GeomObject.disk(0, 0, 10), GeomObject.disk(40, 0, 10)]
    before = nearest_cell(objects, (3.0, 4.0))
    after = nearest_cell(objects + [GeomObject.disk(500, 500, 10)], (3.0, 4.0))
    assert (before.owner, before.phi_value) == (after.owner, after.phi_value)


def test_errors():
    with pytest.raises(PreconditionError):
        nearest_cell([], Point(0, 0))
    with pytest.raises(UnsupportedShape):
        nearest_cell([Strip("x", 0, 1)], Point(0, 0))

    nested = [GeomObject.disk(0, 0, 10), GeomObject.disk(1, 1, 2)]
    with pytest.raises(PreconditionError):
        check_center_ownership(nested, 10)
    with pytest.raises(PreconditionError):
        check_star_shaped(nested, 10)


def test_empty_and_single_object_reports():
    assert check_center_ownership([]).ok
    assert check_center_ownership([]).samples == 0

    single = check_star_shaped([GeomObject.square(0, 0, 4)], 500, seed=1)
    assert single.ok
    assert single.samples == 500


def test_coverage_boundary_tie_is_not_a_violation():
    # the point sits on both boundaries, both phi values are zero
    objects = [GeomObject.disk(0, 0, 5), GeomObject.disk(8, 0, 5)]
    report = check_coverage_monotone(objects, [Point(4, 3)], 200, seed=3)
    assert report.ok


def _instances(shape: Shape, count: int, nonnested):
    for seed in range(count):
        yield nonnested(generate_random(seed, 12, 30, shape))


@pytest.mark.parametrize("shape", [Shape.disk, Shape.square])
def test_cell_properties_hold(shape, nonnested):
    for inst in _instances(shape, 5, nonnested):
        objects = list(inst.objects)
        assert check_center_ownership(objects, 1_000, seed=0).ok
        assert check_star_shaped(objects, 5_000, seed=0).ok
        assert check_coverage_monotone(objects, list(inst.points), 5_000, seed=0).ok


@pytest.mark.slow
@pytest.mark.parametrize("shape", [Shape.disk, Shape.square])
def test_cell_properties_full_sampling(shape, nonnested):
    for inst in _instances(shape, 20, nonnested):
        objects = list(inst.objects)
        assert check_center_ownership(objects, seed=1).ok
        star = check_star_shaped(objects, seed=1)
        assert star.ok, star.violations[:3]
        coverage = check_coverage_monotone(objects, list(inst.points), seed=1)
        assert coverage.ok
        assert coverage.samples == 100_000


def test_report_serialises():
    report = check_star_shaped([GeomObject.disk(0, 0, 5), GeomObject.disk(20, 0, 5)], 100)
    dumped = report.model_dump(mode="json")
    assert dumped["check"] == "star_shaped"
    assert dumped["total"] == 0
