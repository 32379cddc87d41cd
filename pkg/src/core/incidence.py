"""The range-space model: incidence bitsets, the shared-point relation and feasibility."""

from __future__ import annotations

import logging
import typing as T

import config as cfg
from constants import Problem
from models import AnyObject, Instance, Point
from utils.bits import from_mask, iter_bits, popcount
from utils.exceptions import PreconditionError

from .decorators import feasible_selection
from .geometry import covers

log = logging.getLogger(__name__)

__all__ = (
    "build_instance",
    "shares_point",
    "dominators",
    "is_feasible_is",
    "is_feasible_ds",
    "is_feasible",
    "ds_forced_objects",
    "reduce_by_subset_rule",
)


def build_instance(objects: T.Iterable[AnyObject], points: T.Iterable[Point], *, scale: int = cfg.SCALE) -> Instance:
    if scale <= 0:
        raise PreconditionError(f"Scale must be positive, got {scale}.")

    objects = list(objects)
    points = list(points)
    unique_objects = tuple(dict.fromkeys(objects))
    unique_points = tuple(dict.fromkeys(points))
    if len(unique_objects) < len(objects) or len(unique_points) < len(points):
        log.debug(
            "dropped %d duplicate objects and %d duplicate points",
            len(objects) - len(unique_objects),
            len(points) - len(unique_points),
        )

    incidence = []
    for o in unique_objects:
        mask = 0
        for j, p in enumerate(unique_points):
            if covers(o, p):
                mask |= 1 << j
        incidence.append(mask)

    return Instance(unique_objects, unique_points, tuple(incidence), scale)


def shares_point(inst: Instance, i: int, j: int) -> bool:
    inst.check_index(i)
    inst.check_index(j)
    return inst.incidence[i] & inst.incidence[j] != 0


def dominators(inst: Instance, i: int) -> tuple[int, ...]:
    """Objects other than i sharing a covered point with i."""
    return from_mask(inst.conflicts[inst.check_index(i)])


def is_feasible_is(inst: Instance, sel: int) -> bool:
    return all(not inst.conflicts[i] & sel for i in iter_bits(sel))


def is_feasible_ds(inst: Instance, sel: int) -> bool:
    return all(inst.conflicts[k] & sel for k in iter_bits(inst.all_objects & ~sel))


def is_feasible(inst: Instance, sel: int, problem: Problem) -> bool:
    return is_feasible_is(inst, sel) if problem is Problem.IS else is_feasible_ds(inst, sel)


def ds_forced_objects(inst: Instance) -> int:
    """Objects nothing else can dominate; every dominating selection contains them."""
    mask = 0
    for i, conflicts in enumerate(inst.conflicts):
        if not conflicts:
            mask |= 1 << i
    return mask


def _best_superset(inst: Instance, i: int) -> T.Optional[int]:
    covered = inst.incidence[i]
    best, best_size = None, popcount(covered)
    for d, other in enumerate(inst.incidence):
        if d == i or other & covered != covered:
            continue
        if popcount(other) > best_size:
            best, best_size = d, popcount(other)
    return best


@feasible_selection(Problem.DS)
def reduce_by_subset_rule(inst: Instance, sel: int) -> int:
    """
    Replaces every selected object whose covered points form a proper subset of
    another object's by the largest such object (lowest index on ties), to a fixpoint.
    """
    changed = True
    while changed:
        changed = False
        for i in iter_bits(sel):
            if not inst.incidence[i]:
                continue
            d = _best_superset(inst, i)
            if d is None:
                continue
            sel = (sel & ~(1 << i)) | (1 << d)
            log.debug("subset rule: %d -> %d", i, d)
            changed = True
            break

    return sel
