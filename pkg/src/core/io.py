from __future__ import annotations

import logging
import typing as T
from pathlib import Path

import numpy as np
import ujson

import config as cfg
from constants import Shape
from models import (
    GeomObject,
    Instance,
    InstanceFile,
    Point,
    SearchTrace,
    Solution,
    SolutionFile,
    object_to_spec,
    parse_file,
)
from utils.bits import popcount, to_mask
from utils.exceptions import PreconditionError

from .incidence import build_instance, is_feasible

log = logging.getLogger(__name__)

__all__ = (
    "generate_random",
    "instance_to_dict",
    "dumps",
    "save",
    "load",
    "loads",
    "solution_to_dict",
    "save_solution",
    "load_solution",
)


def generate_random(
    seed: int,
    m: int,
    n: int,
    kind: Shape = Shape.disk,
    extent_range: tuple[int, int] = cfg.DEFAULT_EXTENT,
    window: int = cfg.DEFAULT_WINDOW,
) -> Instance:
    """Uniform centers, extents and points in [0, window)^2; deterministic for a seed."""
    lo, hi = extent_range
    if m < 0 or n < 0:
        raise PreconditionError("m and n must be non-negative.")
    if not 0 < lo <= hi:
        raise PreconditionError(f"Extent range must be positive and ordered, got {extent_range}.")
    if kind not in (Shape.disk, Shape.square):
        raise PreconditionError(f"Random instances hold disks or squares, not `{kind.value}`.")

    rng = np.random.default_rng(seed)
    centers = rng.integers(0, window, size=(m, 2))
    extents = rng.integers(lo, hi + 1, size=m)
    coords = rng.integers(0, window, size=(n, 2))

    objects = [GeomObject(kind, int(x), int(y), int(e)) for (x, y), e in zip(centers.tolist(), extents.tolist())]
    points = [Point(int(x), int(y)) for x, y in coords.tolist()]
    return build_instance(objects, points)


def instance_to_dict(inst: Instance) -> dict:
    return {
        "scale": inst.scale,
        "objects": [object_to_spec(o) for o in inst.objects],
        "points": [[p.x, p.y] for p in inst.points],
    }


def dumps(payload: dict) -> str:
    return ujson.dumps(payload, indent=2) + "\n"


def save(inst: Instance, path: T.Union[str, Path]) -> Path:
    path = Path(path)
    path.write_text(dumps(instance_to_dict(inst)))
    log.debug("wrote instance m=%d n=%d to %s", inst.m, inst.n, path)
    return path


def loads(text: T.Union[str, bytes]) -> Instance:
    spec = parse_file(InstanceFile, text)
    return build_instance(spec.build_objects(), spec.build_points(), scale=spec.scale)


def load(path: T.Union[str, Path]) -> Instance:
    return loads(Path(path).read_bytes())


def solution_to_dict(
    sol: Solution, *, t: T.Optional[int] = None, order_seed: int = 0, trace: T.Optional[SearchTrace] = None
) -> dict:
    return {
        "problem": sol.problem.value,
        "selected": list(sol.indices),
        "size": sol.size,
        "feasible": sol.feasible,
        "t": t,
        "order_seed": order_seed,
        "trace": trace.to_dict() if trace else None,
    }


def save_solution(sol: Solution, path: T.Union[str, Path], **extra) -> Path:
    path = Path(path)
    path.write_text(dumps(solution_to_dict(sol, **extra)))
    return path


def load_solution(path: T.Union[str, Path], inst: T.Optional[Instance] = None) -> tuple[Solution, SolutionFile]:
    """Reads a solution file; with an instance, feasibility is recomputed rather than trusted."""
    spec = parse_file(SolutionFile, Path(path).read_bytes())
    if inst is not None:
        for i in spec.selected:
            inst.check_index(i)
    mask = to_mask(spec.selected)
    feasible = is_feasible(inst, mask, spec.problem) if inst is not None else spec.feasible
    if popcount(mask) != spec.size:
        log.warning("solution file claims size %d but lists %d objects", spec.size, popcount(mask))
    return Solution(mask, spec.problem, feasible), spec
