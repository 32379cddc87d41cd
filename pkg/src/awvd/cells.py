"""
Nearest-object cells under the additive weighted distance, and sampled checks of the
properties the local-search analysis leans on: every object owns its own center, cells
are star-shaped around their centers, and coverage is monotone in phi.

Sampling goes through numpy in chunks; anything decided on an integer point goes
through the exact `compare_phi` instead.
"""

from __future__ import annotations

import logging
import typing as T

import numpy as np

import config as cfg
from constants import SEARCH_SHAPES, Shape, ViolationKind
from core.geometry import compare_phi, contains, covers, phi
from models import CellAssignment, GeomObject, Point, Violation, ViolationReport
from utils.default import chunk_sizes
from utils.exceptions import PreconditionError, UnsupportedShape

log = logging.getLogger(__name__)

__all__ = (
    "PhiField",
    "nearest_cell",
    "check_center_ownership",
    "check_star_shaped",
    "check_coverage_monotone",
)

# violations kept per report; the rest are only counted
REPORT_LIMIT = 100


class PhiField:
    """phi of every object at a batch of query points, as a (queries, objects) array."""

    def __init__(self, objects: T.Sequence[GeomObject]):
        for o in objects:
            if o.kind not in SEARCH_SHAPES:
                raise UnsupportedShape(o.kind.value, "weighted Voronoi cells")
        self.objects = list(objects)
        self.cx = np.array([o.cx for o in objects], dtype=float)
        self.cy = np.array([o.cy for o in objects], dtype=float)
        self.disk = np.array([o.kind is Shape.disk for o in objects], dtype=bool)
        # radius for disks, half side for squares
        self.reach = np.array([o.extent if o.kind is Shape.disk else o.extent / 2 for o in objects], dtype=float)

    def __len__(self) -> int:
        return len(self.objects)

    @property
    def centers(self) -> np.ndarray:
        return np.column_stack((self.cx, self.cy))

    def bounds(self, pad: float = 0.1) -> tuple[np.ndarray, np.ndarray]:
        lo = np.array([(self.cx - self.reach).min(), (self.cy - self.reach).min()])
        hi = np.array([(self.cx + self.reach).max(), (self.cy + self.reach).max()])
        margin = (hi - lo) * pad + 1
        return lo - margin, hi + margin

    def __call__(self, queries: np.ndarray) -> np.ndarray:
        dx = np.abs(queries[:, :1] - self.cx[None, :])
        dy = np.abs(queries[:, 1:2] - self.cy[None, :])
        dist = np.where(self.disk[None, :], np.hypot(dx, dy), np.maximum(dx, dy))
        return dist - self.reach[None, :]


def _require_objects(objects: T.Sequence[GeomObject]) -> None:
    if not objects:
        raise PreconditionError("Cell queries need at least one object.")


def _require_unnested(objects: T.Sequence[GeomObject]) -> None:
    for i, outer in enumerate(objects):
        for j, inner in enumerate(objects):
            if i != j and contains(outer, inner):
                raise PreconditionError(f"Object {i} contains object {j}; cells need non-nested objects.")


def nearest_cell(objects: T.Sequence[GeomObject], q: T.Union[Point, tuple[float, float]]) -> CellAssignment:
    """Owner of q, lowest index on ties, with the gap to the runner-up."""
    _require_objects(objects)
    field = PhiField(objects)
    qx, qy = q
    query = (float(qx), float(qy))
    values = field(np.array([query]))[0]

    owner = int(np.argmin(values))
    best = float(values[owner])
    if len(values) == 1:
        margin = float("inf")
    else:
        margin = float(np.partition(values, 1)[1]) - best
    return CellAssignment(query=query, owner=owner, phi_value=best, margin=margin)


def check_center_ownership(
    objects: T.Sequence[GeomObject], trials: int = cfg.AWVD_TRIALS, seed: int = 0
) -> ViolationReport:
    """Each sampled object must be strictly nearest to its own center."""
    report = ViolationReport(check="center_ownership")
    if not objects:
        return report
    PhiField(objects)
    _require_unnested(objects)

    rng = np.random.default_rng(seed)
    picked = sorted(rng.choice(len(objects), size=min(trials, len(objects)), replace=False).tolist())

    for i in picked:
        own = objects[i]
        c = own.center
        for j, other in enumerate(objects):
            if j == i:
                continue
            gap = phi(other, c) - phi(own, c)
            if report.worst_margin is None or gap < report.worst_margin:
                report.worst_margin = gap
            if compare_phi(other, own, c) <= 0:
                report.add(
                    Violation.at(
                        ViolationKind.ownership, f"object {j} is at least as near to center {i}", [i, j], c, margin=gap
                    ),
                    REPORT_LIMIT,
                )
        report.samples += 1

    log.debug("center ownership: %d centers, %d violations", report.samples, report.total)
    return report


def check_star_shaped(objects: T.Sequence[GeomObject], trials: int = cfg.AWVD_TRIALS, seed: int = 0) -> ViolationReport:
    """
    For random p owned by D, every point between D's center and p must stay in D's cell,
    up to a tolerance relative to the instance diameter.
    """
    report = ViolationReport(check="star_shaped")
    if not objects:
        return report
    field = PhiField(objects)
    _require_unnested(objects)

    rng = np.random.default_rng(seed)
    lo, hi = field.bounds()
    tolerance = cfg.TOLERANCE * float(np.hypot(*(hi - lo)))
    centers = field.centers
    worst = 0.0

    for size in chunk_sizes(trials, cfg.AWVD_CHUNK):
        p = rng.uniform(lo, hi, size=(size, 2))
        owner = np.argmin(field(p), axis=1)
        lam = rng.uniform(size=(size, 1))
        x = centers[owner] + lam * (p - centers[owner])

        values = field(x)
        gap = values[np.arange(size), owner] - values.min(axis=1)
        worst = max(worst, float(gap.max()))

        for k in np.flatnonzero(gap > tolerance).tolist():
            rival = int(np.argmin(values[k]))
            report.add(
                Violation(
                    kind=ViolationKind.star,
                    detail=f"segment from center {int(owner[k])} leaves its cell into object {rival}'s",
                    objects=[int(owner[k]), rival],
                    point=(float(x[k, 0]), float(x[k, 1])),
                    margin=float(gap[k]),
                ),
                REPORT_LIMIT,
            )
        report.samples += size

    report.worst_margin = worst
    log.debug("star shape: %d samples, worst gap %.3g, %d violations", report.samples, worst, report.total)
    return report


def _random_point(rng: np.random.Generator, obj: GeomObject) -> Point:
    reach = obj.extent if obj.kind is Shape.disk else (obj.extent + 1) // 2
    x, y = rng.integers(-reach - 1, reach + 2, size=2).tolist()
    return Point(obj.cx + x, obj.cy + y)


def check_coverage_monotone(
    objects: T.Sequence[GeomObject],
    points: T.Sequence[Point] = (),
    trials: int = cfg.AWVD_TRIALS,
    seed: int = 0,
) -> ViolationReport:
    """
    If phi(D1, x) <= phi(D2, x) and D2 covers x then D1 covers x. Query points come from
    the instance half of the time and from around D2 otherwise, so that D2 covers often.
    """
    report = ViolationReport(check="coverage_monotone")
    if len(objects) < 2:
        return report
    PhiField(objects)

    rng = np.random.default_rng(seed)
    firsts = rng.integers(0, len(objects), size=trials).tolist()
    shifts = rng.integers(1, len(objects), size=trials).tolist()
    from_points = (rng.random(size=trials) < 0.5).tolist() if points else [False] * trials

    for a, shift, use_point in zip(firsts, shifts, from_points):
        b = (a + shift) % len(objects)
        d1, d2 = objects[a], objects[b]
        x = points[int(rng.integers(len(points)))] if use_point else _random_point(rng, d2)
        report.samples += 1
        if compare_phi(d1, d2, x) > 0 or not covers(d2, x):
            continue
        if not covers(d1, x):
            report.add(
                Violation.at(
                    ViolationKind.coverage,
                    f"object {b} covers the point but the nearer object {a} does not",
                    [a, b],
                    x,
                    margin=phi(d1, x),
                ),
                REPORT_LIMIT,
            )

    log.debug("coverage monotone: %d samples, %d violations", report.samples, report.total)
    return report
