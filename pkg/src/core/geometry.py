"""
Exact predicates over integer coordinates.

Python integers are unbounded, so every predicate here is exact; floating point is
used only by `phi`, which is a diagnostic.
"""

from __future__ import annotations

import logging
import math
import typing as T
from collections import defaultdict

from constants import SEARCH_SHAPES, Shape, ViolationKind
from models import AnyObject, GeomObject, Point, Violation
from utils.exceptions import UnsupportedShape

log = logging.getLogger(__name__)

__all__ = (
    "orientation",
    "incircle",
    "covers",
    "on_boundary",
    "contains",
    "phi",
    "compare_phi",
    "check_general_position",
)


def _sign(v: int) -> int:
    return (v > 0) - (v < 0)


def orientation(a: Point, b: Point, c: Point) -> int:
    """+1 if a, b, c turn counter-clockwise, -1 if clockwise, 0 if collinear."""
    return _sign((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x))


def incircle(a: Point, b: Point, c: Point, d: Point) -> int:
    """
    Sign of the in-circle determinant: +1 if d is inside the circle through a, b, c
    (taken counter-clockwise), -1 outside, 0 on it.
    """
    adx, ady = a.x - d.x, a.y - d.y
    bdx, bdy = b.x - d.x, b.y - d.y
    cdx, cdy = c.x - d.x, c.y - d.y
    alift = adx * adx + ady * ady
    blift = bdx * bdx + bdy * bdy
    clift = cdx * cdx + cdy * cdy
    det = (
        alift * (bdx * cdy - cdx * bdy)
        + blift * (cdx * ady - adx * cdy)
        + clift * (adx * bdy - bdx * ady)
    )
    return _sign(det) * orientation(a, b, c)


def _covers_disk(o: GeomObject, p: Point) -> bool:
    dx, dy = o.cx - p.x, o.cy - p.y
    return dx * dx + dy * dy <= o.extent * o.extent


def _covers_square(o: GeomObject, p: Point) -> bool:
    return 2 * max(abs(o.cx - p.x), abs(o.cy - p.y)) <= o.extent


def _covers_rectangle(o, p: Point) -> bool:
    return abs(p.x - o.cx) <= o.hw and abs(p.y - o.cy) <= o.hh


def _covers_strip(o, p: Point) -> bool:
    v = p.x if o.axis == "x" else p.y
    return o.lo <= v <= o.hi


def _covers_shadow(o, p: Point) -> bool:
    if not (o.xlo <= p.x <= o.xhi) or p.y < o.floor:
        return False
    # on or below the directed line a -> b (ax < bx)
    return (o.bx - o.ax) * (p.y - o.ay) - (o.by - o.ay) * (p.x - o.ax) <= 0


def _covers_triangle(o, p: Point) -> bool:
    turns = {orientation(o.a, o.b, p), orientation(o.b, o.c, p), orientation(o.c, o.a, p)}
    return not (1 in turns and -1 in turns)


def _covers_circle(o, p: Point) -> bool:
    return incircle(o.a, o.b, o.c, p) == 0


_COVERS: dict[Shape, T.Callable[[T.Any, Point], bool]] = {
    Shape.disk: _covers_disk,
    Shape.square: _covers_square,
    Shape.rectangle: _covers_rectangle,
    Shape.strip: _covers_strip,
    Shape.shadow: _covers_shadow,
    Shape.triangle: _covers_triangle,
    Shape.circle: _covers_circle,
}


def covers(obj: AnyObject, p: Point) -> bool:
    """Closed containment of p in obj."""
    return _COVERS[obj.kind](obj, p)


def on_boundary(obj: GeomObject, p: Point) -> bool:
    if obj.kind is Shape.disk:
        dx, dy = obj.cx - p.x, obj.cy - p.y
        return dx * dx + dy * dy == obj.extent * obj.extent
    if obj.kind is Shape.square:
        return 2 * max(abs(obj.cx - p.x), abs(obj.cy - p.y)) == obj.extent
    raise UnsupportedShape(obj.kind.value, "on_boundary")


def contains(outer: GeomObject, inner: GeomObject) -> bool:
    """Closed containment of one disk (or square) in another of the same kind."""
    if outer.kind is not inner.kind or outer.kind not in SEARCH_SHAPES:
        return False
    dx, dy = outer.cx - inner.cx, outer.cy - inner.cy
    if outer.kind is Shape.disk:
        gap = outer.extent - inner.extent
        return gap >= 0 and gap * gap >= dx * dx + dy * dy
    return 2 * max(abs(dx), abs(dy)) + inner.extent <= outer.extent


def phi(obj: GeomObject, p: T.Union[Point, tuple[float, float]]) -> float:
    """Additive weighted distance: negative inside, zero on the boundary, positive outside."""
    px, py = p
    if obj.kind is Shape.disk:
        return math.hypot(obj.cx - px, obj.cy - py) - obj.extent
    if obj.kind is Shape.square:
        return max(abs(obj.cx - px), abs(obj.cy - py)) - obj.extent / 2
    raise UnsupportedShape(obj.kind.value, "phi")


def _doubled_phi(obj: GeomObject, p: Point) -> tuple[int, int]:
    """(X, k) with 2*phi(obj, p) == sqrt(X) - k."""
    dx, dy = obj.cx - p.x, obj.cy - p.y
    if obj.kind is Shape.disk:
        return 4 * (dx * dx + dy * dy), 2 * obj.extent
    if obj.kind is Shape.square:
        d = 2 * max(abs(dx), abs(dy))
        return d * d, obj.extent
    raise UnsupportedShape(obj.kind.value, "compare_phi")


def _sign_sqrt_diff(a: int, b: int, k: int) -> int:
    """Exact sign of sqrt(a) - sqrt(b) - k for a, b >= 0."""
    if k >= 0:
        rest = a - b - k * k
        if rest < 0:
            return -1
        return _sign(rest * rest - 4 * k * k * b)
    rest = b - a - k * k
    if rest < 0:
        return 1
    return _sign(4 * k * k * a - rest * rest)


def compare_phi(a: GeomObject, b: GeomObject, p: Point) -> int:
    """Exact sign of phi(a, p) - phi(b, p)."""
    xa, ka = _doubled_phi(a, p)
    xb, kb = _doubled_phi(b, p)
    return _sign_sqrt_diff(xa, xb, ka - kb)


def _collinear_triples(locations: list[Point]) -> T.Iterator[tuple[int, int, int]]:
    for i, origin in enumerate(locations):
        rays: dict[tuple[int, int], list[int]] = defaultdict(list)
        for j in range(i + 1, len(locations)):
            dx, dy = locations[j].x - origin.x, locations[j].y - origin.y
            g = math.gcd(dx, dy)
            dx, dy = dx // g, dy // g
            if dx < 0 or (dx == 0 and dy < 0):
                dx, dy = -dx, -dy
            rays[(dx, dy)].append(j)
        for members in rays.values():
            for x in range(len(members)):
                for y in range(x + 1, len(members)):
                    yield i, members[x], members[y]


def check_general_position(objects: T.Sequence[AnyObject], points: T.Sequence[Point]) -> list[Violation]:
    violations: list[Violation] = []
    shaped = [(i, o) for i, o in enumerate(objects) if o.kind in SEARCH_SHAPES]

    for i, o in shaped:
        for j, p in enumerate(points):
            if on_boundary(o, p):
                violations.append(
                    Violation.at(ViolationKind.boundary, f"point {j} lies on the boundary of object {i}", [i], p)
                )

    # distinct locations among centers and points, remembering who sits there
    where: dict[Point, list[str]] = {}
    owners: dict[Point, list[int]] = {}
    for i, o in shaped:
        where.setdefault(o.center, []).append(f"center {i}")
        owners.setdefault(o.center, []).append(i)
    for j, p in enumerate(points):
        where.setdefault(p, []).append(f"point {j}")
        owners.setdefault(p, [])

    locations = list(where)
    for a, b, c in _collinear_triples(locations):
        names = " / ".join("+".join(where[locations[k]]) for k in (a, b, c))
        involved = sorted({i for k in (a, b, c) for i in owners[locations[k]]})
        violations.append(Violation.at(ViolationKind.collinear, f"collinear: {names}", involved))

    # two members on one location are collinear with any third member
    for loc in locations:
        members = where[loc]
        if len(members) >= 3 or (len(members) == 2 and len(locations) > 1):
            violations.append(
                Violation.at(
                    ViolationKind.collinear, f"coincident: {'+'.join(members)}", sorted(set(owners[loc])), loc
                )
            )

    for i, outer in shaped:
        for j, inner in shaped:
            if i != j and contains(outer, inner):
                violations.append(
                    Violation.at(ViolationKind.containment, f"object {i} contains object {j}", [i, j])
                )

    if violations:
        log.debug("general position: %d violations over %d objects, %d points", len(violations), len(objects), len(points))
    return violations
