from __future__ import annotations

import typing as T
from dataclasses import dataclass

from constants import Shape
from utils.exceptions import PreconditionError

from .helpers import PositiveValidator, check_coords

__all__ = (
    "Point",
    "GeomObject",
    "Rectangle",
    "Strip",
    "Shadow",
    "Triangle",
    "Circle",
    "AnyObject",
)


@dataclass(frozen=True, order=True)
class Point:
    x: int
    y: int

    def __post_init__(self):
        check_coords(self.x, self.y)

    def __iter__(self):
        yield self.x
        yield self.y

    def shifted(self, dx: int, dy: int) -> Point:
        return Point(self.x + dx, self.y + dy)


@dataclass(frozen=True)
class GeomObject:
    """A disk (extent is the radius) or an axis-parallel square (extent is the side length)."""

    kind: Shape
    cx: int
    cy: int
    extent: int

    def __post_init__(self):
        if self.kind not in (Shape.disk, Shape.square):
            raise PreconditionError(f"GeomObject holds disks and squares only, got `{self.kind.value}`.")
        check_coords(self.cx, self.cy, self.extent)
        PositiveValidator("extent")(self.extent)

    @property
    def center(self) -> Point:
        return Point(self.cx, self.cy)

    @classmethod
    def disk(cls, cx: int, cy: int, radius: int) -> GeomObject:
        return cls(Shape.disk, cx, cy, radius)

    @classmethod
    def square(cls, cx: int, cy: int, side: int) -> GeomObject:
        return cls(Shape.square, cx, cy, side)


@dataclass(frozen=True)
class Rectangle:
    """Closed axis-parallel box given by center and half extents."""

    cx: int
    cy: int
    hw: int
    hh: int

    kind: T.ClassVar[Shape] = Shape.rectangle

    def __post_init__(self):
        check_coords(self.cx, self.cy, self.hw, self.hh)
        PositiveValidator("hw")(self.hw)
        PositiveValidator("hh")(self.hh)

    @classmethod
    def from_bounds(cls, x1: int, y1: int, x2: int, y2: int) -> Rectangle:
        """Bounds must have even width and height, else the center is not an integer."""
        if (x2 - x1) % 2 or (y2 - y1) % 2:
            raise PreconditionError("Rectangle bounds need even width and height.")
        return cls((x1 + x2) // 2, (y1 + y2) // 2, (x2 - x1) // 2, (y2 - y1) // 2)


@dataclass(frozen=True)
class Strip:
    """Closed infinite slab; axis "x" bounds the x coordinate (a vertical strip)."""

    axis: str
    lo: int
    hi: int

    kind: T.ClassVar[Shape] = Shape.strip

    def __post_init__(self):
        if self.axis not in ("x", "y"):
            raise PreconditionError(f"Strip axis must be `x` or `y`, got `{self.axis}`.")
        if self.lo > self.hi:
            raise PreconditionError("Strip needs lo <= hi.")
        check_coords(self.lo, self.hi)


@dataclass(frozen=True)
class Shadow:
    """
    The region below the line through (ax, ay) and (bx, by), clipped to
    xlo <= x <= xhi and y >= floor.
    """

    xlo: int
    xhi: int
    ax: int
    ay: int
    bx: int
    by: int
    floor: int

    kind: T.ClassVar[Shape] = Shape.shadow

    def __post_init__(self):
        if self.ax >= self.bx:
            raise PreconditionError("Shadow line points must satisfy ax < bx.")
        if self.xlo > self.xhi:
            raise PreconditionError("Shadow needs xlo <= xhi.")
        check_coords(self.xlo, self.xhi, self.ax, self.ay, self.bx, self.by, self.floor)


@dataclass(frozen=True)
class Triangle:
    a: Point
    b: Point
    c: Point

    kind: T.ClassVar[Shape] = Shape.triangle

    def __post_init__(self):
        _require_proper(self.a, self.b, self.c, "Triangle")

    @property
    def vertices(self) -> tuple[Point, Point, Point]:
        return self.a, self.b, self.c


@dataclass(frozen=True)
class Circle:
    """The circle through three points. It is a curve: only points on it are covered."""

    a: Point
    b: Point
    c: Point

    kind: T.ClassVar[Shape] = Shape.circle

    def __post_init__(self):
        _require_proper(self.a, self.b, self.c, "Circle")

    @property
    def vertices(self) -> tuple[Point, Point, Point]:
        return self.a, self.b, self.c


def _require_proper(a: Point, b: Point, c: Point, what: str) -> None:
    if (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x) == 0:
        raise PreconditionError(f"{what} needs three non-collinear points.")


AnyObject = T.Union[GeomObject, Rectangle, Strip, Shadow, Triangle, Circle]
