"""On-disk JSON schemas. Integers are strict: a float anywhere in a file is a parse error."""

from __future__ import annotations

import re
import typing as T

from pydantic import BaseModel, ConfigDict, Field, ValidationError

from constants import Problem, Shape
from utils.exceptions import InstanceParseError

from .geometry import AnyObject, Circle, GeomObject, Point, Rectangle, Shadow, Strip, Triangle
from .graphs import SetSystem

__all__ = (
    "InstanceFile",
    "SolutionFile",
    "SetSystemFile",
    "parse_file",
    "object_to_spec",
)

XY = tuple[int, int]


class _Strict(BaseModel):
    model_config = ConfigDict(strict=True, extra="forbid", frozen=True)


class DiskSpec(_Strict):
    kind: T.Literal["disk"]
    cx: int
    cy: int
    extent: int = Field(gt=0)

    def build(self):
        return GeomObject.disk(self.cx, self.cy, self.extent)


class SquareSpec(_Strict):
    kind: T.Literal["square"]
    cx: int
    cy: int
    extent: int = Field(gt=0)

    def build(self):
        return GeomObject.square(self.cx, self.cy, self.extent)


class RectangleSpec(_Strict):
    kind: T.Literal["rectangle"]
    cx: int
    cy: int
    hw: int = Field(gt=0)
    hh: int = Field(gt=0)

    def build(self):
        return Rectangle(self.cx, self.cy, self.hw, self.hh)


class StripSpec(_Strict):
    kind: T.Literal["strip"]
    axis: T.Literal["x", "y"]
    lo: int
    hi: int

    def build(self):
        return Strip(self.axis, self.lo, self.hi)


class ShadowSpec(_Strict):
    kind: T.Literal["shadow"]
    xlo: int
    xhi: int
    ax: int
    ay: int
    bx: int
    by: int
    floor: int

    def build(self):
        return Shadow(self.xlo, self.xhi, self.ax, self.ay, self.bx, self.by, self.floor)


class TriangleSpec(_Strict):
    kind: T.Literal["triangle"]
    vertices: tuple[XY, XY, XY]

    def build(self):
        return Triangle(*(Point(*v) for v in self.vertices))


class CircleSpec(_Strict):
    kind: T.Literal["circle"]
    through: tuple[XY, XY, XY]

    def build(self):
        return Circle(*(Point(*v) for v in self.through))


ObjectSpec = T.Annotated[
    T.Union[DiskSpec, SquareSpec, RectangleSpec, StripSpec, ShadowSpec, TriangleSpec, CircleSpec],
    Field(discriminator="kind"),
]


def object_to_spec(obj: AnyObject) -> dict:
    match obj.kind:
        case Shape.disk | Shape.square:
            return {"kind": obj.kind.value, "cx": obj.cx, "cy": obj.cy, "extent": obj.extent}
        case Shape.rectangle:
            return {"kind": "rectangle", "cx": obj.cx, "cy": obj.cy, "hw": obj.hw, "hh": obj.hh}
        case Shape.strip:
            return {"kind": "strip", "axis": obj.axis, "lo": obj.lo, "hi": obj.hi}
        case Shape.shadow:
            return {
                "kind": "shadow",
                "xlo": obj.xlo,
                "xhi": obj.xhi,
                "ax": obj.ax,
                "ay": obj.ay,
                "bx": obj.bx,
                "by": obj.by,
                "floor": obj.floor,
            }
        case Shape.triangle:
            return {"kind": "triangle", "vertices": [list(p) for p in obj.vertices]}
        case Shape.circle:
            return {"kind": "circle", "through": [list(p) for p in obj.vertices]}


class InstanceFile(_Strict):
    scale: int = Field(gt=0)
    objects: list[ObjectSpec]
    points: list[XY]

    def build_objects(self) -> list[AnyObject]:
        return [o.build() for o in self.objects]

    def build_points(self) -> list[Point]:
        return [Point(x, y) for x, y in self.points]


class TraceSpec(_Strict):
    exchanges: list[dict]
    passes: int
    elapsed_ms: int
    truncated: bool = False


class SolutionFile(_Strict):
    problem: Problem
    selected: list[int]
    size: int
    feasible: bool
    t: T.Optional[int] = None
    order_seed: int = 0
    trace: T.Optional[TraceSpec] = None


class SetSystemFile(_Strict):
    universe: int = Field(ge=0)
    sets: list[list[int]]
    labels: list[str] = Field(default_factory=list)

    def build(self) -> SetSystem:
        return SetSystem(self.universe, tuple(tuple(s) for s in self.sets), tuple(self.labels))

    @classmethod
    def of(cls, sys: SetSystem) -> SetSystemFile:
        return cls(universe=sys.universe_size, sets=[list(s) for s in sys.sets], labels=list(sys.labels))


_LINE = re.compile(r"line (\d+)")

M = T.TypeVar("M", bound=BaseModel)


def parse_file(model: type[M], text: str | bytes) -> M:
    try:
        return model.model_validate_json(text)
    except ValidationError as e:
        first = e.errors()[0]
        if first["type"] == "json_invalid":
            found = _LINE.search(str(first.get("ctx", {}).get("error", first["msg"])))
            raise InstanceParseError(first["msg"], line=int(found.group(1)) if found else None) from None

        field = ".".join(str(part) for part in first["loc"]) or None
        raise InstanceParseError(first["msg"], field=field) from None
