from enum import Enum, IntEnum


class Problem(Enum):
    IS = "is"
    DS = "ds"


class Shape(Enum):
    disk = "disk"
    square = "square"
    rectangle = "rectangle"
    strip = "strip"
    shadow = "shadow"
    triangle = "triangle"
    circle = "circle"


# shapes the local-search solvers and awvd diagnostics accept
SEARCH_SHAPES = frozenset((Shape.disk, Shape.square))


class ExitCode(IntEnum):
    ok = 0
    usage = 1
    invalid = 2
    budget = 3


class ViolationKind(Enum):
    boundary = "boundary"
    collinear = "collinear"
    containment = "containment"
    ownership = "ownership"
    star = "star"
    coverage = "coverage"
    optimality = "optimality"


class Embedding(Enum):
    a1 = "a1"
    a3 = "a3"
    a5 = "a5"
    triangles = "triangles"
    circles = "circles"


BENCH_COLUMNS = (
    "instance_id",
    "problem",
    "shape",
    "m",
    "n",
    "t",
    "ls_size",
    "exact_size",
    "ratio",
    "exchanges",
    "elapsed_ms",
)
