"""
Geometric realisations of set systems: rectangles (A1), axis-parallel strips (A3)
and downward shadows of segments (A5).

Point j of every output instance is element j of the set system and object i is set i,
so an embedding is correct iff incidence[i] == memberships[i] for every set. Each builder
checks that before returning.
"""

from __future__ import annotations

import logging
import re
import typing as T

from models import Instance, Point, Rectangle, SetSystem, Shadow, Strip
from core.incidence import build_instance
from utils.exceptions import PreconditionError

from .errors import ConstructionError

log = logging.getLogger(__name__)

__all__ = ("embed_a1", "embed_a3_strips", "embed_a5_shadows", "verify_embedding", "membership_matrix")


def membership_matrix(sys: SetSystem) -> list[list[int]]:
    return [[int(e in s) for e in range(sys.universe_size)] for s in sys.sets]


def verify_embedding(inst: Instance, sys: SetSystem, name: str) -> Instance:
    if inst.m != len(sys) or inst.n != sys.universe_size:
        raise ConstructionError(
            f"{name}: expected {len(sys)} objects over {sys.universe_size} points, "
            f"built {inst.m} over {inst.n} (coinciding objects or points)."
        )
    for i, (got, want) in enumerate(zip(inst.incidence, sys.memberships)):
        if got != want:
            raise ConstructionError(f"{name}: object {i} covers {bin(got)} but set {i} is {bin(want)}.")
    log.debug("%s embedding verified: %d objects, %d points", name, inst.m, inst.n)
    return inst


def _ranks(sys: SetSystem) -> tuple[dict[int, int], dict[int, int]]:
    a_rank, b_rank = {}, {}
    for e in range(sys.universe_size):
        if sys.is_a(e):
            a_rank[e] = len(a_rank)
        else:
            b_rank[e] = len(b_rank)
    return a_rank, b_rank


def embed_a1(sys: SetSystem, epsilon_scale: T.Optional[int] = None) -> Instance:
    """
    A-points on the line y = x - 2S to the lower right, B-points on y = x + 2S to the
    upper left, four units apart. Each set's rectangle reaches the upper-left line with
    its top-left corner and the lower-right line with its bottom-right corner. Everything
    is doubled so that rectangle centers stay integral.
    """
    unit = max(epsilon_scale or 0, 16 * (sys.universe_size + 1))
    a_rank, b_rank = _ranks(sys)
    u = {e: unit + 4 * r for e, r in a_rank.items()}
    v = {e: -unit + 4 * r for e, r in b_rank.items()}

    points = []
    for e in range(sys.universe_size):
        x, y = (u[e], u[e] - 2 * unit) if e in u else (v[e], v[e] + 2 * unit)
        points.append(Point(2 * x, 2 * y))

    objects = []
    for s in sys.sets:
        us = [u[e] for e in s if e in u]
        vs = [v[e] for e in s if e in v]

        if vs:
            x1, y2 = min(vs) - 1, max(vs) + 2 * unit + 1
        else:
            x1, y2 = -1, 4 * unit
        if us:
            x2, y1 = max(us) + 1, min(us) - 2 * unit - 1
        else:
            x2, y1 = 1, -4 * unit
        if not us and not vs:
            x1, y1, x2, y2 = 6 * unit, 6 * unit, 6 * unit + 2, 6 * unit + 2

        objects.append(Rectangle.from_bounds(2 * x1, 2 * y1, 2 * x2, 2 * y2))

    return verify_embedding(build_instance(objects, points), sys, "a1")


_B_LABEL = re.compile(r"^b(\d+)_([1-6])$")

# vertical offset of b_t^s inside gadget t's band
_BAND_OFFSET = {1: 1, 2: 2, 3: 3, 4: 5, 5: 6, 6: 7}

_FREE_X = -10


def _gadget_slot(sys: SetSystem, e: int) -> tuple[int, int]:
    found = _B_LABEL.match(sys.labels[e])
    if not found:
        raise PreconditionError(f"Strip embedding needs gadget labels `b<t>_<s>`, got `{sys.labels[e]}`.")
    return int(found.group(1)), int(found.group(2))


def embed_a3_strips(sys: SetSystem) -> Instance:
    """
    Edge elements sit on the x axis, four apart; each set holding one becomes a unit-wide
    vertical strip on one side of it. Sets of b-elements only become horizontal strips
    inside their gadget's band, ten units tall per gadget.
    """
    a_rank, _ = _ranks(sys)
    x_of = {e: 4 * (r + 1) for e, r in a_rank.items()}

    # side of a_e that a set's vertical strip takes: the lower-index set goes left
    side: dict[int, int] = {}
    anchor: dict[int, int] = {}
    for idx, s in enumerate(sys.sets):
        a_elems = [e for e in s if e in x_of]
        if len(a_elems) > 1:
            raise ConstructionError(f"a3: set {idx} holds {len(a_elems)} edge elements.")
        if not s:
            raise ConstructionError(f"a3: set {idx} is empty.")
        if a_elems:
            e = a_elems[0]
            holders = sys.containing[e]
            side[idx] = -1 if idx == holders[0] else 1
            anchor[idx] = e

    points = []
    for e in range(sys.universe_size):
        if e in x_of:
            points.append(Point(x_of[e], 0))
            continue
        t, s = _gadget_slot(sys, e)
        holder = next((idx for idx in sys.containing[e] if idx in anchor), None)
        x = _FREE_X if holder is None else x_of[anchor[holder]] + side[holder]
        points.append(Point(x, 10 * (t + 1) + _BAND_OFFSET[s]))

    objects = []
    for idx, s in enumerate(sys.sets):
        if idx in anchor:
            x = x_of[anchor[idx]]
            objects.append(Strip("x", x - 1, x) if side[idx] < 0 else Strip("x", x, x + 1))
        else:
            ys = [points[e].y for e in s]
            objects.append(Strip("y", min(ys), max(ys)))

    return verify_embedding(build_instance(objects, points), sys, "a3")


def embed_a5_shadows(sys: SetSystem) -> Instance:
    """
    A-points on the ray (x, -x), x > 0, B-points on (x, x), x < 0. A set's shadow spans
    from just left of its first B-point to just right of its last A-point, under the line
    through the midpoints that separate its own points from the next ones on either ray.
    """
    a_rank, b_rank = _ranks(sys)
    a_x = {e: 4 * (r + 1) for e, r in a_rank.items()}
    b_x = {e: -4 * (len(b_rank) - r) for e, r in b_rank.items()}
    floor = -4 * (len(a_rank) + len(b_rank)) - 10

    points = [Point(a_x[e], -a_x[e]) if e in a_x else Point(b_x[e], b_x[e]) for e in range(sys.universe_size)]

    objects = []
    for idx, s in enumerate(sys.sets):
        aa = [a_x[e] for e in s if e in a_x]
        bb = [b_x[e] for e in s if e in b_x]
        if not s:
            raise ConstructionError(f"a5: set {idx} is empty.")

        if aa and bb:
            b_hi, a_lo = max(bb) + 2, min(aa) - 2
            objects.append(Shadow(min(bb) - 2, max(aa) + 2, b_hi, b_hi, a_lo, -a_lo, floor))
        else:
            xs = aa or bb
            lo, hi = min(xs) - 2, max(xs) + 2
            objects.append(Shadow(lo, hi, lo, 0, hi, 0, floor))

    return verify_embedding(build_instance(objects, points), sys, "a5")
