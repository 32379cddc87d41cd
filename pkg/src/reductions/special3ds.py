"""
SPECIAL-3DS: the set-system dominating set built from a cubic graph, with the
solution mappings in both directions.

Vertex t with incident edges e_i < e_j < e_k owns seven sets, indexed 7t + s:

    s=0 {a_i, b1}   s=1 {b1, b2}   s=2 {b2, b3}   s=3 {b3, b4, a_j}
    s=4 {b4, b5}    s=5 {b5, b6}   s=6 {b6, a_k}

Edge element a_e has index e; b_t^s has index n + 6t + (s - 1).
"""

from __future__ import annotations

import logging
import typing as T
from pathlib import Path

import ujson

from models import CubicGraph, SetSystem, SetSystemFile, parse_file
from utils.bits import iter_bits, popcount, to_mask
from utils.exceptions import InfeasibleSelection

from .errors import ConstructionError, InvalidDominatingSet
from .graphs import is_dominating

log = logging.getLogger(__name__)

__all__ = (
    "GADGET",
    "special3ds_from_cubic",
    "is_feasible_set_ds",
    "forward_solution",
    "backward_solution",
    "save_set_system",
    "load_set_system",
)

GADGET = 7

# a vertex in the dominating set takes the three sets holding its edge elements
IN_PATTERN = (0, 3, 6)

# a vertex outside the dominating set takes two b-sets, picked by the first of its
# incident edges whose other end is in the set
OUT_PATTERNS = ((2, 5), (1, 5), (1, 4))


def _b(n: int, t: int, s: int) -> int:
    return n + 6 * t + (s - 1)


def special3ds_from_cubic(g: CubicGraph) -> SetSystem:
    n = len(g.edges)
    labels = [f"a{e}" for e in range(n)]
    labels += [f"b{t}_{s}" for t in range(g.vertex_count) for s in range(1, 7)]

    sets: list[tuple[int, ...]] = []
    for t, (i, j, k) in enumerate(g.incident_edges):
        b = {s: _b(n, t, s) for s in range(1, 7)}
        sets += [
            (i, b[1]),
            (b[1], b[2]),
            (b[2], b[3]),
            (b[3], b[4], j),
            (b[4], b[5]),
            (b[5], b[6]),
            (b[6], k),
        ]

    sys = SetSystem(n + 6 * g.vertex_count, tuple(sets), tuple(labels))
    log.debug("special3ds: %d vertices -> %d sets over %d elements", g.vertex_count, len(sys), sys.universe_size)
    return sys


def is_feasible_set_ds(sys: SetSystem, sel: int) -> bool:
    everything = (1 << len(sys)) - 1
    return all(sys.closed[k] & sel for k in iter_bits(everything & ~sel))


def forward_solution(g: CubicGraph, ds: T.Iterable[int]) -> int:
    """Maps a dominating set of g to a feasible selection of size |ds| + 2m."""
    ds = set(ds)
    for v in range(g.vertex_count):
        if v not in ds and not ds.intersection(g.adjacency[v]):
            raise InvalidDominatingSet(v)

    chosen = []
    for t, incident in enumerate(g.incident_edges):
        if t in ds:
            slots = IN_PATTERN
        else:
            slot = next(pos for pos, e in enumerate(incident) if g.other_end(e, t) in ds)
            slots = OUT_PATTERNS[slot]
        chosen.extend(GADGET * t + s for s in slots)

    return to_mask(chosen)


def _gadget_counts(g: CubicGraph, sel: int) -> list[int]:
    return [popcount(sel >> (GADGET * t) & ((1 << GADGET) - 1)) for t in range(g.vertex_count)]


def backward_solution(g: CubicGraph, sys: SetSystem, f2: int) -> set[int]:
    """
    Maps a feasible selection back to a dominating set of g no larger than |f2| - 2m.

    A feasible gadget holds at least two sets, and a two-set gadget uses one of
    {b1,b2}/{b2,b3} and one of {b4,b5}/{b5,b6}, leaving an a-set to be dominated from
    the neighbouring gadget. That neighbour then holds an a-set and so three or more
    sets, which makes the vertices with three or more sets dominating.
    """
    if sys != special3ds_from_cubic(g):
        raise ConstructionError("Set system was not built from this graph.")
    if not is_feasible_set_ds(sys, f2):
        raise InfeasibleSelection("ds", "(set system)")

    counts = _gadget_counts(g, f2)
    f1 = {t for t, c in enumerate(counts) if c >= 3}

    for v in range(g.vertex_count):
        if v not in f1 and not f1.intersection(g.adjacency[v]):
            log.warning("backward mapping: vertex %d left undominated, adding it", v)
            f1.add(v)

    if not is_dominating(g, f1):
        raise ConstructionError("Backward mapping did not produce a dominating set.")
    if len(f1) > popcount(f2) - 2 * g.vertex_count:
        raise ConstructionError(
            f"Backward mapping gave {len(f1)} vertices from {popcount(f2)} sets, above the |F2| - 2m bound."
        )
    return f1


def save_set_system(sys: SetSystem, path: T.Union[str, Path]) -> Path:
    path = Path(path)
    path.write_text(ujson.dumps(SetSystemFile.of(sys).model_dump(), indent=2) + "\n")
    return path


def load_set_system(path: T.Union[str, Path]) -> SetSystem:
    return parse_file(SetSystemFile, Path(path).read_bytes()).build()
