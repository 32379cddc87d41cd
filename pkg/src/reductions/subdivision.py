from __future__ import annotations

import logging

from models import GeneralGraph
from utils.exceptions import PreconditionError

from .errors import MissingEdge

log = logging.getLogger(__name__)

__all__ = ("subdivide_edge",)


def subdivide_edge(g: GeneralGraph, e: tuple[int, int], dummies: int) -> GeneralGraph:
    """
    Replaces edge (u, v) by the path u - d1 - ... - d_dummies - v; new vertices are
    numbered from g.vertex_count on. 2k dummies raise the maximum independent set by
    exactly k, 3k dummies raise the minimum dominating set by exactly k.
    """
    u, v = e
    if not g.has_edge(u, v):
        raise MissingEdge(u, v)
    if dummies < 1:
        raise PreconditionError(f"Subdivision needs at least one dummy vertex, got {dummies}.")

    path = [u, *range(g.vertex_count, g.vertex_count + dummies), v]
    edges = [edge for edge in g.edges if edge != (min(u, v), max(u, v))]
    edges += list(zip(path, path[1:]))

    log.debug("subdivided (%d, %d) with %d dummies", u, v, dummies)
    return GeneralGraph(g.vertex_count + dummies, tuple(edges))
