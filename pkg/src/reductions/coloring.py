"""
Independent-set embeddings of cubic graphs with fat triangles and similar circles.

A proper 4-edge-colouring puts the three edges at a vertex in three different colour
classes; each class owns a short arc of a large circle around one axis crossing, and
every edge becomes a point on its class's arc. A vertex becomes the triangle (or the
circle) through its three edge points, so two objects share a point iff their vertices
share an edge.
"""

from __future__ import annotations

import logging
import math
import typing as T

import networkx as nx
import numpy as np

import config as cfg
from core.geometry import incircle
from core.incidence import build_instance
from models import Circle, CubicGraph, Instance, Point, Triangle
from utils.bits import to_mask

from .errors import ConstructionError

log = logging.getLogger(__name__)

__all__ = (
    "four_edge_coloring",
    "edge_points",
    "embed_triangles_from_cubic_is",
    "embed_circles_from_cubic_is",
)

COLORS = 4


def four_edge_coloring(g: CubicGraph) -> list[int]:
    """Backtracking over the line graph; colour of edge index e at position e."""
    line = nx.line_graph(g.to_networkx())
    index = {e: i for i, e in enumerate(g.edges)}
    neighbours: list[list[int]] = [[] for _ in g.edges]
    for e1, e2 in line.edges:
        a, b = index[tuple(sorted(e1))], index[tuple(sorted(e2))]
        neighbours[a].append(b)
        neighbours[b].append(a)

    colors = [-1] * len(g.edges)

    def assign(e: int) -> bool:
        if e == len(colors):
            return True
        used = {colors[x] for x in neighbours[e]}
        for c in range(COLORS):
            if c in used:
                continue
            colors[e] = c
            if assign(e + 1):
                return True
        colors[e] = -1
        return False

    if not assign(0):
        raise ConstructionError("No proper 4-edge-colouring found.")
    return colors


def edge_points(g: CubicGraph, colors: T.Sequence[int], radius: int = cfg.EMBED_RADIUS) -> list[Point]:
    """Colour class c spreads its edges, by index, over the arc around angle c * 90 degrees."""
    half = math.radians(cfg.EMBED_ARC_DEGREES)
    angles = np.zeros(len(g.edges))
    for c in range(COLORS):
        members = [e for e, col in enumerate(colors) if col == c]
        steps = np.arange(1, len(members) + 1) / (len(members) + 1)
        angles[members] = c * math.pi / 2 - half + 2 * half * steps

    xs = np.rint(radius * np.cos(angles)).astype(np.int64)
    ys = np.rint(radius * np.sin(angles)).astype(np.int64)
    return [Point(int(x), int(y)) for x, y in zip(xs.tolist(), ys.tolist())]


def _expected(g: CubicGraph) -> list[int]:
    return [to_mask(edges) for edges in g.incident_edges]


def _verify(inst: Instance, g: CubicGraph, name: str) -> Instance:
    if inst.m != g.vertex_count or inst.n != len(g.edges):
        raise ConstructionError(f"{name}: coinciding objects or points after construction.")
    for v, (got, want) in enumerate(zip(inst.incidence, _expected(g))):
        if got != want:
            raise ConstructionError(f"{name}: object {v} covers {bin(got)}, expected {bin(want)}.")
    return inst


def embed_triangles_from_cubic_is(g: CubicGraph) -> Instance:
    points = edge_points(g, four_edge_coloring(g))
    triangles = [Triangle(*(points[e] for e in edges)) for edges in g.incident_edges]
    return _verify(build_instance(triangles, points), g, "triangles")


def embed_circles_from_cubic_is(g: CubicGraph, max_rounds: int = 1_000) -> Instance:
    """
    Same layout with circles through the three edge points. Whenever a fourth point lands
    exactly on a vertex's circle, that point moves one unit in x and everything is rechecked.
    """
    points = edge_points(g, four_edge_coloring(g))

    for _ in range(max_rounds):
        moved = False
        for edges in g.incident_edges:
            a, b, c = (points[e] for e in edges)
            for e, p in enumerate(points):
                if e not in edges and incircle(a, b, c, p) == 0:
                    log.debug("circles: edge point %d is co-circular with a vertex circle, nudging", e)
                    points[e] = p.shifted(1, 0)
                    moved = True
        if not moved:
            break
    else:
        raise ConstructionError(f"circles: co-circular points remain after {max_rounds} rounds.")

    circles = [Circle(*(points[e] for e in edges)) for edges in g.incident_edges]
    return _verify(build_instance(circles, points), g, "circles")
