from __future__ import annotations

import typing as T
from pathlib import Path

import networkx as nx
import numpy as np

from models import CubicGraph, GeneralGraph
from solvers.exact import max_independent, min_dominating
from utils.bits import to_mask

from .errors import DimacsError

__all__ = (
    "read_dimacs",
    "parse_dimacs",
    "write_dimacs",
    "k4",
    "k33",
    "prism",
    "random_connected_graph",
    "neighbour_masks",
    "graph_independence_number",
    "graph_domination_number",
    "is_dominating",
)


def parse_dimacs(text: str) -> nx.Graph:
    """`p edge <vertices> <edges>` then `e u v` lines, vertices numbered from 1."""
    g = nx.Graph()
    declared = None

    for number, line in enumerate(text.splitlines(), 1):
        entries = line.strip().split()
        if not entries or entries[0] in ("c", "%"):
            continue

        if entries[0] == "p":
            if len(entries) != 4 or entries[1] not in ("edge", "col"):
                raise DimacsError(number, "expected `p edge <vertices> <edges>`")
            try:
                vertices, declared = int(entries[2]), int(entries[3])
            except ValueError:
                raise DimacsError(number, "vertex and edge counts must be integers") from None
            g.add_nodes_from(range(vertices))

        elif entries[0] == "e":
            if declared is None:
                raise DimacsError(number, "edge before the problem line")
            try:
                u, v = int(entries[1]) - 1, int(entries[2]) - 1
            except (ValueError, IndexError):
                raise DimacsError(number, "expected `e <u> <v>`") from None
            if not (0 <= u < g.number_of_nodes() and 0 <= v < g.number_of_nodes()):
                raise DimacsError(number, f"vertex out of range 1..{g.number_of_nodes()}")
            g.add_edge(u, v)

        else:
            raise DimacsError(number, f"unknown line type `{entries[0]}`")

    if declared is None:
        raise DimacsError(0, "missing problem line")
    if g.number_of_edges() != declared:
        raise DimacsError(0, f"problem line declares {declared} edges, found {g.number_of_edges()}")
    return g


def read_dimacs(path: T.Union[str, Path], *, cubic: bool = False) -> GeneralGraph:
    g = parse_dimacs(Path(path).read_text())
    return (CubicGraph if cubic else GeneralGraph).from_networkx(g)


def write_dimacs(graph: GeneralGraph) -> str:
    lines = [f"p edge {graph.vertex_count} {len(graph.edges)}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in graph.edges)
    return "\n".join(lines) + "\n"


def k4() -> CubicGraph:
    return CubicGraph.from_networkx(nx.complete_graph(4))


def k33() -> CubicGraph:
    return CubicGraph.from_networkx(nx.complete_bipartite_graph(3, 3))


def prism() -> CubicGraph:
    return CubicGraph.from_networkx(nx.circular_ladder_graph(3))


def random_connected_graph(seed: int, vertices: int, density: float = 0.35) -> GeneralGraph:
    """Random spanning tree plus independent extra edges; connected by construction."""
    rng = np.random.default_rng(seed)
    g = nx.Graph()
    g.add_nodes_from(range(vertices))
    for v in range(1, vertices):
        g.add_edge(v, int(rng.integers(0, v)))
    for u in range(vertices):
        for v in range(u + 1, vertices):
            if not g.has_edge(u, v) and rng.random() < density:
                g.add_edge(u, v)
    return GeneralGraph.from_networkx(g)


def neighbour_masks(graph: GeneralGraph) -> list[int]:
    return [to_mask(graph.adjacency[v]) for v in range(graph.vertex_count)]


def graph_independence_number(graph: GeneralGraph) -> int:
    return max_independent(neighbour_masks(graph)).optimum


def graph_domination_number(graph: GeneralGraph) -> int:
    closed = [mask | (1 << v) for v, mask in enumerate(neighbour_masks(graph))]
    return min_dominating(closed).optimum


def is_dominating(graph: GeneralGraph, vertices: T.Iterable[int]) -> bool:
    chosen = set(vertices)
    return all(v in chosen or chosen.intersection(graph.adjacency[v]) for v in range(graph.vertex_count))
