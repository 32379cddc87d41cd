from __future__ import annotations

import typing as T
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property

import networkx as nx

from utils.exceptions import PreconditionError

__all__ = ("GeneralGraph", "CubicGraph", "SetSystem")


def _normalise_edges(vertex_count: int, edges: T.Iterable[T.Sequence[int]]) -> tuple[tuple[int, int], ...]:
    seen = set()
    out = []
    for e in edges:
        u, v = sorted(int(x) for x in e)
        if u == v:
            raise PreconditionError(f"Self-loop at vertex {u}.")
        if not (0 <= u and v < vertex_count):
            raise PreconditionError(f"Edge ({u}, {v}) references a vertex outside 0..{vertex_count - 1}.")
        if (u, v) in seen:
            raise PreconditionError(f"Edge ({u}, {v}) listed twice.")
        seen.add((u, v))
        out.append((u, v))
    return tuple(out)


@dataclass(frozen=True)
class GeneralGraph:
    vertex_count: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "edges", _normalise_edges(self.vertex_count, self.edges))

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj = [[] for _ in range(self.vertex_count)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edge_set

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.vertex_count))
        g.add_edges_from(self.edges)
        return g

    @classmethod
    def from_networkx(cls, g: nx.Graph) -> GeneralGraph:
        relabel = {v: i for i, v in enumerate(sorted(g.nodes))}
        edges = sorted(tuple(sorted((relabel[u], relabel[v]))) for u, v in g.edges)
        return cls(len(relabel), tuple(edges))


@dataclass(frozen=True)
class CubicGraph(GeneralGraph):
    """Edge indices are positions in `edges`; every vertex has degree exactly three."""

    def __post_init__(self):
        super().__post_init__()
        # imported here, reductions depends on models
        from reductions.errors import NotCubicGraph

        degree = Counter(v for e in self.edges for v in e)
        bad = [v for v in range(self.vertex_count) if degree[v] != 3]
        if bad:
            raise NotCubicGraph(bad[0], degree[bad[0]])

    @cached_property
    def incident_edges(self) -> tuple[tuple[int, int, int], ...]:
        """Per vertex, its three edge indices in increasing order."""
        inc = [[] for _ in range(self.vertex_count)]
        for idx, (u, v) in enumerate(self.edges):
            inc[u].append(idx)
            inc[v].append(idx)
        return tuple(tuple(sorted(x)) for x in inc)

    def other_end(self, edge: int, v: int) -> int:
        a, b = self.edges[edge]
        return b if a == v else a


@dataclass(frozen=True)
class SetSystem:
    universe_size: int
    sets: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...] = field(default=())

    def __post_init__(self):
        sets = tuple(tuple(sorted(set(s))) for s in self.sets)
        for s in sets:
            if s and not (0 <= s[0] and s[-1] < self.universe_size):
                raise PreconditionError(f"Set {list(s)} references an element outside the universe.")
        object.__setattr__(self, "sets", sets)

        labels = tuple(self.labels) or tuple(f"e{i}" for i in range(self.universe_size))
        if len(labels) != self.universe_size:
            raise PreconditionError(f"Expected {self.universe_size} labels, got {len(labels)}.")
        object.__setattr__(self, "labels", labels)

    def __len__(self) -> int:
        return len(self.sets)

    @cached_property
    def memberships(self) -> tuple[int, ...]:
        """Per set, the bitset of its elements."""
        return tuple(sum(1 << e for e in s) for s in self.sets)

    @cached_property
    def containing(self) -> tuple[tuple[int, ...], ...]:
        """Per element, the indices of the sets that contain it."""
        where = [[] for _ in range(self.universe_size)]
        for idx, s in enumerate(self.sets):
            for e in s:
                where[e].append(idx)
        return tuple(tuple(w) for w in where)

    @cached_property
    def closed(self) -> tuple[int, ...]:
        """Per set, itself plus every set it intersects."""
        out = []
        for idx, s in enumerate(self.sets):
            mask = 1 << idx
            for e in s:
                for other in self.containing[e]:
                    mask |= 1 << other
            out.append(mask)
        return tuple(out)

    def is_a(self, element: int) -> bool:
        return self.labels[element].startswith("a")
