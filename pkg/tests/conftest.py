from __future__ import annotations

import math
from itertools import combinations

import pytest

from constants import Problem, Shape
from core.geometry import contains
from core.incidence import build_instance
from core.io import generate_random
from models import GeneralGraph, GeomObject, Instance, Point
from reductions import k4, k33, prism


# brute-force oracles, written against the raw incidence with plain itertools


def brute_max_is(inst: Instance) -> int:
    for size in range(inst.m, 0, -1):
        for chosen in combinations(range(inst.m), size):
            if all(not inst.incidence[a] & inst.incidence[b] for a, b in combinations(chosen, 2)):
                return size
    return 0


def brute_min_ds(inst: Instance) -> int:
    for size in range(inst.m + 1):
        for chosen in combinations(range(inst.m), size):
            if all(
                any(inst.incidence[o] & inst.incidence[c] for c in chosen)
                for o in range(inst.m)
                if o not in chosen
            ):
                return size
    raise AssertionError("selecting everything always dominates")


def brute_graph_mis(g: GeneralGraph) -> int:
    for size in range(g.vertex_count, 0, -1):
        for chosen in combinations(range(g.vertex_count), size):
            if not any(g.has_edge(u, v) for u, v in combinations(chosen, 2)):
                return size
    return 0


def brute_graph_mds(g: GeneralGraph) -> int:
    for size in range(g.vertex_count + 1):
        for chosen in combinations(range(g.vertex_count), size):
            picked = set(chosen)
            if all(v in picked or picked.intersection(g.adjacency[v]) for v in range(g.vertex_count)):
                return size
    raise AssertionError("unreachable")


def _raw_feasible(inst: Instance, chosen: set[int], problem: Problem) -> bool:
    if problem is Problem.IS:
        return all(not inst.incidence[a] & inst.incidence[b] for a, b in combinations(sorted(chosen), 2))
    return all(o in chosen or any(inst.incidence[o] & inst.incidence[c] for c in chosen) for o in range(inst.m))


def brute_feasible_selections(inst: Instance, problem: Problem) -> list[int]:
    """Every feasible selection as a bitset, checked pairwise on the raw incidence."""
    return [
        mask
        for mask in range(1 << inst.m)
        if _raw_feasible(inst, {i for i in range(inst.m) if mask >> i & 1}, problem)
    ]


def brute_locally_optimal(inst: Instance, sel: int, problem: Problem, t: int) -> bool:
    """Tries every removal and addition pair within the radius, with no pruning."""
    inside = [i for i in range(inst.m) if sel >> i & 1]
    outside = [i for i in range(inst.m) if not sel >> i & 1]
    most_added = t + 1 if problem is Problem.IS else t - 1

    for r in range(t + 1):
        for removed in combinations(inside, r):
            for a in range(most_added + 1):
                grows = a > r if problem is Problem.IS else a < r
                if not grows:
                    continue
                for added in combinations(outside, a):
                    if _raw_feasible(inst, (set(inside) - set(removed)) | set(added), problem):
                        return False
    return True


def drop_nested(inst: Instance) -> Instance:
    """Keeps the objects that neither contain nor sit inside another one."""
    keep = [
        o
        for i, o in enumerate(inst.objects)
        if not any(j != i and (contains(o, other) or contains(other, o)) for j, other in enumerate(inst.objects))
    ]
    return build_instance(keep, inst.points)


@pytest.fixture
def oracles():
    return {
        "is": brute_max_is,
        "ds": brute_min_ds,
        "graph_mis": brute_graph_mis,
        "graph_mds": brute_graph_mds,
        "feasible": brute_feasible_selections,
        "locally_optimal": brute_locally_optimal,
    }


@pytest.fixture(params=["k4", "k33", "prism"])
def named_graph(request):
    return request.param, {"k4": k4, "k33": k33, "prism": prism}[request.param]()


@pytest.fixture
def small_corpus():
    """Twenty seeded instances per shape at oracle scale."""
    return [generate_random(seed, 8, 24, shape) for shape in (Shape.disk, Shape.square) for seed in range(20)]


@pytest.fixture
def pentagon():
    """Five disks whose shared-point relation is a 5-cycle."""
    corners = [
        Point(round(100 * math.cos(2 * math.pi * k / 5)), round(100 * math.sin(2 * math.pi * k / 5))) for k in range(5)
    ]
    disks = []
    for k in range(5):
        a, b = corners[k], corners[(k + 1) % 5]
        disks.append(GeomObject.disk((a.x + b.x) // 2, (a.y + b.y) // 2, 62))
    return build_instance(disks, corners)


@pytest.fixture
def nonnested():
    return drop_nested
