"""Branch-and-bound oracles for maximum independent set and minimum dominating set over bitsets."""

from __future__ import annotations

import logging
import math
import typing as T

import config as cfg
from core.incidence import ds_forced_objects
from models import ExactResult, Instance, SetSystem
from utils.bits import iter_bits, lowest_bit, popcount

log = logging.getLogger(__name__)

__all__ = ("max_independent", "min_dominating", "exact_is", "exact_ds", "exact_set_ds")


class _OutOfBudget(Exception):
    pass


class _Counter:
    def __init__(self, budget: int):
        self.budget = budget
        self.nodes = 0

    def tick(self):
        self.nodes += 1
        if self.nodes > self.budget:
            raise _OutOfBudget


def _clique_cover(adj: T.Sequence[int], cand: int) -> int:
    """Number of cliques in a greedy clique cover of cand; bounds any independent subset."""
    count = 0
    while cand:
        v = lowest_bit(cand)
        clique = 1 << v
        common = adj[v] & cand
        while common:
            u = lowest_bit(common)
            clique |= 1 << u
            common &= adj[u]
        cand &= ~clique
        count += 1
    return count


def _greedy_independent(adj: T.Sequence[int], cand: int) -> int:
    chosen = 0
    while cand:
        v = min(iter_bits(cand), key=lambda x: (popcount(adj[x] & cand), x))
        chosen |= 1 << v
        cand &= ~(adj[v] | (1 << v))
    return chosen


def max_independent(adj: T.Sequence[int], node_budget: T.Optional[int] = None) -> ExactResult:
    """adj[v] is the neighbour bitset of v (without v)."""
    counter = _Counter(cfg.NODE_BUDGET if node_budget is None else node_budget)
    everything = (1 << len(adj)) - 1

    best = _greedy_independent(adj, everything)
    best_size = popcount(best)

    def expand(cand: int, chosen: int, size: int):
        nonlocal best, best_size
        counter.tick()

        if not cand:
            if size > best_size:
                best, best_size = chosen, size
            return
        if size + _clique_cover(adj, cand) <= best_size:
            return

        v = max(iter_bits(cand), key=lambda x: (popcount(adj[x] & cand), -x))
        if not adj[v] & cand:
            # nothing left conflicts
            expand(0, chosen | cand, size + popcount(cand))
            return

        expand(cand & ~(adj[v] | (1 << v)), chosen | (1 << v), size + 1)
        expand(cand & ~(1 << v), chosen, size)

    proven = True
    try:
        expand(everything, 0, 0)
    except _OutOfBudget:
        proven = False
        log.warning("independent set search stopped at %d nodes, best %d", counter.nodes, best_size)

    return ExactResult(best_size, best, counter.nodes, proven)


def _greedy_dominating(closed: T.Sequence[int], sel: int, undominated: int) -> int:
    while undominated:
        i = max(range(len(closed)), key=lambda x: (popcount(closed[x] & undominated), -x))
        sel |= 1 << i
        undominated &= ~closed[i]
    return sel


def _lower_bound(closed: T.Sequence[int], undominated: int, allowed: int) -> float:
    maxcov = max((popcount(closed[i] & undominated) for i in iter_bits(allowed)), default=0)
    if not maxcov:
        return math.inf

    # undominated objects with pairwise disjoint option sets each need their own pick
    packed, used = 0, 0
    for k in iter_bits(undominated):
        options = closed[k] & allowed
        if not options:
            return math.inf
        if not options & used:
            used |= options
            packed += 1

    return max(packed, math.ceil(popcount(undominated) / maxcov))


def min_dominating(closed: T.Sequence[int], forced: int = 0, node_budget: T.Optional[int] = None) -> ExactResult:
    """
    closed[i] is the bitset of items i dominates, itself included; the relation must be
    symmetric. Items in `forced` are selected up front.
    """
    counter = _Counter(cfg.NODE_BUDGET if node_budget is None else node_budget)
    everything = (1 << len(closed)) - 1

    start_undominated = everything
    for f in iter_bits(forced):
        start_undominated &= ~closed[f]

    best = _greedy_dominating(closed, forced, start_undominated)
    best_size = popcount(best)

    def expand(sel: int, size: int, undominated: int, allowed: int):
        nonlocal best, best_size
        counter.tick()

        if not undominated:
            if size < best_size:
                best, best_size = sel, size
            return
        if size + _lower_bound(closed, undominated, allowed) >= best_size:
            return

        k = min(iter_bits(undominated), key=lambda x: (popcount(closed[x] & allowed), x))
        options = sorted(
            iter_bits(closed[k] & allowed), key=lambda i: (-popcount(closed[i] & undominated), i)
        )
        for i in options:
            expand(sel | (1 << i), size + 1, undominated & ~closed[i], allowed)
            # later branches never use i again: each solution is found under its first option
            allowed &= ~(1 << i)

    proven = True
    try:
        expand(forced, popcount(forced), start_undominated, everything & ~forced)
    except _OutOfBudget:
        proven = False
        log.warning("dominating set search stopped at %d nodes, best %d", counter.nodes, best_size)

    return ExactResult(best_size, best, counter.nodes, proven)


def exact_is(inst: Instance, node_budget: T.Optional[int] = None) -> ExactResult:
    return max_independent(inst.conflicts, node_budget)


def exact_ds(inst: Instance, node_budget: T.Optional[int] = None) -> ExactResult:
    return min_dominating(inst.closed, ds_forced_objects(inst), node_budget)


def exact_set_ds(sys: SetSystem, node_budget: T.Optional[int] = None) -> ExactResult:
    forced = 0
    for idx, mask in enumerate(sys.closed):
        if mask == 1 << idx:
            forced |= 1 << idx
    return min_dominating(sys.closed, forced, node_budget)
