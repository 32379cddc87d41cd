"""
t-level local search for discrete independent set and discrete dominating set.

Both searches apply the first improving exchange found, scanning incoming sets by
increasing size in candidate order, and restart the scan after every exchange.
"""

from __future__ import annotations

import logging
import time
import typing as T
from datetime import timedelta
from itertools import combinations

import humanize
import numpy as np

from constants import SEARCH_SHAPES, Problem
from core.decorators import feasible_selection
from core.incidence import ds_forced_objects, is_feasible_ds, is_feasible_is
from models import Exchange, Instance, LocalSearchConfig, SearchTrace, Solution
from utils.bits import from_mask, iter_bits, popcount, to_mask
from utils.exceptions import InfeasibleSelection, UnsupportedShape

log = logging.getLogger(__name__)

__all__ = ("local_search_is", "local_search_ds", "verify_local_optimality", "candidate_order")

Move = tuple[int, int]  # (removed mask, added mask)


def _require_search_shapes(inst: Instance) -> None:
    unsupported = inst.shapes - SEARCH_SHAPES
    if unsupported:
        raise UnsupportedShape(min(s.value for s in unsupported), "local search")


def candidate_order(m: int, order_seed: int) -> list[int]:
    if order_seed == 0:
        return list(range(m))
    return np.random.default_rng(order_seed).permutation(m).tolist()


def _grow_is(
    conflicts: tuple[int, ...],
    sel: int,
    candidates: list[int],
    start: int,
    want: int,
    added: int,
    count: int,
    blocked: int,
) -> T.Optional[Move]:
    if count == want:
        return blocked, added

    for pos in range(start, len(candidates) - (want - count) + 1):
        r = candidates[pos]
        if conflicts[r] & added:
            continue
        grown = blocked | (conflicts[r] & sel)
        # blocked only grows; an exchange needs fewer removals than additions
        if popcount(grown) >= want:
            continue
        found = _grow_is(conflicts, sel, candidates, pos + 1, want, added | (1 << r), count + 1, grown)
        if found:
            return found
    return None


def _improving_is(inst: Instance, sel: int, t: int, order: list[int]) -> T.Optional[Move]:
    candidates = [i for i in order if not sel >> i & 1]
    for want in range(1, min(t + 1, len(candidates)) + 1):
        found = _grow_is(inst.conflicts, sel, candidates, 0, want, 0, 0, 0)
        if found:
            return found
    return None


def _two_hop(inst: Instance) -> list[int]:
    out = []
    for r in range(inst.m):
        mask = 0
        for x in iter_bits(inst.closed[r]):
            mask |= inst.closed[x]
        out.append(mask)
    return out


def _still_dominating(inst: Instance, new: int, removed: int) -> bool:
    affected = removed
    for r in iter_bits(removed):
        affected |= inst.conflicts[r]
    return all(inst.conflicts[k] & new for k in iter_bits(affected & ~new))


def _improving_ds(
    inst: Instance, sel: int, t: int, order: list[int], forced: int, two_hop: list[int]
) -> T.Optional[Move]:
    removable = [i for i in order if sel >> i & 1 and not forced >> i & 1]
    outside = [i for i in order if not sel >> i & 1]

    for k in range(0, min(t - 1, len(outside)) + 1):
        for added in combinations(outside, k):
            add_mask = to_mask(added)
            reach = [two_hop[r] for r in added]
            for size in range(k + 1, min(t, len(removable)) + 1):
                for removed in combinations(removable, size):
                    rem_mask = to_mask(removed)
                    # an added object out of reach of every removal would be redundant
                    if any(not h & rem_mask for h in reach):
                        continue
                    new = (sel & ~rem_mask) | add_mask
                    if _still_dominating(inst, new, rem_mask):
                        return rem_mask, add_mask
    return None


def _run(
    inst: Instance,
    cfg: LocalSearchConfig,
    problem: Problem,
    sel: int,
    improve: T.Callable[[int], T.Optional[Move]],
) -> tuple[Solution, SearchTrace]:
    trace = SearchTrace()
    started = time.perf_counter()

    while True:
        if cfg.max_passes is not None and trace.passes >= cfg.max_passes:
            trace.truncated = True
            break
        trace.passes += 1

        move = improve(sel)
        if move is None:
            break

        removed, added = move
        sel = (sel & ~removed) | added
        trace.exchanges.append(Exchange(from_mask(removed), from_mask(added), popcount(sel)))
        log.debug("%s exchange -%s +%s -> %d", problem.value, from_mask(removed), from_mask(added), popcount(sel))

    trace.elapsed = timedelta(seconds=time.perf_counter() - started)
    log.info(
        "%s local search t=%d: size %d after %d exchanges in %s",
        problem.value,
        cfg.t,
        popcount(sel),
        len(trace.exchanges),
        humanize.precisedelta(trace.elapsed, minimum_unit="milliseconds"),
    )
    return Solution(sel, problem, True), trace


def local_search_is(
    inst: Instance, cfg: LocalSearchConfig, *, start: T.Optional[int] = None
) -> tuple[Solution, SearchTrace]:
    """Grows an independent selection from `start` (default empty) until it is t-locally optimal."""
    _require_search_shapes(inst)
    sel = start or 0
    if not is_feasible_is(inst, sel):
        raise InfeasibleSelection("is", "(start)")

    order = candidate_order(inst.m, cfg.order_seed)
    return _run(inst, cfg, Problem.IS, sel, lambda s: _improving_is(inst, s, cfg.t, order))


def local_search_ds(
    inst: Instance, cfg: LocalSearchConfig, *, start: T.Optional[int] = None
) -> tuple[Solution, SearchTrace]:
    """Shrinks a dominating selection from `start` (default every object); forced objects stay."""
    _require_search_shapes(inst)
    forced = ds_forced_objects(inst)
    sel = (inst.all_objects if start is None else start) | forced
    if not is_feasible_ds(inst, sel):
        raise InfeasibleSelection("ds", "(start)")

    order = candidate_order(inst.m, cfg.order_seed)
    two_hop = _two_hop(inst)
    return _run(inst, cfg, Problem.DS, sel, lambda s: _improving_ds(inst, s, cfg.t, order, forced, two_hop))


@feasible_selection()
def verify_local_optimality(inst: Instance, sel: int, problem: Problem, t: int) -> bool:
    """
    Plain enumeration of every exchange within the radius: IS swaps at most t selected
    objects for at most t+1 others, DS at most t for at most t-1.
    """
    inside = list(iter_bits(sel))
    outside = list(iter_bits(inst.all_objects & ~sel))

    if problem is Problem.IS:
        for k in range(1, t + 2):
            for added in combinations(outside, k):
                if not is_feasible_is(inst, to_mask(added)):
                    continue
                # any valid removal set must contain every selected object the additions conflict with
                need = 0
                for r in added:
                    need |= inst.conflicts[r] & sel
                if popcount(need) <= t and popcount(need) < k:
                    return False
        return True

    for k in range(0, t):
        for added in combinations(outside, k):
            add_mask = to_mask(added)
            for size in range(k + 1, t + 1):
                for removed in combinations(inside, size):
                    if is_feasible_ds(inst, (sel & ~to_mask(removed)) | add_mask):
                        return False
    return True
