from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

import config as cfg
from constants import Problem, Shape
from utils.bits import from_mask, iter_bits, popcount
from utils.exceptions import ObjectIndexError

from .geometry import AnyObject, Point

__all__ = ("Instance", "Solution")


@dataclass(frozen=True)
class Instance:
    """
    Objects and points with their incidence. incidence[i] has bit j set iff
    objects[i] covers points[j]. Build through core.incidence.build_instance.
    """

    objects: tuple[AnyObject, ...]
    points: tuple[Point, ...]
    incidence: tuple[int, ...]
    scale: int = field(default=cfg.SCALE)

    @property
    def m(self) -> int:
        return len(self.objects)

    @property
    def n(self) -> int:
        return len(self.points)

    @property
    def all_objects(self) -> int:
        return (1 << self.m) - 1

    @cached_property
    def shapes(self) -> frozenset[Shape]:
        return frozenset(o.kind for o in self.objects)

    @cached_property
    def coverers(self) -> tuple[int, ...]:
        """Per point, the bitset of objects covering it."""
        owners = [0] * self.n
        for i, inc in enumerate(self.incidence):
            for j in iter_bits(inc):
                owners[j] |= 1 << i
        return tuple(owners)

    @cached_property
    def conflicts(self) -> tuple[int, ...]:
        """Per object, the other objects sharing at least one point with it."""
        masks = [0] * self.m
        for i, inc in enumerate(self.incidence):
            mask = 0
            for j in iter_bits(inc):
                mask |= self.coverers[j]
            masks[i] = mask & ~(1 << i)
        return tuple(masks)

    @cached_property
    def closed(self) -> tuple[int, ...]:
        """conflicts plus the object itself: the objects able to dominate it."""
        return tuple(mask | (1 << i) for i, mask in enumerate(self.conflicts))

    def check_index(self, i: int) -> int:
        if not 0 <= i < self.m:
            raise ObjectIndexError(i, self.m)
        return i

    def covered_points(self, i: int) -> tuple[int, ...]:
        return from_mask(self.incidence[self.check_index(i)])


@dataclass(frozen=True)
class Solution:
    selected: int
    problem: Problem
    feasible: bool = True

    @property
    def indices(self) -> tuple[int, ...]:
        return from_mask(self.selected)

    @property
    def size(self) -> int:
        return popcount(self.selected)

    def __contains__(self, i: int) -> bool:
        return bool(self.selected >> i & 1)

    def __len__(self) -> int:
        return self.size
