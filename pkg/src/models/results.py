from __future__ import annotations

import math
import typing as T
from dataclasses import dataclass, field
from datetime import timedelta

from pydantic import BaseModel, Field

from constants import Problem, ViolationKind
from utils.bits import from_mask, popcount
from utils.exceptions import PreconditionError

from .geometry import Point

__all__ = (
    "LocalSearchConfig",
    "Exchange",
    "SearchTrace",
    "ExactResult",
    "CellAssignment",
    "Violation",
    "ViolationReport",
    "BenchRecord",
)


@dataclass(frozen=True)
class LocalSearchConfig:
    t: int
    max_passes: T.Optional[int] = None
    order_seed: int = 0

    def __post_init__(self):
        if not isinstance(self.t, int) or self.t < 1:
            raise PreconditionError(f"Exchange radius t must be a positive integer, got {self.t!r}.")
        if self.max_passes is not None and self.max_passes < 1:
            raise PreconditionError("max_passes must be positive when given.")


@dataclass(frozen=True)
class Exchange:
    removed: tuple[int, ...]
    added: tuple[int, ...]
    size: int


@dataclass
class SearchTrace:
    exchanges: list[Exchange] = field(default_factory=list)
    passes: int = 0
    elapsed: timedelta = field(default_factory=timedelta)
    truncated: bool = False

    @property
    def elapsed_ms(self) -> int:
        return round(self.elapsed.total_seconds() * 1000)

    def to_dict(self) -> dict:
        return {
            "exchanges": [{"removed": list(e.removed), "added": list(e.added), "size": e.size} for e in self.exchanges],
            "passes": self.passes,
            "elapsed_ms": self.elapsed_ms,
            "truncated": self.truncated,
        }


@dataclass(frozen=True)
class ExactResult:
    optimum: int
    witness: int
    nodes_explored: int
    proven: bool

    @property
    def indices(self) -> tuple[int, ...]:
        return from_mask(self.witness)

    def __post_init__(self):
        if self.proven and popcount(self.witness) != self.optimum:
            raise PreconditionError("A proven result must have a witness of optimum size.")

    def to_dict(self) -> dict:
        return {
            "optimum": self.optimum,
            "witness": list(self.indices),
            "nodes_explored": self.nodes_explored,
            "proven": self.proven,
        }


@dataclass(frozen=True)
class CellAssignment:
    query: tuple[float, float]
    owner: int
    phi_value: float
    margin: float


class Violation(BaseModel):
    kind: ViolationKind
    detail: str
    objects: list[int] = Field(default_factory=list)
    point: T.Optional[tuple[float, float]] = None
    margin: T.Optional[float] = None

    @classmethod
    def at(cls, kind: ViolationKind, detail: str, objects: T.Iterable[int], point: T.Optional[Point] = None, **kw):
        return cls(kind=kind, detail=detail, objects=list(objects), point=tuple(point) if point else None, **kw)


class ViolationReport(BaseModel):
    check: str
    samples: int = 0
    total: int = 0
    # capped; total counts every violation
    violations: list[Violation] = Field(default_factory=list)
    worst_margin: T.Optional[float] = None

    @property
    def ok(self) -> bool:
        return self.total == 0

    def __len__(self) -> int:
        return self.total

    def add(self, violation: Violation, limit: int) -> None:
        self.total += 1
        if len(self.violations) < limit:
            self.violations.append(violation)


@dataclass(frozen=True)
class BenchRecord:
    instance_id: str
    problem: Problem
    shape: str
    m: int
    n: int
    t: int
    ls_size: int
    exact_size: T.Optional[int]
    ratio: T.Optional[float]
    exchanges: int
    elapsed_ms: int

    def __post_init__(self):
        if self.ratio is None or math.isnan(self.ratio):
            return
        if self.problem is Problem.IS and self.ratio > 1:
            raise PreconditionError(f"{self.instance_id}: IS ratio {self.ratio} above 1.")
        if self.problem is Problem.DS and self.ratio < 1:
            raise PreconditionError(f"{self.instance_id}: DS ratio {self.ratio} below 1.")

    def as_row(self) -> dict:
        return {
            "instance_id": self.instance_id,
            "problem": self.problem.value,
            "shape": self.shape,
            "m": self.m,
            "n": self.n,
            "t": self.t,
            "ls_size": self.ls_size,
            "exact_size": self.exact_size,
            "ratio": self.ratio,
            "exchanges": self.exchanges,
            "elapsed_ms": self.elapsed_ms,
        }
