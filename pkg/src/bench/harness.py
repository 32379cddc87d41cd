from __future__ import annotations

import asyncio
import logging
import typing as T
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path

import pandas as pd
from prettytable import PrettyTable

import config as cfg
from constants import BENCH_COLUMNS, Problem, Shape
from core.io import generate_random
from models import BenchRecord, ExactResult, Instance, LocalSearchConfig
from solvers import exact_ds, exact_is, local_search_ds, local_search_is
from utils.converters import to_async
from utils.formats import fmt_ratio, plural

log = logging.getLogger(__name__)

__all__ = (
    "BenchOptions",
    "build_corpus",
    "bench_instance",
    "run_bench",
    "records_frame",
    "write_csv",
    "trend_report",
)

_SOLVERS = {Problem.IS: (local_search_is, exact_is), Problem.DS: (local_search_ds, exact_ds)}


@dataclass(frozen=True)
class BenchOptions:
    shape: Shape = Shape.disk
    count: int = 50
    seed_start: int = 0
    m: int = 10
    n: int = 30
    ts: tuple[int, ...] = (1, 2, 3)
    problems: tuple[Problem, ...] = (Problem.IS,)
    node_budget: int = cfg.NODE_BUDGET
    timing: bool = False
    workers: int = cfg.BENCH_WORKERS


def build_corpus(opts: BenchOptions) -> list[tuple[str, Instance]]:
    """Seeded instances, id `<shape>-<seed>`; the seed is all that is needed to replay one."""
    return [
        (f"{opts.shape.value}-{seed}", generate_random(seed, opts.m, opts.n, opts.shape))
        for seed in range(opts.seed_start, opts.seed_start + opts.count)
    ]


def _ratio(problem: Problem, ls_size: int, exact: ExactResult) -> T.Optional[float]:
    if not exact.proven:
        return None
    if exact.optimum == 0:
        return 1.0
    return ls_size / exact.optimum


def bench_instance(instance_id: str, inst: Instance, opts: BenchOptions) -> list[BenchRecord]:
    """One record per (problem, t); the exact optimum is computed once per problem."""
    records = []
    for problem in opts.problems:
        search, oracle = _SOLVERS[problem]
        exact = oracle(inst, opts.node_budget)
        if not exact.proven:
            log.warning("%s: exact %s unproven, ratio left blank", instance_id, problem.value)

        for t in opts.ts:
            sol, trace = search(inst, LocalSearchConfig(t=t))
            records.append(
                BenchRecord(
                    instance_id=instance_id,
                    problem=problem,
                    shape=opts.shape.value,
                    m=inst.m,
                    n=inst.n,
                    t=t,
                    ls_size=sol.size,
                    exact_size=exact.optimum if exact.proven else None,
                    ratio=_ratio(problem, sol.size, exact),
                    exchanges=len(trace.exchanges),
                    elapsed_ms=trace.elapsed_ms if opts.timing else 0,
                )
            )
    return records


async def run_bench(opts: BenchOptions, corpus: T.Optional[list[tuple[str, Instance]]] = None) -> list[BenchRecord]:
    corpus = build_corpus(opts) if corpus is None else corpus
    with ThreadPoolExecutor(max_workers=opts.workers) as pool:
        run = to_async(executor=pool)(bench_instance)
        # gather keeps argument order whatever the completion order
        batches = await asyncio.gather(*(run(instance_id, inst, opts) for instance_id, inst in corpus))

    records = [r for batch in batches for r in batch]
    log.info("bench: %s over %s", f"{plural(records):record}", f"{plural(corpus):instance}")
    return records


def records_frame(records: T.Sequence[BenchRecord]) -> pd.DataFrame:
    frame = pd.DataFrame([r.as_row() for r in records], columns=list(BENCH_COLUMNS))
    return frame.astype({"exact_size": "Int64", "ratio": "float64"})


def write_csv(records: T.Sequence[BenchRecord], path: T.Union[str, Path, None] = None) -> str:
    text = records_frame(records).to_csv(
        index=False, float_format=f"%.{cfg.CSV_PRECISION}f", na_rep="", lineterminator="\n"
    )
    if path is not None:
        Path(path).write_text(text)
    return text


def trend_report(records: T.Sequence[BenchRecord]) -> PrettyTable:
    """Mean ratio per (problem, t). Observational only; nothing is enforced."""
    frame = records_frame(records).dropna(subset=["ratio"])
    grouped = frame.groupby(["problem", "t"], sort=True)["ratio"].agg(["mean", "count"]).reset_index()

    table = PrettyTable(["problem", "t", "mean ratio", "instances"])
    table.align["mean ratio"] = "r"
    for row in grouped.itertuples(index=False):
        table.add_row([row.problem, row.t, fmt_ratio(row.mean, cfg.CSV_PRECISION), row.count])
    return table
