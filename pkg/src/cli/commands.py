from __future__ import annotations

import asyncio
import logging
import typing as T
from pathlib import Path

import click
from prettytable import PrettyTable

import config as cfg
from awvd import check_center_ownership, check_coverage_monotone, check_star_shaped
from bench import BenchOptions, run_bench, trend_report, write_csv
from constants import SEARCH_SHAPES, Embedding, Problem, Shape, ViolationKind
from core.geometry import check_general_position
from core.io import dumps, generate_random, instance_to_dict, load, load_solution, save, solution_to_dict
from models import CubicGraph, Instance, LocalSearchConfig, SetSystem
from reductions import (
    embed_a1,
    embed_a3_strips,
    embed_a5_shadows,
    embed_circles_from_cubic_is,
    embed_triangles_from_cubic_is,
    read_dimacs,
    save_set_system,
    special3ds_from_cubic,
)
from solvers import exact_ds, exact_is, local_search_ds, local_search_is, verify_local_optimality
from utils.exceptions import BudgetExhausted, VerificationFailed
from utils.formats import fmt_indices, plural
from utils.logs import setup_logging, teardown_logging

from .group import GeoGroup

log = logging.getLogger(__name__)

__all__ = ("cli",)

_PROBLEM = click.Choice([p.value for p in Problem])
_SHAPE = click.Choice(sorted(s.value for s in SEARCH_SHAPES), case_sensitive=False)
_INSTANCE = click.Path(exists=True, dir_okay=False, path_type=Path)


def _write(text: str, output: T.Optional[Path]) -> None:
    if output is None:
        click.echo(text, nl=False)
    else:
        output.write_text(text)
        log.info("wrote %s", output)


def _parse_ts(ctx, param, value: str) -> tuple[int, ...]:
    try:
        ts = tuple(int(part) for part in value.split(",") if part.strip())
    except ValueError:
        raise click.BadParameter(f"expected comma separated integers, got `{value}`") from None
    if not ts or min(ts) < 1:
        raise click.BadParameter("every t must be a positive integer")
    return ts


@click.group(cls=GeoGroup)
@click.option("-v", "--verbose", is_flag=True, help="Log every exchange and construction step.")
@click.option("--color/--no-color", default=True, help="Colour log lines.")
@click.pass_context
def cli(ctx: click.Context, verbose: bool, color: bool):
    """Local search, exact oracles and hardness reductions for discrete IS and DS."""
    setup_logging("DEBUG" if verbose else cfg.LOG_LEVEL, color=color)
    ctx.call_on_close(teardown_logging)


@cli.command()
@click.option("--shape", type=_SHAPE, default=Shape.disk.value, show_default=True)
@click.option("-m", "objects", type=click.IntRange(0), default=10, show_default=True, help="Number of objects.")
@click.option("-n", "points", type=click.IntRange(0), default=30, show_default=True, help="Number of points.")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--window", type=click.IntRange(1), default=cfg.DEFAULT_WINDOW, show_default=True)
@click.option("--extent", type=(int, int), default=cfg.DEFAULT_EXTENT, show_default=True, help="Extent range.")
@click.option("-o", "--output", type=click.Path(dir_okay=False, path_type=Path))
def gen(shape: str, objects: int, points: int, seed: int, window: int, extent: tuple[int, int], output):
    """Writes a seeded random instance as JSON."""
    inst = generate_random(seed, objects, points, Shape(shape.lower()), extent, window)
    _write(dumps(instance_to_dict(inst)), output)


@cli.command()
@click.argument("instance", type=_INSTANCE)
@click.option("--problem", type=_PROBLEM, default=Problem.IS.value, show_default=True)
@click.option("--t", "t", type=click.IntRange(1), default=1, show_default=True, help="Exchange radius.")
@click.option("--seed", type=int, default=0, show_default=True, help="Candidate order seed; 0 keeps index order.")
@click.option("--max-passes", type=click.IntRange(1), default=None)
@click.option("--start", type=_INSTANCE, default=None, help="Solution file to start from.")
@click.option("-o", "--output", type=click.Path(dir_okay=False, path_type=Path))
def solve(instance: Path, problem: str, t: int, seed: int, max_passes, start, output):
    """Runs t-level local search and writes the solution with its exchange trace."""
    inst = load(instance)
    problem = Problem(problem)
    begin = load_solution(start, inst)[0].selected if start else None

    search = local_search_is if problem is Problem.IS else local_search_ds
    sol, trace = search(inst, LocalSearchConfig(t=t, max_passes=max_passes, order_seed=seed), start=begin)
    _write(dumps(solution_to_dict(sol, t=t, order_seed=seed, trace=trace)), output)


@cli.command()
@click.argument("instance", type=_INSTANCE)
@click.option("--problem", type=_PROBLEM, default=Problem.IS.value, show_default=True)
@click.option("--budget", type=click.IntRange(1), default=cfg.NODE_BUDGET, show_default=True, help="Node budget.")
@click.option("--table", is_flag=True, help="Print a summary table instead of JSON.")
@click.option("-o", "--output", type=click.Path(dir_okay=False, path_type=Path))
def exact(instance: Path, problem: str, budget: int, table: bool, output):
    """Solves the instance exactly by branch and bound; exits 3 when the budget runs out."""
    inst = load(instance)
    problem = Problem(problem)
    result = (exact_is if problem is Problem.IS else exact_ds)(inst, budget)

    if table:
        summary = PrettyTable(["problem", "objects", "optimum", "witness", "nodes", "proven"])
        summary.add_row([problem.value, inst.m, result.optimum, fmt_indices(result.indices), result.nodes_explored, result.proven])
        _write(f"{summary}\n", output)
    else:
        _write(dumps({"problem": problem.value, **result.to_dict()}), output)

    if not result.proven:
        raise BudgetExhausted(result.nodes_explored)


def _diagnostics(inst: Instance, nested: bool, trials: int, seed: int) -> list:
    if not inst.m or not inst.shapes <= SEARCH_SHAPES:
        log.info("skipping cell diagnostics for %s", ", ".join(sorted(s.value for s in inst.shapes)) or "no objects")
        return []

    reports = [check_coverage_monotone(inst.objects, inst.points, trials, seed)]
    if nested:
        log.warning("nested objects present; center ownership and star shape checks skipped")
    else:
        reports.insert(0, check_center_ownership(inst.objects, trials, seed))
        reports.insert(1, check_star_shaped(inst.objects, trials, seed))
    return reports


@cli.command()
@click.argument("instance", type=_INSTANCE)
@click.option("--solution", type=_INSTANCE, default=None, help="Solution file to check for t-local optimality.")
@click.option("--t", "t", type=click.IntRange(1), default=None, help="Radius; defaults to the solution's own.")
@click.option("--trials", type=click.IntRange(0), default=cfg.AWVD_TRIALS, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--strict", is_flag=True, help="Fail on general-position violations.")
@click.option("-o", "--output", type=click.Path(dir_okay=False, path_type=Path))
def verify(instance: Path, solution, t, trials: int, seed: int, strict: bool, output):
    """General-position, cell and local-optimality checks; exits 2 on any failure."""
    inst = load(instance)
    failures = []

    position = check_general_position(inst.objects, inst.points)
    for v in position:
        log.warning("general position: %s", v.detail)
    if strict and position:
        failures.append(f"{plural(position):general-position violation}")

    nested = any(v.kind is ViolationKind.containment for v in position)
    reports = _diagnostics(inst, nested, trials, seed)
    failures.extend(f"{r.check}: {plural(r.total):violation}" for r in reports if not r.ok)

    optimality = None
    if solution is not None:
        sol, spec = load_solution(solution, inst)
        radius = t or spec.t or 1
        optimality = {"problem": sol.problem.value, "t": radius, "feasible": sol.feasible, "locally_optimal": None}
        if not sol.feasible:
            failures.append(f"solution is not {sol.problem.value.upper()}-feasible")
        else:
            optimality["locally_optimal"] = verify_local_optimality(inst, sol.selected, sol.problem, radius)
            if not optimality["locally_optimal"]:
                failures.append(f"solution is not {radius}-locally optimal")

    payload = {
        "instance": instance.name,
        "ok": not failures,
        "strict": strict,
        "general_position": [v.model_dump(mode="json") for v in position],
        "checks": [r.model_dump(mode="json") for r in reports],
        "local_optimality": optimality,
    }
    _write(dumps(payload), output)

    if failures:
        raise VerificationFailed(failures)


_EMBEDDERS: dict[Embedding, T.Callable[[CubicGraph, SetSystem], Instance]] = {
    Embedding.a1: lambda g, sys: embed_a1(sys),
    Embedding.a3: lambda g, sys: embed_a3_strips(sys),
    Embedding.a5: lambda g, sys: embed_a5_shadows(sys),
    Embedding.triangles: lambda g, sys: embed_triangles_from_cubic_is(g),
    Embedding.circles: lambda g, sys: embed_circles_from_cubic_is(g),
}


@cli.command()
@click.argument("graph", type=_INSTANCE)
@click.option("--out-dir", type=click.Path(file_okay=False, path_type=Path), default=Path("."), show_default=True)
@click.option(
    "--embed",
    "embeds",
    type=click.Choice([e.value for e in Embedding]),
    multiple=True,
    default=(Embedding.a1.value,),
    show_default=True,
)
def reduce(graph: Path, out_dir: Path, embeds: tuple[str, ...]):
    """Builds SPECIAL-3DS from a cubic DIMACS graph, plus the requested geometric embeddings."""
    g = T.cast(CubicGraph, read_dimacs(graph, cubic=True))
    sys = special3ds_from_cubic(g)
    out_dir.mkdir(parents=True, exist_ok=True)

    files = {"setsystem": save_set_system(sys, out_dir / "setsystem.json").name}
    for name in dict.fromkeys(embeds):
        inst = _EMBEDDERS[Embedding(name)](g, sys)
        files[name] = save(inst, out_dir / f"{name}.json").name

    summary = {
        "vertices": g.vertex_count,
        "edges": len(g.edges),
        "sets": len(sys),
        "universe": sys.universe_size,
        "files": files,
    }
    click.echo(dumps(summary), nl=False)


@cli.command()
@click.option("--shape", type=_SHAPE, default=Shape.disk.value, show_default=True)
@click.option("--count", type=click.IntRange(1), default=50, show_default=True, help="Instances in the corpus.")
@click.option("--seed-start", type=int, default=0, show_default=True)
@click.option("-m", "objects", type=click.IntRange(0), default=10, show_default=True)
@click.option("-n", "points", type=click.IntRange(0), default=30, show_default=True)
@click.option("--t", "ts", default="1,2,3", show_default=True, callback=_parse_ts, help="Comma separated radii.")
@click.option("--problem", type=click.Choice(["is", "ds", "both"]), default="is", show_default=True)
@click.option("--budget", type=click.IntRange(1), default=cfg.NODE_BUDGET, show_default=True)
@click.option(
    "--timing/--no-timing",
    default=False,
    show_default=True,
    help="Record wall-clock milliseconds; off keeps the CSV byte-identical.",
)
@click.option("--report/--no-report", default=True, show_default=True, help="Print the mean ratio table to stderr.")
@click.option("-o", "--output", type=click.Path(dir_okay=False, path_type=Path))
def bench(shape, count, seed_start, objects, points, ts, problem, budget, timing, report, output):
    """Sweeps t over a seeded corpus and writes one CSV row per (instance, problem, t)."""
    problems = (Problem.IS, Problem.DS) if problem == "both" else (Problem(problem),)
    opts = BenchOptions(
        shape=Shape(shape.lower()),
        count=count,
        seed_start=seed_start,
        m=objects,
        n=points,
        ts=ts,
        problems=problems,
        node_budget=budget,
        timing=timing,
    )
    records = asyncio.run(run_bench(opts))
    _write(write_csv(records), output)
    if report:
        click.echo(trend_report(records).get_string(), err=True)
