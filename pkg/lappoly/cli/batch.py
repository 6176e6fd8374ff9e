"""Run checks over every small graph or over a stream of random graphs."""

from __future__ import annotations

import itertools
import json
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Dict, Iterable, Iterator, List, NamedTuple, Optional, Tuple

import click

from lappoly.cli.checks import CheckContext, expand_names, run_checks
from lappoly.cli.inputs import (
    check_tol,
    describe,
    echo_progress,
    echo_rows,
    format_option,
    parse_random,
    timings_option,
    tol_option,
    verbose_option,
)
from lappoly.exceptions import BadParameter, VerificationFailed
from lappoly.graphs import Graph, all_graphs, random_graph
from lappoly.utils.config import ALL_N_LIMIT, DEFAULT_TOL
from lappoly.utils.report import RunReport

# graphs handed to a worker at a time
_CHUNK_SIZE = 16
# chunks per worker submitted before results are drained
_WINDOW_CHUNKS = 4


class BatchTask(NamedTuple):
    """One graph to check, with everything a worker process needs."""

    graph: Graph
    source: str
    checks: Tuple[str, ...]
    tol: float = DEFAULT_TOL
    sweep: bool = False
    timings: bool = False


def check_graph(task: BatchTask) -> RunReport:
    """
    Run the checks of one batch task.

    Args:
        task: The graph and the checks.

    Returns:
        The run report for the graph.
    """
    context = CheckContext(
        task.graph, tol=task.tol, sweep=task.sweep, timings=task.timings
    )
    return RunReport(
        graph=describe(task.graph, task.source),
        checks=run_checks(context, task.checks),
    )


def _all_n_graphs(n: int) -> Iterator[Tuple[Graph, str]]:
    for mask, graph in enumerate(all_graphs(n)):
        yield graph, f"all-n:{n}:{mask}"


def _random_graphs(values: Dict[str, Any]) -> Iterator[Tuple[Graph, str]]:
    n, p, seed = values["n"], values["p"], values["seed"]
    for i in range(values["count"]):
        yield random_graph(n, p, seed + i), f"random:n={n},p={p},seed={seed + i}"


def run_batch(tasks: Iterable[BatchTask], jobs: int = 1) -> Iterator[RunReport]:
    """
    Check every task, in input order.

    With several jobs the tasks are read in windows of a few chunks per worker,
    so a long task stream is never materialized at once.

    Args:
        tasks: The tasks.
        jobs: The number of worker processes; 1 runs in this process.

    Yields:
        One report per task, in the order of the tasks.
    """
    if jobs == 1:
        yield from map(check_graph, tasks)
        return
    window = jobs * _CHUNK_SIZE * _WINDOW_CHUNKS
    pending = iter(tasks)
    with ProcessPoolExecutor(max_workers=jobs) as executor:
        while True:
            batch = list(itertools.islice(pending, window))
            if not batch:
                return
            yield from executor.map(check_graph, batch, chunksize=_CHUNK_SIZE)


def _row(report: RunReport) -> Dict[str, Any]:
    return {
        "graph6": report.graph["graph6"],
        "n": report.graph["n"],
        "m": report.graph["m"],
        "passed": report.passed,
        "skipped": ";".join(check.name for check in report.checks if check.skipped),
        "failed": ";".join(check.name for check in report.failures),
    }


@click.command(name="batch")
@click.option(
    "--all-n",
    type=int,
    help=f"Check every labeled graph on this many vertices (at most {ALL_N_LIMIT}).",
)
@click.option(
    "--random",
    "random_spec",
    type=str,
    help="Check random graphs G(n, p), as n=..,p=..,count=..,seed=..",
)
@click.option(
    "--checks",
    default="all",
    show_default=True,
    type=str,
    help="Comma-separated checks to run on every graph.",
)
@click.option(
    "--sweep-subsets",
    is_flag=True,
    help="Whether or not to sweep every vertex subset in the subset-indexed checks.",
)
@click.option(
    "--jobs",
    default=1,
    show_default=True,
    type=click.IntRange(min=1),
    help="The number of worker processes.",
)
@tol_option
@timings_option
@format_option
@verbose_option
def batch(
    all_n: Optional[int],
    random_spec: Optional[str],
    checks: str,
    sweep_subsets: bool,
    jobs: int,
    tol: float,
    timings: bool,
    output_format: str,
    verbose: int = 0,
) -> None:
    """
    Run checks on many graphs and print a summary.

    The graphs are every labeled graph of a given order (one per edge subset of
    the complete graph) or a seeded stream of random graphs. One report is
    printed per graph, in input order.
    \f

    Args:
        all_n: The order for the exhaustive sweep.
        random_spec: The random graph specification.
        checks: The checks to run.
        sweep_subsets: Whether or not to sweep vertex subsets.
        jobs: The number of worker processes.
        tol: The tolerance for comparing roots.
        timings: Whether or not to record timings.
        output_format: The output format.
        verbose: Whether or not to print more verbose information.

    Raises:
        BadParameter: If the scope is missing, doubled or too large.
        VerificationFailed: If a check fails on any graph.
    """  # noqa: D301
    check_tol(tol)
    if (all_n is None) == (random_spec is None):
        raise BadParameter("Give exactly one of --all-n, --random.")
    names = tuple(expand_names(name.strip() for name in checks.split(",")))
    graphs: Iterator[Tuple[Graph, str]]
    if all_n is not None:
        if not 0 <= all_n <= ALL_N_LIMIT:
            raise BadParameter(f"--all-n must lie in [0, {ALL_N_LIMIT}], got {all_n}.")
        graphs, unit = _all_n_graphs(all_n), "edge-subsets"
    else:
        assert random_spec is not None
        values = parse_random(random_spec, ("n", "p", "count", "seed"))
        graphs, unit = _random_graphs(values), "graphs"

    tasks = (
        BatchTask(graph, source, names, tol, sweep_subsets, timings)
        for graph, source in graphs
    )
    rows: List[Dict[str, Any]] = []
    total = passed = 0
    first_failure: Optional[RunReport] = None
    for report in run_batch(tasks, jobs):
        total += 1
        passed += report.passed
        if not report.passed and first_failure is None:
            first_failure = report
        echo_progress(
            verbose,
            1,
            f"{report.graph['source']}: {'ok' if report.passed else 'FAILED'}",
        )
        if output_format == "json":
            click.echo(report.to_json())
        else:
            rows.append(_row(report))

    summary = f"passed {passed}/{total} {unit}"
    if output_format == "json":
        click.echo(
            json.dumps(
                {"summary": summary, "passed": passed, "total": total},
                sort_keys=True,
                separators=(",", ":"),
            )
        )
    else:
        echo_rows(rows, output_format)
        click.echo(summary, err=output_format == "csv")
    if first_failure is not None:
        raise VerificationFailed(
            f"{total - passed} of {total} graphs failed; first counterexample "
            f"{first_failure.graph['graph6']!r}.",
            {
                "graph6": first_failure.graph["graph6"],
                "failed": [check.name for check in first_failure.failures],
            },
        )
