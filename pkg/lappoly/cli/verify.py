"""Verify identities, interlacing, majorization and bounds on one graph."""

from __future__ import annotations

from typing import IO, Optional, Tuple

import click

from lappoly.cli.checks import CHECK_NAMES, CheckContext, run_checks
from lappoly.cli.inputs import (
    check_tol,
    describe,
    echo_progress,
    echo_rows,
    format_option,
    graph_options,
    load_graph,
    parse_vertex_set,
    timings_option,
    tol_option,
    verbose_option,
)
from lappoly.exceptions import VerificationFailed
from lappoly.utils.report import RunReport


@click.command(name="verify")
@graph_options
@click.option(
    "--identity",
    "identities",
    multiple=True,
    default=("all",),
    show_default=True,
    type=click.Choice(CHECK_NAMES + ("all",)),
    help="The check to run. May be repeated.",
)
@click.option(
    "--subset",
    type=str,
    help="A single vertex set instead of the subset sweep: W for subdivision and "
    "spectra, H for interlacing and zero-sum.",
)
@click.option(
    "--vertex",
    type=int,
    help="A single vertex v for the interlacing checks instead of every vertex.",
)
@tol_option
@timings_option
@format_option
@verbose_option
def verify(
    g6: Optional[str],
    edges: Optional[IO[str]],
    family: Optional[str],
    random_spec: Optional[str],
    identities: Tuple[str, ...],
    subset: Optional[str],
    vertex: Optional[int],
    tol: float,
    timings: bool,
    output_format: str,
    verbose: int = 0,
) -> None:
    """
    Run checks on one graph and print the report.

    Checks whose preconditions do not hold are reported as skipped. Without
    --subset, checks indexed by a vertex set sweep every subset of small graphs.
    \f

    Args:
        g6: The graph as a graph6 string.
        edges: An edge-list file.
        family: A named family member.
        random_spec: A random graph specification.
        identities: The checks to run.
        subset: A single vertex set.
        vertex: A single vertex.
        tol: The tolerance for comparing roots.
        timings: Whether or not to record timings.
        output_format: The output format.
        verbose: Whether or not to print more verbose information.

    Raises:
        VerificationFailed: If any check fails.
    """  # noqa: D301
    check_tol(tol)
    graph, source = load_graph(g6, edges, family, random_spec)
    echo_progress(verbose, 1, f"Loaded n={graph.n}, m={graph.num_edges} ({source})")
    context = CheckContext(
        graph,
        tol=tol,
        subset=parse_vertex_set(subset) if subset is not None else None,
        vertex=vertex,
        timings=timings,
    )
    if context.subset is not None:
        graph.check_vertices(context.subset)
    if vertex is not None:
        graph.check_vertices([vertex])

    report = RunReport(graph=describe(graph, source))
    report.checks = run_checks(context, identities)
    for check in report.checks:
        status = "skipped" if check.skipped else "ok" if check.passed else "FAILED"
        echo_progress(verbose, 2, f"{check.name}: {status}")

    if output_format == "json":
        click.echo(report.to_json())
    else:
        echo_rows(
            [
                {
                    "check": check.name,
                    "passed": check.passed,
                    "skipped": check.skipped,
                }
                for check in report.checks
            ],
            output_format,
        )
    if not report.passed:
        raise VerificationFailed(
            f"{len(report.failures)} check(s) failed on {report.graph['graph6']!r}.",
            {
                "graph6": report.graph["graph6"],
                "failed": [check.name for check in report.failures],
            },
        )
