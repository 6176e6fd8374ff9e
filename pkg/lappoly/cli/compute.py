"""Compute one polynomial of a graph, and optionally its roots."""

from __future__ import annotations

from typing import IO, Callable, Dict, Optional, Tuple

import click

from lappoly.cli.inputs import (
    describe,
    echo_progress,
    echo_rows,
    format_option,
    graph_options,
    load_graph,
    parse_vertex_set,
    verbose_option,
)
from lappoly.exceptions import BadParameter
from lappoly.graphs import Graph
from lappoly.matchings import (
    laplacian_matching_polynomial,
    matching_polynomial,
    principal_beta,
)
from lappoly.polynomials import DensePoly, RootList, real_roots
from lappoly.spectra import adjacency, char_poly, laplacian, signless_laplacian
from lappoly.utils.report import RunReport
from lappoly.utils.types import PolyOutput
from lappoly.weighted import WeightedGraph, parse_weighted_edge_list, weighted_beta

_PLAIN: Dict[str, Callable[[Graph], DensePoly]] = {
    "alpha": matching_polynomial,
    "beta": laplacian_matching_polynomial,
    "phiA": lambda graph: char_poly(adjacency(graph)),
    "phiL": lambda graph: char_poly(laplacian(graph)),
    "phiQ": lambda graph: char_poly(signless_laplacian(graph)),
}

POLYS = ("alpha", "beta", "beta_principal", "phiA", "phiL", "phiQ", "beta_weighted")


def _load(
    g6: Optional[str],
    edges: Optional[IO[str]],
    family: Optional[str],
    random_spec: Optional[str],
    weighted_edges: Optional[IO[str]],
) -> Tuple[Graph, str, Optional[WeightedGraph]]:
    if weighted_edges is None:
        graph, source = load_graph(g6, edges, family, random_spec)
        return graph, source, None
    if any(value is not None for value in (g6, edges, family, random_spec)):
        raise BadParameter("--weighted-edges cannot be combined with another graph.")
    weighted = parse_weighted_edge_list(weighted_edges.read())
    return weighted.graph, f"weighted-edges:{weighted_edges.name}", weighted


@click.command(name="compute")
@graph_options
@click.option(
    "--weighted-edges",
    type=click.File("r"),
    help="A file with the vertex count, then one `u v weight` line per edge.",
)
@click.option(
    "--poly",
    required=True,
    type=click.Choice(POLYS),
    help="The polynomial to compute.",
)
@click.option(
    "--subset",
    type=str,
    help="The vertex set H for beta_principal, e.g. 0,2,3.",
)
@click.option(
    "--roots",
    "with_roots",
    is_flag=True,
    help="Whether or not to also compute the certified real roots.",
)
@format_option
@verbose_option
def compute(
    g6: Optional[str],
    edges: Optional[IO[str]],
    family: Optional[str],
    random_spec: Optional[str],
    weighted_edges: Optional[IO[str]],
    poly: str,
    subset: Optional[str],
    with_roots: bool,
    output_format: str,
    verbose: int = 0,
) -> None:
    """
    Compute one polynomial of a graph.

    The polynomial is alpha, beta, a principal or edge-weighted beta, or the
    characteristic polynomial of A, L or Q. Coefficients are exact, highest power
    first.
    \f

    Args:
        g6: The graph as a graph6 string.
        edges: An edge-list file.
        family: A named family member.
        random_spec: A random graph specification.
        weighted_edges: A weighted edge-list file.
        poly: The polynomial to compute.
        subset: The vertex set H for beta_principal.
        with_roots: Whether or not to also compute the roots.
        output_format: The output format.
        verbose: Whether or not to print more verbose information.

    Raises:
        BadParameter: If the options needed by the polynomial are missing.
    """  # noqa: D301
    graph, source, weighted = _load(g6, edges, family, random_spec, weighted_edges)
    echo_progress(verbose, 1, f"Loaded n={graph.n}, m={graph.num_edges} ({source})")

    result: DensePoly
    if poly == "beta_principal":
        if subset is None:
            raise BadParameter("beta_principal needs --subset.")
        result = principal_beta(graph, parse_vertex_set(subset))
    elif poly == "beta_weighted":
        result = weighted_beta(weighted or WeightedGraph.uniform(graph))
    else:
        if subset is not None:
            raise BadParameter(f"--subset only applies to beta_principal, not {poly}.")
        result = _PLAIN[poly](graph)

    output: PolyOutput = {"coefficients": result.to_strings()}
    roots: Optional[RootList] = None
    if with_roots:
        roots = real_roots(result)
        output["roots"] = roots.to_dict()
    echo_progress(verbose, 1, f"{poly} = {result}")

    report = RunReport(graph=describe(graph, source), outputs={poly: output})
    if output_format == "json":
        click.echo(report.to_json())
        return
    row = {"poly": poly, "coefficients": " ".join(output["coefficients"])}
    if roots is not None:
        row["roots"] = " ".join(f"{root:.10g}" for root in roots.expanded())
    echo_rows([row], output_format)
