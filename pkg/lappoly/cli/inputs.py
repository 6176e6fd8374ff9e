"""Options and helpers shared by the lappoly commands."""

from __future__ import annotations

import csv
import io
from typing import (
    IO,
    Any,
    Callable,
    Dict,
    FrozenSet,
    List,
    Optional,
    Sequence,
    Tuple,
    TypeVar,
)

import click
from tabulate import tabulate

from lappoly.exceptions import BadParameter
from lappoly.graphs import (
    Graph,
    emit_graph6,
    generate_family,
    parse_edge_list,
    parse_graph6,
    random_graph,
)
from lappoly.utils.config import DEFAULT_TOL, MAX_GRAPH6_ORDER, TOL_ENV_VAR
from lappoly.utils.types import GraphDescriptor

F = TypeVar("F", bound=Callable[..., Any])

FORMATS = ("json", "csv", "table")


def parse_key_values(text: str, keys: Sequence[str], option: str) -> Dict[str, str]:
    """
    Parse `key=value` pairs separated by commas.

    Args:
        text: The option value, e.g. `n=9,p=0.4,seed=7`.
        keys: The keys that must all be present, and no others.
        option: The option name, for error messages.

    Returns:
        The values as strings, keyed by name.

    Raises:
        BadParameter: If a pair is malformed, a key is unknown, repeated or
            missing.
    """
    values: Dict[str, str] = {}
    for pair in filter(None, (p.strip() for p in text.split(","))):
        key, sep, value = pair.partition("=")
        if not sep or key not in keys:
            raise BadParameter(
                f"{option}: expected {','.join(k + '=...' for k in keys)}, "
                f"got {pair!r}."
            )
        if key in values:
            raise BadParameter(f"{option}: {key} given twice.")
        values[key] = value
    missing = [key for key in keys if key not in values]
    if missing:
        raise BadParameter(f"{option}: missing {', '.join(missing)}.")
    return values


def _typed(value: str, kind: Callable[[str], Any], option: str, key: str) -> Any:
    try:
        return kind(value)
    except ValueError as e:
        raise BadParameter(f"{option}: bad value {value!r} for {key}.") from e


def parse_random(text: str, keys: Sequence[str] = ("n", "p", "seed")) -> Dict[str, Any]:
    """
    Parse a `--random` specification.

    Args:
        text: The option value.
        keys: The keys required; `n`, `count` and `seed` are integers and `p` a
            probability.

    Returns:
        The typed values.

    Raises:
        BadParameter: If a value does not parse or is out of range.
    """
    raw = parse_key_values(text, keys, "--random")
    values: Dict[str, Any] = {
        key: _typed(value, float if key == "p" else int, "--random", key)
        for key, value in raw.items()
    }
    if values.get("n", 0) < 0 or values.get("count", 0) < 0:
        raise BadParameter("--random: n and count must be >= 0.")
    if not 0.0 <= values.get("p", 0.0) <= 1.0:
        raise BadParameter(f"--random: p must lie in [0, 1], got {values['p']}.")
    return values


def parse_family(text: str) -> Graph:
    """
    Build a graph from `name:params`, e.g. `cycle:3` or `complete_bipartite:2,3`.

    Args:
        text: The option value.

    Returns:
        The family member.

    Raises:
        BadParameter: If the text does not parse.
    """
    name, _, params = text.partition(":")
    sizes = [
        _typed(p.strip(), int, "--family", name) for p in params.split(",") if p.strip()
    ]
    return generate_family(name.strip(), sizes)


def parse_vertex_set(text: str) -> FrozenSet[int]:
    """
    Parse a comma-separated vertex set; the empty string is the empty set.

    Args:
        text: The option value, e.g. `0,2,3`.

    Returns:
        The vertices.
    """
    return frozenset(
        _typed(v.strip(), int, "--subset", "vertex")
        for v in text.split(",")
        if v.strip()
    )


def load_graph(
    g6: Optional[str],
    edges: Optional[IO[str]],
    family: Optional[str],
    random_spec: Optional[str],
) -> Tuple[Graph, str]:
    """
    Build the input graph from exactly one of the four sources.

    Args:
        g6: A graph6 string.
        edges: An open edge-list file.
        family: A `name:params` family member.
        random_spec: A `n=..,p=..,seed=..` random graph.

    Returns:
        The graph and a description of where it came from.

    Raises:
        BadParameter: If not exactly one source is given.
    """
    given = [
        name
        for name, value in (
            ("--g6", g6),
            ("--edges", edges),
            ("--family", family),
            ("--random", random_spec),
        )
        if value is not None
    ]
    if len(given) != 1:
        raise BadParameter(
            "Give exactly one of --g6, --edges, --family, --random"
            + (f"; got {', '.join(given)}." if given else ".")
        )
    if g6 is not None:
        return parse_graph6(g6), f"g6:{g6}"
    if edges is not None:
        return parse_edge_list(edges.read()), f"edges:{edges.name}"
    if family is not None:
        return parse_family(family), f"family:{family}"
    assert random_spec is not None
    values = parse_random(random_spec)
    return (
        random_graph(values["n"], values["p"], values["seed"]),
        f"random:{random_spec}",
    )


def describe(graph: Graph, source: str) -> GraphDescriptor:
    """
    The graph descriptor recorded in a report.

    The graph6 field is None for graphs too large for the single-byte header.

    Args:
        graph: The graph.
        source: Where it came from.

    Returns:
        The descriptor.
    """
    return {
        "source": source,
        "graph6": emit_graph6(graph) if graph.n <= MAX_GRAPH6_ORDER else None,
        "n": graph.n,
        "m": graph.num_edges,
    }


def graph_options(func: F) -> F:
    """
    Add the four graph-source options to a command.

    Args:
        func: The command callback.

    Returns:
        The decorated callback.
    """
    options = [
        click.option("--g6", type=str, help="The graph as a graph6 string."),
        click.option(
            "--edges",
            type=click.File("r"),
            help="A file with the vertex count, then one `u v` line per edge.",
        ),
        click.option(
            "--family",
            type=str,
            help="A named family member: path:n, cycle:n, star:k, complete:n or "
            "complete_bipartite:a,b.",
        ),
        click.option(
            "--random",
            "random_spec",
            type=str,
            help="A random graph G(n, p), as n=..,p=..,seed=..",
        ),
    ]
    for option in reversed(options):
        func = option(func)
    return func


tol_option = click.option(
    "--tol",
    type=float,
    envvar=TOL_ENV_VAR,
    default=DEFAULT_TOL,
    show_default=True,
    help=f"The tolerance for comparing roots. Also read from ${TOL_ENV_VAR}.",
)

verbose_option = click.option(
    "-v",
    "--verbose",
    count=True,
    help="Whether or not to print more verbose information. Repeat for more.",
)

timings_option = click.option(
    "--timings",
    is_flag=True,
    help="Whether or not to record the time each check takes.",
)

format_option = click.option(
    "--format",
    "output_format",
    type=click.Choice(FORMATS),
    default="json",
    show_default=True,
    help="The output format: JSON lines, CSV or a table.",
)


def check_tol(tol: float) -> None:
    """
    Reject a tolerance that is not positive.

    Args:
        tol: The tolerance.

    Raises:
        BadParameter: If tol <= 0.
    """
    if not tol > 0:
        raise BadParameter(f"--tol must be positive, got {tol}.")


def echo_progress(verbose: int, level: int, message: str) -> None:
    """
    Print a diagnostic to stderr when the verbosity is at least `level`.

    Args:
        verbose: The `-v` count.
        level: The verbosity the message needs.
        message: The message.
    """
    if verbose >= level:
        click.echo(message, err=True)


def echo_rows(rows: List[Dict[str, Any]], output_format: str) -> None:
    """
    Print rows as CSV or as a table.

    Args:
        rows: One dictionary per row, all with the same keys.
        output_format: `csv` or `table`.
    """
    if output_format == "table":
        click.echo(tabulate(rows, headers="keys", tablefmt="presto"))
        return
    if not rows:
        return
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=list(rows[0]), lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    click.echo(buffer.getvalue(), nl=False)
