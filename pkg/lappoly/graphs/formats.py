"""Reading and writing graphs: graph6 and the plain edge-list format."""

from __future__ import annotations

from typing import List, Tuple

import networkx as nx

from lappoly.exceptions import (
    BadParameter,
    DuplicateEdge,
    EndpointOutOfRange,
    LoopEdge,
    MalformedEdgeList,
    MalformedGraph6,
)
from lappoly.graphs.graph import Edge, Graph
from lappoly.utils.config import MAX_GRAPH6_ORDER

_GRAPH6_HEADER = ">>graph6<<"


def parse_graph6(text: str) -> Graph:
    """
    Decode a single-line graph6 string.

    Args:
        text: The graph6 text, optionally with the `>>graph6<<` header.

    Returns:
        The decoded graph.

    Raises:
        MalformedGraph6: If the text is empty, spans several lines, contains bytes
            outside the printable graph6 range, has the wrong length, or encodes
            more than MAX_GRAPH6_ORDER vertices.
    """
    line = text.strip()
    if line.startswith(_GRAPH6_HEADER):
        body = line[len(_GRAPH6_HEADER) :]
    else:
        body = line
    if not body:
        raise MalformedGraph6("Empty graph6 string.")
    if "\n" in body:
        raise MalformedGraph6("graph6 input must be a single line.")
    bad = sorted({ch for ch in body if not 63 <= ord(ch) <= 126})
    if bad:
        raise MalformedGraph6(f"Bytes out of the graph6 range: {bad!r}.")
    # a leading "~" announces the multi-byte order header, n >= 63
    if body.startswith("~"):
        raise MalformedGraph6(
            f"graph6 input exceeds {MAX_GRAPH6_ORDER} vertices.",
            {"max_order": MAX_GRAPH6_ORDER},
        )
    try:
        nx_graph = nx.from_graph6_bytes(body.encode("ascii"))
    except (nx.NetworkXError, ValueError, IndexError) as e:
        raise MalformedGraph6(f"Could not decode {body!r}: {e}") from e
    return Graph.from_networkx(nx_graph)


def emit_graph6(graph: Graph) -> str:
    """
    Encode a graph as graph6, without header or trailing newline.

    Args:
        graph: The graph.

    Returns:
        The graph6 string.

    Raises:
        BadParameter: If the graph has more than MAX_GRAPH6_ORDER vertices.
    """
    if graph.n > MAX_GRAPH6_ORDER:
        raise BadParameter(
            f"Cannot emit graph6 for {graph.n} > {MAX_GRAPH6_ORDER} vertices.",
            {"n": graph.n, "max_order": MAX_GRAPH6_ORDER},
        )
    encoded = nx.to_graph6_bytes(graph.to_networkx(), header=False)
    return encoded.decode("ascii").rstrip("\n")


def _data_lines(text: str) -> List[Tuple[int, str]]:
    lines = []
    for num, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line.startswith("#") or not line:
            continue
        lines.append((num, line))
    return lines


def _parse_vertex_count(lines: List[Tuple[int, str]]) -> int:
    if not lines:
        raise MalformedEdgeList("Missing vertex count line.")
    num, first = lines[0]
    try:
        n = int(first)
    except ValueError as e:
        raise MalformedEdgeList(f"line {num}: expected a vertex count.") from e
    if n < 0:
        raise MalformedEdgeList(f"line {num}: negative vertex count {n}.")
    return n


def _check_edge(num: int, n: int, edge: Edge, seen: set) -> Edge:
    u, v = edge
    if u == v:
        raise LoopEdge(f"line {num}: loop at vertex {u}.")
    for w in (u, v):
        if not 0 <= w < n:
            raise EndpointOutOfRange(f"line {num}: endpoint {w} not in [0, {n}).")
    key = (min(u, v), max(u, v))
    if key in seen:
        raise DuplicateEdge(f"line {num}: edge {u} {v} appears twice.")
    seen.add(key)
    return key


def split_edge_lines(
    text: str, columns: int
) -> Tuple[int, List[Tuple[Edge, List[str]]]]:
    """
    Split an edge-list style text into its vertex count and checked edge lines.

    The first data line holds n; every other data line holds `u v` followed by
    `columns - 2` extra fields. Blank lines and `#` comments are ignored.

    Args:
        text: The text.
        columns: The number of whitespace-separated fields per edge line.

    Returns:
        The vertex count, and for every edge line the normalized edge together with
        its extra fields.

    Raises:
        MalformedEdgeList: If a line has the wrong shape.
    """
    lines = _data_lines(text)
    n = _parse_vertex_count(lines)
    seen: set = set()
    rows = []
    for num, line in lines[1:]:
        fields = line.split()
        if len(fields) != columns:
            raise MalformedEdgeList(
                f"line {num}: expected {columns} fields, got {len(fields)}."
            )
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError as e:
            raise MalformedEdgeList(f"line {num}: endpoints must be integers.") from e
        rows.append((_check_edge(num, n, (u, v), seen), fields[2:]))
    return n, rows


def parse_edge_list(text: str) -> Graph:
    """
    Parse the edge-list format: a line `n`, then one line `u v` per edge.

    Args:
        text: The edge-list text.

    Returns:
        The graph.
    """
    n, rows = split_edge_lines(text, 2)
    return Graph(n, tuple(edge for edge, _ in rows))


def emit_edge_list(graph: Graph) -> str:
    """
    Write a graph in the edge-list format.

    Args:
        graph: The graph.

    Returns:
        The edge-list text, newline terminated.
    """
    lines = [str(graph.n)] + [f"{u} {v}" for u, v in graph.edges]
    return "\n".join(lines) + "\n"
