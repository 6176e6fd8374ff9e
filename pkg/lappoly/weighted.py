"""The edge-weighted Laplacian matching polynomial over positive rational weights."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Mapping, Type, Union

from lappoly.exceptions import BadParameter, MalformedEdgeList, NonpositiveWeight
from lappoly.graphs import Edge, Graph, split_edge_lines
from lappoly.matchings import iter_matchings
from lappoly.polynomials import RatPoly

Weight = Union[int, Fraction, str]


@dataclass(frozen=True)
class WeightedGraph:
    """A graph with a positive rational weight on every edge."""

    graph: Graph
    weights: Mapping[Edge, Fraction] = field(default_factory=dict)

    def __post_init__(self: WeightedGraph) -> None:
        """
        Normalize the weights and check that every edge has a positive one.

        Raises:
            BadParameter: If a weight is missing or given for a non-edge.
            NonpositiveWeight: If a weight is zero or negative.
        """
        normalized: Dict[Edge, Fraction] = {}
        for (u, v), raw in self.weights.items():
            edge = (min(u, v), max(u, v))
            if not self.graph.has_edge(*edge):
                raise BadParameter(f"Weight given for non-edge {edge}.")
            weight = Fraction(raw)
            if weight <= 0:
                raise NonpositiveWeight(f"Edge {edge} has weight {weight} <= 0.")
            normalized[edge] = weight
        missing = [edge for edge in self.graph.edges if edge not in normalized]
        if missing:
            raise BadParameter(f"Edges {missing} have no weight.")
        object.__setattr__(self, "weights", normalized)

    @classmethod
    def uniform(
        cls: Type[WeightedGraph], graph: Graph, weight: Weight = 1
    ) -> WeightedGraph:
        """
        Give every edge the same weight.

        Args:
            graph: The graph.
            weight: The common weight.

        Returns:
            The weighted graph.
        """
        return cls(graph, {edge: Fraction(weight) for edge in graph.edges})

    def weight(self: WeightedGraph, u: int, v: int) -> Fraction:
        """
        The weight w(e) of the edge {u, v}.

        Args:
            u: One endpoint.
            v: The other endpoint.

        Returns:
            w(e).
        """
        return self.weights[(min(u, v), max(u, v))]


def vertex_weight(weighted: WeightedGraph, v: int) -> Fraction:
    """
    The vertex weight w(v), the sum of the weights of the edges at v.

    Args:
        weighted: The weighted graph.
        v: The vertex.

    Returns:
        w(v).
    """
    return sum(
        (weighted.weight(v, u) for u in weighted.graph.neighbors[v]), Fraction(0)
    )


def weighted_beta(weighted: WeightedGraph) -> RatPoly:
    """
    Compute β(G, w, x) = Σ_M (-1)^|M| Π_{e in M} w(e)² Π_{v unmatched} (x - w(v)).

    With every weight 1 this is β(G, x).

    Args:
        weighted: The weighted graph.

    Returns:
        β(G, w, x) with exact rational coefficients.
    """
    graph = weighted.graph
    factors = [RatPoly.linear_root(vertex_weight(weighted, v)) for v in range(graph.n)]
    total = RatPoly()
    for matching in iter_matchings(graph):
        coefficient = Fraction(-1 if len(matching) % 2 else 1)
        for u, v in matching:
            coefficient *= weighted.weight(u, v) ** 2
        term = RatPoly.constant(coefficient)
        matched = {v for edge in matching for v in edge}
        for v in range(graph.n):
            if v not in matched:
                term = term * factors[v]
        total = total + term
    return RatPoly.from_poly(total)


def parse_weighted_edge_list(text: str) -> WeightedGraph:
    """
    Parse a weighted edge list: a line `n`, then one line `u v p/q` per edge.

    Args:
        text: The weighted edge-list text.

    Returns:
        The weighted graph.

    Raises:
        MalformedEdgeList: If a weight is not a rational number.
    """
    n, rows = split_edge_lines(text, 3)
    weights: Dict[Edge, Fraction] = {}
    for edge, (raw,) in rows:
        try:
            weights[edge] = Fraction(raw)
        except (ValueError, ZeroDivisionError) as e:
            raise MalformedEdgeList(f"Edge {edge}: bad weight {raw!r}.") from e
    return WeightedGraph(Graph(n, tuple(weights)), weights)


def emit_weighted_edge_list(weighted: WeightedGraph) -> str:
    """
    Write a weighted graph in the weighted edge-list format.

    Args:
        weighted: The weighted graph.

    Returns:
        The text, newline terminated.
    """
    lines = [str(weighted.graph.n)] + [
        f"{u} {v} {weighted.weight(u, v)}" for u, v in weighted.graph.edges
    ]
    return "\n".join(lines) + "\n"
