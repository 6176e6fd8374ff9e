"""The simple undirected graph model and the constructions built on it."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Any, Dict, FrozenSet, Iterable, Mapping, Tuple, Type

import networkx as nx

from lappoly.exceptions import (
    DuplicateEdge,
    EndpointOutOfRange,
    LoopEdge,
    VertexOutOfRange,
)

Edge = Tuple[int, int]


def _normalize_edges(n: int, edges: Iterable[Edge]) -> Tuple[Edge, ...]:
    seen = set()
    for raw_u, raw_v in edges:
        u, v = int(raw_u), int(raw_v)
        if u == v:
            raise LoopEdge(f"Loop at vertex {u}.")
        for w in (u, v):
            if not 0 <= w < n:
                raise EndpointOutOfRange(f"Endpoint {w} is not in [0, {n}).")
        edge = (min(u, v), max(u, v))
        if edge in seen:
            raise DuplicateEdge(f"Edge {edge[0]} {edge[1]} appears twice.")
        seen.add(edge)
    return tuple(sorted(seen))


@dataclass(frozen=True)
class Graph:
    """
    A finite simple undirected graph on the vertices 0..n-1.

    Edges are stored as a sorted tuple of pairs (u, v) with u < v. Construction
    rejects loops, duplicate edges and endpoints outside [0, n).
    """

    n: int
    edges: Tuple[Edge, ...] = ()

    def __post_init__(self: Graph) -> None:
        """Normalize and validate the edge set."""
        if self.n < 0:
            raise EndpointOutOfRange(f"Vertex count {self.n} is negative.")
        object.__setattr__(self, "edges", _normalize_edges(self.n, self.edges))

    @classmethod
    def from_networkx(cls: Type[Graph], nx_graph: Any) -> Graph:
        """
        Convert a networkx graph, relabeling its nodes 0..n-1 in sorted order.

        Args:
            nx_graph: The networkx graph.

        Returns:
            The equivalent Graph.
        """
        index = {node: i for i, node in enumerate(sorted(nx_graph.nodes()))}
        edges = tuple((index[u], index[v]) for u, v in nx_graph.edges())
        return cls(len(index), edges)

    def to_networkx(self: Graph) -> Any:
        """
        Convert the graph to a networkx graph with the same vertex labels.

        Returns:
            A networkx.Graph.
        """
        nx_graph = nx.Graph()
        nx_graph.add_nodes_from(range(self.n))
        nx_graph.add_edges_from(self.edges)
        return nx_graph

    @property
    def num_edges(self: Graph) -> int:
        """
        The number of edges, |E(G)|.

        Returns:
            The edge count.
        """
        return len(self.edges)

    @cached_property
    def neighbors(self: Graph) -> Tuple[FrozenSet[int], ...]:
        """
        The neighborhood of every vertex, indexed by vertex.

        Returns:
            One frozenset of neighbors per vertex.
        """
        adjacency: Tuple[set, ...] = tuple(set() for _ in range(self.n))
        for u, v in self.edges:
            adjacency[u].add(v)
            adjacency[v].add(u)
        return tuple(frozenset(nbrs) for nbrs in adjacency)

    @cached_property
    def degrees(self: Graph) -> Tuple[int, ...]:
        """
        The degree of every vertex, indexed by vertex.

        Returns:
            The degrees d_G(0), ..., d_G(n-1).
        """
        return tuple(len(nbrs) for nbrs in self.neighbors)

    @cached_property
    def edge_index(self: Graph) -> Dict[Edge, int]:
        """
        The position of every edge in `self.edges`.

        Returns:
            A map from edge to index.
        """
        return {edge: i for i, edge in enumerate(self.edges)}

    def degree(self: Graph, v: int) -> int:
        """
        Get the degree of a vertex.

        Args:
            v: The vertex.

        Returns:
            d_G(v).
        """
        return self.degrees[v]

    def has_edge(self: Graph, u: int, v: int) -> bool:
        """
        Whether u and v are adjacent.

        Args:
            u: One endpoint.
            v: The other endpoint.

        Returns:
            True if {u, v} is an edge.
        """
        return (min(u, v), max(u, v)) in self.edge_index

    @property
    def min_degree(self: Graph) -> int:
        """
        The minimum degree δ(G); 0 for the null graph.

        Returns:
            δ(G).
        """
        return min(self.degrees, default=0)

    @property
    def max_degree(self: Graph) -> int:
        """
        The maximum degree Δ(G); 0 for the null graph.

        Returns:
            Δ(G).
        """
        return max(self.degrees, default=0)

    def check_vertices(self: Graph, vertices: Iterable[int]) -> FrozenSet[int]:
        """
        Validate a vertex set against the graph.

        Args:
            vertices: The vertex set.

        Returns:
            The vertex set as a frozenset.

        Raises:
            VertexOutOfRange: If some vertex is not in [0, n).
        """
        vertex_set = frozenset(vertices)
        bad = sorted(v for v in vertex_set if not 0 <= v < self.n)
        if bad:
            raise VertexOutOfRange(f"Vertices {bad} are not in [0, {self.n}).")
        return vertex_set

    @cached_property
    def omega(self: Graph) -> int:
        """
        The number of connected components ω(G), isolated vertices included.

        Returns:
            ω(G).
        """
        return nx.number_connected_components(self.to_networkx()) if self.n else 0

    def is_connected(self: Graph) -> bool:
        """
        Whether the graph is connected. The null graph is not.

        Returns:
            True if there is exactly one component.
        """
        return self.omega == 1

    def is_forest(self: Graph) -> bool:
        """
        Whether the graph has no cycles.

        Returns:
            True if |E| = |V| - ω.
        """
        return self.num_edges == self.n - self.omega

    def is_tree(self: Graph) -> bool:
        """
        Whether the graph is a tree.

        Returns:
            True if connected and acyclic.
        """
        return self.is_connected() and self.num_edges == self.n - 1

    def is_star(self: Graph) -> bool:
        """
        Whether the graph is a star K_{1,k} with k >= 1.

        Returns:
            True if G is a tree with a vertex adjacent to all others.
        """
        return self.n >= 2 and self.is_tree() and self.max_degree == self.n - 1

    def is_regular(self: Graph) -> bool:
        """
        Whether every vertex has the same degree.

        Returns:
            True if δ = Δ.
        """
        return self.min_degree == self.max_degree

    def is_bipartite_semiregular(self: Graph) -> bool:
        """
        Whether G is connected bipartite and each side of the bipartition is regular.

        Returns:
            True if G is bipartite semiregular.
        """
        if not self.is_connected():
            return False
        nx_graph = self.to_networkx()
        if not nx.is_bipartite(nx_graph):
            return False
        left, right = nx.bipartite.sets(nx_graph)
        return all(
            len({self.degrees[v] for v in side}) <= 1 for side in (left, right)
        )


@dataclass(frozen=True)
class SubdivisionGraph:
    """
    The subdivision graph S_G together with the edge <-> new-vertex correspondence.

    Original vertices keep their labels 0..n-1; the vertex inserted into the i-th
    edge of G is labeled n + i.
    """

    graph: Graph
    base: Graph
    edge_vertex_of: Mapping[Edge, int]
    original_edge_of: Mapping[int, Edge]

    def original_edge(self: SubdivisionGraph, f: Edge) -> Edge:
        """
        Get e(f), the edge of G that the edge f of S_G belongs to.

        Args:
            f: An edge of S_G.

        Returns:
            The original edge of G.
        """
        return self.original_edge_of[max(f)]


class ComponentKind(str, Enum):
    """Classification of a connected component by its cycle rank."""

    TREE = "tree"
    UNICYCLIC = "unicyclic"
    OTHER = "other"


@dataclass(frozen=True)
class ComponentReport:
    """The connected components of a graph and their classification."""

    components: Tuple[FrozenSet[int], ...]
    kinds: Tuple[ComponentKind, ...]
    edge_counts: Tuple[int, ...]

    @property
    def counts(self: ComponentReport) -> Dict[ComponentKind, int]:
        """
        The number of components of each kind.

        Returns:
            A count for every ComponentKind.
        """
        return {kind: self.kinds.count(kind) for kind in ComponentKind}


@dataclass(frozen=True)
class TwoRegularSubgraph:
    """A nonempty disjoint union of cycles, given by its edge set."""

    edge_set: Tuple[Edge, ...]
    omega: int

    @property
    def vertices(self: TwoRegularSubgraph) -> FrozenSet[int]:
        """
        The vertices covered by the cycles, V(C).

        Returns:
            The covered vertex set.
        """
        return frozenset(v for edge in self.edge_set for v in edge)


@dataclass(frozen=True)
class InducedSubgraph:
    """An induced subgraph G - W relabeled 0..k-1, with the map back to G."""

    graph: Graph
    original_vertex_of: Tuple[int, ...]

    @property
    def new_vertex_of(self: InducedSubgraph) -> Dict[int, int]:
        """
        Map from a surviving vertex of G to its label in the subgraph.

        Returns:
            The inverse of `original_vertex_of`.
        """
        return {old: new for new, old in enumerate(self.original_vertex_of)}


def subdivision(graph: Graph) -> SubdivisionGraph:
    """
    Insert a new degree-2 vertex into every edge of the graph.

    Args:
        graph: The graph G.

    Returns:
        S_G with |V| = n + m and |E| = 2m.
    """
    n = graph.n
    edge_vertex_of = {edge: n + i for i, edge in enumerate(graph.edges)}
    sub_edges = []
    for (u, v), e in edge_vertex_of.items():
        sub_edges.append((u, e))
        sub_edges.append((v, e))
    return SubdivisionGraph(
        graph=Graph(n + graph.num_edges, tuple(sub_edges)),
        base=graph,
        edge_vertex_of=edge_vertex_of,
        original_edge_of={e: edge for edge, e in edge_vertex_of.items()},
    )


def induced_delete(graph: Graph, deleted: Iterable[int]) -> InducedSubgraph:
    """
    Delete a vertex set, keeping the induced subgraph on the rest.

    Args:
        graph: The graph G.
        deleted: The vertex set W to delete.

    Returns:
        G - W, relabeled in increasing order of the surviving vertices.
    """
    removed = graph.check_vertices(deleted)
    kept = tuple(v for v in range(graph.n) if v not in removed)
    index = {old: new for new, old in enumerate(kept)}
    edges = tuple(
        (index[u], index[v])
        for u, v in graph.edges
        if u not in removed and v not in removed
    )
    return InducedSubgraph(Graph(len(kept), edges), kept)


def components(graph: Graph) -> ComponentReport:
    """
    Split the graph into connected components and classify each one.

    Isolated vertices are components of their own (trees on one vertex).

    Args:
        graph: The graph G.

    Returns:
        The components ordered by smallest vertex, with their kinds.
    """
    parts = sorted(
        (frozenset(c) for c in nx.connected_components(graph.to_networkx())),
        key=min,
    )
    owner = {v: i for i, part in enumerate(parts) for v in part}
    edge_counts = [0] * len(parts)
    for u, _ in graph.edges:
        edge_counts[owner[u]] += 1

    kinds = []
    for part, num_edges in zip(parts, edge_counts):
        if num_edges == len(part) - 1:
            kinds.append(ComponentKind.TREE)
        elif num_edges == len(part):
            kinds.append(ComponentKind.UNICYCLIC)
        else:
            kinds.append(ComponentKind.OTHER)
    return ComponentReport(tuple(parts), tuple(kinds), tuple(edge_counts))


def degree_sequence(graph: Graph) -> Tuple[int, ...]:
    """
    Get the degree sequence of the graph.

    Args:
        graph: The graph G.

    Returns:
        The degrees sorted nonincreasing.
    """
    return tuple(sorted(graph.degrees, reverse=True))


def edge_induced(n: int, edge_set: Iterable[Edge]) -> Graph:
    """
    Build the edge-induced subgraph on the vertices the edges touch.

    Args:
        n: The order of the host graph (used only for validation).
        edge_set: The edges.

    Returns:
        The edge-induced subgraph, relabeled in increasing vertex order.
    """
    edges = tuple(edge_set)
    Graph(n, edges)  # validates against the host order
    touched = sorted({v for edge in edges for v in edge})
    index = {old: new for new, old in enumerate(touched)}
    return Graph(len(touched), tuple((index[u], index[v]) for u, v in edges))
