"""Edge-subset enumeration: 2-regular subgraphs and the union-find it shares."""

from __future__ import annotations

from typing import Dict, Iterable, List, Tuple

from lappoly.graphs.graph import Edge, Graph, TwoRegularSubgraph


class DisjointSet:
    """
    Union-find over arbitrary hashable vertices, tracking per-component sizes.

    Every component also carries an edge counter, so callers can tell trees
    (edges = vertices - 1) from unicyclic components (edges = vertices) as they
    grow an edge set.
    """

    def __init__(self: DisjointSet) -> None:
        """Initialize an empty DisjointSet."""
        self._parent: Dict[int, int] = {}
        self._vertices: Dict[int, int] = {}
        self._edges: Dict[int, int] = {}

    def copy(self: DisjointSet) -> DisjointSet:
        """
        Copy the structure, for backtracking searches.

        Returns:
            An independent copy.
        """
        other = DisjointSet()
        other._parent = dict(self._parent)
        other._vertices = dict(self._vertices)
        other._edges = dict(self._edges)
        return other

    def find(self: DisjointSet, v: int) -> int:
        """
        Find the representative of v, adding v as a singleton if unseen.

        Args:
            v: The vertex.

        Returns:
            The root of v's component.
        """
        if v not in self._parent:
            self._parent[v] = v
            self._vertices[v] = 1
            self._edges[v] = 0
            return v
        root = v
        while self._parent[root] != root:
            root = self._parent[root]
        # path compression
        while self._parent[v] != root:
            self._parent[v], v = root, self._parent[v]
        return root

    def add_edge(self: DisjointSet, u: int, v: int) -> int:
        """
        Add the edge {u, v}, merging components if needed.

        Args:
            u: One endpoint.
            v: The other endpoint.

        Returns:
            The root of the component now containing the edge.
        """
        ru, rv = self.find(u), self.find(v)
        if ru == rv:
            self._edges[ru] += 1
            return ru
        if self._vertices[ru] < self._vertices[rv]:
            ru, rv = rv, ru
        self._parent[rv] = ru
        self._vertices[ru] += self._vertices.pop(rv)
        self._edges[ru] += self._edges.pop(rv) + 1
        return ru

    def excess(self: DisjointSet, root: int) -> int:
        """
        Edges minus vertices of a component: -1 for a tree, 0 for unicyclic.

        Args:
            root: A component root returned by `find` or `add_edge`.

        Returns:
            The excess of the component.
        """
        return self._edges[root] - self._vertices[root]

    def roots(self: DisjointSet) -> List[int]:
        """
        The roots of every component seen so far.

        Returns:
            The component roots.
        """
        return [v for v, parent in self._parent.items() if v == parent]

    def size(self: DisjointSet, root: int) -> int:
        """
        The number of vertices in a component.

        Args:
            root: A component root.

        Returns:
            The vertex count.
        """
        return self._vertices[root]


def count_components(edges: Iterable[Edge]) -> int:
    """
    Count the components of the edge-induced subgraph.

    Args:
        edges: The edge set.

    Returns:
        The number of components among the touched vertices.
    """
    forest = DisjointSet()
    for u, v in edges:
        forest.add_edge(u, v)
    return len(forest.roots())


def enumerate_two_regular(graph: Graph) -> List[TwoRegularSubgraph]:
    """
    Enumerate every 2-regular subgraph (nonempty disjoint union of cycles).

    Depth-first search over the edges in sorted order, deciding inclusion of one
    edge at a time. A branch dies as soon as a vertex reaches degree 3, or when a
    vertex is left at degree 1 after its last incident edge has been decided.

    Args:
        graph: The graph G.

    Returns:
        Every 2-regular subgraph, sorted lexicographically by edge set.
    """
    edges = graph.edges
    last_edge_of = [-1] * graph.n
    for i, (u, v) in enumerate(edges):
        last_edge_of[u] = i
        last_edge_of[v] = i

    found: List[Tuple[Edge, ...]] = []
    degree = [0] * graph.n
    chosen: List[Edge] = []

    def _settled(i: int, vertices: Edge) -> bool:
        return all(
            not (last_edge_of[w] == i and degree[w] == 1) for w in vertices
        )

    def _search(i: int) -> None:
        if i == len(edges):
            if chosen:
                found.append(tuple(chosen))
            return
        u, v = edges[i]
        if degree[u] < 2 and degree[v] < 2:
            degree[u] += 1
            degree[v] += 1
            chosen.append(edges[i])
            if _settled(i, edges[i]):
                _search(i + 1)
            chosen.pop()
            degree[u] -= 1
            degree[v] -= 1
        if _settled(i, edges[i]):
            _search(i + 1)

    _search(0)
    return [
        TwoRegularSubgraph(edge_set, count_components(edge_set))
        for edge_set in sorted(found)
    ]
