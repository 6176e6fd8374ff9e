"""
TU-subgraphs: edge sets whose components are all trees or unicyclic graphs.

The weight of a TU-subgraph with c unicyclic components and tree components
T_1, ..., T_t is 2^c |V(T_1)| ... |V(T_t)|. Summed over the TU-subgraphs with r
edges it gives the coefficient a_r of β(G, x), and it is also the number of
r-matchings of S_G that the χ map sends to that subgraph.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Any, Dict, Iterable, List, Tuple

from lappoly.exceptions import (
    BadParameter,
    InternalInvariantViolation,
    NotTreeOrUnicyclic,
    NotTuSubgraph,
)
from lappoly.graphs import (
    ComponentKind,
    DisjointSet,
    Edge,
    Graph,
    SubdivisionGraph,
    components,
    edge_induced,
    induced_delete,
    subdivision,
)
from lappoly.matchings import (
    beta_coefficients,
    iter_matchings,
    laplacian_matching_polynomial,
    match_counts,
)
from lappoly.utils.report import CheckReport


@dataclass(frozen=True)
class TuSubgraph:
    """A TU-subgraph of G, given by its edge set, with its weight."""

    edge_set: Tuple[Edge, ...]
    component_kinds: Tuple[ComponentKind, ...]
    weight: int

    @property
    def unicyclic_count(self: TuSubgraph) -> int:
        """
        The number c of unicyclic components.

        Returns:
            c.
        """
        return self.component_kinds.count(ComponentKind.UNICYCLIC)


def tu_weight(subgraph: Graph) -> int:
    """
    Compute the TU weight 2^c Π |V(T_i)| of a graph.

    Isolated vertices are one-vertex trees and contribute a factor 1.

    Args:
        subgraph: The graph H, usually edge-induced.

    Returns:
        w(H).

    Raises:
        NotTuSubgraph: If some component has more edges than vertices.
    """
    report = components(subgraph)
    weight = 1
    for part, kind in zip(report.components, report.kinds):
        if kind is ComponentKind.OTHER:
            raise NotTuSubgraph(
                f"Component {sorted(part)} has more than one independent cycle."
            )
        weight *= 2 if kind is ComponentKind.UNICYCLIC else len(part)
    return weight


def tu_subgraph(graph: Graph, edge_set: Iterable[Edge]) -> TuSubgraph:
    """
    Classify an edge set of G as a TU-subgraph.

    Args:
        graph: The graph G.
        edge_set: The edges.

    Returns:
        The TU-subgraph with its component kinds and weight.

    Raises:
        NotTuSubgraph: If some component has more edges than vertices.
    """
    edges = tuple(sorted(edge_set))
    induced = edge_induced(graph.n, edges)
    return TuSubgraph(edges, components(induced).kinds, tu_weight(induced))


def enumerate_tu(graph: Graph, r: int) -> List[TuSubgraph]:
    """
    Enumerate every TU-subgraph of G with exactly r edges.

    Depth-first search over the sorted edges, including an edge before excluding
    it. A union-find tracks the edge and vertex count of every component, and an
    edge that would give a component two independent cycles is never added.

    Args:
        graph: The graph G.
        r: The number of edges.

    Returns:
        The TU-subgraphs in lexicographic order of their edge sets.

    Raises:
        BadParameter: If r is negative.
    """
    if r < 0:
        raise BadParameter(f"Edge count r must be >= 0, got {r}.")
    edges = graph.edges
    found: List[Tuple[Edge, ...]] = []
    chosen: List[Edge] = []

    def _search(i: int, forest: DisjointSet) -> None:
        if len(chosen) == r:
            found.append(tuple(chosen))
            return
        if len(chosen) + len(edges) - i < r:
            return
        u, v = edges[i]
        grown = forest.copy()
        if grown.excess(grown.add_edge(u, v)) <= 0:
            chosen.append(edges[i])
            _search(i + 1, grown)
            chosen.pop()
        _search(i + 1, forest)

    _search(0, DisjointSet())
    return [tu_subgraph(graph, edge_set) for edge_set in found]


def coefficient_via_tu(graph: Graph, r: int) -> int:
    """
    Compute a_r as the total weight of the TU-subgraphs with r edges.

    Args:
        graph: The graph G.
        r: The coefficient index.

    Returns:
        Σ_{H with r edges} w(H).
    """
    return sum(h.weight for h in enumerate_tu(graph, r))


def chi(split: SubdivisionGraph, matching: Iterable[Edge]) -> TuSubgraph:
    """
    Map a matching of S_G to the subgraph of G formed by the edges it touches.

    Args:
        split: The subdivision graph S_G.
        matching: A matching of S_G.

    Returns:
        The edge-induced subgraph of G on {e(f) : f in M}.

    Raises:
        BadParameter: If the edge set is not a matching of S_G.
        InternalInvariantViolation: If the image is not a TU-subgraph.
    """
    chosen = [(min(f), max(f)) for f in matching]
    covered = [v for f in chosen for v in f]
    if len(set(covered)) != len(covered) or not all(
        split.graph.has_edge(*f) for f in chosen
    ):
        raise BadParameter(f"{chosen} is not a matching of the subdivision graph.")
    try:
        return tu_subgraph(split.base, (split.original_edge(f) for f in chosen))
    except NotTuSubgraph as e:
        raise InternalInvariantViolation(
            f"The image of {chosen} is not a TU-subgraph: {e.format_message()}",
            {"matching": [list(f) for f in chosen]},
        ) from e


def fiber_size_check(graph: Graph, r: int) -> CheckReport:
    """
    Group the r-matchings of S_G by their χ image and compare fibers to weights.

    Args:
        graph: The graph G.
        r: The matching size.

    Returns:
        The fiber histogram; passes iff every fiber has the size of its weight and
        every TU-subgraph with r edges is hit.
    """
    split = subdivision(graph)
    fibers: Counter = Counter()
    images: Dict[Tuple[Edge, ...], TuSubgraph] = {}
    for matching in iter_matchings(split.graph):
        if len(matching) != r:
            continue
        image = chi(split, matching)
        fibers[image.edge_set] += 1
        images[image.edge_set] = image

    expected = {h.edge_set for h in enumerate_tu(graph, r)}
    missed = sorted(expected - set(fibers))
    wrong = [key for key, size in fibers.items() if size != images[key].weight]
    histogram = [
        {
            "edges": [list(edge) for edge in key],
            "fiber": fibers[key],
            "weight": images[key].weight,
        }
        for key in sorted(fibers)
    ]
    return CheckReport(
        f"fibers[r={r}]",
        passed=not wrong and not missed,
        details={
            "r": r,
            "histogram": histogram,
            "matchings": sum(fibers.values()),
            "missed": [[list(edge) for edge in key] for key in missed],
        },
    )


def tu_coefficients_check(graph: Graph) -> CheckReport:
    """
    Compare a_r three ways: from β(G, x), as p(S_G, r), and as total TU weight.

    Args:
        graph: The graph G.

    Returns:
        Passes iff the three agree for every r.
    """
    beta = beta_coefficients(laplacian_matching_polynomial(graph))
    counts = match_counts(subdivision(graph).graph)
    weights = [coefficient_via_tu(graph, r) for r in range(len(beta))]
    mismatched = [
        r for r, a_r in enumerate(beta) if not a_r == counts[r] == weights[r]
    ]
    return CheckReport(
        "tu",
        passed=not mismatched,
        details={
            "beta_coefficients": [str(a) for a in beta],
            "tu_weights": [str(w) for w in weights],
            "mismatched_r": mismatched,
        },
    )


def tree_unicyclic_max_matching_check(graph: Graph) -> CheckReport:
    """
    Check the maximum-matching counts of S_X for a tree or unicyclic graph X.

    A tree T has p(S_T, |E(T)|) = |V(T)| and S_T - v has exactly one perfect
    matching for every vertex v. A connected unicyclic U has p(S_U, |E(U)|) = 2.

    Args:
        graph: The graph X.

    Returns:
        The counts found and expected.

    Raises:
        NotTreeOrUnicyclic: If X is neither a tree nor connected unicyclic.
    """
    is_tree = graph.is_tree()
    if not (is_tree or (graph.is_connected() and graph.num_edges == graph.n)):
        raise NotTreeOrUnicyclic(
            f"Graph with n={graph.n}, m={graph.num_edges} is not a tree or "
            "connected unicyclic graph."
        )
    split = subdivision(graph)
    m = graph.num_edges
    found = match_counts(split.graph)[m]
    expected = graph.n if is_tree else 2
    details: Dict[str, Any] = {
        "kind": "tree" if is_tree else "unicyclic",
        "found": found,
        "expected": expected,
    }
    passed = found == expected
    if is_tree:
        # S_T - v has 2(n - 1) vertices, so a perfect matching has m edges
        bad = [
            v
            for v in range(graph.n)
            if match_counts(induced_delete(split.graph, {v}).graph)[m] != 1
        ]
        details["vertices_without_unique_perfect_matching"] = bad
        passed = passed and not bad
    return CheckReport("max-matchings", passed=passed, details=details)
