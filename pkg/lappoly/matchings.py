"""
Matching counts, the matching polynomial and the Laplacian matching polynomial.

Two independent routes lead to the (principal) Laplacian matching polynomial:
direct summation over the matchings of the induced subgraph, and the matching
polynomial of the subdivision graph with the monomial factor removed and the
exponents halved. They share nothing but the graph model.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, List, Optional, Tuple

from lappoly.graphs import Edge, Graph, induced_delete, subdivision
from lappoly.polynomials import IntPoly, divide_by_power, even_part_unsquare
from lappoly.utils.report import CheckReport

Matching = Tuple[Edge, ...]


@dataclass(frozen=True)
class MatchCounts:
    """The r-matching counts p(G, 0), ..., p(G, floor(n/2))."""

    counts: Tuple[int, ...]

    def __getitem__(self: MatchCounts, r: int) -> int:
        """
        Get p(G, r), zero beyond the largest possible matching.

        Args:
            r: The matching size.

        Returns:
            The number of r-matchings.
        """
        return self.counts[r] if 0 <= r < len(self.counts) else 0

    @property
    def total(self: MatchCounts) -> int:
        """
        The number of matchings of every size, the empty one included.

        Returns:
            Σ_r p(G, r).
        """
        return sum(self.counts)


def _add_shifted(
    without: Tuple[int, ...], with_edge: Tuple[int, ...]
) -> Tuple[int, ...]:
    size = max(len(without), len(with_edge) + 1)
    out = [0] * size
    for r, c in enumerate(without):
        out[r] += c
    for r, c in enumerate(with_edge):
        out[r + 1] += c
    return tuple(out)


def match_counts(graph: Graph) -> MatchCounts:
    """
    Count the r-matchings of a graph for every r.

    Uses the edge recursion p(G, r) = p(G - e, r) + p(G - u - v, r - 1), memoized
    on the bitmask of edges still available. The cache lives only for this call.

    Args:
        graph: The graph G.

    Returns:
        p(G, r) for r = 0..floor(n/2).
    """
    edges = graph.edges
    incident = [0] * graph.n
    for i, (u, v) in enumerate(edges):
        incident[u] |= 1 << i
        incident[v] |= 1 << i

    @lru_cache(maxsize=None)
    def _count(remaining: int) -> Tuple[int, ...]:
        if not remaining:
            return (1,)
        i = (remaining & -remaining).bit_length() - 1
        u, v = edges[i]
        without = _count(remaining & ~(1 << i))
        with_edge = _count(remaining & ~(incident[u] | incident[v]))
        return _add_shifted(without, with_edge)

    counts = list(_count((1 << len(edges)) - 1))
    size = graph.n // 2 + 1
    counts += [0] * (size - len(counts))
    return MatchCounts(tuple(counts[:size]))


def matching_polynomial(graph: Graph) -> IntPoly:
    """
    Compute the matching polynomial α(G, x) = Σ_r (-1)^r p(G, r) x^(n - 2r).

    Args:
        graph: The graph G.

    Returns:
        α(G, x).
    """
    coeffs = [0] * (graph.n + 1)
    for r, count in enumerate(match_counts(graph).counts):
        coeffs[graph.n - 2 * r] = (-1) ** r * count
    return IntPoly(coeffs)


def iter_matchings(
    graph: Graph, vertices: Optional[Iterable[int]] = None
) -> Iterator[Matching]:
    """
    Enumerate the matchings of G, or of the subgraph induced on a vertex set.

    Matchings come out in a fixed order: edges are decided one at a time in sorted
    order, excluding an edge before including it.

    Args:
        graph: The graph G.
        vertices: Restrict to edges with both endpoints in this set.

    Yields:
        Every matching, as a sorted tuple of edges; the empty matching first.
    """
    if vertices is None:
        edges = graph.edges
    else:
        allowed = graph.check_vertices(vertices)
        edges = tuple(e for e in graph.edges if e[0] in allowed and e[1] in allowed)

    covered = [False] * graph.n
    chosen: List[Edge] = []

    def _search(i: int) -> Iterator[Matching]:
        if i == len(edges):
            yield tuple(chosen)
            return
        yield from _search(i + 1)
        u, v = edges[i]
        if not covered[u] and not covered[v]:
            covered[u] = covered[v] = True
            chosen.append(edges[i])
            yield from _search(i + 1)
            chosen.pop()
            covered[u] = covered[v] = False

    yield from _search(0)


def principal_beta(graph: Graph, vertices: Iterable[int]) -> IntPoly:
    """
    Compute the principal Laplacian matching polynomial β(G, x)_[H].

    Sums (-1)^|M| Π_{v in H unmatched} (x - d_G(v)) over the matchings M of the
    subgraph induced on H. Degrees are always read in G.

    Args:
        graph: The graph G.
        vertices: The vertex set H.

    Returns:
        β(G, x)_[H], of degree |H|.
    """
    keep = graph.check_vertices(vertices)
    induced = induced_delete(graph, set(range(graph.n)) - keep)
    sub = induced.graph
    factors = [
        IntPoly.linear_root(graph.degree(original))
        for original in induced.original_vertex_of
    ]

    total = IntPoly()
    for matching in iter_matchings(sub):
        matched = {v for edge in matching for v in edge}
        term = IntPoly.constant(-1 if len(matching) % 2 else 1)
        for v in range(sub.n):
            if v not in matched:
                term = term * factors[v]
        total = total + term
    return IntPoly(total.coeffs)


def laplacian_matching_polynomial(graph: Graph) -> IntPoly:
    """
    Compute the Laplacian matching polynomial β(G, x) by direct summation.

    Args:
        graph: The graph G.

    Returns:
        β(G, x).
    """
    return principal_beta(graph, range(graph.n))


def beta_via_subdivision(graph: Graph, deleted: Iterable[int] = ()) -> IntPoly:
    """
    Compute β(G, x)_[G - W] through the matching polynomial of S_G - W.

    α(S_G - W, x) equals x^(m - n + |W|) β(G, x^2)_[G - W]. When the exponent is
    negative the monomial moves to the other side and α is multiplied instead.

    Args:
        graph: The graph G.
        deleted: The vertex set W.

    Returns:
        β(G, x)_[G - W].
    """
    removed = graph.check_vertices(deleted)
    split = subdivision(graph)
    alpha = matching_polynomial(induced_delete(split.graph, removed).graph)
    exponent = graph.num_edges - graph.n + len(removed)
    if exponent >= 0:
        alpha = divide_by_power(alpha, exponent)
    else:
        alpha = alpha.shift(-exponent)
    return even_part_unsquare(alpha)


def beta_coefficients(beta: IntPoly) -> List[int]:
    """
    Read a_0, ..., a_n off β(G, x) = Σ_r (-1)^r a_r x^(n - r).

    Args:
        beta: β(G, x).

    Returns:
        The unsigned coefficients a_r.
    """
    n = beta.degree
    return [(-1) ** r * beta.coeff(n - r) for r in range(n + 1)]


def coefficients_check(graph: Graph) -> CheckReport:
    """
    Check that every coefficient a_r of β(G, x) counts the r-matchings of S_G.

    Args:
        graph: The graph G.

    Returns:
        The per-r comparison; fails on any mismatch, a negative a_r, or when the
        a_r do not add up to the total matching count of S_G.
    """
    coefficients = beta_coefficients(laplacian_matching_polynomial(graph))
    counts = match_counts(subdivision(graph).graph)
    mismatches = [
        r
        for r, a_r in enumerate(coefficients)
        if a_r != counts[r] or a_r < 0
    ]
    # S_G is bipartite with n vertices on one side, so no matching exceeds n
    complete = sum(coefficients) == counts.total
    return CheckReport(
        "coefficients",
        passed=not mismatches and complete,
        details={
            "beta_coefficients": [str(a) for a in coefficients],
            "subdivision_matchings": [
                str(counts[r]) for r in range(len(coefficients))
            ],
            "mismatched_r": mismatches,
            "total_matchings": str(counts.total),
        },
    )
