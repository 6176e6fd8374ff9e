"""
Deterministic graph generators.

Random graphs come from networkx's G(n, p) generator seeded with `random.Random`
(Mersenne Twister): every pair (u, v), u < v, is visited in lexicographic order and
kept when the next draw is below p. Identical (n, p, seed) therefore give identical
graphs on every platform.
"""

from __future__ import annotations

import itertools
import random
from typing import Callable, Dict, Iterator, Sequence

import networkx as nx

from lappoly.exceptions import BadParameter
from lappoly.graphs.graph import Graph

FAMILIES = ("path", "cycle", "star", "complete", "complete_bipartite")


def _path(n: int) -> Graph:
    return Graph.from_networkx(nx.path_graph(n))


def _cycle(n: int) -> Graph:
    if n < 3:
        raise BadParameter(f"A cycle needs at least 3 vertices, got {n}.")
    return Graph.from_networkx(nx.cycle_graph(n))


def _star(k: int) -> Graph:
    # K_{1,k}: center 0, leaves 1..k
    return Graph.from_networkx(nx.star_graph(k))


def _complete(n: int) -> Graph:
    return Graph.from_networkx(nx.complete_graph(n))


def _complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_networkx(nx.complete_bipartite_graph(a, b))


_BUILDERS: Dict[str, Callable[..., Graph]] = {
    "path": _path,
    "cycle": _cycle,
    "star": _star,
    "complete": _complete,
    "complete_bipartite": _complete_bipartite,
}

_ARITY = {"path": 1, "cycle": 1, "star": 1, "complete": 1, "complete_bipartite": 2}


def generate_family(name: str, params: Sequence[int]) -> Graph:
    """
    Build the canonical labeled member of a named graph family.

    `path:n`, `cycle:n` and `complete:n` take a vertex count, `star:k` builds
    K_{1,k}, and `complete_bipartite:a,b` builds K_{a,b}.

    Args:
        name: One of `FAMILIES`.
        params: The size parameters.

    Returns:
        The graph.

    Raises:
        BadParameter: If the family is unknown or a parameter is out of range.
    """
    if name not in _BUILDERS:
        raise BadParameter(f"Unknown family {name!r}; expected one of {FAMILIES}.")
    if len(params) != _ARITY[name]:
        raise BadParameter(
            f"Family {name!r} takes {_ARITY[name]} parameter(s), got {len(params)}."
        )
    if any(p < 1 for p in params):
        raise BadParameter(f"Family parameters must be >= 1, got {list(params)}.")
    return _BUILDERS[name](*params)


def random_graph(n: int, p: float, seed: int) -> Graph:
    """
    Sample an Erdős–Rényi graph G(n, p).

    Args:
        n: The number of vertices.
        p: The edge probability.
        seed: The generator seed.

    Returns:
        The sampled graph.

    Raises:
        BadParameter: If n is negative or p is outside [0, 1].
    """
    if n < 0:
        raise BadParameter(f"Vertex count must be >= 0, got {n}.")
    if not 0.0 <= p <= 1.0:
        raise BadParameter(f"Edge probability must be in [0, 1], got {p}.")
    return Graph.from_networkx(nx.gnp_random_graph(n, p, seed=random.Random(seed)))


def random_tree(n: int, seed: int) -> Graph:
    """
    Sample a uniformly random labeled tree from a random Prüfer sequence.

    Args:
        n: The number of vertices, at least 1.
        seed: The generator seed.

    Returns:
        The tree.

    Raises:
        BadParameter: If n < 1.
    """
    if n < 1:
        raise BadParameter(f"A tree needs at least 1 vertex, got {n}.")
    if n <= 2:
        return _path(n)
    rng = random.Random(seed)
    sequence = [rng.randrange(n) for _ in range(n - 2)]
    return Graph.from_networkx(nx.from_prufer_sequence(sequence))


def random_unicyclic(n: int, seed: int) -> Graph:
    """
    Sample a connected unicyclic graph: a random tree plus one random non-edge.

    Args:
        n: The number of vertices, at least 3.
        seed: The generator seed.

    Returns:
        The unicyclic graph.

    Raises:
        BadParameter: If n < 3.
    """
    if n < 3:
        raise BadParameter(f"A unicyclic graph needs at least 3 vertices, got {n}.")
    tree = random_tree(n, seed)
    rng = random.Random(seed + 1)
    non_edges = [
        pair
        for pair in itertools.combinations(range(n), 2)
        if not tree.has_edge(*pair)
    ]
    return Graph(n, tree.edges + (rng.choice(non_edges),))


def all_graphs(n: int) -> Iterator[Graph]:
    """
    Yield every labeled graph on n vertices, one per edge subset of K_n.

    Bit i of the subset mask selects the i-th pair of `itertools.combinations`, and
    masks are visited in increasing order.

    Args:
        n: The number of vertices.

    Yields:
        The 2^(n choose 2) graphs, in mask order.
    """
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(n, tuple(pair for i, pair in enumerate(pairs) if mask >> i & 1))
