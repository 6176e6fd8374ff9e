import itertools
import random

import networkx as nx
import pytest

from lappoly.analysis import (
    degree_majorization_check,
    grone_sequence_check,
    interlaces,
    majorizes,
    matching_interlacing_check,
    principal_zero_sum_check,
    vertex_interlacing_check,
)
from lappoly.exceptions import (
    BadParameter,
    DegreeMismatch,
    LengthMismatch,
    MinDegreeNotOne,
    NotConnected,
    VertexNotInH,
)
from lappoly.graphs import Graph, all_graphs, random_graph, random_unicyclic
from lappoly.matchings import principal_beta
from lappoly.polynomials import real_roots


def _transfer(values, rng):
    # moving t <= a - b from a larger entry a to a smaller b keeps majorization
    out = sorted(values, reverse=True)
    i, j = sorted(rng.sample(range(len(out)), 2))
    t = rng.randint(0, out[i] - out[j])
    out[i] -= t
    out[j] += t
    return out


def _leafy_non_tree(seed):
    # a random unicyclic core with extra chords and one pendant vertex
    rng = random.Random(seed)
    n = 3 + seed % 6
    edges = set(random_unicyclic(n, seed).edges)
    for u, v in itertools.combinations(range(n), 2):
        if rng.random() < 0.2:
            edges.add((u, v))
    edges.add((rng.randrange(n), n))
    return Graph(n + 1, tuple(edges))


class TestInterlaces:
    def test_chain(self):
        assert interlaces([1], [0, 2])
        assert interlaces([1, 3], [0, 2, 3])
        assert not interlaces([3], [0, 2])

    def test_tolerance(self):
        assert not interlaces([2.1], [0, 2])
        assert interlaces([2 + 1e-9], [0, 2], tol=1e-7)

    def test_root_lists(self, p3):
        outer = real_roots(principal_beta(p3, {0, 1, 2}))
        inner = real_roots(principal_beta(p3, {0, 1}))
        assert interlaces(inner, outer)

    def test_degree_mismatch(self):
        with pytest.raises(DegreeMismatch):
            interlaces([1, 2], [0, 2])


class TestVertexInterlacing:
    def test_path(self, p4):
        for v in range(4):
            report = vertex_interlacing_check(p4, range(4), v)
            assert report.passed, report.details
            assert report.details["largest_simple"]

    def test_disconnected_h(self, p4):
        report = vertex_interlacing_check(p4, {0, 3}, 0)
        assert report.passed
        assert "largest_gap" not in report.details

    def test_v_not_in_h(self, p4):
        with pytest.raises(VertexNotInH):
            vertex_interlacing_check(p4, {0, 1}, 3)

    def test_every_subset_of_the_paw(self, paw):
        for mask in range(1, 16):
            keep = {v for v in range(4) if mask >> v & 1}
            for v in keep:
                assert vertex_interlacing_check(paw, keep, v).passed, (keep, v)


class TestMajorizes:
    def test_full(self):
        verdict = majorizes([3, 1], [2, 2])
        assert verdict.full and verdict.weak and verdict.holds
        assert verdict.first_failure is None

    def test_failure(self):
        verdict = majorizes([2, 2], [3, 1])
        assert not verdict.weak
        assert verdict.first_failure == 1
        assert verdict.y_prefix == (2, 4)

    def test_weak_only(self):
        verdict = majorizes([3, 2], [2, 2], mode="weak")
        assert verdict.weak and not verdict.full
        assert verdict.holds

    def test_unsorted_input(self):
        assert majorizes([1, 3], [2, 2]).full

    def test_errors(self):
        with pytest.raises(LengthMismatch):
            majorizes([1], [1, 2])
        with pytest.raises(BadParameter):
            majorizes([1], [1], mode="strong")

    @pytest.mark.parametrize("seed", range(50))
    def test_reflexive(self, seed):
        rng = random.Random(seed)
        x = [rng.randint(-5, 9) for _ in range(rng.randint(1, 9))]
        verdict = majorizes(x, list(reversed(x)))
        assert verdict.full and verdict.first_failure is None

    @pytest.mark.parametrize("seed", range(50))
    def test_transitive(self, seed):
        rng = random.Random(seed)
        z = [rng.randint(0, 12) for _ in range(rng.randint(2, 9))]
        y = _transfer(z, rng)
        x = _transfer(y, rng)
        assert majorizes(z, y).full and majorizes(y, x).full
        assert majorizes(z, x).full

    @pytest.mark.parametrize("seed", range(50))
    def test_weak_transitive(self, seed):
        rng = random.Random(seed)
        size = rng.randint(1, 6)
        z, y, x = ([rng.randint(0, 6) for _ in range(size)] for _ in range(3))
        if majorizes(z, y, "weak").weak and majorizes(y, x, "weak").weak:
            assert majorizes(z, x, "weak").weak


class TestDegreeMajorization:
    def test_k4(self, k4):
        report = degree_majorization_check(k4)
        assert report.passed
        assert report.details["degree_sequence"] == [3, 3, 3, 3]

    def test_trace(self, paw):
        report = degree_majorization_check(paw, trace=True)
        assert report.passed
        assert [step["i"] for step in report.details["trace"]] == [1, 2, 3, 4]

    @pytest.mark.parametrize("seed", range(5))
    def test_random(self, seed):
        graph = random_graph(7, 0.4, seed)
        assert degree_majorization_check(graph, trace=True).passed

    @pytest.mark.slow
    @pytest.mark.parametrize("seed", range(500))
    def test_random_corpus(self, seed):
        graph = random_graph(1 + seed % 9, 0.5, seed)
        assert degree_majorization_check(graph).passed, graph


class TestGrone:
    def test_tree(self, p4):
        report = grone_sequence_check(p4)
        assert report.passed
        assert report.details["d_hat"] == [3, 2, 1, 0]
        assert report.details["beta"]["full"]

    def test_not_tree(self, paw):
        report = grone_sequence_check(paw)
        assert report.passed
        assert not report.details["beta"]["full"]
        assert report.details["laplacian"]["full"]

    def test_preconditions(self, triangle):
        with pytest.raises(MinDegreeNotOne):
            grone_sequence_check(triangle)
        with pytest.raises(NotConnected):
            grone_sequence_check(Graph(3, ((0, 1),)))

    @pytest.mark.slow
    def test_every_connected_graph_on_five_vertices(self):
        for graph in all_graphs(5):
            if graph.is_connected() and graph.min_degree == 1:
                assert grone_sequence_check(graph).passed, graph

    @pytest.mark.parametrize("n", range(2, 9))
    def test_every_tree(self, n):
        for tree in nx.nonisomorphic_trees(n):
            report = grone_sequence_check(Graph.from_networkx(tree))
            assert report.passed, report.details
            assert report.details["beta"]["full"]

    @pytest.mark.parametrize("seed", range(100))
    def test_non_trees_with_a_leaf(self, seed):
        report = grone_sequence_check(_leafy_non_tree(seed))
        assert report.passed, report.details
        assert not report.details["tree"]
        assert not report.details["beta"]["full"]


class TestZeroSum:
    def test_subset(self, c4):
        report = principal_zero_sum_check(c4, {0, 1})
        assert report.passed
        assert report.details["zero_sum"] == 4

    def test_empty(self, c4):
        assert principal_zero_sum_check(c4, set()).passed


class TestMatchingInterlacing:
    def test_cycle(self, c4):
        for v in range(4):
            assert matching_interlacing_check(c4, v).passed

    def test_disconnected(self):
        report = matching_interlacing_check(Graph(4, ((0, 1), (2, 3))), 0)
        assert report.passed
        assert "largest_gap" not in report.details
