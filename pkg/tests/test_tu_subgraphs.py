import pytest

from lappoly.exceptions import (
    BadParameter,
    NotTreeOrUnicyclic,
    NotTuSubgraph,
)
from lappoly.graphs import (
    ComponentKind,
    Graph,
    all_graphs,
    random_tree,
    random_unicyclic,
    subdivision,
)
from lappoly.tu_subgraphs import (
    chi,
    coefficient_via_tu,
    enumerate_tu,
    fiber_size_check,
    tree_unicyclic_max_matching_check,
    tu_coefficients_check,
    tu_subgraph,
    tu_weight,
)


class TestWeight:
    def test_isolated_vertices_count_once(self):
        assert tu_weight(Graph(4, ((0, 1),))) == 2

    def test_unicyclic(self, triangle):
        assert tu_weight(triangle) == 2

    def test_mixed(self):
        # a triangle, a path on three vertices and an isolated vertex
        graph = Graph(7, ((0, 1), (1, 2), (0, 2), (3, 4), (4, 5)))
        assert tu_weight(graph) == 2 * 3

    def test_not_tu(self, k4):
        with pytest.raises(NotTuSubgraph):
            tu_weight(k4)

    def test_tu_subgraph(self, paw):
        sub = tu_subgraph(paw, [(0, 1), (1, 2), (0, 2)])
        assert sub.component_kinds == (ComponentKind.UNICYCLIC,)
        assert sub.unicyclic_count == 1
        assert sub.weight == 2


class TestEnumerate:
    def test_triangle(self, triangle):
        assert [len(enumerate_tu(triangle, r)) for r in range(4)] == [1, 3, 3, 1]
        assert [coefficient_via_tu(triangle, r) for r in range(4)] == [1, 6, 9, 2]

    def test_k4_skips_two_cycles(self, k4):
        # every 5-edge subgraph of K4 has two independent cycles
        assert enumerate_tu(k4, 5) == []
        assert len(enumerate_tu(k4, 4)) == 15

    def test_negative_r(self, k4):
        with pytest.raises(BadParameter):
            enumerate_tu(k4, -1)

    def test_lexicographic(self, paw):
        found = [h.edge_set for h in enumerate_tu(paw, 2)]
        assert found == sorted(found)


class TestChi:
    def test_image(self, triangle):
        split = subdivision(triangle)
        image = chi(split, [(0, 3), (2, 5)])
        assert image.edge_set == ((0, 1), (1, 2))
        assert image.weight == 3

    def test_not_a_matching(self, triangle):
        split = subdivision(triangle)
        with pytest.raises(BadParameter):
            chi(split, [(0, 3), (0, 4)])
        with pytest.raises(BadParameter):
            chi(split, [(0, 5)])


class TestFibers:
    @pytest.mark.parametrize("r", range(4))
    def test_triangle(self, triangle, r):
        report = fiber_size_check(triangle, r)
        assert report.passed, report.details
        assert report.details["matchings"] == [1, 6, 9, 2][r]

    def test_paw(self, paw):
        for r in range(5):
            assert fiber_size_check(paw, r).passed

    @pytest.mark.slow
    def test_every_graph_on_five_vertices(self):
        for graph in all_graphs(5):
            for r in range(min(graph.n, graph.num_edges) + 1):
                assert fiber_size_check(graph, r).passed, (graph, r)


class TestThreeWay:
    def test_known_graphs(self, k4, paw, p4):
        for graph in (k4, paw, p4):
            report = tu_coefficients_check(graph)
            assert report.passed, report.details

    def test_every_graph_on_four_vertices(self):
        assert all(tu_coefficients_check(g).passed for g in all_graphs(4))

    @pytest.mark.slow
    def test_every_graph_on_six_vertices(self):
        for graph in all_graphs(6):
            assert tu_coefficients_check(graph).passed, graph


class TestMaxMatchings:
    def test_tree(self, p4):
        report = tree_unicyclic_max_matching_check(p4)
        assert report.passed, report.details
        assert report.details["found"] == 4

    def test_unicyclic(self, c4, paw):
        for graph in (c4, paw):
            report = tree_unicyclic_max_matching_check(graph)
            assert report.passed, report.details
            assert report.details["found"] == 2

    def test_other(self, k4):
        with pytest.raises(NotTreeOrUnicyclic):
            tree_unicyclic_max_matching_check(k4)

    @pytest.mark.parametrize("seed", range(100))
    def test_random_trees_and_unicyclic(self, seed):
        n = 3 + seed % 10
        tree = tree_unicyclic_max_matching_check(random_tree(n, seed))
        assert tree.passed, tree.details
        assert tree.details["found"] == n
        unicyclic = tree_unicyclic_max_matching_check(random_unicyclic(n, seed))
        assert unicyclic.passed, unicyclic.details
        assert unicyclic.details["found"] == 2
