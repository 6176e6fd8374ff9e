import pytest

from lappoly.exceptions import BadParameter, MaxDegreeTooSmall, NoEdges, NotConnected
from lappoly.graphs import Graph, all_graphs, generate_family, random_graph
from lappoly.identities import (
    ADJACENCY_DIRECTIONS,
    Q_DIRECTIONS,
    adjacency_duality,
    degree_sum_bound_check,
    forest_characterization,
    hl_interval_check,
    min_root_bound_check,
    q_duality,
    spectral_bound_check,
    subdivision_identity_check,
)


def _connected(n):
    return [g for g in all_graphs(n) if g.is_connected()]


class TestSubdivisionIdentity:
    def test_triangle(self, triangle):
        report = subdivision_identity_check(triangle)
        assert report.passed
        assert report.residual.is_zero()
        assert report.left.to_strings() == ["1", "-6", "9", "-2"]

    def test_deleted(self, paw):
        report = subdivision_identity_check(paw, {2})
        assert report.passed
        assert report.details["deleted"] == [2]


class TestDualities:
    @pytest.mark.parametrize("direction", ADJACENCY_DIRECTIONS)
    def test_adjacency_k4(self, k4, direction):
        report = adjacency_duality(k4, direction)
        assert report.passed, report.to_dict()
        assert report.details["two_regular"] == 7

    @pytest.mark.parametrize("direction", Q_DIRECTIONS)
    def test_q_c4(self, c4, direction):
        assert q_duality(c4, direction).passed

    @pytest.mark.parametrize("direction", Q_DIRECTIONS)
    def test_q_every_graph_on_four_vertices(self, direction):
        for graph in all_graphs(4):
            assert q_duality(graph, direction).passed, graph

    @pytest.mark.parametrize("direction", ADJACENCY_DIRECTIONS)
    def test_adjacency_two_triangles(self, direction):
        graph = Graph(6, ((0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)))
        assert adjacency_duality(graph, direction).passed

    def test_unknown_direction(self, c4):
        with pytest.raises(BadParameter):
            q_duality(c4, "sideways")
        with pytest.raises(BadParameter):
            adjacency_duality(c4, "sideways")

    @pytest.mark.parametrize(
        "n", [1, 2, 3, 4] + [pytest.param(n, marks=pytest.mark.slow) for n in (5, 6)]
    )
    def test_every_connected_graph(self, n):
        for graph in _connected(n):
            for direction in Q_DIRECTIONS:
                assert q_duality(graph, direction).passed, (graph, direction)
            for direction in ADJACENCY_DIRECTIONS:
                assert adjacency_duality(graph, direction).passed, (graph, direction)

    @pytest.mark.slow
    @pytest.mark.parametrize("seed", range(300))
    def test_random_graphs(self, seed):
        graph = random_graph(2 + seed % 8, 0.5, seed)
        for direction in Q_DIRECTIONS:
            assert q_duality(graph, direction).passed, direction
        for direction in ADJACENCY_DIRECTIONS:
            assert adjacency_duality(graph, direction).passed, direction


class TestForest:
    def test_path(self):
        report = forest_characterization(generate_family("path", [5]))
        assert report.passed
        assert report.details == {
            "forest": True,
            "beta==phiQ": True,
            "beta==phiL": True,
            "alpha==phiA": True,
        }

    def test_cycle(self, c4):
        report = forest_characterization(c4)
        assert report.passed
        assert report.details["forest"] is False
        assert report.details["beta==phiQ"] is False

    def test_every_graph_on_four_vertices(self):
        assert all(forest_characterization(g).passed for g in all_graphs(4))


class TestSpectralBound:
    def test_tree_is_tight(self, p4):
        report = spectral_bound_check(p4)
        assert report.passed
        assert report.details["equal"] and report.details["tree"]

    def test_cycle_is_strict(self, c4):
        report = spectral_bound_check(c4)
        assert report.passed
        assert not report.details["equal"]

    def test_disconnected(self):
        with pytest.raises(NotConnected):
            spectral_bound_check(Graph(3, ((0, 1),)))

    @pytest.mark.parametrize(
        "n", [3, 4, 5] + [pytest.param(6, marks=pytest.mark.slow)]
    )
    def test_strict_on_connected_non_trees(self, n):
        for graph in _connected(n):
            if graph.is_tree():
                continue
            report = spectral_bound_check(graph)
            assert report.passed, graph
            assert not report.details["equal"], graph
            assert report.details["lambda_max"] < report.details["rho_q"], graph


class TestDegreeSumBound:
    def test_star(self, star3):
        report = degree_sum_bound_check(star3)
        assert report.passed
        assert report.details["bound"] == 4
        assert report.details["equal"] and report.details["star"]

    def test_regular(self, c4):
        report = degree_sum_bound_check(c4)
        assert report.passed
        assert report.details["rho_equal"] and not report.details["equal"]

    def test_no_edges(self):
        with pytest.raises(NoEdges):
            degree_sum_bound_check(Graph(1))


class TestMinRootBound:
    def test_path(self, p3):
        report = min_root_bound_check(p3)
        assert report.passed
        witness = report.details["witness"]
        assert witness["edge"] == [0, 1]
        assert witness["closed_form"] == pytest.approx((3 - 5**0.5) / 2)

    def test_single_vertex(self):
        report = min_root_bound_check(Graph(1))
        assert report.passed
        assert report.details["equal"] and report.details["single_vertex"]


class TestInterval:
    def test_cycle(self, c4):
        assert hl_interval_check(c4).passed

    def test_small_max_degree(self, k2):
        with pytest.raises(MaxDegreeTooSmall):
            hl_interval_check(k2)


class TestBoundsOnSmallGraphs:
    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_connected_graphs(self, n):
        for graph in _connected(n):
            assert spectral_bound_check(graph).passed, graph
            assert degree_sum_bound_check(graph).passed, graph
            assert min_root_bound_check(graph).passed, graph
            if graph.max_degree >= 2:
                assert hl_interval_check(graph).passed, graph

    @pytest.mark.slow
    def test_connected_graphs_on_five_vertices(self):
        for graph in _connected(5):
            assert spectral_bound_check(graph).passed, graph
            assert degree_sum_bound_check(graph).passed, graph
            assert min_root_bound_check(graph).passed, graph
