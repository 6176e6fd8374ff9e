import networkx as nx
import pytest

from lappoly.exceptions import (
    BadParameter,
    DuplicateEdge,
    EndpointOutOfRange,
    LoopEdge,
    MalformedEdgeList,
    MalformedGraph6,
)
from lappoly.graphs import (
    Graph,
    all_graphs,
    emit_edge_list,
    emit_graph6,
    generate_family,
    parse_edge_list,
    parse_graph6,
)


class TestGraph6:
    def test_parse_k2(self, k2):
        assert parse_graph6("A_") == k2

    def test_parse_with_header(self, triangle):
        assert parse_graph6(">>graph6<<Bw\n") == triangle

    def test_emit(self, triangle, k2):
        assert emit_graph6(triangle) == "Bw"
        assert emit_graph6(k2) == "A_"

    def test_emit_parse(self, paw):
        assert parse_graph6(emit_graph6(paw)) == paw

    @pytest.mark.parametrize(
        "n",
        [0, 1, 2, 3, 4, 5]
        + [pytest.param(n, marks=pytest.mark.slow) for n in (6, 7)],
    )
    def test_round_trip_all_graphs(self, n):
        for graph in all_graphs(n):
            assert parse_graph6(emit_graph6(graph)) == graph

    def test_largest_order(self):
        path = generate_family("path", [62])
        assert parse_graph6(emit_graph6(path)) == path

    def test_order_too_large(self):
        with pytest.raises(BadParameter):
            emit_graph6(Graph(63))
        text = nx.to_graph6_bytes(nx.path_graph(63), header=False).decode("ascii")
        with pytest.raises(MalformedGraph6):
            parse_graph6(text)

    @pytest.mark.parametrize("text", ["", "A", "A_A_", "A ", "Bw\nBw"])
    def test_malformed(self, text):
        with pytest.raises(MalformedGraph6):
            parse_graph6(text)


class TestEdgeList:
    def test_parse(self, p3):
        assert parse_edge_list("3\n0 1\n1 2\n") == p3

    def test_comments_and_blanks(self, p3):
        text = "# a path\n3\n\n1 2  \n# middle\n0 1\n"
        assert parse_edge_list(text) == p3

    def test_isolated_vertices(self):
        assert parse_edge_list("4\n") == Graph(4)

    def test_emit(self, paw):
        assert parse_edge_list(emit_edge_list(paw)) == paw
        assert emit_edge_list(generate_family("path", [2])) == "2\n0 1\n"

    @pytest.mark.parametrize(
        "text,error",
        [
            ("", MalformedEdgeList),
            ("x\n", MalformedEdgeList),
            ("-1\n", MalformedEdgeList),
            ("3\n0 1 2\n", MalformedEdgeList),
            ("3\n0 a\n", MalformedEdgeList),
            ("3\n0 3\n", EndpointOutOfRange),
            ("3\n1 1\n", LoopEdge),
            ("3\n0 1\n1 0\n", DuplicateEdge),
        ],
    )
    def test_malformed(self, text, error):
        with pytest.raises(error):
            parse_edge_list(text)
