from lappoly.graphs import (
    DisjointSet,
    Graph,
    count_components,
    enumerate_two_regular,
    generate_family,
)


class TestDisjointSet:
    def test_tree_then_cycle(self):
        forest = DisjointSet()
        root = forest.add_edge(0, 1)
        assert forest.excess(root) == -1
        root = forest.add_edge(1, 2)
        assert forest.size(root) == 3
        root = forest.add_edge(0, 2)
        assert forest.excess(root) == 0
        assert forest.roots() == [root]

    def test_copy_is_independent(self):
        forest = DisjointSet()
        forest.add_edge(0, 1)
        grown = forest.copy()
        grown.add_edge(2, 3)
        assert len(grown.roots()) == 2
        assert len(forest.roots()) == 1

    def test_count_components(self):
        assert count_components([(0, 1), (2, 3), (3, 4)]) == 2
        assert count_components([]) == 0


class TestTwoRegular:
    def test_triangle(self, triangle):
        cycles = enumerate_two_regular(triangle)
        assert len(cycles) == 1
        assert cycles[0].omega == 1
        assert cycles[0].vertices == frozenset({0, 1, 2})

    def test_k4(self, k4):
        cycles = enumerate_two_regular(k4)
        assert len(cycles) == 7
        assert sorted(len(c.edge_set) for c in cycles) == [3, 3, 3, 3, 4, 4, 4]

    def test_two_triangles(self):
        graph = Graph(6, ((0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)))
        cycles = enumerate_two_regular(graph)
        assert sorted(c.omega for c in cycles) == [1, 1, 2]

    def test_forest_has_none(self, p4):
        assert enumerate_two_regular(p4) == []

    def test_order_is_lexicographic(self):
        cycles = enumerate_two_regular(generate_family("complete", [5]))
        assert [c.edge_set for c in cycles] == sorted(c.edge_set for c in cycles)
