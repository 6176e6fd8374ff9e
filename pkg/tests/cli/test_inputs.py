import pytest

from lappoly.cli.inputs import (
    describe,
    parse_family,
    parse_key_values,
    parse_random,
    parse_vertex_set,
)
from lappoly.exceptions import BadParameter
from lappoly.graphs import generate_family


class TestParsers:
    def test_key_values(self):
        values = parse_key_values("n=9, p=0.4,seed=7", ("n", "p", "seed"), "--random")
        assert values == {"n": "9", "p": "0.4", "seed": "7"}

    @pytest.mark.parametrize(
        "text", ["n=9,p=0.4", "n=9,p=0.4,seed=7,x=1", "n=9,n=9,p=1,seed=0", "n9"]
    )
    def test_key_values_errors(self, text):
        with pytest.raises(BadParameter):
            parse_key_values(text, ("n", "p", "seed"), "--random")

    def test_random(self):
        assert parse_random("n=4,p=1,seed=2") == {"n": 4, "p": 1.0, "seed": 2}
        with pytest.raises(BadParameter):
            parse_random("n=four,p=1,seed=2")
        with pytest.raises(BadParameter):
            parse_random("n=-1,p=1,seed=2")

    def test_family(self, c4):
        assert parse_family("cycle:4") == c4
        assert parse_family("complete_bipartite:2,3").num_edges == 6
        with pytest.raises(BadParameter):
            parse_family("cycle:x")
        with pytest.raises(BadParameter):
            parse_family("wheel:5")

    def test_vertex_set(self):
        assert parse_vertex_set("0, 2,3") == frozenset({0, 2, 3})
        assert parse_vertex_set("") == frozenset()
        with pytest.raises(BadParameter):
            parse_vertex_set("a")

    def test_describe(self, triangle):
        descriptor = describe(triangle, "x")
        assert descriptor == {"source": "x", "graph6": "Bw", "n": 3, "m": 3}

    def test_describe_beyond_graph6(self):
        descriptor = describe(generate_family("path", [63]), "x")
        assert descriptor["graph6"] is None
        assert descriptor["n"] == 63 and descriptor["m"] == 62
