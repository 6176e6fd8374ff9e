"""Graph model, ingestion, generators and subgraph enumeration."""

from lappoly.graphs.enumeration import (
    DisjointSet,
    count_components,
    enumerate_two_regular,
)
from lappoly.graphs.formats import (
    emit_edge_list,
    emit_graph6,
    parse_edge_list,
    parse_graph6,
    split_edge_lines,
)
from lappoly.graphs.generators import (
    FAMILIES,
    all_graphs,
    generate_family,
    random_graph,
    random_tree,
    random_unicyclic,
)
from lappoly.graphs.graph import (
    ComponentKind,
    ComponentReport,
    Edge,
    Graph,
    InducedSubgraph,
    SubdivisionGraph,
    TwoRegularSubgraph,
    components,
    degree_sequence,
    edge_induced,
    induced_delete,
    subdivision,
)

__all__ = [
    "DisjointSet",
    "count_components",
    "enumerate_two_regular",
    "emit_edge_list",
    "emit_graph6",
    "parse_edge_list",
    "parse_graph6",
    "split_edge_lines",
    "FAMILIES",
    "all_graphs",
    "generate_family",
    "random_graph",
    "random_tree",
    "random_unicyclic",
    "ComponentKind",
    "ComponentReport",
    "Edge",
    "Graph",
    "InducedSubgraph",
    "SubdivisionGraph",
    "TwoRegularSubgraph",
    "components",
    "degree_sequence",
    "edge_induced",
    "induced_delete",
    "subdivision",
]
