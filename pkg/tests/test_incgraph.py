import pytest

from hypercut import build
from hypercut.errors import BadLevel, NotASubgraph
from hypercut.incgraph import (
    Graph, Node, graph_blocks, graph_components, incidence_graph, line_graph, recognize_hypersubgraph,
)


def test_single_edge_incidence(single_edge):
    G = incidence_graph(single_edge)
    assert len(G.nodes) == 3 and len(G.links()) == 2
    assert G.pairs() == {("a", "e1"), ("b", "e1")}


def test_empty_edge_is_isolated_node():
    G = incidence_graph(build(["a"], [("e1", [])]))
    assert G.degree(Node("e", "e1")) == 0


def test_graph_blocks_path_and_cycle():
    path = Graph.from_links(["a", "e", "b"], [("a", "e"), ("e", "b")])
    s = graph_blocks(path)
    assert len(graph_components(path)) == 1
    assert s.cut_vertices == {"e"}
    assert {b.nodes for b in s.blocks} == {frozenset("ae"), frozenset("eb")}
    cycle = Graph.from_links("abcd", [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")])
    s = graph_blocks(cycle)
    assert len(s.blocks) == 1 and not s.cut_vertices


def test_recognize_hypersubgraph():
    H = build(["a", "b", "c"], [("e1", ["a", "b"]), ("e2", ["b", "c"])])
    G = incidence_graph(H)
    assert recognize_hypersubgraph(H, G.nodes, G.pairs()) == H
    assert recognize_hypersubgraph(H, [Node("v", "a"), Node("v", "b"), Node("e", "e1")], [("a", "e1")]) is None
    with pytest.raises(NotASubgraph):
        recognize_hypersubgraph(H, [Node("v", "a"), Node("e", "e2")], [("a", "e2")])


def test_line_graph_levels():
    disjoint = build(["a", "b", "c", "d"], [("e1", ["a", "b"]), ("e2", ["c", "d"])])
    assert not line_graph(disjoint).links()
    H = build(["a", "b", "c"], [("e1", ["a", "b"]), ("e2", ["b", "c"])])
    assert len(line_graph(H, 1).links()) == 1 and not line_graph(H, 2).links()
    par = build(["a", "b"], [("e1", ["a", "b"]), ("e2", ["a", "b"])])
    assert line_graph(par, 2).links() == {frozenset({"e1", "e2"})}
    with pytest.raises(BadLevel):
        line_graph(H, 0)
