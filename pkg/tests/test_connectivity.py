import pytest

from hypercut import build
from hypercut.connectivity import (
    CutEdgeKind, classify_cut_edge, components, cut_edges, cut_vertex_bound_check, cut_vertices,
    is_cut_vertex, is_separating_vertex, omega, separating_vertices,
)
from hypercut.derive import delete_edge
from hypercut.errors import HasEmptyEdges, LastVertex, NotConnected

PATH = build(["a", "b", "c"], [("e1", ["a", "b"]), ("e2", ["b", "c"])])


def test_omega_basics(weak_cut_n2):
    assert omega(build(["v"])) == 1
    assert omega(delete_edge(weak_cut_n2, "e3")) == 2
    part = components(build(["v"], [("e1", [])]))
    assert part.omega == 1 and part.stray_empty_edges == ("e1",)


def test_cut_edge_kinds(weak_cut_n2):
    assert classify_cut_edge(weak_cut_n2, "e3") is CutEdgeKind.WEAK
    assert str(CutEdgeKind.WEAK) == "Weak"
    assert dict(cut_edges(weak_cut_n2)) == {"e2": CutEdgeKind.STRONG, "e3": CutEdgeKind.WEAK}
    H = build(["a"], [("e1", [])])
    assert classify_cut_edge(H, "e1") is CutEdgeKind.NOT_CUT


def test_cut_vertices(two_vertex):
    assert is_cut_vertex(PATH, "b")
    assert not is_cut_vertex(two_vertex, "v")
    assert not is_cut_vertex(build(["a", "b", "c"], [("e", ["a", "b", "c"])]), "a")
    assert cut_vertices(PATH) == ["b"]
    with pytest.raises(LastVertex):
        cut_vertices(build(["v"]))


def test_separating(two_vertex, single_edge):
    assert is_separating_vertex(two_vertex, "v") and not is_cut_vertex(two_vertex, "v")
    assert not any(is_separating_vertex(single_edge, v) for v in single_edge.vertices)
    assert separating_vertices(PATH) == ["b"]
    with pytest.raises(NotConnected):
        separating_vertices(build(["a", "b"]))
    with pytest.raises(HasEmptyEdges):
        separating_vertices(build(["a"], [("e", [])]))


def test_cut_vertex_bound():
    assert cut_vertex_bound_check(PATH, "b")
    star = build(["c", "x", "y", "z"], [("e1", ["c", "x"]), ("e2", ["c", "y"]), ("e3", ["c", "z"])])
    assert cut_vertex_bound_check(star, "c")
    assert omega(build(["x", "y", "z"])) == 3
