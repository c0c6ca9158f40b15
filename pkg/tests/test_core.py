import itertools

import pytest

from hypercut import build
from hypercut.constructions import regular_with_weak_cut_edge
from hypercut.core import (
    corank, degree, degrees, flags, from_incidence_matrix, incidence_matrix, is_regular, is_simple,
    is_uniform, isolated_vertices, multiplicity, rank,
)
from hypercut.errors import DuplicateId, EmptyEdgeCollection, EmptyVertexSet, UnknownVertexInEdge


def test_trivial_hypergraph():
    H = build(["v"])
    assert H.n == 1 and H.m == 0


def test_two_vertex_example_builds(two_vertex):
    assert two_vertex.psi("e1") == {"v"}
    assert two_vertex.psi("e2") == {"u", "v"}


@pytest.mark.parametrize("vertices, edges, exc", [
    ([], [], EmptyVertexSet),
    (["a", "a"], [], DuplicateId),
    (["a"], [("e", ["a"]), ("e", ["a"])], DuplicateId),
    (["a"], [("e", ["b"])], UnknownVertexInEdge),
])
def test_build_rejects(vertices, edges, exc):
    with pytest.raises(exc):
        build(vertices, edges)


def test_equality_is_labeled():
    H1 = build(["a", "b"], [("e1", ["a", "b"])])
    assert H1 == build(["b", "a"], [("e1", ["b", "a"])])
    assert H1 != build(["a", "b"], [("f1", ["a", "b"])])


def test_degrees(two_vertex, weak_cut_n2):
    assert degree(two_vertex, "v") == 2
    assert set(degrees(regular_with_weak_cut_edge(4)).values()) == {4}
    assert degree(build(["a", "b"], [("e", ["a"])]), "b") == 0


def test_flags(two_vertex, single_edge):
    assert flags(build(["a"])) == []
    assert {(f.vertex, f.edge) for f in flags(single_edge)} == {("a", "e1"), ("b", "e1")}
    assert len(flags(two_vertex)) == 3


def test_rank_corank():
    H = build(["a", "b"], [("e1", ["a", "b"]), ("e2", ["a"])])
    assert (rank(H), corank(H)) == (2, 1)
    U = build(["a", "b", "c"], [("e1", ["a", "b"]), ("e2", ["b", "c"])])
    assert rank(U) == corank(U) == 2
    with pytest.raises(EmptyEdgeCollection):
        rank(build(["a"]))


def test_multiplicity(two_vertex):
    H = build(["a", "b"], [("e1", ["a", "b"]), ("e2", ["a", "b"])])
    assert multiplicity(H, "e1") == 2 and not is_simple(H)
    assert all(multiplicity(two_vertex, e) == 1 for e in two_vertex.edge_ids) and is_simple(two_vertex)
    assert multiplicity(build(["a"], [("e", ["a"])]), "e") == 1


def test_regular_and_uniform(weak_cut_n2):
    assert is_regular(weak_cut_n2, 2)
    # edge sizes are 1, 2, 3, 2, so the construction is not uniform
    assert not is_uniform(weak_cut_n2, 2)
    empty = build(["a", "b"])
    assert is_regular(empty, 0) and all(is_uniform(empty, r) for r in range(4))
    assert not is_uniform(build(["a", "b"], [("e1", ["a", "b"]), ("e2", ["a"])]), 2)


def test_incidence_matrix(single_edge):
    assert incidence_matrix(single_edge).cells == ((1,), (1,))
    H = from_incidence_matrix([[0, 0], [0, 0], [0, 0]])
    assert len(isolated_vertices(H)) == 3 and all(not vs for vs in H.edges.values())


def test_matrix_roundtrip_all_3x3():
    for bits in itertools.product((0, 1), repeat=9):
        rows = [list(bits[i:i + 3]) for i in (0, 3, 6)]
        assert [list(r) for r in incidence_matrix(from_incidence_matrix(rows)).cells] == rows
