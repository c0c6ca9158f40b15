import pytest

from hypercut import build
from hypercut.blocks import is_nonseparable
from hypercut.derive import dual
from hypercut.errors import EndpointMismatch, MalformedAlternation, NotClosed, UnknownToken
from hypercut.incgraph import incidence_graph
from hypercut.walks import (
    Walk, anatomy, associated_hypersubgraph, associated_subhypergraph, classify, classify_incidence,
    concatenate, dual_closed_walk, find_path, to_incidence_walk,
)

W = Walk.parse


def test_back_and_forth_is_not_a_trail():
    H = build(["v0", "v1"], [("e", ["v0", "v1"])])
    c = classify(H, W("v0 e v1 e v0"))
    assert c.is_walk and c.is_closed and not c.is_trail
    assert c.name == "closed_walk"


def test_parallel_two_cycle():
    H = build(["v0", "v1"], [("e1", ["v0", "v1"]), ("e2", ["v0", "v1"])])
    c = classify(H, W("v0 e1 v1 e2 v0"))
    assert c.is_cycle and c.name == "cycle"


def test_pseudo_cycle_with_repeated_edge():
    H = build(["v0", "v1", "v2", "v3"],
              [("e", ["v0", "v1", "v2", "v3"]), ("f", ["v1", "v2"]), ("g", ["v3", "v0"])])
    c = classify(H, W("v0 e v1 f v2 e v3 g v0"))
    assert c.is_pseudo_cycle and not c.is_cycle
    assert c.name == "pseudo_cycle"


def test_single_edge_path(single_edge):
    assert classify(single_edge, W("a e1 b")).name == "path"
    assert classify(single_edge, W("a")).name == "path"


def test_bad_tokens(single_edge):
    with pytest.raises(UnknownToken):
        classify(single_edge, W("a e9 b"))
    with pytest.raises(MalformedAlternation):
        classify(single_edge, W("a b"))


def test_anatomy_and_associated():
    H = build(["v0", "v1", "x"], [("e", ["v0", "v1", "x"])])
    path = W("v0 e v1")
    a = anatomy(H, path)
    assert a.anchors == {"v0", "v1"} and a.floaters == {"x"}
    witness = associated_subhypergraph(H, path)
    assert witness.child.psi("e") == {"v0", "v1"} and witness.holds_for(H)
    assert associated_hypersubgraph(H, path).psi("e") == {"v0", "v1", "x"}
    bare = anatomy(H, W("v0"))
    assert bare.anchors == {"v0"} and not bare.edge_ids
    assert associated_subhypergraph(H, W("v0")).child == build(["v0"])


def test_associated_of_cycle_is_nonseparable():
    H = build(["a", "b", "c", "d"], [("e1", ["a", "b", "d"]), ("e2", ["b", "c"]), ("e3", ["c", "a"])])
    C = W("a e1 b e2 c e3 a")
    assert classify(H, C).is_cycle
    assert is_nonseparable(associated_hypersubgraph(H, C))
    assert is_nonseparable(associated_subhypergraph(H, C).child)


def test_concatenate():
    P = W("v0 e v1")
    assert concatenate(P, W("v1")) == P
    assert concatenate(P, W("v1 f v2")) == W("v0 e v1 f v2")
    with pytest.raises(EndpointMismatch):
        concatenate(P, W("v0 f v2"))


def test_incidence_walk_doubles_length():
    H = build(["a", "b", "c"], [("e1", ["a", "b"]), ("e2", ["b", "c"])])
    P = W("a e1 b e2 c")
    seq = to_incidence_walk(P)
    assert len(seq) == 2 * P.length + 1
    g = classify_incidence(incidence_graph(H), seq)
    assert g.is_path


def test_dual_closed_walks():
    H = build(["v0", "v1"], [("e1", ["v0", "v1"]), ("e2", ["v0", "v1"])])
    D = dual_closed_walk(H, W("v0 e1 v1 e2 v0"))
    assert classify(dual(H), D).is_cycle
    with pytest.raises(NotClosed):
        dual_closed_walk(H, W("v0 e1 v1"))


def test_find_path():
    H = build(["a", "b", "c", "z"], [("e1", ["a", "b"]), ("e2", ["b", "c"])])
    assert find_path(H, "a", "a") == W("a")
    assert find_path(H, "a", "z") is None
    P = find_path(H, "a", "c")
    assert P == W("a e1 b e2 c") and classify(H, P).is_path
