from hypothesis import given, settings, strategies as st

from hypercut import build
from hypercut.blocks import blocks
from hypercut.connectivity import classify_cut_edge, is_connected, is_cut_vertex, omega
from hypercut.core import degrees, has_empty_edges
from hypercut.derive import dual
from hypercut.fileformat import emit, parse
from hypercut.oracle.brute import brute_blocks, brute_cut_kind, brute_is_cut_vertex, brute_omega


@st.composite
def hypergraphs(draw, max_vertices=6, max_edges=6, allow_empty=True):
    n = draw(st.integers(1, max_vertices))
    names = [f"v{i}" for i in range(1, n + 1)]
    m = draw(st.integers(0, max_edges))
    edges = []
    for j in range(1, m + 1):
        members = draw(st.sets(st.sampled_from(names), min_size=0 if allow_empty else 1))
        edges.append((f"e{j}", sorted(members)))
    return build(names, edges)


@settings(max_examples=300, deadline=None)
@given(hypergraphs())
def test_omega_matches_brute(H):
    assert omega(H) == brute_omega(H)


@settings(max_examples=300, deadline=None)
@given(hypergraphs())
def test_cut_edges_match_brute(H):
    for e in H.edge_ids:
        assert str(classify_cut_edge(H, e)) == brute_cut_kind(H, e)


@settings(max_examples=200, deadline=None)
@given(hypergraphs(max_vertices=5))
def test_cut_vertices_match_brute(H):
    if H.n >= 2:
        for v in H.vertices:
            assert is_cut_vertex(H, v) == brute_is_cut_vertex(H, v)


@settings(max_examples=150, deadline=None)
@given(hypergraphs(max_vertices=5, max_edges=5, allow_empty=False))
def test_blocks_match_brute(H):
    if is_connected(H):
        found = {(B.vertex_set, frozenset(B.edge_ids)) for B in blocks(H).blocks}
        assert found == brute_blocks(H)


@settings(max_examples=300, deadline=None)
@given(hypergraphs())
def test_handshake(H):
    assert sum(degrees(H).values()) == sum(len(vs) for vs in H.edges.values())


@settings(max_examples=300, deadline=None)
@given(hypergraphs())
def test_dual_involution_and_emit_roundtrip(H):
    assert parse(emit(H)) == H
    if H.m:
        assert dual(dual(H)) == H
        if not has_empty_edges(H) and all(d for d in degrees(H).values()):
            assert omega(dual(H)) == omega(H)
