"""New hypergraphs from old: deletions, induced structures, traces,
union/intersection/decomposition and the dual.

Edge ids are preserved by every operation here except :func:`dual`, which
swaps the roles of vertex and edge ids verbatim.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .core import Hypergraph, degrees
from .errors import (
    EmptyEdgeCollection,
    EmptySelection,
    IncidenceDisagreement,
    LastVertex,
    ResultHasNoVertices,
)


@dataclass(frozen=True)
class SubhypergraphWitness:
    """A subhypergraph together with the injective edge map into its parent."""

    child: Hypergraph
    edge_origin: Mapping[str, str]

    def holds_for(self, parent: Hypergraph) -> bool:
        """Check the witness law against ``parent``."""
        V = self.child.vertex_set
        if not V <= parent.vertex_set:
            return False
        origins = list(self.edge_origin.values())
        if len(set(origins)) != len(origins) or set(self.edge_origin) != set(self.child.edge_ids):
            return False
        return all(
            parent.has_edge(src) and self.child.psi(e) == parent.psi(src) & V
            for e, src in self.edge_origin.items()
        )


def _vertex_selection(H: Hypergraph, selection: Iterable[str]) -> frozenset[str]:
    selected = frozenset(selection)
    if not selected:
        raise EmptySelection("vertex selection is empty")
    for v in selected:
        H.require_vertex(v)
    return selected


def _restrict_vertices(H: Hypergraph, keep: frozenset[str]) -> list[str]:
    return [v for v in H.vertices if v in keep]


def delete_edges(H: Hypergraph, doomed: Iterable[str]) -> Hypergraph:
    doomed = set(doomed)
    for e in doomed:
        H.require_edge(e)
    return Hypergraph(H.vertices, [(e, vs) for e, vs in H.edges.items() if e not in doomed])


def delete_edge(H: Hypergraph, e: str) -> Hypergraph:
    """The spanning edge-deleted hypersubgraph H - e."""
    return delete_edges(H, [e])


def delete_vertex(H: Hypergraph, v: str) -> Hypergraph:
    """Vertex-deleted subhypergraph: drop v everywhere, then discard empty edges."""
    H.require_vertex(v)
    if H.n < 2:
        raise LastVertex("cannot delete the only vertex")
    edges = []
    for e, vs in H.edges.items():
        rest = vs - {v}
        if rest:
            edges.append((e, rest))
    return Hypergraph([u for u in H.vertices if u != v], edges)


def strong_delete_vertex(H: Hypergraph, v: str) -> Hypergraph:
    """Remove v and every edge containing it."""
    H.require_vertex(v)
    if H.n < 2:
        raise LastVertex("cannot delete the only vertex")
    return Hypergraph([u for u in H.vertices if u != v], [(e, vs) for e, vs in H.edges.items() if v not in vs])


def strong_delete_edge(H: Hypergraph, e: str) -> Hypergraph:
    """Remove e, all of its vertices, and those vertices from the other edges.

    Edges emptied along the way are kept as empty edges.
    """
    gone = H.psi(e)
    survivors = [u for u in H.vertices if u not in gone]
    if not survivors:
        raise ResultHasNoVertices(f"strongly deleting {e!r} removes every vertex")
    return Hypergraph(survivors, [(f, vs - gone) for f, vs in H.edges.items() if f != e])


def induced_subhypergraph(H: Hypergraph, selection: Iterable[str]) -> SubhypergraphWitness:
    keep = _vertex_selection(H, selection)
    edges, origin = [], {}
    for e, vs in H.edges.items():
        cut = vs & keep
        if cut:
            edges.append((e, cut))
            origin[e] = e
    return SubhypergraphWitness(Hypergraph(_restrict_vertices(H, keep), edges), origin)


def induced_hypersubgraph_vertices(H: Hypergraph, selection: Iterable[str]) -> Hypergraph:
    """H[V']: the nonempty edges lying wholly inside V'."""
    keep = _vertex_selection(H, selection)
    return Hypergraph(
        _restrict_vertices(H, keep), [(e, vs) for e, vs in H.edges.items() if vs and vs <= keep]
    )


def induced_hypersubgraph_edges(H: Hypergraph, selection: Iterable[str]) -> Hypergraph:
    """H[E']: the selected edges on the union of their vertices."""
    chosen = set(selection)
    for e in chosen:
        H.require_edge(e)
    covered = frozenset().union(*(H.edges[e] for e in chosen))
    if not covered:
        raise ResultHasNoVertices("selected edges cover no vertex")
    return Hypergraph(_restrict_vertices(H, covered), [(e, vs) for e, vs in H.edges.items() if e in chosen])


def trace(H: Hypergraph, selection: Iterable[str]) -> Hypergraph:
    """Partial hypergraph determined by the edges contained in V'.

    Empty edges are dropped: they cover no vertex of V'.
    """
    keep = _vertex_selection(H, selection)
    inside = [e for e, vs in H.edges.items() if vs and vs <= keep]
    return induced_hypersubgraph_edges(H, inside)


def union(H1: Hypergraph, H2: Hypergraph) -> Hypergraph:
    edges = dict(H1.edges)
    for e, vs in H2.edges.items():
        if e in edges and edges[e] != vs:
            raise IncidenceDisagreement(f"edge {e!r} has different vertex sets in the two operands")
        edges[e] = vs
    vertices = list(H1.vertices) + [v for v in H2.vertices if not H1.has_vertex(v)]
    return Hypergraph(vertices, edges.items())


def intersection(H1: Hypergraph, H2: Hypergraph) -> Hypergraph:
    for e, vs in H1.edges.items():
        if H2.has_edge(e) and H2.edges[e] != vs:
            raise IncidenceDisagreement(f"edge {e!r} has different vertex sets in the two operands")
    vertices = [v for v in H1.vertices if H2.has_vertex(v)]
    if not vertices:
        raise ResultHasNoVertices("operands share no vertex")
    return Hypergraph(vertices, [(e, vs) for e, vs in H1.edges.items() if H2.has_edge(e)])


def decompose_check(H: Hypergraph, H1: Hypergraph, H2: Hypergraph) -> bool:
    """True when H is the edge-disjoint union of H1 and H2."""
    if set(H1.edge_ids) & set(H2.edge_ids):
        return False
    return union(H1, H2) == H


def dual(H: Hypergraph) -> Hypergraph:
    """Transpose: edge ids become vertex ids and vertex ids become edge ids."""
    if not H.m:
        raise EmptyEdgeCollection("the dual needs at least one edge")
    return Hypergraph(H.edge_ids, [(v, [e for e, vs in H.edges.items() if v in vs]) for v in H.vertices])


def is_hypersubgraph(sub: Hypergraph, H: Hypergraph) -> bool:
    return sub.vertex_set <= H.vertex_set and all(
        H.has_edge(e) and H.edges[e] == vs for e, vs in sub.edges.items()
    )


def is_r_factor(H: Hypergraph, F: Hypergraph, r: int) -> bool:
    """True when F is a spanning r-regular hypersubgraph of H."""
    return is_hypersubgraph(F, H) and F.vertex_set == H.vertex_set and all(
        d == r for d in degrees(F).values()
    )

