"""Brute-force hypergraph isomorphism for small instances."""

from __future__ import annotations

from collections import Counter
from typing import Iterable, Iterator, Optional

from ..core import Hypergraph, id_key
from ..errors import TooLarge


def _degree_profile(H: Hypergraph) -> dict[str, tuple]:
    """Per-vertex invariant: degree plus the sorted sizes of incident edges."""
    return {
        v: (sum(1 for vs in H.edges.values() if v in vs), tuple(sorted(len(vs) for vs in H.edges.values() if v in vs)))
        for v in H.vertices
    }


def _vertex_bijections(H1: Hypergraph, H2: Hypergraph) -> Iterator[dict[str, str]]:
    p1, p2 = _degree_profile(H1), _degree_profile(H2)
    order = sorted(H1.vertices, key=lambda v: (p1[v], id_key(v)))
    targets = list(H2.vertices)
    phi: dict[str, str] = {}
    used: set[str] = set()

    def place(i: int):
        if i == len(order):
            yield dict(phi)
            return
        v = order[i]
        for w in targets:
            if w not in used and p2[w] == p1[v]:
                phi[v] = w
                used.add(w)
                yield from place(i + 1)
                used.discard(w)
                del phi[v]

    yield from place(0)


def find_isomorphism(H1: Hypergraph, H2: Hypergraph, max_vertices: int = 8,
                     max_edges: int = 8) -> Optional[tuple[dict[str, str], dict[str, str]]]:
    """Vertex and edge bijections carrying H1 onto H2, or None."""
    for H in (H1, H2):
        if H.n > max_vertices or H.m > max_edges:
            raise TooLarge(f"isomorphism search is capped at {max_vertices} vertices and {max_edges} edges")
    if H1.n != H2.n or H1.m != H2.m:
        return None
    if Counter(len(vs) for vs in H1.edges.values()) != Counter(len(vs) for vs in H2.edges.values()):
        return None
    for phi in _vertex_bijections(H1, H2):
        pool: dict[frozenset, list[str]] = {}
        for e in sorted(H2.edge_ids, key=id_key):
            pool.setdefault(H2.edges[e], []).append(e)
        theta = {}
        for e in sorted(H1.edge_ids, key=id_key):
            image = frozenset(phi[v] for v in H1.edges[e])
            bucket = pool.get(image)
            if not bucket:
                break
            theta[e] = bucket.pop(0)
        else:
            return phi, theta
    return None


def are_isomorphic(H1: Hypergraph, H2: Hypergraph, max_vertices: int = 8, max_edges: int = 8) -> bool:
    return find_isomorphism(H1, H2, max_vertices, max_edges) is not None


def distinct_up_to_isomorphism(items: Iterable[Hypergraph]) -> list[Hypergraph]:
    """First representative of each isomorphism class, in input order."""
    kept: list[Hypergraph] = []
    for H in items:
        if not any(are_isomorphic(H, K) for K in kept):
            kept.append(H)
    return kept
