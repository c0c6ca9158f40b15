"""The hypergraph value type and its elementary statistics.

A hypergraph is a nonempty vertex set together with a mapping from edge ids
to vertex subsets.  The mapping is the incidence function: two edge ids with
the same vertex subset are parallel edges, and an edge may be empty.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from types import MappingProxyType
from typing import Iterable, Mapping, NamedTuple, Sequence

from .errors import (
    DuplicateId,
    EmptyEdgeCollection,
    EmptyVertexSet,
    MalformedMatrix,
    UnknownEdge,
    UnknownVertex,
    UnknownVertexInEdge,
)

_DIGITS = re.compile(r"(\d+)")


def id_key(token: str):
    """Natural sort key, so that ``v2`` sorts before ``v10``."""
    parts = _DIGITS.split(token)
    return tuple(int(p) if i % 2 else p for i, p in enumerate(parts)), token


def sorted_ids(ids: Iterable[str]) -> list[str]:
    return sorted(ids, key=id_key)


class Hypergraph:
    """Immutable labeled hypergraph.

    Use :func:`build` to construct one from untrusted input.  Iteration order
    of vertices and edges is the insertion order; equality ignores it.
    """

    __slots__ = ("_vertices", "_vset", "_edges", "_hash")

    def __init__(self, vertices: Sequence[str], edges: Iterable[tuple[str, Iterable[str]]]):
        # Trusted constructor: callers guarantee validity.
        self._vertices = tuple(vertices)
        self._vset = frozenset(self._vertices)
        self._edges = MappingProxyType({e: frozenset(vs) for e, vs in edges})
        self._hash = None

    @property
    def vertices(self) -> tuple[str, ...]:
        return self._vertices

    @property
    def vertex_set(self) -> frozenset[str]:
        return self._vset

    @property
    def edges(self) -> Mapping[str, frozenset[str]]:
        return self._edges

    @property
    def edge_ids(self) -> tuple[str, ...]:
        return tuple(self._edges)

    @property
    def n(self) -> int:
        return len(self._vertices)

    @property
    def m(self) -> int:
        return len(self._edges)

    def psi(self, e: str) -> frozenset[str]:
        try:
            return self._edges[e]
        except KeyError:
            raise UnknownEdge(f"unknown edge {e!r}") from None

    def has_vertex(self, v: str) -> bool:
        return v in self._vset

    def has_edge(self, e: str) -> bool:
        return e in self._edges

    def require_vertex(self, v: str) -> None:
        if v not in self._vset:
            raise UnknownVertex(f"unknown vertex {v!r}")

    def require_edge(self, e: str) -> None:
        if e not in self._edges:
            raise UnknownEdge(f"unknown edge {e!r}")

    def __eq__(self, other):
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return self._vset == other._vset and dict(self._edges) == dict(other._edges)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._vset, frozenset(self._edges.items())))
        return self._hash

    def __repr__(self):
        body = ", ".join(f"{e}: {{{', '.join(sorted_ids(vs))}}}" for e, vs in self._edges.items())
        return f"Hypergraph(V={{{', '.join(self._vertices)}}}, E={{{body}}})"


class Flag(NamedTuple):
    vertex: str
    edge: str


@dataclass(frozen=True)
class IncidenceMatrix:
    rows: tuple[str, ...]
    cols: tuple[str, ...]
    cells: tuple[tuple[int, ...], ...]


def build(vertices: Iterable[str], edges: Iterable[tuple[str, Iterable[str]]] = ()) -> Hypergraph:
    """Validate and construct a hypergraph.

    Raises EmptyVertexSet, DuplicateId (for a repeated vertex or edge id) or
    UnknownVertexInEdge.
    """
    vertices = list(vertices)
    if not vertices:
        raise EmptyVertexSet("a hypergraph needs at least one vertex")
    seen: set[str] = set()
    for v in vertices:
        if v in seen:
            raise DuplicateId(f"duplicate vertex id {v!r}")
        seen.add(v)
    edge_items = []
    edge_seen: set[str] = set()
    for e, members in edges:
        if e in edge_seen:
            raise DuplicateId(f"duplicate edge id {e!r}")
        edge_seen.add(e)
        members = frozenset(members)
        stray = members - seen
        if stray:
            raise UnknownVertexInEdge(f"edge {e!r} references unknown vertex {sorted_ids(stray)[0]!r}")
        edge_items.append((e, members))
    return Hypergraph(vertices, edge_items)


def degree(H: Hypergraph, v: str) -> int:
    H.require_vertex(v)
    return sum(1 for members in H.edges.values() if v in members)


def degrees(H: Hypergraph) -> dict[str, int]:
    counts = Counter(v for members in H.edges.values() for v in members)
    return {v: counts[v] for v in H.vertices}


def flags(H: Hypergraph) -> list[Flag]:
    order = {v: i for i, v in enumerate(H.vertices)}
    return [Flag(v, e) for e, members in H.edges.items() for v in sorted(members, key=order.__getitem__)]


def rank(H: Hypergraph) -> int:
    if not H.m:
        raise EmptyEdgeCollection("rank is undefined without edges")
    return max(len(vs) for vs in H.edges.values())


def corank(H: Hypergraph) -> int:
    if not H.m:
        raise EmptyEdgeCollection("corank is undefined without edges")
    return min(len(vs) for vs in H.edges.values())


def multiplicity(H: Hypergraph, e: str) -> int:
    target = H.psi(e)
    return sum(1 for vs in H.edges.values() if vs == target)


def is_simple(H: Hypergraph) -> bool:
    return len(set(H.edges.values())) == H.m


def is_uniform(H: Hypergraph, r: int) -> bool:
    return all(len(vs) == r for vs in H.edges.values())


def is_regular(H: Hypergraph, r: int) -> bool:
    return all(d == r for d in degrees(H).values())


def isolated_vertices(H: Hypergraph) -> list[str]:
    return [v for v, d in degrees(H).items() if d == 0]


def pendant_vertices(H: Hypergraph) -> list[str]:
    return [v for v, d in degrees(H).items() if d == 1]


def empty_edges(H: Hypergraph) -> list[str]:
    return [e for e, vs in H.edges.items() if not vs]


def has_empty_edges(H: Hypergraph) -> bool:
    return any(not vs for vs in H.edges.values())


def has_singleton_edge(H: Hypergraph, v: str) -> bool:
    """True when {v} is one of the edges."""
    return any(len(vs) == 1 and v in vs for vs in H.edges.values())


def incidence_matrix(H: Hypergraph) -> IncidenceMatrix:
    cells = tuple(tuple(int(v in H.edges[e]) for e in H.edge_ids) for v in H.vertices)
    return IncidenceMatrix(H.vertices, H.edge_ids, cells)


def from_incidence_matrix(M) -> Hypergraph:
    """Hypergraph with fresh ids v1..vn, e1..em whose incidence matrix is M.

    Accepts an :class:`IncidenceMatrix` or any row-major sequence of 0/1 rows.
    """
    rows = M.cells if isinstance(M, IncidenceMatrix) else M
    rows = [list(r) for r in rows]
    if not rows:
        raise MalformedMatrix("matrix needs at least one row")
    width = len(rows[0])
    for i, row in enumerate(rows):
        if len(row) != width:
            raise MalformedMatrix(f"row {i} has {len(row)} cells, expected {width}")
        for c in row:
            if c not in (0, 1):
                raise MalformedMatrix(f"cell value {c!r} is not 0 or 1")
    vertices = [f"v{i + 1}" for i in range(len(rows))]
    edges = [(f"e{j + 1}", [vertices[i] for i in range(len(rows)) if rows[i][j]]) for j in range(width)]
    return Hypergraph(vertices, edges)
