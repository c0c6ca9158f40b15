"""Components, cut edges, cut vertices and separating vertices.

Every query is answered on the incidence graph.  Incidence graphs are memoized
per hypergraph value in a module-level cache; the hypergraph itself is never
mutated.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Mapping

from .core import Hypergraph, degree, has_empty_edges, has_singleton_edge, id_key, isolated_vertices
from .derive import delete_edge, delete_vertex
from .errors import HasEmptyEdges, InvariantViolation, LastVertex, NotConnected, PreconditionUnmet
from .incgraph import BipartiteIncidenceGraph, GraphBlockStructure, Node, graph_blocks, graph_components, incidence_graph


@lru_cache(maxsize=1024)
def gamma(H: Hypergraph) -> BipartiteIncidenceGraph:
    """Cached incidence graph of H."""
    return incidence_graph(H)


@lru_cache(maxsize=1024)
def gamma_blocks(H: Hypergraph) -> GraphBlockStructure:
    return graph_blocks(gamma(H))


class CutEdgeKind(enum.Enum):
    NOT_CUT = "NotCut"
    WEAK = "Weak"
    STRONG = "Strong"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class ComponentPartition:
    classes: tuple[tuple[str, ...], ...]
    edge_assignment: Mapping[str, int]
    stray_empty_edges: tuple[str, ...]

    @property
    def omega(self) -> int:
        return len(self.classes)

    def class_of(self, v: str) -> int:
        for i, members in enumerate(self.classes):
            if v in members:
                return i
        raise KeyError(v)


def components(H: Hypergraph) -> ComponentPartition:
    """Vertex classes under walk-connection; empty edges belong to no class."""
    classes, assignment, stray = [], {}, []
    for comp in graph_components(gamma(H)):
        vs = [x.name for x in comp if x.kind == "v"]
        es = [x.name for x in comp if x.kind == "e"]
        if not vs:
            stray.extend(es)
            continue
        classes.append((vs, es))
    classes.sort(key=lambda c: id_key(c[0][0]))
    for i, (_, es) in enumerate(classes):
        for e in es:
            assignment[e] = i
    return ComponentPartition(
        tuple(tuple(vs) for vs, _ in classes), assignment, tuple(sorted(stray, key=id_key))
    )


def omega(H: Hypergraph) -> int:
    return sum(1 for comp in graph_components(gamma(H)) if comp[0].kind == "v")


def is_connected(H: Hypergraph) -> bool:
    return omega(H) == 1


def classify_cut_edge(H: Hypergraph, e: str) -> CutEdgeKind:
    """Classify e by comparing the component counts of H and H - e."""
    size = len(H.psi(e))
    if not size:
        return CutEdgeKind.NOT_CUT
    before = omega(H)
    after = omega(delete_edge(H, e))
    if after <= before:
        return CutEdgeKind.NOT_CUT
    if after > before + size - 1:
        raise InvariantViolation(f"deleting {e!r} raised the component count by more than |e| - 1")
    return CutEdgeKind.STRONG if after == before + size - 1 else CutEdgeKind.WEAK


def cut_edges(H: Hypergraph) -> list[tuple[str, CutEdgeKind]]:
    """All cut edges with their kind, in id order.

    Uses one block pass over the incidence graph: the number of graph blocks
    at an e-node equals the number of components of H - e meeting e.
    """
    struct = gamma_blocks(H)
    at = {e: 0 for e in H.edge_ids}
    for block in struct.blocks:
        if not block.links:
            continue
        for x in block.nodes:
            if x.kind == "e":
                at[x.name] += 1
    out = []
    for e in sorted(H.edge_ids, key=id_key):
        k = at[e]
        if k >= 2:
            out.append((e, CutEdgeKind.STRONG if k == len(H.edges[e]) else CutEdgeKind.WEAK))
    return out


def is_cut_vertex(H: Hypergraph, v: str) -> bool:
    H.require_vertex(v)
    if H.n < 2:
        raise LastVertex("cut vertices need at least two vertices")
    if not has_singleton_edge(H, v):
        return Node("v", v) in gamma_blocks(H).cut_vertices
    # {v} is an edge: the incidence-graph shortcut does not apply.
    return omega(delete_vertex(H, v)) > omega(H)


def cut_vertices(H: Hypergraph) -> list[str]:
    if H.n < 2:
        raise LastVertex("cut vertices need at least two vertices")
    return [v for v in sorted(H.vertices, key=id_key) if is_cut_vertex(H, v)]


def _require_connected_without_empty(H: Hypergraph) -> None:
    if has_empty_edges(H):
        raise HasEmptyEdges("separating vertices are defined only without empty edges")
    if not is_connected(H):
        raise NotConnected("separating vertices are defined only for connected hypergraphs")


def is_separating_vertex(H: Hypergraph, v: str) -> bool:
    H.require_vertex(v)
    _require_connected_without_empty(H)
    return Node("v", v) in gamma_blocks(H).cut_vertices


def separating_vertices(H: Hypergraph) -> list[str]:
    _require_connected_without_empty(H)
    cut = gamma_blocks(H).cut_vertices
    return [v for v in sorted(H.vertices, key=id_key) if Node("v", v) in cut]


def cut_vertex_bound_check(H: Hypergraph, v: str) -> bool:
    """Check omega(H minus v) <= omega(H) + deg(v) - 1 for a qualifying cut vertex."""
    H.require_vertex(v)
    if H.n < 2 or H.m < 1:
        raise PreconditionUnmet("need at least two vertices and one edge")
    if has_empty_edges(H) or isolated_vertices(H):
        raise PreconditionUnmet("need no empty edges and no isolated vertices")
    if has_singleton_edge(H, v):
        raise PreconditionUnmet(f"{{{v}}} is an edge")
    if not is_cut_vertex(H, v):
        raise PreconditionUnmet(f"{v!r} is not a cut vertex")
    return omega(delete_vertex(H, v)) <= omega(H) + degree(H, v) - 1
