"""Block decomposition of hypergraphs.

Blocks are recovered from the biconnected components of the incidence graph:
graph blocks that meet at an e-node are merged, graph blocks that meet at a
v-node are not.  Each merged group is the incidence graph of one block.
"""

from __future__ import annotations

from dataclasses import dataclass

from .connectivity import CutEdgeKind, classify_cut_edge, components, gamma_blocks, is_connected, separating_vertices
from .core import Hypergraph, has_empty_edges, id_key
from .derive import SubhypergraphWitness
from .errors import HasEmptyEdges, InvariantViolation, NotConnected, PreconditionUnmet
from .incgraph import Graph, Node, graph_components, node_key, recognize_hypersubgraph


class _DisjointSet:
    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[Hypergraph, ...]
    separating: tuple[str, ...]
    block_graph: Graph  # nodes Node("b", index) and Node("v", separating vertex)

    @property
    def witnesses(self) -> tuple[SubhypergraphWitness, ...]:
        return tuple(SubhypergraphWitness(b, {e: e for e in b.edge_ids}) for b in self.blocks)

    def blocks_containing(self, v: str) -> list[int]:
        return [i for i, b in enumerate(self.blocks) if b.has_vertex(v)]


def _block_order(H: Hypergraph):
    part = components(H)
    rank = {v: i for i, members in enumerate(part.classes) for v in members}
    return lambda B: (
        rank[B.vertices[0]],
        sorted(id_key(v) for v in B.vertices),
        sorted(id_key(e) for e in B.edge_ids),
    )


def blocks(H: Hypergraph) -> BlockDecomposition:
    """Decompose H into blocks, component by component.

    Isolated vertices become trivial empty blocks.
    """
    if has_empty_edges(H):
        raise HasEmptyEdges("block decomposition needs a hypergraph without empty edges")
    struct = gamma_blocks(H)
    groups = _DisjointSet(len(struct.blocks))
    for x in struct.cut_vertices:
        if x.kind == "e":
            at = struct.blocks_at(x)
            for i in at[1:]:
                groups.union(at[0], i)
    merged: dict[int, tuple[set, set]] = {}
    for i, gb in enumerate(struct.blocks):
        nodes, links = merged.setdefault(groups.find(i), (set(), set()))
        nodes.update(gb.nodes)
        links.update(gb.links)
    found = []
    for nodes, links in merged.values():
        pairs = [tuple(sorted(link, key=node_key)) for link in links]
        block = recognize_hypersubgraph(H, nodes, [(v.name, e.name) for v, e in pairs])
        if block is None:
            raise InvariantViolation("a merged block cluster is not the incidence graph of a hypersubgraph")
        found.append(block)
    found.sort(key=_block_order(H))
    counts: dict[str, int] = {}
    for B in found:
        for v in B.vertices:
            counts[v] = counts.get(v, 0) + 1
    separating = tuple(v for v in sorted(H.vertices, key=id_key) if counts.get(v, 0) >= 2)
    tree_links = [(Node("b", str(i)), Node("v", v)) for i, B in enumerate(found) for v in separating if B.has_vertex(v)]
    tree_nodes = [Node("b", str(i)) for i in range(len(found))] + [Node("v", v) for v in separating]
    return BlockDecomposition(tuple(found), separating, Graph.from_links(tree_nodes, tree_links))


def is_nonseparable(H: Hypergraph) -> bool:
    if has_empty_edges(H) or not is_connected(H):
        return False
    return not separating_vertices(H)


def block_graph(H: Hypergraph) -> Graph:
    """Bipartite tree of separating vertices and blocks of a connected hypergraph."""
    if has_empty_edges(H):
        raise HasEmptyEdges("block graph needs a hypergraph without empty edges")
    if not is_connected(H):
        raise NotConnected("block graph is defined only for connected hypergraphs")
    tree = blocks(H).block_graph
    link_count = sum(len(tree.adj[x]) for x in tree.nodes) // 2
    if link_count != len(tree.nodes) - 1 or len(graph_components(tree)) != 1:
        raise InvariantViolation("block graph is not a tree")
    return tree


def weak_cut_edge_in_nonseparable(H: Hypergraph) -> list[str]:
    """Cut vertices of the incidence graph of a non-separable H; all are weak cut edges."""
    if not is_nonseparable(H) or sum(1 for vs in H.edges.values() if len(vs) > 1) < 2:
        raise PreconditionUnmet("need a non-separable hypergraph with two edges of cardinality > 1")
    out = []
    for x in sorted(gamma_blocks(H).cut_vertices, key=node_key):
        if x.kind != "e":
            raise InvariantViolation(f"vertex {x.name!r} is a cut vertex of the incidence graph")
        if classify_cut_edge(H, x.name) is not CutEdgeKind.WEAK:
            raise InvariantViolation(f"edge {x.name!r} is not a weak cut edge")
        out.append(x.name)
    return out
