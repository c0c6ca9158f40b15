"""Incidence graphs, line graphs, and the plain-graph algorithms run on them."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Hashable, Iterable, Mapping, NamedTuple, Optional

from .core import Hypergraph, id_key
from .errors import BadLevel, NotASubgraph


class Node(NamedTuple):
    """A tagged graph node: ``"v"`` and ``"e"`` for incidence graphs, ``"b"`` for blocks."""

    kind: str
    name: str

    def __str__(self):
        return f"{self.kind}:{self.name}"


def node_key(x):
    if isinstance(x, Node):
        return ({"v": 0, "e": 1}.get(x.kind, 2), id_key(x.name))
    return (2, id_key(x)) if isinstance(x, str) else (3, x)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with deterministic adjacency order."""

    nodes: tuple
    adj: Mapping[Hashable, tuple]

    @classmethod
    def from_links(cls, nodes: Iterable, links: Iterable[tuple]) -> "Graph":
        nodes = tuple(nodes)
        nbrs: dict = {x: set() for x in nodes}
        for a, b in links:
            if a == b:
                raise ValueError("simple graphs have no loops")
            nbrs[a].add(b)
            nbrs[b].add(a)
        return cls(nodes, {x: tuple(sorted(nbrs[x], key=node_key)) for x in nodes})

    def links(self) -> frozenset:
        return frozenset(frozenset((a, b)) for a in self.nodes for b in self.adj[a])

    def degree(self, x) -> int:
        return len(self.adj[x])

    def without(self, x) -> "Graph":
        """Vertex-deleted subgraph G minus x."""
        return Graph(
            tuple(y for y in self.nodes if y != x),
            {y: tuple(z for z in self.adj[y] if z != x) for y in self.nodes if y != x},
        )

    def same_as(self, other: "Graph") -> bool:
        return set(self.nodes) == set(other.nodes) and self.links() == other.links()


@dataclass(frozen=True)
class BipartiteIncidenceGraph(Graph):
    hypergraph: Optional[Hypergraph] = field(default=None, compare=False)

    @property
    def v_side(self) -> frozenset[str]:
        return frozenset(x.name for x in self.nodes if x.kind == "v")

    @property
    def e_side(self) -> frozenset[str]:
        return frozenset(x.name for x in self.nodes if x.kind == "e")

    def pairs(self) -> frozenset[tuple[str, str]]:
        """Links as (vertex id, edge id) pairs."""
        return frozenset((a.name, b.name) for a in self.nodes if a.kind == "v" for b in self.adj[a])


def incidence_graph(H: Hypergraph) -> BipartiteIncidenceGraph:
    nodes = [Node("v", v) for v in H.vertices] + [Node("e", e) for e in H.edge_ids]
    adj: dict = {Node("v", v): [] for v in H.vertices}
    for e, vs in H.edges.items():
        en = Node("e", e)
        members = sorted(vs, key=id_key)
        adj[en] = tuple(Node("v", v) for v in members)
        for v in members:
            adj[Node("v", v)].append(en)
    for v in H.vertices:
        vn = Node("v", v)
        adj[vn] = tuple(sorted(adj[vn], key=node_key))
    return BipartiteIncidenceGraph(tuple(nodes), adj, H)


def graph_components(G: Graph) -> list[list]:
    seen: set = set()
    out = []
    for root in G.nodes:
        if root in seen:
            continue
        seen.add(root)
        comp, frontier = [root], [root]
        while frontier:
            x = frontier.pop()
            for y in G.adj[x]:
                if y not in seen:
                    seen.add(y)
                    comp.append(y)
                    frontier.append(y)
        out.append(sorted(comp, key=node_key))
    return out


@dataclass(frozen=True)
class GraphBlock:
    nodes: frozenset
    links: frozenset  # of frozenset pairs; empty for an isolated node


@dataclass(frozen=True)
class GraphBlockStructure:
    blocks: tuple[GraphBlock, ...]
    cut_vertices: frozenset
    block_tree: tuple[tuple[int, Hashable], ...]  # (block index, cut vertex) links

    def blocks_at(self, x) -> list[int]:
        return [i for i, b in enumerate(self.blocks) if x in b.nodes]


def graph_blocks(G: Graph) -> GraphBlockStructure:
    """Biconnected components by one iterative depth-first pass with low-links.

    Bridges come out as two-node blocks and isolated nodes as linkless blocks.
    """
    disc: dict = {}
    low: dict = {}
    raw_blocks: list[GraphBlock] = []
    cut: set = set()
    clock = 0
    for root in G.nodes:
        if root in disc:
            continue
        disc[root] = low[root] = clock
        clock += 1
        if not G.adj[root]:
            raw_blocks.append(GraphBlock(frozenset([root]), frozenset()))
            continue
        root_children = 0
        link_stack: list = []
        stack = [(root, None, iter(G.adj[root]))]
        while stack:
            u, parent, it = stack[-1]
            descended = False
            for w in it:
                if w not in disc:
                    disc[w] = low[w] = clock
                    clock += 1
                    link_stack.append((u, w))
                    stack.append((w, u, iter(G.adj[w])))
                    descended = True
                    break
                if w != parent and disc[w] < disc[u]:
                    link_stack.append((u, w))
                    if disc[w] < low[u]:
                        low[u] = disc[w]
            if descended:
                continue
            stack.pop()
            if parent is None:
                continue
            if low[u] < low[parent]:
                low[parent] = low[u]
            if low[u] >= disc[parent]:
                links, members = [], set()
                while True:
                    a, b = link_stack.pop()
                    links.append(frozenset((a, b)))
                    members.update((a, b))
                    if a == parent and b == u:
                        break
                raw_blocks.append(GraphBlock(frozenset(members), frozenset(links)))
                if parent == root:
                    root_children += 1
                else:
                    cut.add(parent)
        if root_children >= 2:
            cut.add(root)
    blocks = tuple(sorted(raw_blocks, key=lambda b: sorted(node_key(x) for x in b.nodes)))
    tree = tuple((i, x) for i, b in enumerate(blocks) for x in sorted(b.nodes & cut, key=node_key))
    return GraphBlockStructure(blocks, frozenset(cut), tree)


def graph_cut_vertices(G: Graph) -> frozenset:
    return graph_blocks(G).cut_vertices


def recognize_hypersubgraph(H: Hypergraph, nodes: Iterable[Node], links: Iterable[tuple[str, str]]) -> Optional[Hypergraph]:
    """Return the hypersubgraph whose incidence graph is (nodes, links), if any.

    ``links`` are (vertex id, edge id) pairs.  Raises NotASubgraph when the pair
    is not a subgraph of the incidence graph of H.
    """
    nodes = set(nodes)
    links = set(links)
    V = {x.name for x in nodes if x.kind == "v"}
    E = {x.name for x in nodes if x.kind == "e"}
    for x in nodes:
        if (x.kind == "v" and not H.has_vertex(x.name)) or (x.kind == "e" and not H.has_edge(x.name)):
            raise NotASubgraph(f"{x} is not a node of the incidence graph")
    for v, e in links:
        if v not in V or e not in E or v not in H.edges[e]:
            raise NotASubgraph(f"link {v}-{e} is not in the selected subgraph of the incidence graph")
    if not V:
        return None
    link_degree = {e: 0 for e in E}
    for _, e in links:
        link_degree[e] += 1
    if any(link_degree[e] != len(H.edges[e]) for e in E):
        return None
    return Hypergraph([v for v in H.vertices if v in V], [(e, vs) for e, vs in H.edges.items() if e in E])


def line_graph(H: Hypergraph, level: int = 1) -> Graph:
    """Level-l line graph: edges linked when they share at least l vertices."""
    if level < 1:
        raise BadLevel(f"level must be a positive integer, got {level}")
    ids = H.edge_ids
    links = [
        (a, b)
        for i, a in enumerate(ids)
        for b in ids[i + 1 :]
        if len(H.edges[a] & H.edges[b]) >= level
    ]
    return Graph.from_links(ids, links)
