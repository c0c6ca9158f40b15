"""Graphviz DOT rendering of incidence graphs, block graphs and line graphs.

Vertices are ellipses and edges are boxes.  Cut edges and cut vertices are
drawn in red.  Output is sorted by id, so equal inputs give equal bytes.
"""

from __future__ import annotations

from .blocks import blocks
from .connectivity import cut_edges, cut_vertices, gamma
from .core import Hypergraph, sorted_ids
from .incgraph import Node, line_graph, node_key

_RED = ', color="red", fontcolor="red"'


def _q(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _cut_sets(H: Hypergraph) -> tuple[dict[str, str], set[str]]:
    kinds = {e: str(kind) for e, kind in cut_edges(H)}
    cuts = set(cut_vertices(H)) if H.n >= 2 else set()
    return kinds, cuts


def _render(name: str, node_lines: list[str], link_lines: list[str]) -> str:
    body = [f"graph {name} {{"] + ["  " + line for line in node_lines + link_lines] + ["}"]
    return "\n".join(body) + "\n"


def incidence_dot(H: Hypergraph) -> str:
    kinds, cuts = _cut_sets(H)
    G = gamma(H)
    nodes = []
    for x in sorted(G.nodes, key=node_key):
        if x.kind == "v":
            nodes.append(f"{_q(str(x))} [label={_q(x.name)}, shape=ellipse{_RED if x.name in cuts else ''}];")
        else:
            label = x.name + (f" ({kinds[x.name]})" if x.name in kinds else "")
            nodes.append(f"{_q(str(x))} [label={_q(label)}, shape=box{_RED if x.name in kinds else ''}];")
    links = sorted(
        (sorted(link, key=node_key) for link in G.links()),
        key=lambda pair: (node_key(pair[0]), node_key(pair[1])),
    )
    return _render("incidence", nodes, [f"{_q(str(a))} -- {_q(str(b))};" for a, b in links])


def block_graph_dot(H: Hypergraph) -> str:
    """Block graph of the whole decomposition; blocks are boxes, separating vertices red ellipses."""
    dec = blocks(H)
    nodes = []
    for i, B in enumerate(dec.blocks):
        label = f"B{i}: {' '.join(sorted_ids(B.vertices))} | {' '.join(sorted_ids(B.edge_ids)) or '-'}"
        nodes.append(f"{_q('b:' + str(i))} [label={_q(label)}, shape=box];")
    for v in dec.separating:
        nodes.append(f"{_q('v:' + v)} [label={_q(v)}, shape=ellipse{_RED}];")
    T = dec.block_graph
    links = []
    for i in range(len(dec.blocks)):
        for y in T.adj[Node("b", str(i))]:
            links.append(f"{_q('b:' + str(i))} -- {_q('v:' + y.name)};")
    return _render("blocks", nodes, links)


def line_graph_dot(H: Hypergraph, level: int = 1) -> str:
    kinds, _ = _cut_sets(H)
    L = line_graph(H, level)
    order = sorted_ids(L.nodes)
    nodes = [f"{_q(e)} [shape=box{_RED if e in kinds else ''}];" for e in order]
    position = {e: i for i, e in enumerate(order)}
    links = sorted(
        (tuple(sorted(link, key=position.__getitem__)) for link in L.links()),
        key=lambda pair: (position[pair[0]], position[pair[1]]),
    )
    return _render(f"line_level_{level}", nodes, [f"{_q(a)} -- {_q(b)};" for a, b in links])
